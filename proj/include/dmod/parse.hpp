#ifndef DMOD_PARSE_HPP
#define DMOD_PARSE_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "dmod/bernstein.hpp"
#include "dmod/numpoly.hpp"

namespace dmod {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(col) +
                           ": " + msg),
        line_(line),
        col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

// Text format for a presentation:
//
//   weyl n=2 m=2
//   rel: x1^2 d1^3 e1 + d1^5 e1
//   rel: x2^2 e1 - x1 e2
//
// Each relation is a signed sum of terms; a term is an optional rational
// coefficient, factors x<i> or d<i> (optionally ^<k>) multiplied left to
// right in the ring, and a generator e<j>.  "∂" is accepted for "d" on
// input; output always uses ASCII.
ModulePresentation parse_presentation(std::string_view text);

// Canonical form: one header line and one "rel:" line per relation, terms in
// decreasing monomial order.  parse_presentation round-trips it.
std::string print_presentation(const ModulePresentation& p);

// "(2,0);(0,3)" -> points in N^dim; the empty string is the empty set.
PointSet parse_point_set(std::string_view text, int dim);

}  // namespace dmod

#endif
