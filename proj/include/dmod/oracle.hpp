#ifndef DMOD_ORACLE_HPP
#define DMOD_ORACLE_HPP

#include <vector>

#include "dmod/bernstein.hpp"
#include "dmod/groebner.hpp"
#include "dmod/numpoly.hpp"

namespace dmod {

// Number of module monomials of total degree <= r on any generator that are
// not divisible by any basis leading monomial, by direct enumeration.  These
// monomials descend to a vector-space basis of the degree-<=r filtration
// piece of the quotient module, so this is its exact dimension at every r.
long long count_standard_monomials(const Basis& g, int n, int m, int r);

// The same dimension computed by linear algebra instead of combinatorics:
// divide every monomial of degree <= r by the basis and take the rank of the
// resulting remainders (exact fraction-free elimination over Q).
long long rank_dimension(const Basis& g, int n, int m, int r);

struct DimensionRow {
  int r = 0;
  long long dim = 0;  // count_standard_monomials at r
  ZZ chi;             // the counting polynomial at r
  bool agree = false;
};

struct DimensionTable {
  std::vector<DimensionRow> rows;
  // Least r such that every row from r through r_max agrees; -1 when even
  // the last row disagrees.
  int first_agreement_r = -1;
};

DimensionTable dimension_table(const Basis& g, const NumericalPolynomial& chi, int n, int m,
                               int r_max);

// Full pipeline check for a presentation: compares the counting polynomial
// against the enumerated dimensions for r = 0..r_max.
DimensionTable verify_presentation(const ModulePresentation& p, int r_max);

}  // namespace dmod

#endif
