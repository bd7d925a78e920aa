#ifndef DMOD_BERNSTEIN_HPP
#define DMOD_BERNSTEIN_HPP

#include <optional>
#include <string>
#include <vector>

#include "dmod/groebner.hpp"
#include "dmod/numpoly.hpp"

namespace dmod {

// A finitely presented left module: the quotient of the rank-m free module
// over the n-th Weyl algebra by the submodule the relations generate.
struct ModulePresentation {
  int n = 0;
  int m = 0;
  std::vector<ModuleElement> relations;

  // Rejects nonpositive n or m, zero relations, and shape mismatches.
  void validate() const;
};

// For each generator e_i, the exponent vectors (alpha, beta) in N^(2n) of
// the basis leading monomials sitting on that generator.
std::vector<PointSet> leading_exponent_sets(const Basis& g, int n, int m);

// Sum over generators of the counting polynomial of the standard monomials:
// chi(r) equals the dimension of the degree-<=r filtration piece for large r.
NumericalPolynomial chi_from_leading_sets(const std::vector<PointSet>& sets);

// Full pipeline: Groebner basis of the relations, then chi.
NumericalPolynomial bernstein_polynomial(const ModulePresentation& p);

struct Invariants {
  int d = -1;      // degree of chi (-1 for the zero module)
  ZZ a_d;          // top binomial-basis coefficient
  ZZ a_2n;         // coefficient in slot 2n (0 when the degree is lower)
  ZZ multiplicity; // equals a_d
  ZZ literal_paper_multiplicity;  // d! * a_d, the leading monomial coefficient scaled
  ZZ delta;        // the 2n-fold difference of chi, a constant; equals a_2n
};

Invariants invariants(const NumericalPolynomial& chi, int n);

// What the delta invariant pins down about the Krull-type dimension of the
// associated graded ring: positive delta forces dimension exactly delta with
// the graded ring sitting at dimension 2n; zero delta only bounds it.
struct KrullReport {
  int two_n = 0;
  bool type_equal = false;     // graded dimension equal to 2n vs strictly below
  std::optional<ZZ> dim;       // determined only when type_equal

  std::string type_string() const;
  std::string dim_string() const;
};

KrullReport krull_report(const ZZ& delta, int n);

// Everything the pipeline produces for one presentation.
struct BernsteinReport {
  int n = 0;
  int m = 0;
  Basis groebner;
  NumericalPolynomial chi;
  Invariants inv;
  KrullReport krull;
};

BernsteinReport full_report(const ModulePresentation& p, bool reduce_basis = false);

// "chi = <binomial form> = <monomial form>" (collapsed when both coincide).
std::string chi_string(const NumericalPolynomial& chi);

}  // namespace dmod

#endif
