#ifndef DMOD_NUMPOLY_HPP
#define DMOD_NUMPOLY_HPP

#include <string>
#include <vector>

#include "dmod/numeric.hpp"

namespace dmod {

// Integer-valued polynomial written in the binomial basis:
//   f(t) = sum_i coeff(i) * C(t+i, i),
// with integer coefficients.  Every polynomial taking integer values on the
// integers has a unique such expansion.
class NumericalPolynomial {
 public:
  NumericalPolynomial() = default;  // zero
  explicit NumericalPolynomial(std::vector<ZZ> binom_coeffs);

  // C(t + shift, m) expanded into the basis; shift may be negative.
  static NumericalPolynomial binomial(int shift, int m);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<ZZ>& binom_coeffs() const { return coeffs_; }
  ZZ coeff(int i) const;  // zero beyond the degree

  ZZ operator()(const ZZ& t) const;

  NumericalPolynomial operator-() const;
  NumericalPolynomial scaled(const ZZ& c) const;
  friend NumericalPolynomial operator+(const NumericalPolynomial& a,
                                       const NumericalPolynomial& b);
  friend NumericalPolynomial operator-(const NumericalPolynomial& a,
                                       const NumericalPolynomial& b);
  friend bool operator==(const NumericalPolynomial&, const NumericalPolynomial&) = default;

 private:
  std::vector<ZZ> coeffs_;  // trimmed: back() != 0 when nonempty
};

// k-fold difference.  In the binomial basis this is the k-step coefficient
// shift: sum_i a_i C(t+i,i) becomes sum_{i>=k} a_i C(t+i-k, i-k), so the
// degree drops by k and the top coefficient survives unchanged.
NumericalPolynomial forward_difference(const NumericalPolynomial& p, int k);

// Coefficients in the monomial basis 1, t, ..., t^deg (empty for zero).
std::vector<QQ> to_monomial(const NumericalPolynomial& p);

// Inverse of to_monomial; rejects polynomials that are not integer-valued.
NumericalPolynomial from_monomial(const std::vector<QQ>& coeffs);

// "6 C(t+3,3) - 5 C(t+2,2) - 5 C(t+1,1) + 15"
std::string binomial_string(const NumericalPolynomial& p);

// "t^3 + 7/2 t^2 - 3/2 t + 11"
std::string monomial_string(const NumericalPolynomial& p);

// Finite subset of N^dim; points kept sorted and deduplicated.
struct PointSet {
  int dim;
  std::vector<std::vector<int>> points;

  explicit PointSet(int dim);
  PointSet(int dim, std::vector<std::vector<int>> pts);

  bool empty() const { return points.empty(); }
  int size() const { return static_cast<int>(points.size()); }

  friend bool operator==(const PointSet&, const PointSet&) = default;
};

// Points of a that are minimal for the componentwise order.
PointSet minimal_points(const PointSet& a);

// Counts tuples u in N^dim with |u| <= s such that no point of a is
// componentwise <= u.
long long count_v_points(const PointSet& a, int s);

// The alternating-sum expansion over subsets of a, taken exactly as given
// (no pruning): sum_subsets (-1)^|S| C(t + dim - b_S, dim) where b_S is the
// componentwise max of S summed over coordinates.
NumericalPolynomial kolchin_inclusion_exclusion(const PointSet& a);

// Counting polynomial of the set avoided by a: prunes to minimal points,
// then applies the subset expansion.  Agrees with count_v_points for all
// large s.
NumericalPolynomial kolchin_polynomial(const PointSet& a);

}  // namespace dmod

#endif
