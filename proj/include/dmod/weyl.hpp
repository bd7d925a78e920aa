#ifndef DMOD_WEYL_HPP
#define DMOD_WEYL_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dmod/multi_index.hpp"
#include "dmod/numeric.hpp"

namespace dmod {

// Normally ordered word x^alpha d^beta in the n-th Weyl algebra: all x's to
// the left of all d's.  alpha holds the x-exponents, beta the d-exponents.
struct WeylMonomial {
  MultiIndex alpha;
  MultiIndex beta;

  WeylMonomial(MultiIndex a, MultiIndex b) : alpha(std::move(a)), beta(std::move(b)) {
    if (alpha.size() != beta.size())
      throw std::invalid_argument("x/d exponent length mismatch");
  }

  static WeylMonomial one(std::size_t n) { return WeylMonomial(MultiIndex(n), MultiIndex(n)); }

  std::size_t vars() const { return alpha.size(); }

  // Total degree |alpha| + |beta| (the filtration degree of the word).
  int degree() const { return alpha.degree() + beta.degree(); }

  bool divides(const WeylMonomial& o) const { return alpha.leq(o.alpha) && beta.leq(o.beta); }

  // Commutative exponent sum (used for quotients and lcms, not for the ring product).
  WeylMonomial times(const WeylMonomial& o) const {
    return WeylMonomial(alpha.plus(o.alpha), beta.plus(o.beta));
  }

  // Componentwise difference; rejects non-divisors.
  WeylMonomial over(const WeylMonomial& o) const {
    return WeylMonomial(alpha.minus(o.alpha), beta.minus(o.beta));
  }

  friend bool operator==(const WeylMonomial&, const WeylMonomial&) = default;
};

// Degree first, then the x-exponents lexicographically, then the d-exponents.
std::strong_ordering compare(const WeylMonomial& a, const WeylMonomial& b);

inline bool operator<(const WeylMonomial& a, const WeylMonomial& b) { return compare(a, b) < 0; }
inline bool operator>(const WeylMonomial& a, const WeylMonomial& b) { return compare(a, b) > 0; }

// Strict-weak-order functor putting the greatest monomial first.
struct WeylMonomialDesc {
  bool operator()(const WeylMonomial& a, const WeylMonomial& b) const { return compare(a, b) > 0; }
};

// Expands the noncommutative product (x^s.alpha d^s.beta)(x^t.alpha d^t.beta)
// into normally ordered words.  Per variable,
//   d^b x^a = sum_k C(b,k) C(a,k) k! x^(a-k) d^(b-k),
// and the contributions of distinct variables multiply independently, so the
// expansion runs an odometer over k <= min(s.beta, t.alpha).  emit receives
// each resulting monomial with its positive integer factor.
template <class F>
void product_terms(const WeylMonomial& s, const WeylMonomial& t, F&& emit) {
  const std::size_t n = s.vars();
  if (n != t.vars()) throw std::invalid_argument("weyl monomial dimension mismatch");
  std::vector<int> kmax(n), k(n, 0);
  for (std::size_t i = 0; i < n; ++i) kmax[i] = std::min(s.beta[i], t.alpha[i]);
  for (;;) {
    ZZ factor(1);
    std::vector<int> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      factor *= binom_poly(ZZ(s.beta[i]), k[i]) * binom_poly(ZZ(t.alpha[i]), k[i]) *
                factorial(k[i]);
      a[i] = s.alpha[i] + t.alpha[i] - k[i];
      b[i] = s.beta[i] + t.beta[i] - k[i];
    }
    emit(WeylMonomial(MultiIndex(std::move(a)), MultiIndex(std::move(b))), factor);
    std::size_t i = 0;
    while (i < n && k[i] == kmax[i]) k[i++] = 0;
    if (i == n) break;
    ++k[i];
  }
}

// Element of the n-th Weyl algebra over Q, stored as terms with strictly
// decreasing monomials, so the leading term is always terms().front().
class WeylElement {
 public:
  using Term = std::pair<WeylMonomial, QQ>;

  explicit WeylElement(std::size_t n) : n_(n) {}
  WeylElement(std::size_t n, std::vector<Term> terms);

  static WeylElement one(std::size_t n) { return constant(n, QQ(1)); }
  static WeylElement constant(std::size_t n, const QQ& c);
  static WeylElement monomial(WeylMonomial m, QQ c = QQ(1));
  // x_i^k and d_i^k with i zero-based.
  static WeylElement x(std::size_t n, std::size_t i, int k = 1);
  static WeylElement d(std::size_t n, std::size_t i, int k = 1);

  std::size_t vars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const;

  WeylElement operator-() const;
  WeylElement scaled(const QQ& c) const;

  friend WeylElement operator+(const WeylElement& a, const WeylElement& b);
  friend WeylElement operator-(const WeylElement& a, const WeylElement& b);
  // The ring product, with the commutation rule d_i x_i = x_i d_i + 1 folded in.
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);

  friend bool operator==(const WeylElement&, const WeylElement&) = default;

 private:
  std::size_t n_;
  std::vector<Term> terms_;
};

inline WeylElement weyl_mul(const WeylElement& a, const WeylElement& b) { return a * b; }

// Highest total degree among the terms; -1 for the zero element.
int bernstein_degree(const WeylElement& a);

// Commutative polynomial in x_1..x_n over Q: the natural module the Weyl
// algebra acts on, used to cross-check products against operator composition.
class Polynomial {
 public:
  explicit Polynomial(std::size_t n) : n_(n) {}

  static Polynomial monomial(MultiIndex e, QQ c = QQ(1));

  std::size_t vars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<MultiIndex, QQ>& terms() const { return terms_; }

  void add_term(const MultiIndex& e, const QQ& c);

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t n_;
  std::map<MultiIndex, QQ> terms_;
};

// a acting as a differential operator on p: x_i multiplies, d_i differentiates.
Polynomial apply(const WeylElement& a, const Polynomial& p);

std::string to_string(const WeylMonomial& m);
std::string to_string(const WeylElement& a);

}  // namespace dmod

#endif
