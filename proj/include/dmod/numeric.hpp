#ifndef DMOD_NUMERIC_HPP
#define DMOD_NUMERIC_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace dmod {

// Exact coefficient arithmetic: integers and rationals of arbitrary size.
using ZZ = mpz_class;
using QQ = mpq_class;

// C(top, k) read as the degree-k polynomial top*(top-1)*...*(top-k+1)/k!.
// Defined for negative top as well; this is the reading needed when binomials
// with shifted arguments are manipulated as polynomials rather than counts.
inline ZZ binom_poly(const ZZ& top, unsigned long k) {
  ZZ r;
  mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), k);
  return r;
}

inline ZZ factorial(unsigned long k) {
  ZZ r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

// num/den in lowest terms; rejects a zero denominator.
inline QQ make_rational(const ZZ& num, const ZZ& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  QQ q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const QQ& q) { return q.get_den() == 1; }

inline std::string to_string(const ZZ& z) { return z.get_str(); }

// "p" or "p/q".
inline std::string to_string(const QQ& q) { return q.get_str(); }

}  // namespace dmod

#endif
