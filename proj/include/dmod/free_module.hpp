#ifndef DMOD_FREE_MODULE_HPP
#define DMOD_FREE_MODULE_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dmod/weyl.hpp"

namespace dmod {

// theta * e_gen in the free module A_n^m; gen is 1-based.
struct ModuleMonomial {
  WeylMonomial mono;
  int gen;

  ModuleMonomial(WeylMonomial m, int g) : mono(std::move(m)), gen(g) {
    if (gen < 1) throw std::invalid_argument("generator index must be positive");
  }

  int degree() const { return mono.degree(); }

  friend bool operator==(const ModuleMonomial&, const ModuleMonomial&) = default;
};

// Ring-monomial order first; ties broken by the generator index (e_1 least).
std::strong_ordering compare(const ModuleMonomial& a, const ModuleMonomial& b);

inline bool operator<(const ModuleMonomial& a, const ModuleMonomial& b) { return compare(a, b) < 0; }
inline bool operator>(const ModuleMonomial& a, const ModuleMonomial& b) { return compare(a, b) > 0; }

struct ModuleMonomialDesc {
  bool operator()(const ModuleMonomial& a, const ModuleMonomial& b) const {
    return compare(a, b) > 0;
  }
};

// v divides u when both sit on the same generator and the exponents do.
bool divides(const ModuleMonomial& v, const ModuleMonomial& u);

// The ring monomial u/v; rejects non-divisors.
WeylMonomial quotient(const ModuleMonomial& u, const ModuleMonomial& v);

// Componentwise max on a shared generator; nullopt across generators (no
// common multiple exists there, and callers drop such pairs).
std::optional<ModuleMonomial> lcm_mono(const ModuleMonomial& u, const ModuleMonomial& v);

// Element of the free module, terms sorted by strictly decreasing monomial.
class ModuleElement {
 public:
  using Term = std::pair<ModuleMonomial, QQ>;

  ModuleElement(std::size_t n, int rank) : n_(n), rank_(rank) {
    if (rank < 1) throw std::invalid_argument("module rank must be positive");
  }
  ModuleElement(std::size_t n, int rank, std::vector<Term> terms);

  static ModuleElement generator(std::size_t n, int rank, int gen);
  static ModuleElement monomial(std::size_t n, int rank, ModuleMonomial m, QQ c = QQ(1));

  std::size_t vars() const { return n_; }
  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const;
  const ModuleMonomial& leading_monomial() const { return leading().first; }
  const QQ& leading_coeff() const { return leading().second; }

  // Highest total degree among the terms; -1 for zero.
  int degree() const;

  ModuleElement operator-() const;
  ModuleElement scaled(const QQ& c) const;

  friend ModuleElement operator+(const ModuleElement& a, const ModuleElement& b);
  friend ModuleElement operator-(const ModuleElement& a, const ModuleElement& b);
  friend ModuleElement act(const WeylElement& op, const ModuleElement& f);

  friend bool operator==(const ModuleElement&, const ModuleElement&) = default;

 private:
  std::size_t n_;
  int rank_;
  std::vector<Term> terms_;
};

// Left action of the ring element op on f, expanding products into normal form.
ModuleElement act(const WeylElement& op, const ModuleElement& f);

std::string to_string(const ModuleMonomial& m);
std::string to_string(const ModuleElement& f);

}  // namespace dmod

#endif
