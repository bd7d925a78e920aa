#include "dmod/weyl.hpp"

#include <sstream>

#include "dmod/detail_format.hpp"

namespace dmod {

std::strong_ordering compare(const WeylMonomial& a, const WeylMonomial& b) {
  if (a.vars() != b.vars()) throw std::invalid_argument("weyl monomial dimension mismatch");
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (auto c = a.alpha <=> b.alpha; c != 0) return c;
  return a.beta <=> b.beta;
}

namespace {

using TermMap = std::map<WeylMonomial, QQ, WeylMonomialDesc>;

std::vector<WeylElement::Term> flatten(TermMap&& acc) {
  std::vector<WeylElement::Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.emplace_back(m, std::move(c));
  return out;
}

}  // namespace

WeylElement::WeylElement(std::size_t n, std::vector<Term> terms) : n_(n) {
  TermMap acc;
  for (auto& [m, c] : terms) {
    if (m.vars() != n_) throw std::invalid_argument("term dimension mismatch");
    acc[m] += c;
  }
  terms_ = flatten(std::move(acc));
}

WeylElement WeylElement::constant(std::size_t n, const QQ& c) {
  return monomial(WeylMonomial::one(n), c);
}

WeylElement WeylElement::monomial(WeylMonomial m, QQ c) {
  WeylElement r(m.vars());
  if (c != 0) r.terms_.emplace_back(std::move(m), std::move(c));
  return r;
}

WeylElement WeylElement::x(std::size_t n, std::size_t i, int k) {
  return monomial(WeylMonomial(MultiIndex::unit(n, i, k), MultiIndex(n)));
}

WeylElement WeylElement::d(std::size_t n, std::size_t i, int k) {
  return monomial(WeylMonomial(MultiIndex(n), MultiIndex::unit(n, i, k)));
}

const WeylElement::Term& WeylElement::leading() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero");
  return terms_.front();
}

WeylElement WeylElement::operator-() const { return scaled(QQ(-1)); }

WeylElement WeylElement::scaled(const QQ& c) const {
  WeylElement r(n_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& [m, q] : terms_) r.terms_.emplace_back(m, q * c);
  return r;
}

namespace {

// Merges two term lists sorted by strictly decreasing monomial.
template <class Term, class Cmp>
std::vector<Term> merge_sorted(const std::vector<Term>& a, const std::vector<Term>& b, Cmp cmp,
                               bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && cmp(a[i].first, b[j].first))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || cmp(b[j].first, a[i].first)) {
      out.push_back(b[j]);
      if (subtract) out.back().second = -out.back().second;
      ++j;
    } else {
      QQ c = subtract ? QQ(a[i].second - b[j].second) : QQ(a[i].second + b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i, ++j;
    }
  }
  return out;
}

void require_same_algebra(const WeylElement& a, const WeylElement& b) {
  if (a.vars() != b.vars()) throw std::invalid_argument("weyl element dimension mismatch");
}

}  // namespace

WeylElement operator+(const WeylElement& a, const WeylElement& b) {
  require_same_algebra(a, b);
  WeylElement r(a.vars());
  r.terms_ = merge_sorted(a.terms(), b.terms(), WeylMonomialDesc{}, false);
  return r;
}

WeylElement operator-(const WeylElement& a, const WeylElement& b) {
  require_same_algebra(a, b);
  WeylElement r(a.vars());
  r.terms_ = merge_sorted(a.terms(), b.terms(), WeylMonomialDesc{}, true);
  return r;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  require_same_algebra(a, b);
  TermMap acc;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      const QQ c = ca * cb;
      product_terms(ma, mb,
                    [&](WeylMonomial m, const ZZ& factor) { acc[std::move(m)] += c * factor; });
    }
  WeylElement r(a.vars());
  r.terms_ = flatten(std::move(acc));
  return r;
}

int bernstein_degree(const WeylElement& a) {
  // Terms are degree-sorted, so the leading term realizes the maximum.
  return a.is_zero() ? -1 : a.leading().first.degree();
}

Polynomial Polynomial::monomial(MultiIndex e, QQ c) {
  Polynomial p(e.size());
  if (c != 0) p.terms_.emplace(std::move(e), std::move(c));
  return p;
}

void Polynomial::add_term(const MultiIndex& e, const QQ& c) {
  if (e.size() != n_) throw std::invalid_argument("polynomial term dimension mismatch");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.vars() != b.vars()) throw std::invalid_argument("polynomial dimension mismatch");
  Polynomial r = a;
  for (const auto& [e, c] : b.terms()) r.add_term(e, c);
  return r;
}

Polynomial apply(const WeylElement& a, const Polynomial& p) {
  if (a.vars() != p.vars()) throw std::invalid_argument("operator/polynomial dimension mismatch");
  const std::size_t n = a.vars();
  Polynomial out(n);
  for (const auto& [m, c] : a.terms())
    for (const auto& [e, q] : p.terms()) {
      if (!m.beta.leq(e)) continue;  // some derivative wipes the monomial out
      ZZ factor(1);
      std::vector<int> r(n);
      for (std::size_t i = 0; i < n; ++i) {
        // d_i^b applied to x_i^e gives e(e-1)...(e-b+1) x_i^(e-b).
        factor *= binom_poly(ZZ(e[i]), m.beta[i]) * factorial(m.beta[i]);
        r[i] = e[i] - m.beta[i] + m.alpha[i];
      }
      out.add_term(MultiIndex(std::move(r)), c * q * factor);
    }
  return out;
}

namespace detail {

std::string term_body(const QQ& coeff, const std::string& suffix) {
  QQ a = abs(coeff);
  if (suffix.empty()) return to_string(a);
  if (a == 1) return suffix;
  return to_string(a) + " " + suffix;
}

std::string join_signed(const std::vector<std::pair<bool, std::string>>& pieces) {
  if (pieces.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& [neg, body] = pieces[i];
    if (i == 0)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += body;
  }
  return out;
}

std::string power_list(const WeylMonomial& m) {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](char v, std::size_t i, int e) {
    if (e == 0) return;
    if (!first) os << ' ';
    first = false;
    os << v << (i + 1);
    if (e != 1) os << '^' << e;
  };
  for (std::size_t i = 0; i < m.vars(); ++i) emit('x', i, m.alpha[i]);
  for (std::size_t i = 0; i < m.vars(); ++i) emit('d', i, m.beta[i]);
  return os.str();
}

}  // namespace detail

std::string to_string(const WeylMonomial& m) {
  std::string s = detail::power_list(m);
  return s.empty() ? "1" : s;
}

std::string to_string(const WeylElement& a) {
  std::vector<std::pair<bool, std::string>> pieces;
  pieces.reserve(a.terms().size());
  for (const auto& [m, c] : a.terms())
    pieces.emplace_back(c < 0, detail::term_body(c, detail::power_list(m)));
  return detail::join_signed(pieces);
}

}  // namespace dmod
