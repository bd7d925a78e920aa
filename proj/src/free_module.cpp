#include "dmod/free_module.hpp"

#include <map>

#include "dmod/detail_format.hpp"

namespace dmod {

std::strong_ordering compare(const ModuleMonomial& a, const ModuleMonomial& b) {
  if (auto c = compare(a.mono, b.mono); c != 0) return c;
  return a.gen <=> b.gen;
}

bool divides(const ModuleMonomial& v, const ModuleMonomial& u) {
  return v.gen == u.gen && v.mono.divides(u.mono);
}

WeylMonomial quotient(const ModuleMonomial& u, const ModuleMonomial& v) {
  if (u.gen != v.gen) throw std::invalid_argument("quotient across distinct generators");
  return u.mono.over(v.mono);
}

std::optional<ModuleMonomial> lcm_mono(const ModuleMonomial& u, const ModuleMonomial& v) {
  if (u.gen != v.gen) return std::nullopt;
  return ModuleMonomial(WeylMonomial(MultiIndex::max(u.mono.alpha, v.mono.alpha),
                                     MultiIndex::max(u.mono.beta, v.mono.beta)),
                        u.gen);
}

namespace {

using TermMap = std::map<ModuleMonomial, QQ, ModuleMonomialDesc>;

void require_compatible(const ModuleElement& a, const ModuleElement& b) {
  if (a.vars() != b.vars() || a.rank() != b.rank())
    throw std::invalid_argument("module element shape mismatch");
}

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

}  // namespace

ModuleElement::ModuleElement(std::size_t n, int rank, std::vector<Term> terms)
    : ModuleElement(n, rank) {
  TermMap acc;
  for (auto& [m, c] : terms) {
    if (m.mono.vars() != n_) throw std::invalid_argument("term dimension mismatch");
    if (m.gen > rank_) throw std::invalid_argument("generator index exceeds rank");
    acc[m] += c;
  }
  terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) terms_.emplace_back(m, std::move(c));
}

ModuleElement ModuleElement::generator(std::size_t n, int rank, int gen) {
  return monomial(n, rank, ModuleMonomial(WeylMonomial::one(n), gen));
}

ModuleElement ModuleElement::monomial(std::size_t n, int rank, ModuleMonomial m, QQ c) {
  ModuleElement f(n, rank);
  if (m.mono.vars() != n) throw std::invalid_argument("term dimension mismatch");
  if (m.gen > rank) throw std::invalid_argument("generator index exceeds rank");
  if (c != 0) f.terms_.emplace_back(std::move(m), std::move(c));
  return f;
}

const ModuleElement::Term& ModuleElement::leading() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero");
  return terms_.front();
}

int ModuleElement::degree() const { return is_zero() ? -1 : leading_monomial().degree(); }

ModuleElement ModuleElement::operator-() const { return scaled(QQ(-1)); }

ModuleElement ModuleElement::scaled(const QQ& c) const {
  ModuleElement r(n_, rank_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& [m, q] : terms_) r.terms_.emplace_back(m, q * c);
  return r;
}

ModuleElement operator+(const ModuleElement& a, const ModuleElement& b) {
  require_compatible(a, b);
  ModuleElement r(a.vars(), a.rank());
  r.terms_ = merge_sorted(a.terms(), b.terms(), ModuleMonomialDesc{}, false);
  return r;
}

ModuleElement operator-(const ModuleElement& a, const ModuleElement& b) {
  require_compatible(a, b);
  ModuleElement r(a.vars(), a.rank());
  r.terms_ = merge_sorted(a.terms(), b.terms(), ModuleMonomialDesc{}, true);
  return r;
}

ModuleElement act(const WeylElement& op, const ModuleElement& f) {
  if (op.vars() != f.vars()) throw std::invalid_argument("operator/element dimension mismatch");
  TermMap acc;
  for (const auto& [mo, co] : op.terms())
    for (const auto& [mf, cf] : f.terms()) {
      const QQ c = co * cf;
      product_terms(mo, mf.mono, [&](WeylMonomial m, const ZZ& factor) {
        acc[ModuleMonomial(std::move(m), mf.gen)] += c * factor;
      });
    }
  ModuleElement r(f.vars(), f.rank());
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.emplace_back(m, std::move(c));
  return r;
}

std::string to_string(const ModuleMonomial& m) {
  std::string s = detail::power_list(m.mono);
  if (!s.empty()) s += ' ';
  return s + "e" + std::to_string(m.gen);
}

std::string to_string(const ModuleElement& f) {
  std::vector<std::pair<bool, std::string>> pieces;
  pieces.reserve(f.terms().size());
  for (const auto& [m, c] : f.terms())
    pieces.emplace_back(c < 0, detail::term_body(c, to_string(m)));
  return detail::join_signed(pieces);
}

}  // namespace dmod
