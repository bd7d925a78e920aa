#include "dmod/groebner.hpp"

#include <algorithm>
#include <deque>
#include <utility>

namespace dmod {

namespace {

void require_compatible(const ModuleElement& a, const ModuleElement& b) {
  if (a.vars() != b.vars() || a.rank() != b.rank())
    throw std::invalid_argument("module element shape mismatch");
}

void require_nonzero_basis(const Basis& basis, const ModuleElement& like) {
  for (const ModuleElement& g : basis) {
    require_compatible(g, like);
    if (g.is_zero()) throw std::invalid_argument("zero element in basis");
  }
}

// Scales mono by c and lets it act on g: c * (x^alpha d^beta) g.
ModuleElement mono_times(const WeylMonomial& mono, const QQ& c, const ModuleElement& g) {
  return act(WeylElement::monomial(mono, c), g);
}

}  // namespace

std::optional<ModuleElement> reduce_step(const ModuleElement& f, const ModuleElement& g) {
  require_compatible(f, g);
  if (g.is_zero()) throw std::invalid_argument("reduction by zero");
  const ModuleMonomial& lm = g.leading_monomial();
  for (const auto& [m, c] : f.terms()) {
    if (!divides(lm, m)) continue;
    return f - mono_times(quotient(m, lm), c / g.leading_coeff(), g);
  }
  return std::nullopt;
}

DivisionResult reduce_full(const ModuleElement& f, const Basis& basis) {
  require_nonzero_basis(basis, f);
  DivisionResult out{std::vector<WeylElement>(basis.size(), WeylElement(f.vars())), f};
  ModuleElement& g = out.remainder;

  std::optional<ModuleMonomial> prev;  // greatest reducible monomial last round
  for (;;) {
    const ModuleElement::Term* hit = nullptr;
    std::size_t who = 0;
    for (const auto& term : g.terms()) {  // descending, so the first hit is greatest
      for (std::size_t k = 0; k < basis.size(); ++k)
        if (divides(basis[k].leading_monomial(), term.first)) {
          hit = &term;
          who = k;
          break;
        }
      if (hit) break;
    }
    if (!hit) break;

    // The working monomial must strictly decrease; anything else means the
    // cancellation failed and the loop would not terminate.
    if (prev && !(compare(hit->first, *prev) < 0))
      throw std::logic_error("division step did not decrease the working monomial");
    prev = hit->first;

    const ModuleElement& gk = basis[who];
    const WeylMonomial q = quotient(hit->first, gk.leading_monomial());
    const QQ c = hit->second / gk.leading_coeff();
    out.quotients[who] = out.quotients[who] + WeylElement::monomial(q, c);
    g = g - mono_times(q, c, gk);
  }
  return out;
}

ModuleElement s_polynomial(const ModuleElement& f, const ModuleElement& g) {
  require_compatible(f, g);
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("s-element of zero");
  std::optional<ModuleMonomial> l = lcm_mono(f.leading_monomial(), g.leading_monomial());
  if (!l) return ModuleElement(f.vars(), f.rank());
  ModuleElement left = mono_times(quotient(*l, f.leading_monomial()),
                                  QQ(1) / f.leading_coeff(), f);
  ModuleElement right = mono_times(quotient(*l, g.leading_monomial()),
                                   QQ(1) / g.leading_coeff(), g);
  return left - right;
}

Basis buchberger(const Basis& input) {
  if (input.empty()) return {};
  require_nonzero_basis(input, input.front());

  Basis g = input;
  std::deque<std::pair<std::size_t, std::size_t>> queue;
  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) queue.emplace_back(i, j);

  while (!queue.empty()) {
    auto [i, j] = queue.front();
    queue.pop_front();
    if (!lcm_mono(g[i].leading_monomial(), g[j].leading_monomial())) continue;
    ModuleElement r = reduce_full(s_polynomial(g[i], g[j]), g).remainder;
    if (r.is_zero()) continue;
    for (std::size_t k = 0; k < g.size(); ++k) queue.emplace_back(k, g.size());
    g.push_back(std::move(r));
  }
  return g;
}

Basis prune_redundant(const Basis& g) {
  if (g.empty()) return {};
  require_nonzero_basis(g, g.front());

  // A divisor is never greater in the order, so scanning leading monomials in
  // ascending order sees every potential divisor before its multiples.
  std::vector<std::size_t> idx(g.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (auto c = compare(g[a].leading_monomial(), g[b].leading_monomial()); c != 0) return c < 0;
    return a < b;
  });

  std::vector<bool> keep(g.size(), false);
  std::vector<std::size_t> kept;
  for (std::size_t i : idx) {
    bool redundant = false;
    for (std::size_t j : kept)
      if (divides(g[j].leading_monomial(), g[i].leading_monomial())) {
        redundant = true;
        break;
      }
    if (!redundant) {
      keep[i] = true;
      kept.push_back(i);
    }
  }

  Basis out;
  out.reserve(kept.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    if (keep[i]) out.push_back(g[i]);
  return out;
}

bool is_groebner(const Basis& g) {
  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if (!lcm_mono(g[i].leading_monomial(), g[j].leading_monomial())) continue;
      if (!reduce_full(s_polynomial(g[i], g[j]), g).remainder.is_zero()) return false;
    }
  return true;
}

bool is_member(const ModuleElement& f, const Basis& g) {
  if (f.is_zero()) return true;
  return reduce_full(f, g).remainder.is_zero();
}

}  // namespace dmod
