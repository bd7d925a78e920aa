#ifndef DMOD_GROEBNER_HPP
#define DMOD_GROEBNER_HPP

#include <optional>
#include <vector>

#include "dmod/free_module.hpp"

namespace dmod {

using Basis = std::vector<ModuleElement>;

// Outcome of dividing f by a basis: f = sum_k act(quotients[k], basis[k]) + remainder,
// with no remainder monomial divisible by any basis leading monomial.
struct DivisionResult {
  std::vector<WeylElement> quotients;
  ModuleElement remainder;
};

// One reduction step of f by g at the greatest monomial of f divisible by
// LM(g); nullopt when no monomial of f is divisible.
std::optional<ModuleElement> reduce_step(const ModuleElement& f, const ModuleElement& g);

// Full division: repeatedly cancels the greatest reducible monomial using the
// first basis element whose leading monomial divides it.
DivisionResult reduce_full(const ModuleElement& f, const Basis& basis);

// (L/LT(f)) f - (L/LT(g)) g for L the leading-monomial lcm; the zero element
// when the leading monomials sit on distinct generators.
ModuleElement s_polynomial(const ModuleElement& f, const ModuleElement& g);

// Buchberger completion with a FIFO pair queue.  Input order is preserved as
// a prefix of the result; discovered elements are appended in creation order.
Basis buchberger(const Basis& input);

// Drops elements whose leading monomial is divisible by another kept
// element's leading monomial; preserves the Groebner property and the
// relative order of survivors.
Basis prune_redundant(const Basis& g);

// True when every pairwise S-element reduces to zero modulo g.
bool is_groebner(const Basis& g);

// Submodule membership via division: remainder zero.
bool is_member(const ModuleElement& f, const Basis& g);

}  // namespace dmod

#endif
