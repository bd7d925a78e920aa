#include "dmod/bernstein.hpp"

namespace dmod {

void ModulePresentation::validate() const {
  if (n < 1) throw std::invalid_argument("number of variables must be positive");
  if (m < 1) throw std::invalid_argument("number of generators must be positive");
  for (const ModuleElement& f : relations) {
    if (f.is_zero()) throw std::invalid_argument("zero relation");
    if (f.vars() != static_cast<std::size_t>(n) || f.rank() != m)
      throw std::invalid_argument("relation shape mismatch");
  }
}

std::vector<PointSet> leading_exponent_sets(const Basis& g, int n, int m) {
  std::vector<std::vector<std::vector<int>>> pts(m);
  for (const ModuleElement& f : g) {
    const ModuleMonomial& lm = f.leading_monomial();
    if (lm.gen > m) throw std::invalid_argument("generator index exceeds rank");
    std::vector<int> e;
    e.reserve(2 * n);
    e.insert(e.end(), lm.mono.alpha.entries().begin(), lm.mono.alpha.entries().end());
    e.insert(e.end(), lm.mono.beta.entries().begin(), lm.mono.beta.entries().end());
    pts[lm.gen - 1].push_back(std::move(e));
  }
  std::vector<PointSet> out;
  out.reserve(m);
  for (int i = 0; i < m; ++i) out.emplace_back(2 * n, std::move(pts[i]));
  return out;
}

NumericalPolynomial chi_from_leading_sets(const std::vector<PointSet>& sets) {
  NumericalPolynomial chi;
  for (const PointSet& a : sets) chi = chi + kolchin_polynomial(a);
  return chi;
}

NumericalPolynomial bernstein_polynomial(const ModulePresentation& p) {
  return full_report(p).chi;
}

Invariants invariants(const NumericalPolynomial& chi, int n) {
  if (n < 1) throw std::invalid_argument("number of variables must be positive");
  if (chi.degree() > 2 * n)
    throw std::invalid_argument("counting polynomial degree exceeds twice the variable count");
  Invariants v;
  v.d = chi.degree();
  v.a_d = v.d >= 0 ? chi.coeff(v.d) : ZZ(0);
  v.a_2n = chi.coeff(2 * n);
  v.multiplicity = v.a_d;
  v.literal_paper_multiplicity = v.d >= 0 ? ZZ(factorial(v.d) * v.a_d) : ZZ(0);
  v.delta = forward_difference(chi, 2 * n).coeff(0);
  if (v.delta != v.a_2n)
    throw std::logic_error("difference of order 2n disagrees with the top-slot coefficient");
  return v;
}

std::string KrullReport::type_string() const {
  return (type_equal ? "= " : "< ") + std::to_string(two_n);
}

std::string KrullReport::dim_string() const {
  return dim ? to_string(*dim) : std::string("not determined");
}

KrullReport krull_report(const ZZ& delta, int n) {
  if (n < 1) throw std::invalid_argument("number of variables must be positive");
  if (delta < 0) throw std::invalid_argument("negative top coefficient");
  KrullReport r;
  r.two_n = 2 * n;
  r.type_equal = delta > 0;
  if (r.type_equal) r.dim = delta;
  return r;
}

BernsteinReport full_report(const ModulePresentation& p, bool reduce_basis) {
  p.validate();
  BernsteinReport rep;
  rep.n = p.n;
  rep.m = p.m;
  rep.groebner = buchberger(p.relations);
  if (reduce_basis) rep.groebner = prune_redundant(rep.groebner);
  rep.chi = chi_from_leading_sets(leading_exponent_sets(rep.groebner, p.n, p.m));
  rep.inv = invariants(rep.chi, p.n);
  rep.krull = krull_report(rep.inv.delta, p.n);
  return rep;
}

std::string chi_string(const NumericalPolynomial& chi) {
  const std::string b = binomial_string(chi);
  const std::string m = monomial_string(chi);
  if (b == m) return "chi = " + b;
  return "chi = " + b + " = " + m;
}

}  // namespace dmod
