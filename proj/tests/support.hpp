#ifndef DMOD_TESTS_SUPPORT_HPP
#define DMOD_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dmod/bernstein.hpp"
#include "dmod/free_module.hpp"
#include "dmod/parse.hpp"

namespace testsupport {

inline dmod::MultiIndex mi(std::vector<int> v) { return dmod::MultiIndex(std::move(v)); }

inline dmod::WeylMonomial wm(std::vector<int> a, std::vector<int> b) {
  return dmod::WeylMonomial(mi(std::move(a)), mi(std::move(b)));
}

inline dmod::ModuleMonomial mm(std::vector<int> a, std::vector<int> b, int gen) {
  return dmod::ModuleMonomial(wm(std::move(a), std::move(b)), gen);
}

// Builds one module element from the relation syntax, e.g. "x1^2 e1 - d2 e2".
inline dmod::ModuleElement rel(int n, int m, const std::string& text) {
  return dmod::parse_presentation("weyl n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                  "\nrel: " + text + "\n")
      .relations.at(0);
}

inline dmod::ModulePresentation presentation(int n, int m,
                                             const std::vector<std::string>& rels) {
  std::string text = "weyl n=" + std::to_string(n) + " m=" + std::to_string(m) + "\n";
  for (const std::string& r : rels) text += "rel: " + r + "\n";
  return dmod::parse_presentation(text);
}

// The three fully worked presentations reused across the suite.
inline dmod::ModulePresentation single_relation_n1() {
  return presentation(1, 1, {"x1^2 e1 + d1^2 e1 + x1 d1 e1"});
}

inline dmod::ModulePresentation pair_n2() {
  return presentation(2, 2, {"x1^2 d1^3 e1 + d1^5 e1", "x2^2 e1 - x1 e2"});
}

inline dmod::ModulePresentation const_coeff_n3() {
  return presentation(3, 1, {"x2 e1 + e1", "x1 e1", "d3 e1 - e1"});
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  int uniform(int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(gen_);
  }

  dmod::QQ coeff() {  // nonzero, numerator in [-9,9], denominator in [1,4]
    int num = 0;
    while (num == 0) num = uniform(-9, 9);
    return dmod::make_rational(dmod::ZZ(num), dmod::ZZ(uniform(1, 4)));
  }

  dmod::MultiIndex multi_index(int n, int max_entry) {
    std::vector<int> e(n);
    for (int& v : e) v = uniform(0, max_entry);
    return mi(std::move(e));
  }

  dmod::WeylMonomial weyl_monomial(int n, int max_entry) {
    return dmod::WeylMonomial(multi_index(n, max_entry), multi_index(n, max_entry));
  }

  dmod::WeylElement weyl_element(int n, int max_terms, int max_entry, bool nonzero = true) {
    std::vector<dmod::WeylElement::Term> ts;
    const int count = uniform(nonzero ? 1 : 0, max_terms);
    for (int i = 0; i < count; ++i) ts.emplace_back(weyl_monomial(n, max_entry), coeff());
    dmod::WeylElement f(n, std::move(ts));
    if (nonzero && f.is_zero()) return dmod::WeylElement::one(n);
    return f;
  }

  dmod::ModuleElement module_element(int n, int m, int max_terms, int max_entry,
                                     bool nonzero = true) {
    std::vector<dmod::ModuleElement::Term> ts;
    const int count = uniform(nonzero ? 1 : 0, max_terms);
    for (int i = 0; i < count; ++i)
      ts.emplace_back(dmod::ModuleMonomial(weyl_monomial(n, max_entry), uniform(1, m)),
                      coeff());
    dmod::ModuleElement f(n, m, std::move(ts));
    if (nonzero && f.is_zero()) return dmod::ModuleElement::generator(n, m, 1);
    return f;
  }

  dmod::Polynomial polynomial(int n, int max_terms, int max_entry) {
    dmod::Polynomial p(n);
    const int count = uniform(1, max_terms);
    for (int i = 0; i < count; ++i) p.add_term(multi_index(n, max_entry), coeff());
    return p;
  }

  dmod::PointSet point_set(int dim, int max_points, int max_coord) {
    std::vector<std::vector<int>> pts;
    const int count = uniform(0, max_points);
    for (int i = 0; i < count; ++i) {
      std::vector<int> p(dim);
      for (int& v : p) v = uniform(0, max_coord);
      pts.push_back(std::move(p));
    }
    return dmod::PointSet(dim, std::move(pts));
  }

 private:
  std::mt19937_64 gen_;
};

// Random operator of bounded total degree (coefficients from Rng::coeff).
inline dmod::WeylElement low_degree_operator(Rng& rng, int n, int max_deg) {
  auto mono = [&] {
    std::vector<int> a(n, 0), b(n, 0);
    const int deg = rng.uniform(0, max_deg);
    for (int i = 0; i < deg; ++i) {
      const int slot = rng.uniform(0, 2 * n - 1);
      if (slot < n)
        ++a[slot];
      else
        ++b[slot - n];
    }
    return wm(std::move(a), std::move(b));
  };
  std::vector<dmod::WeylElement::Term> ts;
  const int count = rng.uniform(1, 2);
  for (int i = 0; i < count; ++i) ts.emplace_back(mono(), rng.coeff());
  dmod::WeylElement d(n, std::move(ts));
  return d.is_zero() ? dmod::WeylElement::one(n) : d;
}

// Same module, one more generator: f_{m+1} := D f_k, encoded by keeping the
// old relations and adding e_{m+1} - D e_k.
inline dmod::ModulePresentation augment_with_redundant_generator(
    const dmod::ModulePresentation& p, const dmod::WeylElement& d, int k) {
  dmod::ModulePresentation q;
  q.n = p.n;
  q.m = p.m + 1;
  for (const dmod::ModuleElement& r : p.relations)
    q.relations.emplace_back(p.n, q.m, r.terms());
  q.relations.push_back(dmod::ModuleElement::generator(p.n, q.m, q.m) -
                        act(d, dmod::ModuleElement::generator(p.n, q.m, k)));
  q.validate();
  return q;
}

}  // namespace testsupport

#endif
