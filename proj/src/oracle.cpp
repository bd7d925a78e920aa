#include "dmod/oracle.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace dmod {

namespace {

void check_shape(const Basis& g, int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("bad module shape");
  for (const ModuleElement& f : g) {
    if (f.is_zero()) throw std::invalid_argument("zero element in basis");
    if (f.vars() != static_cast<std::size_t>(n) || f.rank() != m)
      throw std::invalid_argument("basis shape mismatch");
  }
}

// Calls visit(e) for every exponent vector e in N^len with sum <= r.
template <class F>
void for_each_exponent(int len, int r, F&& visit) {
  std::vector<int> e(len, 0);
  auto rec = [&](auto&& self, int idx, int left) -> void {
    if (idx == len) {
      visit(e);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[idx] = v;
      self(self, idx + 1, left - v);
    }
    e[idx] = 0;
  };
  rec(rec, 0, r);
}

std::vector<std::vector<std::vector<int>>> leading_exponents_by_gen(const Basis& g, int n,
                                                                    int m) {
  std::vector<std::vector<std::vector<int>>> lead(m);
  for (const ModuleElement& f : g) {
    const ModuleMonomial& lm = f.leading_monomial();
    std::vector<int> e;
    e.reserve(2 * n);
    e.insert(e.end(), lm.mono.alpha.entries().begin(), lm.mono.alpha.entries().end());
    e.insert(e.end(), lm.mono.beta.entries().begin(), lm.mono.beta.entries().end());
    lead[lm.gen - 1].push_back(std::move(e));
  }
  return lead;
}

bool dominated(const std::vector<std::vector<int>>& lead, const std::vector<int>& e) {
  for (const auto& l : lead) {
    bool ge = true;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (l[i] > e[i]) {
        ge = false;
        break;
      }
    if (ge) return true;
  }
  return false;
}

}  // namespace

long long count_standard_monomials(const Basis& g, int n, int m, int r) {
  check_shape(g, n, m);
  if (r < 0) throw std::invalid_argument("negative degree bound");
  const auto lead = leading_exponents_by_gen(g, n, m);
  long long count = 0;
  for_each_exponent(2 * n, r, [&](const std::vector<int>& e) {
    for (int i = 0; i < m; ++i)
      if (!dominated(lead[i], e)) ++count;
  });
  return count;
}

namespace {

// Sparse row of integers keyed by module monomial, kept in decreasing order.
using SparseRow = std::vector<std::pair<ModuleMonomial, ZZ>>;

SparseRow to_integer_row(const ModuleElement& f) {
  ZZ den(1);
  for (const auto& [mm, c] : f.terms()) den = lcm(den, ZZ(c.get_den()));
  SparseRow row;
  row.reserve(f.terms().size());
  ZZ content(0);
  for (const auto& [mm, c] : f.terms()) {
    ZZ v = ZZ(c.get_num()) * (den / ZZ(c.get_den()));
    content = gcd(content, v);
    row.emplace_back(mm, std::move(v));
  }
  for (auto& [mm, v] : row) v /= content;
  return row;
}

// head*row - scale*pivot with the shared leading monomial cancelled, divided
// by the content so entries stay small.
SparseRow eliminate(const SparseRow& row, const SparseRow& pivot) {
  const ZZ g = gcd(row.front().second, pivot.front().second);
  const ZZ a = pivot.front().second / g;  // multiplies row
  const ZZ b = row.front().second / g;    // multiplies pivot
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  ZZ content(0);
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    ZZ v;
    const ModuleMonomial* mm = nullptr;
    if (j == pivot.size() ||
        (i < row.size() && compare(row[i].first, pivot[j].first) > 0)) {
      v = row[i].second * a;
      mm = &row[i].first;
      ++i;
    } else if (i == row.size() || compare(pivot[j].first, row[i].first) > 0) {
      v = pivot[j].second * -b;
      mm = &pivot[j].first;
      ++j;
    } else {
      v = row[i].second * a - pivot[j].second * b;
      mm = &row[i].first;
      ++i, ++j;
    }
    if (v != 0) {
      content = gcd(content, v);
      out.emplace_back(*mm, std::move(v));
    }
  }
  if (content > 1)
    for (auto& [mm, v] : out) v /= content;
  return out;
}

}  // namespace

long long rank_dimension(const Basis& g, int n, int m, int r) {
  check_shape(g, n, m);
  if (r < 0) throw std::invalid_argument("negative degree bound");

  std::map<ModuleMonomial, SparseRow, ModuleMonomialDesc> pivots;
  long long rank = 0;
  for (int gen = 1; gen <= m; ++gen) {
    for_each_exponent(2 * n, r, [&](const std::vector<int>& e) {
      std::vector<int> a(e.begin(), e.begin() + n), b(e.begin() + n, e.end());
      ModuleElement mono = ModuleElement::monomial(
          n, m, ModuleMonomial(WeylMonomial(MultiIndex(a), MultiIndex(b)), gen));
      ModuleElement rem = reduce_full(mono, g).remainder;
      if (rem.is_zero()) return;
      SparseRow row = to_integer_row(rem);
      while (!row.empty()) {
        auto it = pivots.find(row.front().first);
        if (it == pivots.end()) {
          pivots.emplace(row.front().first, std::move(row));
          ++rank;
          break;
        }
        row = eliminate(row, it->second);
      }
    });
  }
  return rank;
}

DimensionTable dimension_table(const Basis& g, const NumericalPolynomial& chi, int n, int m,
                               int r_max) {
  if (r_max < 0) throw std::invalid_argument("negative degree bound");
  DimensionTable table;
  table.rows.reserve(r_max + 1);
  for (int r = 0; r <= r_max; ++r) {
    DimensionRow row;
    row.r = r;
    row.dim = count_standard_monomials(g, n, m, r);
    row.chi = chi(ZZ(r));
    row.agree = (row.chi == static_cast<long>(row.dim));
    table.rows.push_back(std::move(row));
  }
  table.first_agreement_r = -1;
  for (int r = r_max; r >= 0 && table.rows[r].agree; --r) table.first_agreement_r = r;
  return table;
}

DimensionTable verify_presentation(const ModulePresentation& p, int r_max) {
  const BernsteinReport rep = full_report(p);
  return dimension_table(rep.groebner, rep.chi, p.n, p.m, r_max);
}

}  // namespace dmod
