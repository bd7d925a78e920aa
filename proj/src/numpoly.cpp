#include "dmod/numpoly.hpp"

#include <algorithm>
#include <limits>
#include <cstdint>
#include <unordered_map>

#include "dmod/detail_format.hpp"

namespace dmod {

NumericalPolynomial::NumericalPolynomial(std::vector<ZZ> binom_coeffs)
    : coeffs_(std::move(binom_coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

NumericalPolynomial NumericalPolynomial::binomial(int shift, int m) {
  if (m < 0) throw std::invalid_argument("negative binomial degree");
  // With f = C(t+shift, m), the k-fold difference is C(t+shift-k, m-k), and
  // evaluating at t = -1 gives the basis coefficient.
  std::vector<ZZ> c(m + 1);
  for (int k = 0; k <= m; ++k) c[k] = binom_poly(ZZ(shift - k - 1), m - k);
  return NumericalPolynomial(std::move(c));
}

ZZ NumericalPolynomial::coeff(int i) const {
  if (i < 0) throw std::out_of_range("negative coefficient index");
  return i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : ZZ(0);
}

ZZ NumericalPolynomial::operator()(const ZZ& t) const {
  ZZ v(0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v += coeffs_[i] * binom_poly(t + i, i);
  return v;
}

NumericalPolynomial NumericalPolynomial::operator-() const { return scaled(ZZ(-1)); }

NumericalPolynomial NumericalPolynomial::scaled(const ZZ& c) const {
  if (c == 0) return {};
  std::vector<ZZ> r(coeffs_);
  for (ZZ& v : r) v *= c;
  return NumericalPolynomial(std::move(r));
}

NumericalPolynomial operator+(const NumericalPolynomial& a, const NumericalPolynomial& b) {
  std::vector<ZZ> r(std::max(a.coeffs_.size(), b.coeffs_.size()), ZZ(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] += b.coeffs_[i];
  return NumericalPolynomial(std::move(r));
}

NumericalPolynomial operator-(const NumericalPolynomial& a, const NumericalPolynomial& b) {
  return a + (-b);
}

NumericalPolynomial forward_difference(const NumericalPolynomial& p, int k) {
  if (k < 0) throw std::invalid_argument("negative difference order");
  const auto& c = p.binom_coeffs();
  if (k >= static_cast<int>(c.size())) return {};
  return NumericalPolynomial(std::vector<ZZ>(c.begin() + k, c.end()));
}

std::vector<QQ> to_monomial(const NumericalPolynomial& p) {
  if (p.is_zero()) return {};
  const int d = p.degree();
  std::vector<QQ> out(d + 1, QQ(0));
  // Expand each C(t+i, i) = (t+1)(t+2)...(t+i) / i! in powers of t.
  std::vector<ZZ> prod{ZZ(1)};  // running product, lowest power first
  for (int i = 0; i <= d; ++i) {
    if (i > 0) {
      std::vector<ZZ> next(prod.size() + 1, ZZ(0));
      for (std::size_t j = 0; j < prod.size(); ++j) {
        next[j] += prod[j] * i;  // multiply by (t + i)
        next[j + 1] += prod[j];
      }
      prod = std::move(next);
    }
    if (p.coeff(i) == 0) continue;
    const QQ scale = make_rational(p.coeff(i), factorial(i));
    for (std::size_t j = 0; j < prod.size(); ++j) out[j] += scale * prod[j];
  }
  return out;
}

namespace {

QQ eval_monomial(const std::vector<QQ>& coeffs, const ZZ& t) {
  QQ v(0);
  for (std::size_t i = coeffs.size(); i-- > 0;) v = v * t + coeffs[i];
  return v;
}

}  // namespace

NumericalPolynomial from_monomial(const std::vector<QQ>& coeffs) {
  int d = static_cast<int>(coeffs.size()) - 1;
  while (d >= 0 && coeffs[d] == 0) --d;
  if (d < 0) return {};

  // Basis coefficients are iterated differences f(t) - f(t-1) evaluated at
  // t = -1, since C(t+i-k, i-k) vanishes there except when i = k.
  std::vector<QQ> diffs(d + 1);
  for (int j = 0; j <= d; ++j) diffs[j] = eval_monomial(coeffs, ZZ(-1 - j));
  std::vector<ZZ> out(d + 1);
  for (int k = 0; k <= d; ++k) {
    if (!is_integer(diffs[0]))
      throw std::invalid_argument("polynomial is not integer-valued");
    out[k] = diffs[0].get_num();
    for (int j = 0; j + k + 1 <= d; ++j) diffs[j] = diffs[j] - diffs[j + 1];
  }

  NumericalPolynomial p{std::move(out)};
  if (to_monomial(p) != std::vector<QQ>(coeffs.begin(), coeffs.begin() + d + 1))
    throw std::invalid_argument("polynomial is not integer-valued");
  return p;
}

std::string binomial_string(const NumericalPolynomial& p) {
  std::vector<std::pair<bool, std::string>> pieces;
  for (int i = p.degree(); i >= 0; --i) {
    const ZZ c = p.coeff(i);
    if (c == 0) continue;
    std::string suffix;
    if (i > 0)
      suffix = "C(t+" + std::to_string(i) + "," + std::to_string(i) + ")";
    pieces.emplace_back(c < 0, detail::term_body(QQ(c), suffix));
  }
  return detail::join_signed(pieces);
}

std::string monomial_string(const NumericalPolynomial& p) {
  const std::vector<QQ> coeffs = to_monomial(p);
  std::vector<std::pair<bool, std::string>> pieces;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    const QQ& c = coeffs[i];
    if (c == 0) continue;
    std::string suffix;
    if (i == 1)
      suffix = "t";
    else if (i > 1)
      suffix = "t^" + std::to_string(i);
    pieces.emplace_back(c < 0, detail::term_body(c, suffix));
  }
  return detail::join_signed(pieces);
}

PointSet::PointSet(int dim) : dim(dim) {
  if (dim < 1) throw std::invalid_argument("point set dimension must be positive");
}

PointSet::PointSet(int dim, std::vector<std::vector<int>> pts) : PointSet(dim) {
  for (const auto& p : pts) {
    if (static_cast<int>(p.size()) != dim)
      throw std::invalid_argument("point dimension mismatch");
    for (int v : p)
      if (v < 0) throw std::invalid_argument("negative point coordinate");
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  points = std::move(pts);
}

namespace {

bool dominates(const std::vector<int>& low, const std::vector<int>& high) {
  for (std::size_t i = 0; i < low.size(); ++i)
    if (low[i] > high[i]) return false;
  return true;
}

// Subset expansion widths beyond this would be astronomically slow anyway;
// fail loudly instead of spinning.
constexpr int kMaxSubsetPoints = 24;

}  // namespace

PointSet minimal_points(const PointSet& a) {
  std::vector<std::vector<int>> keep;
  for (const auto& p : a.points) {
    bool minimal = true;
    for (const auto& q : a.points)
      if (q != p && dominates(q, p)) {
        minimal = false;
        break;
      }
    if (minimal) keep.push_back(p);
  }
  return PointSet(a.dim, std::move(keep));
}

NumericalPolynomial kolchin_inclusion_exclusion(const PointSet& a) {
  const int p = a.size();
  if (p > kMaxSubsetPoints) throw std::invalid_argument("point set too large for subset expansion");
  const int m = a.dim;
  NumericalPolynomial omega;
  for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
    std::vector<int> peak(m, 0);
    int bits = 0;
    for (int i = 0; i < p; ++i)
      if (mask & (1u << i)) {
        ++bits;
        for (int j = 0; j < m; ++j) peak[j] = std::max(peak[j], a.points[i][j]);
      }
    int b = 0;
    for (int v : peak) b += v;
    NumericalPolynomial term = NumericalPolynomial::binomial(m - b, m);
    omega = (bits % 2 == 0) ? omega + term : omega - term;
  }
  return omega;
}

NumericalPolynomial kolchin_polynomial(const PointSet& a) {
  return kolchin_inclusion_exclusion(minimal_points(a));
}

namespace {

// Dynamic program over coordinates.  State: next coordinate j, remaining
// degree budget, and the subset of points still componentwise <= the chosen
// prefix.  A tuple is counted when that subset is empty once all coordinates
// are chosen; when it empties early the tail is a free composition count.
class VPointCounter {
 public:
  VPointCounter(const PointSet& a, int s) : pts_(a.points), m_(a.dim), s_(s) {
    free_.assign(m_ + 1, std::vector<long long>(s + 1, 0));
    for (int budget = 0; budget <= s; ++budget) free_[0][budget] = 1;
    for (int len = 1; len <= m_; ++len)
      for (int budget = 0; budget <= s; ++budget)
        free_[len][budget] =
            free_[len - 1][budget] + (budget > 0 ? free_[len][budget - 1] : 0);
  }

  long long run() {
    std::uint32_t all = (pts_.size() == 32) ? ~0u : ((1u << pts_.size()) - 1);
    return count(0, s_, all);
  }

 private:
  const std::vector<std::vector<int>>& pts_;
  int m_, s_;
  std::vector<std::vector<long long>> free_;  // tuples of given length with sum <= budget
  std::unordered_map<std::uint64_t, long long> memo_;

  long long count(int j, int budget, std::uint32_t alive) {
    if (alive == 0) return free_[m_ - j][budget];
    if (j == m_) return 0;  // some point is dominated by the full tuple
    const std::uint64_t key =
        (static_cast<std::uint64_t>(j) << 58) | (static_cast<std::uint64_t>(alive) << 26) |
        static_cast<std::uint64_t>(budget);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    long long total = 0;
    for (int v = 0; v <= budget; ++v) {
      std::uint32_t next = 0;
      for (std::uint32_t rest = alive; rest;) {
        const int i = __builtin_ctz(rest);
        rest &= rest - 1;
        if (pts_[i][j] <= v) next |= (1u << i);
      }
      total += count(j + 1, budget - v, next);
    }
    memo_.emplace(key, total);
    return total;
  }
};

}  // namespace

long long count_v_points(const PointSet& a, int s) {
  if (s < 0) throw std::invalid_argument("negative degree bound");
  if (s >= (1 << 26)) throw std::invalid_argument("degree bound too large");
  const PointSet pruned = minimal_points(a);  // same avoided set, fewer masks
  if (pruned.size() > kMaxSubsetPoints)
    throw std::invalid_argument("point set too large to count against");

  // All intermediate counts are bounded by the total number of tuples.
  ZZ bound = binom_poly(ZZ(s) + a.dim, a.dim);
  if (bound > ZZ(std::numeric_limits<long>::max()))
    throw std::overflow_error("point count exceeds 64 bits");

  // A minimal point at the origin dominates everything.
  for (const auto& p : pruned.points)
    if (std::all_of(p.begin(), p.end(), [](int v) { return v == 0; })) return 0;

  return VPointCounter(pruned, s).run();
}

}  // namespace dmod
