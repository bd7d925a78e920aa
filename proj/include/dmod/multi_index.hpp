#ifndef DMOD_MULTI_INDEX_HPP
#define DMOD_MULTI_INDEX_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dmod {

// An exponent vector in N^n.  Comparisons are plain lexicographic; the
// degree-refined orders used elsewhere are built on top of this.
class MultiIndex {
 public:
  explicit MultiIndex(std::size_t n) : e_(n, 0) {}

  MultiIndex(std::initializer_list<int> e) : e_(e) { check(); }

  explicit MultiIndex(std::vector<int> e) : e_(std::move(e)) { check(); }

  std::size_t size() const { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  const std::vector<int>& entries() const { return e_; }

  int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }

  bool is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](int v) { return v == 0; });
  }

  // Componentwise <= (the divisibility/product order).
  bool leq(const MultiIndex& o) const {
    require_same_size(o);
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  MultiIndex plus(const MultiIndex& o) const {
    require_same_size(o);
    std::vector<int> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] + o.e_[i];
    return MultiIndex(std::move(r));
  }

  // Componentwise difference; rejects a result outside N^n.
  MultiIndex minus(const MultiIndex& o) const {
    require_same_size(o);
    std::vector<int> r(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
      r[i] = e_[i] - o.e_[i];
      if (r[i] < 0) throw std::invalid_argument("multi-index difference leaves N^n");
    }
    return MultiIndex(std::move(r));
  }

  static MultiIndex max(const MultiIndex& a, const MultiIndex& b) {
    a.require_same_size(b);
    std::vector<int> r(a.e_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(a.e_[i], b.e_[i]);
    return MultiIndex(std::move(r));
  }

  // k in slot i, zero elsewhere.
  static MultiIndex unit(std::size_t n, std::size_t i, int k = 1) {
    if (i >= n) throw std::out_of_range("multi-index slot out of range");
    std::vector<int> r(n, 0);
    r[i] = k;
    return MultiIndex(std::move(r));
  }

  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
    a.require_same_size(b);
    return std::lexicographical_compare_three_way(a.e_.begin(), a.e_.end(),
                                                  b.e_.begin(), b.e_.end());
  }
  friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e_ == b.e_; }

 private:
  std::vector<int> e_;

  void check() const {
    for (int v : e_)
      if (v < 0) throw std::invalid_argument("negative exponent in multi-index");
  }

  void require_same_size(const MultiIndex& o) const {
    if (e_.size() != o.e_.size())
      throw std::invalid_argument("multi-index size mismatch");
  }
};

}  // namespace dmod

#endif
