#pragma once

#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

namespace relcalc::model {

// Binary relation on {0..n-1} stored as a row-major bit matrix. Rows are
// word-aligned so composition reduces to OR-ing rows.
class Relation {
 public:
  explicit Relation(int n) : n_(n), wpr_((n + 63) / 64), bits_(static_cast<size_t>(n) * wpr_, 0) {}

  static Relation identity(int n) {
    Relation r(n);
    for (int i = 0; i < n; ++i) r.set(i, i);
    return r;
  }

  static Relation full(int n) {
    Relation r(n);
    for (int i = 0; i < n; ++i)
      for (int w = 0; w < r.wpr_; ++w) r.bits_[static_cast<size_t>(i) * r.wpr_ + w] = ~0ULL;
    r.mask_tail();
    return r;
  }

  int universe() const { return n_; }

  bool get(int i, int j) const {
    return (bits_[static_cast<size_t>(i) * wpr_ + j / 64] >> (j % 64)) & 1ULL;
  }

  void set(int i, int j, bool value = true) {
    uint64_t& w = bits_[static_cast<size_t>(i) * wpr_ + j / 64];
    const uint64_t m = 1ULL << (j % 64);
    if (value)
      w |= m;
    else
      w &= ~m;
  }

  Relation complemented() const {
    Relation r(n_);
    for (size_t w = 0; w < bits_.size(); ++w) r.bits_[w] = ~bits_[w];
    r.mask_tail();
    return r;
  }

  Relation intersect(const Relation& o) const {
    Relation r(n_);
    for (size_t w = 0; w < bits_.size(); ++w) r.bits_[w] = bits_[w] & o.bits_[w];
    return r;
  }

  Relation unite(const Relation& o) const {
    Relation r(n_);
    for (size_t w = 0; w < bits_.size(); ++w) r.bits_[w] = bits_[w] | o.bits_[w];
    return r;
  }

  Relation compose(const Relation& o) const {
    Relation r(n_);
    for (int i = 0; i < n_; ++i) {
      const size_t row = static_cast<size_t>(i) * wpr_;
      for (int j = 0; j < n_; ++j) {
        if (!get(i, j)) continue;
        const size_t orow = static_cast<size_t>(j) * wpr_;
        for (int w = 0; w < wpr_; ++w) r.bits_[row + w] |= o.bits_[orow + w];
      }
    }
    return r;
  }

  Relation converse() const {
    Relation r(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (get(i, j)) r.set(j, i);
    return r;
  }

  long long count() const {
    long long c = 0;
    for (uint64_t w : bits_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (uint64_t w : bits_)
      if (w) return false;
    return true;
  }

  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (get(i, j)) out.emplace_back(i, j);
    return out;
  }

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  void mask_tail() {
    const int rem = n_ % 64;
    if (rem == 0) return;
    const uint64_t mask = (1ULL << rem) - 1;
    for (int i = 0; i < n_; ++i) bits_[static_cast<size_t>(i) * wpr_ + wpr_ - 1] &= mask;
  }

  int n_;
  int wpr_;
  std::vector<uint64_t> bits_;
};

}  // namespace relcalc::model
