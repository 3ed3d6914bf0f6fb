#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace bracelab {

/// Set of element indices 0..n-1, stored as a bitmask (one word per 64
/// elements; braces at enumeration scale fit in a single word).
/// Comparison order is size first, then the sorted member list
/// lexicographically, which keeps subbrace listings canonical.
class ElemSet {
 public:
  ElemSet() : n_(0) {}
  explicit ElemSet(int n) : n_(n), w_((n + 63) / 64, 0) {}

  static ElemSet singleton(int n, int e) {
    ElemSet s(n);
    s.insert(e);
    return s;
  }

  static ElemSet full(int n) {
    ElemSet s(n);
    for (int i = 0; i < n; ++i) s.insert(i);
    return s;
  }

  int universe() const { return n_; }

  bool contains(int e) const {
    return (w_[static_cast<size_t>(e) >> 6] >> (e & 63)) & 1;
  }

  void insert(int e) { w_[static_cast<size_t>(e) >> 6] |= uint64_t{1} << (e & 63); }
  void erase(int e) { w_[static_cast<size_t>(e) >> 6] &= ~(uint64_t{1} << (e & 63)); }

  int size() const {
    int c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (uint64_t w : w_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const ElemSet& other) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~other.w_[i]) return false;
    return true;
  }

  ElemSet intersect(const ElemSet& other) const {
    ElemSet r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & other.w_[i];
    return r;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(size()));
    for (size_t i = 0; i < w_.size(); ++i) {
      uint64_t w = w_[i];
      while (w) {
        out.push_back(static_cast<int>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  bool operator==(const ElemSet& other) const { return w_ == other.w_; }
  bool operator!=(const ElemSet& other) const { return !(*this == other); }

  /// Size, then member-list lexicographic.
  bool operator<(const ElemSet& other) const {
    int a = size(), b = other.size();
    if (a != b) return a < b;
    return members() < other.members();
  }

  /// Renders as "{0,2}" with members ascending.
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int e : members()) {
      if (!first) out += ',';
      out += std::to_string(e);
      first = false;
    }
    out += '}';
    return out;
  }

  uint64_t hash() const {
    uint64_t h = 1469598103934665603ull;
    for (uint64_t w : w_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  int n_;
  std::vector<uint64_t> w_;
};

}  // namespace bracelab
