#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bracelab/errors.hpp"

namespace bracelab {

using Table = std::vector<std::vector<int>>;  // n rows of n element indices

namespace detail {

inline std::string triple_msg(const char* fault, const std::string& where,
                              int a, int b, int c) {
  return std::string(fault) + (where.empty() ? "" : " in " + where) +
         " at (a,b,c)=(" + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + ")";
}

/// Flattened group table with O(1) lookups; identity is index 0.
struct FlatTable {
  int n = 0;
  std::vector<int> t;

  int at(int a, int b) const { return t[static_cast<size_t>(a) * n + b]; }
};

inline FlatTable flatten(const Table& rows, int n, const std::string& where) {
  if (static_cast<int>(rows.size()) != n)
    throw Error("table \"" + where + "\" must have " + std::to_string(n) + " rows");
  FlatTable f;
  f.n = n;
  f.t.reserve(static_cast<size_t>(n) * n);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      throw Error("table \"" + where + "\" has a row of length " +
                  std::to_string(row.size()) + ", expected " + std::to_string(n));
    for (int e : row) {
      if (e < 0 || e >= n)
        throw Error("table \"" + where + "\" entry " + std::to_string(e) +
                    " out of range 0.." + std::to_string(n - 1));
      f.t.push_back(e);
    }
  }
  return f;
}

/// Checks the group axioms with identity 0. Scan order is fixed so the
/// reported witness is deterministic: identity, inverses, associativity.
/// Associativity is exhaustive up to `exhaustive_cap` and falls back to a
/// Light-style generator test above it.
inline void check_group(const FlatTable& f, const std::string& where,
                        int exhaustive_cap) {
  const int n = f.n;
  for (int b = 0; b < n; ++b)
    if (f.at(0, b) != b)
      throw ValidationError(Fault::NotAGroup, where, {b},
                            "NotAGroup in " + where + ": identity fails at a=" +
                                std::to_string(b));
  for (int a = 0; a < n; ++a)
    if (f.at(a, 0) != a)
      throw ValidationError(Fault::NotAGroup, where, {a},
                            "NotAGroup in " + where + ": identity fails at a=" +
                                std::to_string(a));
  for (int a = 0; a < n; ++a) {
    bool found = false;
    for (int b = 0; b < n; ++b) {
      if (f.at(a, b) == 0 && f.at(b, a) == 0) {
        found = true;
        break;
      }
    }
    if (!found)
      throw ValidationError(Fault::NotAGroup, where, {a},
                            "NotAGroup in " + where + ": no inverse for a=" +
                                std::to_string(a));
  }

  auto assoc_fail = [&](int a, int b, int c) {
    throw ValidationError(
        Fault::NotAGroup, where, {a, b, c},
        "NotAGroup in " + where + ": associativity fails at (a,b,c)=(" +
            std::to_string(a) + "," + std::to_string(b) + "," +
            std::to_string(c) + ")");
  };

  if (n <= exhaustive_cap) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (f.at(a, f.at(b, c)) != f.at(f.at(a, b), c)) assoc_fail(a, b, c);
    return;
  }

  // Light's test: verify a(gb) = (ag)b for g in a generating set only.
  std::vector<int> gens;
  std::vector<char> reached(n, 0);
  reached[0] = 1;
  int covered = 1;
  while (covered < n) {
    int g = 0;
    while (g < n && reached[g]) ++g;
    gens.push_back(g);
    reached[g] = 1;
    ++covered;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int x = 0; x < n; ++x) {
        if (!reached[x]) continue;
        for (int y = 0; y < n; ++y) {
          if (!reached[y]) continue;
          int z = f.at(x, y);
          if (!reached[z]) {
            reached[z] = 1;
            ++covered;
            grew = true;
          }
        }
      }
    }
  }
  for (int g : gens)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (f.at(a, f.at(g, b)) != f.at(f.at(a, g), b)) assoc_fail(a, g, b);
}

}  // namespace detail

/// A finite left brace on indices 0..n-1: an abelian group (+), a group (·),
/// both with identity 0, linked by a·(b+c) = a·b + a·c - a. Instances are
/// immutable once constructed, so concurrent reads are safe.
class FiniteBrace {
 public:
  /// Exhaustive associativity checking is used up to this order.
  static constexpr int kDefaultValidationCap = 512;

  int order() const { return n_; }

  int add(int a, int b) const { return add_.at(a, b); }
  int mul(int a, int b) const { return mul_.at(a, b); }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const { return inv_[a]; }

  /// lambda_a(b) = -a + ab; an automorphism of (A,+) for each a.
  int lambda(int a, int b) const { return add(neg(a), mul(a, b)); }

  /// Inverse of the permutation b -> lambda_a(b).
  int lambda_inv(int a, int c) const { return mul(inv(a), add(a, c)); }

  /// a * b = ab - a - b; the deviation of · from +.
  int star(int a, int b) const { return add(lambda(a, b), neg(b)); }

  const std::vector<int>& add_row(int a) const { return add_rows_[a]; }
  const std::vector<int>& mul_row(int a) const { return mul_rows_[a]; }

  Table add_table() const { return add_rows_; }
  Table mul_table() const { return mul_rows_; }

  bool tables_equal(const FiniteBrace& other) const {
    return n_ == other.n_ && add_.t == other.add_.t && mul_.t == other.mul_.t;
  }

  /// Construction path for tables already known to satisfy the axioms
  /// (direct sums, quotients, enumeration output).
  static FiniteBrace trusted(Table add, Table mul) {
    return FiniteBrace(std::move(add), std::move(mul));
  }

 private:
  friend FiniteBrace validate_brace(const Table&, const Table&, int);

  FiniteBrace(Table add_rows, Table mul_rows)
      : add_rows_(std::move(add_rows)), mul_rows_(std::move(mul_rows)) {
    n_ = static_cast<int>(add_rows_.size());
    add_ = detail::flatten(add_rows_, n_, "add");
    mul_ = detail::flatten(mul_rows_, n_, "mul");
    neg_.assign(n_, 0);
    inv_.assign(n_, 0);
    for (int a = 0; a < n_; ++a) {
      for (int b = 0; b < n_; ++b) {
        if (add_.at(a, b) == 0) neg_[a] = b;
        if (mul_.at(a, b) == 0 && mul_.at(b, a) == 0) inv_[a] = b;
      }
    }
  }

  int n_ = 0;
  detail::FlatTable add_;
  detail::FlatTable mul_;
  std::vector<int> neg_;
  std::vector<int> inv_;
  Table add_rows_;
  Table mul_rows_;
};

/// Validates the two tables and returns the brace. Checks run in a fixed
/// order (additive group, commutativity, multiplicative group, brace axiom)
/// and report the first witness in scan order.
inline FiniteBrace validate_brace(const Table& add_table, const Table& mul_table,
                                  int exhaustive_cap = FiniteBrace::kDefaultValidationCap) {
  if (add_table.empty()) throw Error("brace order must be positive");
  const int n = static_cast<int>(add_table.size());

  detail::FlatTable add = detail::flatten(add_table, n, "add");
  detail::FlatTable mul = detail::flatten(mul_table, n, "mul");

  detail::check_group(add, "add", exhaustive_cap);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (add.at(a, b) != add.at(b, a))
        throw ValidationError(Fault::NotAbelian, "add", {a, b},
                              "NotAbelian at (a,b)=(" + std::to_string(a) + "," +
                                  std::to_string(b) + ")");
  detail::check_group(mul, "mul", exhaustive_cap);

  std::vector<int> neg(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (add.at(a, b) == 0) neg[a] = b;

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        int lhs = mul.at(a, add.at(b, c));
        int rhs = add.at(add.at(mul.at(a, b), mul.at(a, c)), neg[a]);
        if (lhs != rhs)
          throw ValidationError(Fault::BraceAxiomViolated, "", {a, b, c},
                                detail::triple_msg("BraceAxiomViolated", "", a, b, c));
      }

  return FiniteBrace(add_table, mul_table);
}

/// Componentwise direct sum; element (i,j) of A⊕B is encoded as i·|B| + j.
inline FiniteBrace direct_sum(const FiniteBrace& a, const FiniteBrace& b) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  Table add(n, std::vector<int>(n)), mul(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    const int ia = i / nb, ib = i % nb;
    for (int j = 0; j < n; ++j) {
      const int ja = j / nb, jb = j % nb;
      add[i][j] = a.add(ia, ja) * nb + b.add(ib, jb);
      mul[i][j] = a.mul(ia, ja) * nb + b.mul(ib, jb);
    }
  }
  return FiniteBrace::trusted(std::move(add), std::move(mul));
}

/// True iff the two operations coincide, equivalently a*b = 0 everywhere.
inline bool is_abelian(const FiniteBrace& a) {
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y)
      if (a.add(x, y) != a.mul(x, y)) return false;
  return true;
}

}  // namespace bracelab
