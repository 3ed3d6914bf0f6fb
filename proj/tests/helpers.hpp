#pragma once

// Test-side constructions and oracles, kept independent of the library's
// builders so the two routes can check each other.

#include <optional>
#include <set>
#include <vector>

#include "bracelab/brace.hpp"

namespace testutil {

using bracelab::Table;

/// Addition table of Z/n.
inline Table mod_add_table(int n) {
  Table t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

/// mul(a,b) = a + (-1)^a b (mod n), the negation-brace product.
inline Table neg_mul_table(int n) {
  Table t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + (a % 2 == 0 ? b : n - b)) % n;
  return t;
}

/// Direct scan for a brace-axiom violation; first triple in lex order.
inline std::optional<std::array<int, 3>> first_axiom_violation(const Table& add,
                                                               const Table& mul) {
  const int n = static_cast<int>(add.size());
  std::vector<int> neg(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (add[a][b] == 0) neg[a] = b;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul[a][add[b][c]] != add[add[mul[a][b]][mul[a][c]]][neg[a]])
          return std::array<int, 3>{a, b, c};
  return std::nullopt;
}

/// Direct scan for an associativity violation in a single table.
inline std::optional<std::array<int, 3>> first_assoc_violation(const Table& t) {
  const int n = static_cast<int>(t.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t[a][t[b][c]] != t[t[a][b]][c]) return std::array<int, 3>{a, b, c};
  return std::nullopt;
}

/// Brute-force subbrace enumeration over all 2^n subsets (n small).
inline std::set<std::vector<int>> brute_force_subbraces(const bracelab::FiniteBrace& b) {
  const int n = b.order();
  std::set<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!(mask & 1u)) continue;  // must contain 0
    bool closed = true;
    for (int x = 0; x < n && closed; ++x) {
      if (!(mask >> x & 1u)) continue;
      for (int y = 0; y < n; ++y) {
        if (!(mask >> y & 1u)) continue;
        if (!(mask >> b.add(x, y) & 1u) || !(mask >> b.mul(x, y) & 1u)) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    std::vector<int> members;
    for (int x = 0; x < n; ++x)
      if (mask >> x & 1u) members.push_back(x);
    out.insert(members);
  }
  return out;
}

}  // namespace testutil
