#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "bracelab/brace.hpp"
#include "bracelab/errors.hpp"

namespace bracelab {

constexpr int kDefaultTablesEnumCap = 6;
constexpr int kDefaultLambdaEnumCap = 8;

// ---------------------------------------------------------------------------
// builders

/// Addition table of Z/d1 x ... x Z/dk in row-major mixed-radix encoding.
inline Table abelian_group_table(const std::vector<int>& factors) {
  int n = 1;
  for (int d : factors) n *= d;
  Table add(n, std::vector<int>(n));
  auto decode = [&](int idx) {
    std::vector<int> digits(factors.size());
    for (int i = static_cast<int>(factors.size()) - 1; i >= 0; --i) {
      digits[i] = idx % factors[i];
      idx /= factors[i];
    }
    return digits;
  };
  auto encode = [&](const std::vector<int>& digits) {
    int idx = 0;
    for (size_t i = 0; i < factors.size(); ++i) idx = idx * factors[i] + digits[i];
    return idx;
  };
  for (int x = 0; x < n; ++x) {
    auto dx = decode(x);
    for (int y = 0; y < n; ++y) {
      auto dy = decode(y);
      std::vector<int> dz(factors.size());
      for (size_t i = 0; i < factors.size(); ++i)
        dz[i] = (dx[i] + dy[i]) % factors[i];
      add[x][y] = encode(dz);
    }
  }
  return add;
}

inline Table cyclic_add_table(int n) { return abelian_group_table({n}); }

/// Both operations coincide: the abelian (trivial) brace on Z/n.
inline FiniteBrace trivial_brace(int n) {
  Table add = cyclic_add_table(n);
  return validate_brace(add, add);
}

/// Negation brace on Z/n (n even): a·b = a + (-1)^a b, so lambda_a is the
/// identity for even a and negation for odd a.
inline FiniteBrace negation_brace(int n) {
  if (n % 2 != 0) throw Error("negation brace needs even order");
  Table add = cyclic_add_table(n);
  Table mul(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      mul[a][b] = ((a + (a % 2 == 0 ? b : n - b)) % n);
  return validate_brace(add, mul);
}

// ---------------------------------------------------------------------------
// catalog

enum class Provenance { builtin, enumerated, loaded };

struct CatalogEntry {
  std::string name;
  Provenance provenance;
  FiniteBrace brace;
};

struct Catalog {
  std::vector<CatalogEntry> entries;

  const FiniteBrace* find(const std::string& name) const {
    for (const auto& e : entries)
      if (e.name == name) return &e.brace;
    return nullptr;
  }
};

/// Built-in examples: trivial braces on Z/1..Z/8, the negation braces on
/// even orders 4..8, and a few direct sums. Every entry goes through full
/// validation here.
inline Catalog builtin_catalog() {
  Catalog c;
  auto put = [&c](std::string name, FiniteBrace b) {
    c.entries.push_back({std::move(name), Provenance::builtin, std::move(b)});
  };
  for (int n = 1; n <= 8; ++n) put("trivial-Z" + std::to_string(n), trivial_brace(n));
  put("neg-Z4", negation_brace(4));
  put("neg-Z6", negation_brace(6));
  put("neg-Z8", negation_brace(8));

  auto revalidate = [](const FiniteBrace& b) {
    return validate_brace(b.add_table(), b.mul_table());
  };
  put("sum-trivZ2-trivZ2", revalidate(direct_sum(trivial_brace(2), trivial_brace(2))));
  put("sum-negZ4-trivZ2", revalidate(direct_sum(negation_brace(4), trivial_brace(2))));
  put("sum-negZ6-trivZ2", revalidate(direct_sum(negation_brace(6), trivial_brace(2))));
  put("sum-negZ4-negZ4", revalidate(direct_sum(negation_brace(4), negation_brace(4))));
  return c;
}

// ---------------------------------------------------------------------------
// enumeration of all braces of a given order

struct AbelianGroup {
  std::vector<int> factors;  // cyclic orders, prime-power, primes ascending
  Table add;

  std::string name() const {
    if (factors.empty()) return "Z1";
    std::string s;
    for (size_t i = 0; i < factors.size(); ++i) {
      if (i) s += 'x';
      s += 'Z' + std::to_string(factors[i]);
    }
    return s;
  }
};

namespace detail {

inline void partitions_desc(int e, int max_part, std::vector<int>& cur,
                            std::vector<std::vector<int>>& out) {
  if (e == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(e, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_desc(e - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// All abelian groups of order n, one per multiset of prime-power cyclic
/// factors, in a fixed order (primes ascending, partitions descending).
inline std::vector<AbelianGroup> abelian_groups(int n) {
  std::vector<std::pair<int, int>> prime_powers;  // (p, e)
  int m = n;
  for (int p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      prime_powers.push_back({p, e});
    }
  if (m > 1) prime_powers.push_back({m, 1});

  std::vector<std::vector<std::vector<int>>> per_prime;  // factor lists per prime
  for (auto [p, e] : prime_powers) {
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    detail::partitions_desc(e, e, cur, parts);
    std::vector<std::vector<int>> lists;
    for (const auto& part : parts) {
      std::vector<int> factors;
      for (int k : part) {
        int q = 1;
        for (int i = 0; i < k; ++i) q *= p;
        factors.push_back(q);
      }
      lists.push_back(factors);
    }
    per_prime.push_back(lists);
  }

  std::vector<AbelianGroup> out;
  std::vector<size_t> pick(per_prime.size(), 0);
  while (true) {
    std::vector<int> factors;
    for (size_t i = 0; i < per_prime.size(); ++i)
      for (int f : per_prime[i][pick[i]]) factors.push_back(f);
    AbelianGroup g;
    g.factors = factors;
    g.add = abelian_group_table(factors.empty() ? std::vector<int>{1} : factors);
    out.push_back(std::move(g));
    // next combination
    size_t i = 0;
    for (; i < pick.size(); ++i) {
      if (++pick[i] < per_prime[i].size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }
  return out;
}

enum class EnumStrategy { tables, lambda };

namespace detail {

/// DFS over multiplicative tables row by row. Within a row, entries forced
/// by the brace axiom (row_a[b+c] = row_a[b] + row_a[c] - a) are propagated;
/// free entries branch over unused values. Complete tables still go through
/// full validation, which also covers cross-row associativity.
inline void search_tables(const FiniteBrace& group_ops, int n, Table& mul,
                          int row, std::vector<FiniteBrace>& out) {
  if (row == n) {
    try {
      out.push_back(validate_brace(group_ops.add_table(), mul));
    } catch (const ValidationError&) {
    }
    return;
  }

  std::vector<int>& r = mul[row];
  std::vector<int> saved = r;
  std::vector<char> used(n, 0);
  used[row] = 1;  // r[0] = row

  // fill positions 1..n-1 in ascending order
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      // lambda_row must be an additive endomorphism; reject early
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          int lhs = r[group_ops.add(b, c)];
          int rhs = group_ops.add(group_ops.add(r[b], r[c]), group_ops.neg(row));
          if (lhs != rhs) return;
        }
      search_tables(group_ops, n, mul, row + 1, out);
      return;
    }
    int forced = -1;
    for (int b = 0; b < pos && forced < 0; ++b)
      for (int c = 0; c < pos; ++c)
        if (group_ops.add(b, c) == pos) {
          forced = group_ops.add(group_ops.add(r[b], r[c]), group_ops.neg(row));
          break;
        }
    if (forced >= 0) {
      if (used[forced]) return;
      r[pos] = forced;
      used[forced] = 1;
      self(self, pos + 1);
      used[forced] = 0;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      r[pos] = v;
      used[v] = 1;
      self(self, pos + 1);
      used[v] = 0;
    }
  };

  r.assign(n, -1);
  r[0] = row;
  rec(rec, 1);
  r = saved;
}

/// All automorphisms of the additive group, as permutations.
inline std::vector<std::vector<int>> additive_automorphisms(const FiniteBrace& g) {
  const int n = g.order();
  std::vector<std::vector<int>> out;
  std::vector<int> perm(n, -1);
  std::vector<char> used(n, 0);
  perm[0] = 0;
  used[0] = 1;
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      out.push_back(perm);
      return;
    }
    // image may already be forced by additivity
    for (int b = 1; b < pos; ++b)
      for (int c = 1; c < pos; ++c)
        if (g.add(b, c) == pos) {
          int v = g.add(perm[b], perm[c]);
          if (used[v]) return;
          perm[pos] = v;
          used[v] = 1;
          self(self, pos + 1);
          used[v] = 0;
          perm[pos] = -1;
          return;
        }
    for (int v = 1; v < n; ++v) {
      if (used[v]) continue;
      perm[pos] = v;
      // partial additivity filter against already placed points
      bool ok = true;
      for (int b = 1; b <= pos && ok; ++b) {
        int s = g.add(pos, b);
        if (s <= pos && perm[s] >= 0 && perm[s] != g.add(v, perm[b])) ok = false;
      }
      if (ok) {
        used[v] = 1;
        self(self, pos + 1);
        used[v] = 0;
      }
      perm[pos] = -1;
    }
  };
  rec(rec, 1);

  // keep only genuine automorphisms
  std::vector<std::vector<int>> checked;
  for (const auto& p : out) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n; ++y)
        if (p[g.add(x, y)] != g.add(p[x], p[y])) {
          ok = false;
          break;
        }
    if (ok) checked.push_back(p);
  }
  std::sort(checked.begin(), checked.end());
  return checked;
}

/// DFS over assignments a -> lambda_a in Aut(A,+) subject to the cocycle
/// lambda_{a + lambda_a(b)} = lambda_a lambda_b, with forward propagation.
inline void search_lambda(const FiniteBrace& group_ops, int n,
                          const std::vector<std::vector<int>>& auts,
                          std::vector<FiniteBrace>& out) {
  std::map<std::vector<int>, int> aut_index;
  for (size_t i = 0; i < auts.size(); ++i) aut_index[auts[i]] = static_cast<int>(i);
  const int id = aut_index.at([&] {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
  }());

  auto compose = [&](int f, int g) {  // f after g
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) c[i] = auts[f][auts[g][i]];
    auto it = aut_index.find(c);
    return it == aut_index.end() ? -1 : it->second;
  };

  std::vector<int> assign(n, -1);
  assign[0] = id;

  auto propagate = [&](std::vector<int>& state) -> bool {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < n; ++a) {
        if (state[a] < 0) continue;
        for (int b = 0; b < n; ++b) {
          if (state[b] < 0) continue;
          int target = group_ops.add(a, auts[state[a]][b]);
          int value = compose(state[a], state[b]);
          if (value < 0) return false;  // image not closed: dead branch
          if (state[target] < 0) {
            state[target] = value;
            changed = true;
          } else if (state[target] != value) {
            return false;
          }
        }
      }
    }
    return true;
  };

  auto rec = [&](auto&& self, std::vector<int> state) -> void {
    if (!propagate(state)) return;
    int next = -1;
    for (int a = 0; a < n; ++a)
      if (state[a] < 0) {
        next = a;
        break;
      }
    if (next < 0) {
      Table mul(n, std::vector<int>(n));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          mul[a][b] = group_ops.add(a, auts[state[a]][b]);
      try {
        out.push_back(validate_brace(group_ops.add_table(), mul));
      } catch (const ValidationError&) {
      }
      return;
    }
    for (size_t i = 0; i < auts.size(); ++i) {
      std::vector<int> branch = state;
      branch[next] = static_cast<int>(i);
      self(self, std::move(branch));
    }
  };
  rec(rec, assign);
}

}  // namespace detail

/// All left braces on the given abelian group, up to table identity,
/// ordered by multiplicative table.
inline std::vector<FiniteBrace> enumerate_braces_on(const AbelianGroup& g,
                                                    EnumStrategy strategy) {
  const int n = static_cast<int>(g.add.size());
  FiniteBrace group_ops = FiniteBrace::trusted(g.add, g.add);
  std::vector<FiniteBrace> found;
  if (strategy == EnumStrategy::tables) {
    Table mul(n, std::vector<int>(n, -1));
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    mul[0] = id;
    detail::search_tables(group_ops, n, mul, 1, found);
  } else {
    detail::search_lambda(group_ops, n, detail::additive_automorphisms(group_ops),
                          found);
  }
  std::sort(found.begin(), found.end(), [](const FiniteBrace& a, const FiniteBrace& b) {
    return a.mul_table() < b.mul_table();
  });
  found.erase(std::unique(found.begin(), found.end(),
                          [](const FiniteBrace& a, const FiniteBrace& b) {
                            return a.tables_equal(b);
                          }),
              found.end());
  return found;
}

/// All left braces of order n across every abelian group of that order.
/// cap == 0 selects the per-strategy default (6 naive, 8 lambda).
inline std::vector<FiniteBrace> enumerate_braces(int n, EnumStrategy strategy,
                                                 int cap = 0) {
  if (cap == 0)
    cap = strategy == EnumStrategy::tables ? kDefaultTablesEnumCap
                                           : kDefaultLambdaEnumCap;
  if (n > cap) throw OrderCapExceeded(n, cap);
  if (n < 1) throw Error("order must be positive");
  std::vector<FiniteBrace> out;
  for (const AbelianGroup& g : abelian_groups(n))
    for (FiniteBrace& b : enumerate_braces_on(g, strategy)) out.push_back(std::move(b));
  return out;
}

}  // namespace bracelab
