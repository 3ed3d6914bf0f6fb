#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bracelab/brace.hpp"
#include "bracelab/elem_set.hpp"
#include "bracelab/errors.hpp"

namespace bracelab {

/// Subbrace enumeration is capped because the additive subgroup lattice
/// grows quickly; override per call (or via BRACELAB_CAP in the CLI).
constexpr int kDefaultSubbraceCap = 64;

struct SubBrace {
  const FiniteBrace* owner = nullptr;
  ElemSet members;

  std::vector<int> sorted_members() const { return members.members(); }
};

/// Witness that a star product escaped the candidate ideal. `lhs`/`rhs` are
/// the literal star arguments, so the failing product is star(lhs, rhs).
struct IdealWitness {
  enum class Side { a_star_i, i_star_a };
  Side side;
  int lhs;
  int rhs;
  int result;

  std::string to_string() const {
    return "star(" + std::to_string(lhs) + "," + std::to_string(rhs) +
           ")=" + std::to_string(result);
  }
};

struct IdealReport {
  bool is_ideal = false;
  std::optional<IdealWitness> witness;
};

struct DedekindReport {
  bool is_dedekind = false;
  std::optional<SubBrace> witness;       // smallest failing subbrace
  std::optional<IdealWitness> star_witness;
};

struct Quotient {
  FiniteBrace brace;
  std::vector<int> projection;  // element index -> coset index
  std::vector<int> reps;        // coset index -> minimal representative
};

namespace detail {

/// Fixed point of closing `seed` (plus 0) under the given products.
/// Finiteness makes negatives/inverses follow from closure under products.
inline ElemSet close_under(const FiniteBrace& a, const ElemSet& seed,
                           bool use_add, bool use_mul) {
  ElemSet s(a.order());
  s.insert(0);
  for (int e : seed.members()) s.insert(e);
  bool grew = true;
  while (grew) {
    grew = false;
    const auto elems = s.members();
    for (int x : elems) {
      for (int y : elems) {
        if (use_add) {
          int z = a.add(x, y);
          if (!s.contains(z)) {
            s.insert(z);
            grew = true;
          }
        }
        if (use_mul) {
          int z = a.mul(x, y);
          if (!s.contains(z)) {
            s.insert(z);
            grew = true;
          }
        }
      }
    }
  }
  return s;
}

inline bool is_closed_subbrace(const FiniteBrace& a, const ElemSet& s) {
  if (!s.contains(0)) return false;
  const auto elems = s.members();
  for (int x : elems)
    for (int y : elems)
      if (!s.contains(a.add(x, y)) || !s.contains(a.mul(x, y))) return false;
  return true;
}

}  // namespace detail

/// Smallest subbrace containing the seed.
inline SubBrace closure(const FiniteBrace& a, const ElemSet& seed) {
  return SubBrace{&a, detail::close_under(a, seed, true, true)};
}

inline SubBrace closure(const FiniteBrace& a, const std::vector<int>& seed) {
  ElemSet s(a.order());
  for (int e : seed) s.insert(e);
  return closure(a, s);
}

inline ElemSet additive_span(const FiniteBrace& a, const ElemSet& seed) {
  return detail::close_under(a, seed, true, false);
}

inline ElemSet multiplicative_span(const FiniteBrace& a, const ElemSet& seed) {
  return detail::close_under(a, seed, false, true);
}

inline ElemSet additive_span(const FiniteBrace& a, const std::vector<int>& seed) {
  ElemSet s(a.order());
  for (int e : seed) s.insert(e);
  return additive_span(a, s);
}

inline ElemSet multiplicative_span(const FiniteBrace& a, const std::vector<int>& seed) {
  ElemSet s(a.order());
  for (int e : seed) s.insert(e);
  return multiplicative_span(a, s);
}

/// X * Y = additive span of all pairwise stars.
inline ElemSet star_span(const FiniteBrace& a, const ElemSet& x, const ElemSet& y) {
  ElemSet seed(a.order());
  for (int i : x.members())
    for (int j : y.members()) seed.insert(a.star(i, j));
  return additive_span(a, seed);
}

enum class SubbraceStrategy {
  lattice,      // additive subgroup lattice filtered by multiplicative closure
  closure_bfs,  // seeded closure search from {0}
};

/// All subbraces, ascending by size then lexicographically. The two
/// strategies are independent routes and must agree (tests compare them).
inline std::vector<SubBrace> enumerate_subbraces(
    const FiniteBrace& a, SubbraceStrategy strategy = SubbraceStrategy::lattice,
    int cap = kDefaultSubbraceCap) {
  const int n = a.order();
  if (n > cap) throw OrderCapExceeded(n, cap);

  std::set<std::vector<int>> found;
  std::vector<ElemSet> result;

  auto discover_all = [&](auto span_fn) {
    // BFS: every sub-structure arises by repeatedly adjoining one generator.
    std::vector<ElemSet> queue;
    ElemSet zero = span_fn(ElemSet(n));
    found.insert(zero.members());
    queue.push_back(zero);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      ElemSet s = queue[qi];
      for (int x = 0; x < n; ++x) {
        if (s.contains(x)) continue;
        ElemSet seed = s;
        seed.insert(x);
        ElemSet t = span_fn(seed);
        if (found.insert(t.members()).second) queue.push_back(t);
      }
    }
    return queue;
  };

  if (strategy == SubbraceStrategy::closure_bfs) {
    for (const ElemSet& s :
         discover_all([&](const ElemSet& seed) { return closure(a, seed).members; }))
      result.push_back(s);
  } else {
    for (const ElemSet& s :
         discover_all([&](const ElemSet& seed) { return additive_span(a, seed); })) {
      bool mul_closed = true;
      const auto elems = s.members();
      for (int x : elems) {
        for (int y : elems)
          if (!s.contains(a.mul(x, y))) {
            mul_closed = false;
            break;
          }
        if (!mul_closed) break;
      }
      if (mul_closed) result.push_back(s);
    }
  }

  std::sort(result.begin(), result.end());
  std::vector<SubBrace> out;
  out.reserve(result.size());
  for (ElemSet& s : result) out.push_back(SubBrace{&a, std::move(s)});
  return out;
}

/// Two-sided ideal test: A*S and S*A must land back in S. The scan is row
/// major in (x, s), checking the A*S direction before S*A, so the witness
/// is deterministic.
inline IdealReport is_ideal(const FiniteBrace& a, const SubBrace& s) {
  if (!detail::is_closed_subbrace(a, s.members))
    throw ValidationError(Fault::NotASubbrace, "", s.sorted_members(),
                          "NotASubbrace: " + s.members.to_string() +
                              " is not closed under both operations");
  const auto elems = s.sorted_members();
  for (int x = 0; x < a.order(); ++x) {
    for (int e : elems) {
      int r = a.star(x, e);
      if (!s.members.contains(r))
        return {false, IdealWitness{IdealWitness::Side::a_star_i, x, e, r}};
      r = a.star(e, x);
      if (!s.members.contains(r))
        return {false, IdealWitness{IdealWitness::Side::i_star_a, e, x, r}};
    }
  }
  return {true, std::nullopt};
}

inline IdealReport is_ideal(const FiniteBrace& a, const ElemSet& members) {
  return is_ideal(a, SubBrace{&a, members});
}

/// Every subbrace an ideal? On failure reports the smallest (then
/// lexicographically first) failing subbrace.
inline DedekindReport is_dedekind(const FiniteBrace& a,
                                  int cap = kDefaultSubbraceCap) {
  for (const SubBrace& s : enumerate_subbraces(a, SubbraceStrategy::lattice, cap)) {
    IdealReport r = is_ideal(a, s);
    if (!r.is_ideal) return {false, s, r.witness};
  }
  return {true, std::nullopt, std::nullopt};
}

/// Quotient brace on the cosets of an ideal (additive and multiplicative
/// cosets coincide). Coset indices are assigned by ascending minimal
/// representative, which pins the identity coset at 0.
inline Quotient quotient(const FiniteBrace& a, const ElemSet& ideal) {
  IdealReport check = is_ideal(a, SubBrace{&a, ideal});
  if (!check.is_ideal)
    throw ValidationError(Fault::NotAnIdeal, "",
                          {check.witness->lhs, check.witness->rhs, check.witness->result},
                          "NotAnIdeal: witness " + check.witness->to_string());

  const int n = a.order();
  std::vector<int> coset_min(n, -1);
  for (int x = 0; x < n; ++x) {
    if (coset_min[x] >= 0) continue;
    int m = x;
    for (int i : ideal.members()) m = std::min(m, a.add(x, i));
    for (int i : ideal.members()) coset_min[a.add(x, i)] = m;
  }
  std::vector<int> reps;
  for (int x = 0; x < n; ++x)
    if (coset_min[x] == x) reps.push_back(x);
  std::sort(reps.begin(), reps.end());

  std::vector<int> proj(n);
  for (int x = 0; x < n; ++x) {
    auto it = std::lower_bound(reps.begin(), reps.end(), coset_min[x]);
    proj[x] = static_cast<int>(it - reps.begin());
  }

  const int q = static_cast<int>(reps.size());
  Table qadd(q, std::vector<int>(q)), qmul(q, std::vector<int>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      qadd[i][j] = proj[a.add(reps[i], reps[j])];
      qmul[i][j] = proj[a.mul(reps[i], reps[j])];
    }
  return Quotient{FiniteBrace::trusted(std::move(qadd), std::move(qmul)),
                  std::move(proj), std::move(reps)};
}

}  // namespace bracelab
