#pragma once

#include <optional>
#include <vector>

#include "bracelab/brace.hpp"
#include "bracelab/elem_set.hpp"
#include "bracelab/substructure.hpp"

namespace bracelab {

enum class SeriesKind { left, right, socle };

/// A chain of ideals. Left/right chains descend from A, the socle chain
/// ascends from {0}; the final term is the stabilized one, stored once.
struct SeriesChain {
  SeriesKind kind;
  std::vector<ElemSet> terms;
  bool stabilized = false;
};

struct NilpotencyReport {
  bool left_nilpotent = false;
  int left_class = 0;  // smallest n with A^n = 0 (meaningful when nilpotent)
  bool right_nilpotent = false;
  int right_class = 0;
  bool centrally_nilpotent = false;
  std::optional<int> multipermutation_level;
};

/// A = A^1 >= A^2 = A*A >= ... with A^{n+1} = A * A^n.
inline SeriesChain left_series(const FiniteBrace& a) {
  SeriesChain chain{SeriesKind::left, {ElemSet::full(a.order())}, false};
  const ElemSet whole = ElemSet::full(a.order());
  while (true) {
    ElemSet next = star_span(a, whole, chain.terms.back());
    if (next == chain.terms.back()) {
      chain.stabilized = true;
      return chain;
    }
    chain.terms.push_back(next);
  }
}

/// A = A^(1) >= A^(2) = A*A >= ... with A^{(n+1)} = A^{(n)} * A.
inline SeriesChain right_series(const FiniteBrace& a) {
  SeriesChain chain{SeriesKind::right, {ElemSet::full(a.order())}, false};
  const ElemSet whole = ElemSet::full(a.order());
  while (true) {
    ElemSet next = star_span(a, chain.terms.back(), whole);
    if (next == chain.terms.back()) {
      chain.stabilized = true;
      return chain;
    }
    chain.terms.push_back(next);
  }
}

/// m-fold left-normed star power (...((a*a)*a)...)*a with a appearing m
/// times; vanishing for every a is the m-right-nil condition.
inline bool is_m_right_nil(const FiniteBrace& a, int m) {
  for (int x = 0; x < a.order(); ++x) {
    int v = x;
    for (int i = 1; i < m; ++i) v = a.star(v, x);
    if (v != 0) return false;
  }
  return true;
}

/// Right-normed variant a*( ... *(a*(a*a))).
inline bool is_m_left_nil(const FiniteBrace& a, int m) {
  for (int x = 0; x < a.order(); ++x) {
    int v = x;
    for (int i = 1; i < m; ++i) v = a.star(x, v);
    if (v != 0) return false;
  }
  return true;
}

/// {a : a*x = 0 for all x in S}, i.e. ax = a + x against all of S.
inline ElemSet left_annihilator(const FiniteBrace& a, const ElemSet& s) {
  ElemSet out(a.order());
  for (int x = 0; x < a.order(); ++x) {
    bool ok = true;
    for (int e : s.members())
      if (a.star(x, e) != 0) {
        ok = false;
        break;
      }
    if (ok) out.insert(x);
  }
  return out;
}

/// Additionally requires xa = a + x for all x in S.
inline ElemSet annihilator(const FiniteBrace& a, const ElemSet& s) {
  ElemSet out(a.order());
  for (int x : left_annihilator(a, s).members()) {
    bool ok = true;
    for (int e : s.members())
      if (a.mul(e, x) != a.add(e, x)) {
        ok = false;
        break;
      }
    if (ok) out.insert(x);
  }
  return out;
}

inline ElemSet socle(const FiniteBrace& a) {
  return left_annihilator(a, ElemSet::full(a.order()));
}

inline ElemSet centre(const FiniteBrace& a) {
  return annihilator(a, ElemSet::full(a.order()));
}

/// Ascending chain Soc_0 = {0} <= Soc_1 <= ... where Soc_{n+1} pulls the
/// socle of A/Soc_n back along the quotient projection.
inline SeriesChain socle_series(const FiniteBrace& a) {
  SeriesChain chain{SeriesKind::socle, {ElemSet(a.order())}, false};
  chain.terms.back().insert(0);
  while (true) {
    const ElemSet& current = chain.terms.back();
    Quotient q = quotient(a, current);
    ElemSet quotient_socle = socle(q.brace);
    ElemSet next(a.order());
    for (int x = 0; x < a.order(); ++x)
      if (quotient_socle.contains(q.projection[x])) next.insert(x);
    if (next == current) {
      chain.stabilized = true;
      return chain;
    }
    chain.terms.push_back(next);
  }
}

/// Smallest n with Soc_n(A) = A, or nullopt when the chain stalls below A.
inline std::optional<int> multipermutation_level(const FiniteBrace& a) {
  SeriesChain chain = socle_series(a);
  const ElemSet whole = ElemSet::full(a.order());
  for (size_t i = 0; i < chain.terms.size(); ++i)
    if (chain.terms[i] == whole) return static_cast<int>(i);
  return std::nullopt;
}

inline NilpotencyReport nilpotency_report(const FiniteBrace& a) {
  NilpotencyReport r;
  ElemSet zero(a.order());
  zero.insert(0);

  SeriesChain ls = left_series(a);
  r.left_nilpotent = ls.terms.back() == zero;
  r.left_class = static_cast<int>(ls.terms.size());

  SeriesChain rs = right_series(a);
  r.right_nilpotent = rs.terms.back() == zero;
  r.right_class = static_cast<int>(rs.terms.size());

  r.centrally_nilpotent = r.left_nilpotent && r.right_nilpotent;
  r.multipermutation_level = multipermutation_level(a);

  // Finite braces are right nilpotent exactly when the socle series
  // exhausts A; a mismatch would mean an internal defect.
  if (r.right_nilpotent != r.multipermutation_level.has_value())
    throw Error("internal: right series and socle series disagree");
  return r;
}

}  // namespace bracelab
