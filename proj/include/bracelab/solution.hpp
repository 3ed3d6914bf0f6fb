#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bracelab/brace.hpp"
#include "bracelab/errors.hpp"

namespace bracelab {

/// Finite involutive non-degenerate set-theoretic solution of the
/// Yang-Baxter equation, encoded as r(x,y) = (lambda[x][y], rho[y][x]).
/// A Solution is only handed out after the bijectivity, involutivity and
/// braid checks pass, unless it was explicitly built unchecked.
struct Solution {
  int size = 0;
  std::vector<std::vector<int>> lambda_maps;  // lambda_maps[x] : y -> lambda_x(y)
  std::vector<std::vector<int>> rho_maps;     // rho_maps[y]    : x -> rho_y(x)
  bool validated = false;

  int apply_lambda(int x, int y) const { return lambda_maps[x][y]; }
  int apply_rho(int y, int x) const { return rho_maps[y][x]; }

  std::pair<int, int> r(int x, int y) const {
    return {lambda_maps[x][y], rho_maps[y][x]};
  }

  static Solution unchecked(std::vector<std::vector<int>> lambda,
                            std::vector<std::vector<int>> rho) {
    Solution s;
    s.size = static_cast<int>(lambda.size());
    s.lambda_maps = std::move(lambda);
    s.rho_maps = std::move(rho);
    s.validated = false;
    return s;
  }
};

namespace detail {

inline void require_validated(const Solution& s) {
  if (!s.validated) throw Error("operation requires a validated solution");
}

inline void check_permutation_rows(const std::vector<std::vector<int>>& maps,
                                   int n, const std::string& which) {
  if (static_cast<int>(maps.size()) != n)
    throw Error("solution needs " + std::to_string(n) + " " + which + " rows");
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(maps[x].size()) != n)
      throw Error("solution " + which + " row " + std::to_string(x) +
                  " has wrong length");
    std::vector<char> seen(n, 0);
    for (int v : maps[x]) {
      if (v < 0 || v >= n || seen[v])
        throw ValidationError(Fault::NotBijective, which, {x},
                              "NotBijective in " + which + " at x=" +
                                  std::to_string(x));
      seen[v] = 1;
    }
  }
}

}  // namespace detail

/// Validates and returns the solution. Check order: bijectivity per map,
/// involutivity over pairs, braid relation over triples; witnesses are the
/// first in scan order.
inline Solution validate_solution(std::vector<std::vector<int>> lambda,
                                  std::vector<std::vector<int>> rho) {
  const int n = static_cast<int>(lambda.size());
  if (n < 1) throw Error("solution needs at least one point");
  detail::check_permutation_rows(lambda, n, "lambda");
  detail::check_permutation_rows(rho, n, "rho");

  Solution s = Solution::unchecked(std::move(lambda), std::move(rho));

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      auto [u, v] = s.r(x, y);
      if (s.r(u, v) != std::pair<int, int>(x, y))
        throw ValidationError(Fault::NotInvolutive, "", {x, y},
                              "NotInvolutive at (x,y)=(" + std::to_string(x) +
                                  "," + std::to_string(y) + ")");
    }

  // r12 r23 r12 = r23 r12 r23 on triples
  auto r12 = [&](std::array<int, 3> t) {
    auto [u, v] = s.r(t[0], t[1]);
    return std::array<int, 3>{u, v, t[2]};
  };
  auto r23 = [&](std::array<int, 3> t) {
    auto [u, v] = s.r(t[1], t[2]);
    return std::array<int, 3>{t[0], u, v};
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        std::array<int, 3> t{x, y, z};
        if (r12(r23(r12(t))) != r23(r12(r23(t))))
          throw ValidationError(Fault::BraidViolated, "", {x, y, z},
                                detail::triple_msg("BraidViolated", "", x, y, z));
      }

  s.validated = true;
  return s;
}

/// The brace's canonical solution r_A(a,b) = (lambda_a(b), lambda^{-1}_{lambda_a(b)}(a)).
inline Solution associated_solution(const FiniteBrace& a) {
  const int n = a.order();
  std::vector<std::vector<int>> lambda(n, std::vector<int>(n));
  std::vector<std::vector<int>> rho(n, std::vector<int>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) lambda[x][y] = a.lambda(x, y);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) rho[y][x] = a.lambda_inv(lambda[x][y], x);
  return validate_solution(std::move(lambda), std::move(rho));
}

/// Twist solution r(x,y) = (y,x) on n points.
inline Solution twist_solution(int n) {
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  return validate_solution(std::vector<std::vector<int>>(n, id),
                           std::vector<std::vector<int>>(n, id));
}

inline bool is_twist(const Solution& s) {
  detail::require_validated(s);
  for (int x = 0; x < s.size; ++x)
    for (int y = 0; y < s.size; ++y)
      if (s.lambda_maps[x][y] != y || s.rho_maps[x][y] != y) return false;
  return true;
}

/// r(x,x) = (x,x) for every x.
inline bool has_diagonal_fixed_points(const Solution& s) {
  detail::require_validated(s);
  for (int x = 0; x < s.size; ++x)
    if (s.r(x, x) != std::pair<int, int>(x, x)) return false;
  return true;
}

/// One retraction step: points with identical lambda and rho maps collapse.
struct RetractionStep {
  std::vector<std::vector<int>> classes;  // sorted members, ordered by min
  std::vector<int> class_of;              // point -> class index
  Solution quotient;
};

inline RetractionStep retract(const Solution& s) {
  detail::require_validated(s);
  const int n = s.size;

  std::map<std::pair<std::vector<int>, std::vector<int>>, int> index;
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of(n);
  for (int x = 0; x < n; ++x) {
    auto key = std::make_pair(s.lambda_maps[x], s.rho_maps[x]);
    auto [it, fresh] = index.emplace(key, static_cast<int>(classes.size()));
    if (fresh) classes.push_back({});
    classes[it->second].push_back(x);
    class_of[x] = it->second;
  }
  // relabel classes by ascending minimum member
  std::vector<int> order(classes.size());
  for (size_t i = 0; i < classes.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return classes[i][0] < classes[j][0]; });
  std::vector<std::vector<int>> sorted_classes;
  std::vector<int> rank(classes.size());
  for (size_t i = 0; i < order.size(); ++i) {
    rank[order[i]] = static_cast<int>(i);
    sorted_classes.push_back(classes[order[i]]);
  }
  for (int x = 0; x < n; ++x) class_of[x] = rank[class_of[x]];

  const int q = static_cast<int>(sorted_classes.size());
  std::vector<std::vector<int>> qlambda(q, std::vector<int>(q));
  std::vector<std::vector<int>> qrho(q, std::vector<int>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      int x = sorted_classes[i][0], y = sorted_classes[j][0];
      qlambda[i][j] = class_of[s.apply_lambda(x, y)];
      qrho[i][j] = class_of[s.apply_rho(x, y)];
    }
  // representative independence; cannot fire on a valid solution
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int i = class_of[x], j = class_of[y];
      if (class_of[s.apply_lambda(x, y)] != qlambda[i][j] ||
          class_of[s.apply_rho(x, y)] != qrho[i][j])
        throw ValidationError(Fault::QuotientIllDefined, "", {x, y},
                              "QuotientIllDefined at (x,y)=(" + std::to_string(x) +
                                  "," + std::to_string(y) + ")");
    }

  RetractionStep step;
  step.classes = std::move(sorted_classes);
  step.class_of = std::move(class_of);
  step.quotient = validate_solution(std::move(qlambda), std::move(qrho));
  return step;
}

/// Sizes along the retraction series, starting at |X|, ending when the
/// size reaches 1 or stops shrinking.
inline std::vector<int> retraction_sizes(const Solution& s) {
  detail::require_validated(s);
  std::vector<int> sizes{s.size};
  Solution cur = s;
  while (cur.size > 1) {
    RetractionStep step = retract(cur);
    if (step.quotient.size == cur.size) break;
    cur = std::move(step.quotient);
    sizes.push_back(cur.size);
  }
  return sizes;
}

/// Smallest m with |Ret^m| = 1; nullopt when retraction stalls above 1.
inline std::optional<int> multipermutation_level_solution(const Solution& s) {
  std::vector<int> sizes = retraction_sizes(s);
  if (sizes.back() != 1) return std::nullopt;
  return static_cast<int>(sizes.size()) - 1;
}

}  // namespace bracelab
