#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "bracelab/catalog.hpp"
#include "bracelab/zbrace.hpp"

using namespace bracelab;

namespace {

/// Uniform random coefficient with |n| < 2^256, fixed-seed reproducible.
ZInt random_zint(std::mt19937_64& rng) {
  ZInt n = 0;
  for (int i = 0; i < 4; ++i) n = (n << 64) | rng();
  return rng() & 1 ? ZInt(-n) : n;
}

}  // namespace

TEST_CASE("coefficient product replays the defining formula") {
  REQUIRE(z_mul(2, 3) == 5);  // even first factor: plain addition
  REQUIRE(z_mul(1, 1) == 0);  // odd m: (ma)(ma) = 0
  REQUIRE(z_mul(3, 3) == 0);
  for (int m = -5; m <= 5; ++m) REQUIRE(z_mul(0, m) == m);
}

TEST_CASE("star and lambda on Z") {
  REQUIRE(z_star(3, 1) == -2);
  REQUIRE(z_star(2, 5) == 0);
  for (int m = -5; m <= 5; ++m) REQUIRE(z_star(0, m) == 0);

  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    ZInt n = random_zint(rng), m = random_zint(rng);
    REQUIRE(z_star(n, m) == z_mul(n, m) - n - m);
    // lambda is the identity or negation, nothing else
    REQUIRE((z_lambda(n, m) == m || z_lambda(n, m) == -m));
    REQUIRE(z_lambda(n, m) == z_star(n, m) + m);
  }
}

TEST_CASE("brace axiom and star equations hold on sampled big integers") {
  std::mt19937_64 rng(20240901);
  for (int i = 0; i < 10000; ++i) {
    ZInt n = random_zint(rng), m = random_zint(rng), k = random_zint(rng);
    // n(m + k) = nm + nk - n
    REQUIRE(z_mul(n, m + k) == z_mul(n, m) + z_mul(n, k) - n);
    // n*(m+k) = n*m + n*k
    REQUIRE(z_star(n, m + k) == z_star(n, m) + z_star(n, k));
    // (nm)*k = n*(m*k) + m*k + n*k
    REQUIRE(z_star(z_mul(n, m), k) ==
            z_star(n, z_star(m, k)) + z_star(m, k) + z_star(n, k));
  }
}

TEST_CASE("socle membership is parity") {
  REQUIRE(z_socle_membership(2));
  REQUIRE(z_socle_membership(0));
  REQUIRE(!z_socle_membership(3));
  REQUIRE(z_star(3, 1) == -2);  // the witness the CLI prints

  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    ZInt n = random_zint(rng);
    if (z_socle_membership(n)) {
      for (int m = -3; m <= 3; ++m) REQUIRE(z_star(n, m) == 0);
    } else {
      REQUIRE(z_star(n, 1) != 0);
    }
    // 2n always lands in the socle: the quotient by it has exponent 2
    REQUIRE(z_socle_membership(2 * n));
    REQUIRE(z_soc2_membership(n));  // the socle series reaches everything
  }
}

TEST_CASE("subgroup ideal check is a parity case split") {
  REQUIRE(z_subgroup_ideal_check(0).is_ideal);
  REQUIRE(z_subgroup_ideal_check(1).is_ideal);  // whole brace
  REQUIRE(z_subgroup_ideal_check(2).is_ideal);  // the socle

  ZIdealReport r = z_subgroup_ideal_check(3);
  REQUIRE(!r.is_ideal);
  REQUIRE(r.witness->lhs == 3);
  REQUIRE(r.witness->result == -2);
  REQUIRE(r.witness->to_string() == "star(3a,a) = -2a");

  for (int k = 0; k <= 40; ++k)
    REQUIRE(z_subgroup_ideal_check(k).is_ideal == (k % 2 == 0 || k <= 1));

  ZInt huge_odd = (ZInt(1) << 255) + 1;
  REQUIRE(!z_subgroup_ideal_check(huge_odd).is_ideal);
  REQUIRE(z_subgroup_ideal_check((ZInt(1) << 255)).is_ideal);
  REQUIRE_THROWS_AS(z_subgroup_ideal_check(-3), Error);
}

TEST_CASE("dedekind discrimination on Z") {
  REQUIRE(z_is_dedekind(false).is_dedekind);

  ZDedekindReport r = z_is_dedekind(true);
  REQUIRE(!r.is_dedekind);
  REQUIRE(*r.witness_subgroup == 3);
  REQUIRE(r.star_witness->result == -2);

  // witness replay for any odd k: star(ka, a) = -2a stays outside kZ
  for (ZInt k : {ZInt(5), ZInt(7), ZInt((ZInt(1) << 100) + 1)}) {
    REQUIRE(z_star(k, 1) == -2);
    REQUIRE((-2) % k != 0);
  }
}

TEST_CASE("hybrid direct sums operate componentwise") {
  HybridContext ctx(ZStructure::rump, trivial_brace(4));

  // both components in the socle annihilate everything
  for (int m = -4; m <= 4; ++m)
    for (int f = 0; f < 4; ++f) {
      HybridElement r = ctx.star(ctx.element(2, 0), ctx.element(m, f));
      REQUIRE(r.z == 0);
      REQUIRE(r.f == 0);
    }

  HybridElement s = ctx.star(ctx.element(3, 0), ctx.element(1, 0));
  REQUIRE(s.z == -2);
  REQUIRE(s.f == 0);

  FiniteBrace b4 = negation_brace(4);
  HybridContext ctx2(ZStructure::rump, b4);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      HybridElement p = ctx2.mul(ctx2.element(0, x), ctx2.element(0, y));
      REQUIRE(p.z == 0);
      REQUIRE(p.f == b4.mul(x, y));
    }

  // socle membership is componentwise
  REQUIRE(ctx2.in_socle(ctx2.element(2, 2)));
  REQUIRE(!ctx2.in_socle(ctx2.element(2, 1)));
  REQUIRE(!ctx2.in_socle(ctx2.element(3, 2)));

  // mixed contexts are rejected
  REQUIRE_THROWS_AS(ctx.add(ctx.element(1, 0), ctx2.element(1, 0)), Error);
  REQUIRE_THROWS_AS(ctx2.element(0, 7), Error);
}

TEST_CASE("second socle quotient is periodic") {
  // Z part: Soc_2 = Z and Soc = 2Z, so the quotient has order 2.
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    ZInt n = random_zint(rng);
    REQUIRE(z_soc2_membership(n));
    REQUIRE(z_socle_membership(n + n));  // every coset has additive order <= 2
  }

  // finite part: Soc_2/Soc is a finite brace quotient, periodic by brute force
  for (const FiniteBrace& f : {negation_brace(4), negation_brace(6)}) {
    HybridContext ctx(ZStructure::rump, f);
    SeriesChain chain = socle_series(f);
    const ElemSet& soc2 =
        chain.terms.size() > 2 ? chain.terms[2] : chain.terms.back();
    for (int x : soc2.members()) REQUIRE(ctx.in_soc2(ctx.element(0, x)));
    // elements of Soc_2 have finite additive order in the quotient trivially;
    // verify the hybrid membership predicates agree with the finite series
    for (int x = 0; x < f.order(); ++x)
      REQUIRE(ctx.in_soc2(ctx.element(1, x)) == soc2.contains(x));
  }
}

TEST_CASE("hybrid abelian structure zeroes the Z star") {
  HybridContext ctx(ZStructure::abelian, negation_brace(4));
  HybridElement s = ctx.star(ctx.element(3, 1), ctx.element(1, 1));
  REQUIRE(s.z == 0);
  REQUIRE(s.f == negation_brace(4).star(1, 1));
  REQUIRE(ctx.mul(ctx.element(3, 0), ctx.element(4, 0)).z == 7);
}
