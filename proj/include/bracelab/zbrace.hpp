#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

#include "bracelab/brace.hpp"
#include "bracelab/elem_set.hpp"
#include "bracelab/errors.hpp"
#include "bracelab/series.hpp"

namespace bracelab {

/// Exact coefficient arithmetic for the braces on the infinite cyclic group:
/// the element na is represented by its coefficient n. The non-abelian
/// (Rump) structure has product (na)·(ma) = ((-1)^n m + n)a; everything here
/// is closed-form, never table-driven.
using ZInt = boost::multiprecision::cpp_int;

enum class ZStructure { abelian, rump };

inline bool z_even(const ZInt& n) { return n % 2 == 0; }

/// Coefficient of (na)·(ma) in the Rump structure: (-1)^n m + n.
inline ZInt z_mul(const ZInt& n, const ZInt& m) {
  return (z_even(n) ? m : -m) + n;
}

/// Coefficient of (na)*(ma) = ((-1)^n - 1)m: zero for even n, -2m for odd n.
inline ZInt z_star(const ZInt& n, const ZInt& m) {
  return z_even(n) ? ZInt(0) : ZInt(-2 * m);
}

/// lambda_{na}(ma) = (-1)^n ma: the identity or negation.
inline ZInt z_lambda(const ZInt& n, const ZInt& m) {
  return z_even(n) ? m : ZInt(-m);
}

/// na lies in the socle iff (na)*(ma) = 0 for all m, i.e. the coefficient
/// (-1)^n - 1 vanishes, i.e. n is even.
inline bool z_socle_membership(const ZInt& n) { return z_even(n); }

/// Soc_2 membership: na + Soc annihilates the quotient iff ((-1)^n - 1)m is
/// always even, which holds for every n. The socle series therefore reaches
/// the whole brace at the second step.
inline bool z_soc2_membership(const ZInt&) { return true; }

struct ZIdealWitness {
  ZInt lhs;     // coefficient of the left star argument
  ZInt rhs;     // coefficient of the right star argument
  ZInt result;  // star coefficient, not divisible by k

  std::string to_string() const {
    return "star(" + lhs.str() + "a," + (rhs == 1 ? "a" : rhs.str() + "a") +
           ") = " + result.str() + "a";
  }
};

struct ZIdealReport {
  bool is_ideal = false;
  std::optional<ZIdealWitness> witness;
};

/// Decides whether the additive subgroup kZ (k >= 0) is an ideal of the
/// Rump brace, by a parity case split rather than any search:
///   x*(kma) is 0 or -2km·a, always in kZ;
///   (kna)*(ma) is 0 or -2m·a, and -2 lies in kZ iff k divides 2.
/// Hence kZ is an ideal iff k is even or k <= 1 (k = 1 is the whole brace,
/// k = 0 the zero ideal); for odd k >= 3 the witness is (ka)*a = -2a.
inline ZIdealReport z_subgroup_ideal_check(const ZInt& k) {
  if (k < 0) throw Error("subgroup parameter k must be non-negative");
  if (z_even(k) || k <= 1) return {true, std::nullopt};
  return {false, ZIdealWitness{k, 1, -2}};
}

struct ZDedekindReport {
  bool is_dedekind = false;
  std::optional<ZInt> witness_subgroup;       // k with kZ not an ideal
  std::optional<ZIdealWitness> star_witness;
};

/// The abelian brace on Z is Dedekind; the Rump structure is not, with the
/// subgroup 3Z as the canonical witness.
inline ZDedekindReport z_is_dedekind(bool non_abelian) {
  if (!non_abelian) return {true, std::nullopt, std::nullopt};
  ZIdealReport r = z_subgroup_ideal_check(3);
  return {false, ZInt(3), r.witness};
}

/// Direct sum Z ⊕ F for a fixed finite brace F. Elements are tied to their
/// context so components from different sums cannot be mixed silently.
class HybridContext;

struct HybridElement {
  const HybridContext* ctx = nullptr;
  ZInt z;
  int f = 0;
};

class HybridContext {
 public:
  HybridContext(ZStructure zs, FiniteBrace finite)
      : zs_(zs), finite_(std::move(finite)) {}

  ZStructure z_structure() const { return zs_; }
  const FiniteBrace& finite() const { return finite_; }

  HybridElement element(ZInt z, int f) const {
    if (f < 0 || f >= finite_.order())
      throw Error("finite component index out of range");
    return HybridElement{this, std::move(z), f};
  }

  HybridElement zero() const { return HybridElement{this, 0, 0}; }

  HybridElement add(const HybridElement& a, const HybridElement& b) const {
    check(a, b);
    return HybridElement{this, a.z + b.z, finite_.add(a.f, b.f)};
  }

  HybridElement neg(const HybridElement& a) const {
    check(a);
    return HybridElement{this, -a.z, finite_.neg(a.f)};
  }

  HybridElement mul(const HybridElement& a, const HybridElement& b) const {
    check(a, b);
    ZInt zc = zs_ == ZStructure::rump ? z_mul(a.z, b.z) : ZInt(a.z + b.z);
    return HybridElement{this, std::move(zc), finite_.mul(a.f, b.f)};
  }

  HybridElement star(const HybridElement& a, const HybridElement& b) const {
    check(a, b);
    ZInt zc = zs_ == ZStructure::rump ? z_star(a.z, b.z) : ZInt(0);
    return HybridElement{this, std::move(zc), finite_.star(a.f, b.f)};
  }

  HybridElement lambda(const HybridElement& a, const HybridElement& b) const {
    check(a, b);
    ZInt zc = zs_ == ZStructure::rump ? z_lambda(a.z, b.z) : b.z;
    return HybridElement{this, std::move(zc), finite_.lambda(a.f, b.f)};
  }

  /// Soc(Z ⊕ F) = Soc(Z) × Soc(F), componentwise membership.
  bool in_socle(const HybridElement& a) const {
    check(a);
    bool zpart = zs_ == ZStructure::rump ? z_socle_membership(a.z) : true;
    return zpart && socle(finite_).contains(a.f);
  }

  bool in_soc2(const HybridElement& a) const {
    check(a);
    bool zpart = zs_ == ZStructure::rump ? z_soc2_membership(a.z) : true;
    SeriesChain chain = socle_series(finite_);
    const ElemSet& soc2 =
        chain.terms.size() > 2 ? chain.terms[2] : chain.terms.back();
    return zpart && soc2.contains(a.f);
  }

 private:
  void check(const HybridElement& a) const {
    if (a.ctx != this) throw Error("hybrid element belongs to another context");
  }
  void check(const HybridElement& a, const HybridElement& b) const {
    check(a);
    check(b);
  }

  ZStructure zs_;
  FiniteBrace finite_;
};

inline bool operator==(const HybridElement& a, const HybridElement& b) {
  return a.ctx == b.ctx && a.z == b.z && a.f == b.f;
}

}  // namespace bracelab
