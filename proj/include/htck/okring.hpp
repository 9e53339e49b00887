#pragma once

// Exact arithmetic in O_K = Z_p[u]/(E(u)) at absolute precision p^N, for an
// Eisenstein polynomial E of degree e. Elements are coordinate vectors in the
// basis 1, u, ..., u^{e-1}, coordinates reduced mod p^N. Rational scalars
// carry an explicit p-power denominator exponent, so the whole of
// K = O_K[1/p] is representable.

#include <cstdint>
#include <string>
#include <vector>

#include "htck/errors.hpp"

namespace htck {

enum class Variant { prismatic, log };

const char* variant_name(Variant v);

// Coordinates in the basis 1, u, ..., u^{e-1}; each entry in [0, p^N).
using OKElem = std::vector<uint64_t>;

// num / p^den. Normalized: den == 0 or num not divisible by p.
struct RationalOK {
  OKElem num;
  int den = 0;

  bool operator==(const RationalOK&) const = default;
};

enum class OkOp { add, sub, mul };

struct PrimeContext {
  uint64_t p = 0;
  int N = 0;                     // elements known mod p^N
  int e = 0;                     // deg E
  std::vector<int64_t> E_coeffs; // constant term first, length e+1, monic
  Variant variant = Variant::prismatic;
  int D = 0;                     // default divided-power degree cap

  uint64_t q = 0;                // p^N
  OKElem pi;                     // class of u
  OKElem Eprime_pi;              // E'(pi)
  OKElem a;                      // -E'(pi) or -pi*E'(pi) per variant
  int val_a = 0;                 // v_pi(a)
  int val_Eprime = 0;            // v_pi(E'(pi))

  // u^(e+k) reduced mod E, k = 0..e-2 (empty when e == 1).
  std::vector<OKElem> upow;
  // p/pi as an element of O_K (valuation e-1); used for exact pi-division.
  OKElem p_over_pi;

  bool operator==(const PrimeContext& o) const {
    return p == o.p && N == o.N && e == o.e && E_coeffs == o.E_coeffs &&
           variant == o.variant;
  }

  int cap() const { return e * N; }  // valuations live in [0, e*N); cap = "zero at precision"

  // --- O_K operations -------------------------------------------------
  OKElem zero() const { return OKElem(e, 0); }
  OKElem one() const;
  OKElem from_int(int64_t c) const;
  OKElem from_poly(const std::vector<int64_t>& coeffs) const;  // reduces mod E
  bool is_zero(const OKElem& x) const;
  OKElem add(const OKElem& x, const OKElem& y) const;
  OKElem sub(const OKElem& x, const OKElem& y) const;
  OKElem neg(const OKElem& x) const;
  OKElem mul(const OKElem& x, const OKElem& y) const;
  OKElem mul_int(const OKElem& x, int64_t c) const;
  OKElem mul_p_pow(const OKElem& x, int k) const;
  // pi-adic valuation in {0, .., cap-1}, or cap when indistinguishable from 0.
  int valuation(const OKElem& x) const;
  // Inverse of a unit (valuation 0); lifts the residue inverse by doubling.
  OKElem invert(const OKElem& x) const;
  // x / p^k; requires every coordinate divisible by p^k.
  OKElem div_p_exact(const OKElem& x, int k) const;
  // x / pi^k; requires v_pi(x) >= k.
  OKElem div_pi_exact(const OKElem& x, int k) const;

  // --- K = O_K[1/p] operations ----------------------------------------
  RationalOK rat(OKElem n, int den = 0) const;  // normalizes
  RationalOK rat_zero() const { return RationalOK{zero(), 0}; }
  RationalOK rat_one() const { return RationalOK{one(), 0}; }
  RationalOK rat_from_int(int64_t c) const { return rat(from_int(c)); }
  bool rat_is_zero(const RationalOK& x) const { return is_zero(x.num); }
  RationalOK rat_add(const RationalOK& x, const RationalOK& y) const;
  RationalOK rat_sub(const RationalOK& x, const RationalOK& y) const;
  RationalOK rat_neg(const RationalOK& x) const;
  RationalOK rat_mul(const RationalOK& x, const RationalOK& y) const;
  RationalOK rat_mul_ok(const RationalOK& x, const OKElem& y) const;
  RationalOK rat_scale_nat(const RationalOK& x, uint64_t c) const;
  // Inverse in K of any x != 0 at precision.
  RationalOK rat_invert(const RationalOK& x) const;
  // v_pi as an integer (may be negative), or cap() when num == 0.
  int rat_valuation(const RationalOK& x) const;
  bool rat_eq(const RationalOK& x, const RationalOK& y) const;
};

// Validates inputs, computes e, a and the reduction tables.
// D is the default divided-power degree cap carried by the context.
PrimeContext make_context(uint64_t p, const std::vector<int64_t>& E_coeffs,
                          int N, Variant variant, int D);

OKElem ok_arith(const PrimeContext& C, OkOp op, const OKElem& x, const OKElem& y);
inline OKElem ok_invert(const PrimeContext& C, const OKElem& x) { return C.invert(x); }
inline int ok_valuation(const PrimeContext& C, const OKElem& x) { return C.valuation(x); }

}  // namespace htck
