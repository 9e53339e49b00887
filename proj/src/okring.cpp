#include "htck/okring.hpp"

#include <algorithm>
#include <cmath>

namespace htck {

const char* errc_name(errc k) {
  switch (k) {
    case errc::not_prime: return "NotPrime";
    case errc::not_eisenstein: return "NotEisenstein";
    case errc::precision_too_small: return "PrecisionTooSmall";
    case errc::context_mismatch: return "ContextMismatch";
    case errc::not_a_unit: return "NotAUnit";
    case errc::arity_mismatch: return "ArityMismatch";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::degree_too_small: return "DegreeTooSmall";
    case errc::wrong_variant: return "WrongVariant";
    case errc::non_convergent: return "NonConvergent";
    case errc::horizon_not_reached: return "HorizonNotReached";
    case errc::precision_masked: return "PrecisionMasked";
    case errc::not_a_cocycle: return "NotACocycle";
    case errc::not_in_kernel: return "NotInKernel";
    case errc::verification_failed: return "VerificationFailed";
    case errc::coefficient_at_precision_zero: return "CoefficientAtPrecisionZero";
    case errc::parse_error: return "ParseError";
    case errc::internal: return "InternalError";
  }
  return "UnknownError";
}

const char* variant_name(Variant v) {
  return v == Variant::prismatic ? "prismatic" : "log";
}

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t q) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % q);
}

uint64_t addmod(uint64_t a, uint64_t b, uint64_t q) {
  uint64_t s = a + b;
  if (s >= q || s < a) s -= q;
  return s;
}

uint64_t submod(uint64_t a, uint64_t b, uint64_t q) {
  return a >= b ? a - b : a + (q - b);
}

uint64_t redmod(int64_t c, uint64_t q) {
  int64_t r = c % static_cast<int64_t>(q);
  if (r < 0) r += static_cast<int64_t>(q);
  return static_cast<uint64_t>(r);
}

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int val_p_u64(uint64_t c, uint64_t p, int cap) {
  if (c == 0) return cap;
  int v = 0;
  while (v < cap && c % p == 0) { c /= p; ++v; }
  return v;
}

}  // namespace

OKElem PrimeContext::one() const {
  OKElem r(e, 0);
  r[0] = 1 % q;
  return r;
}

OKElem PrimeContext::from_int(int64_t c) const {
  OKElem r(e, 0);
  r[0] = redmod(c, q);
  return r;
}

OKElem PrimeContext::from_poly(const std::vector<int64_t>& coeffs) const {
  // Reduce an arbitrary-degree polynomial in u against E (monic).
  std::vector<uint64_t> c(std::max<size_t>(coeffs.size(), e), 0);
  for (size_t i = 0; i < coeffs.size(); ++i) c[i] = redmod(coeffs[i], q);
  for (size_t k = c.size(); k-- > static_cast<size_t>(e);) {
    uint64_t top = c[k];
    if (top == 0) continue;
    c[k] = 0;
    // u^k = u^(k-e) * u^e, u^e = -sum_{i<e} E_i u^i
    for (int i = 0; i < e; ++i) {
      uint64_t ei = redmod(E_coeffs[i], q);
      c[k - e + i] = submod(c[k - e + i], mulmod(top, ei, q), q);
    }
  }
  c.resize(e);
  return c;
}

bool PrimeContext::is_zero(const OKElem& x) const {
  for (uint64_t c : x)
    if (c != 0) return false;
  return true;
}

OKElem PrimeContext::add(const OKElem& x, const OKElem& y) const {
  if (x.size() != y.size()) fail(errc::context_mismatch, "element sizes differ");
  OKElem r(e);
  for (int i = 0; i < e; ++i) r[i] = addmod(x[i], y[i], q);
  return r;
}

OKElem PrimeContext::sub(const OKElem& x, const OKElem& y) const {
  if (x.size() != y.size()) fail(errc::context_mismatch, "element sizes differ");
  OKElem r(e);
  for (int i = 0; i < e; ++i) r[i] = submod(x[i], y[i], q);
  return r;
}

OKElem PrimeContext::neg(const OKElem& x) const {
  OKElem r(e);
  for (int i = 0; i < e; ++i) r[i] = x[i] == 0 ? 0 : q - x[i];
  return r;
}

OKElem PrimeContext::mul(const OKElem& x, const OKElem& y) const {
  if (x.size() != y.size()) fail(errc::context_mismatch, "element sizes differ");
  if (e == 1) return OKElem{mulmod(x[0], y[0], q)};
  std::vector<uint64_t> conv(2 * e - 1, 0);
  for (int i = 0; i < e; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < e; ++j)
      conv[i + j] = addmod(conv[i + j], mulmod(x[i], y[j], q), q);
  }
  OKElem r(conv.begin(), conv.begin() + e);
  for (int k = e; k < 2 * e - 1; ++k) {
    if (conv[k] == 0) continue;
    const OKElem& red = upow[k - e];  // u^k reduced
    for (int i = 0; i < e; ++i)
      r[i] = addmod(r[i], mulmod(conv[k], red[i], q), q);
  }
  return r;
}

OKElem PrimeContext::mul_int(const OKElem& x, int64_t c) const {
  uint64_t cc = redmod(c, q);
  OKElem r(e);
  for (int i = 0; i < e; ++i) r[i] = mulmod(x[i], cc, q);
  return r;
}

OKElem PrimeContext::mul_p_pow(const OKElem& x, int k) const {
  OKElem r = x;
  for (int t = 0; t < k; ++t)
    for (int i = 0; i < e; ++i) r[i] = mulmod(r[i], p, q);
  return r;
}

int PrimeContext::valuation(const OKElem& x) const {
  // v_pi(sum c_i pi^i) = min_i (e*v_p(c_i) + i): the terms have distinct
  // valuations mod e, so the minimum is attained exactly.
  int best = cap();
  for (int i = 0; i < e; ++i) {
    if (x[i] == 0) continue;
    int v = e * val_p_u64(x[i], p, N) + i;
    best = std::min(best, v);
  }
  return std::min(best, cap());
}

OKElem PrimeContext::invert(const OKElem& x) const {
  if (valuation(x) != 0)
    fail(errc::not_a_unit, "element has positive valuation at precision");
  // residue inverse in F_p, then y <- y(2 - xy) doubles pi-adic accuracy
  uint64_t r0 = x[0] % p;
  uint64_t inv0 = 1;
  {
    // Fermat inverse mod p
    uint64_t b = r0 % p, ex = p - 2, acc = 1;
    while (ex) {
      if (ex & 1) acc = (acc * b) % p;
      b = (b * b) % p;
      ex >>= 1;
    }
    inv0 = acc;
  }
  OKElem y = from_int(static_cast<int64_t>(inv0));
  int steps = 1;
  while ((1 << steps) < cap() + 1) ++steps;
  OKElem two = from_int(2);
  for (int i = 0; i <= steps; ++i) y = mul(y, sub(two, mul(x, y)));
  return y;
}

OKElem PrimeContext::div_p_exact(const OKElem& x, int k) const {
  OKElem r = x;
  for (int t = 0; t < k; ++t) {
    for (int i = 0; i < e; ++i) {
      if (r[i] % p != 0) fail(errc::internal, "inexact division by p");
      r[i] /= p;
    }
  }
  return r;
}

OKElem PrimeContext::div_pi_exact(const OKElem& x, int k) const {
  // x/pi = x * (p/pi) / p, valid when v_pi(x) >= 1.
  OKElem r = x;
  for (int t = 0; t < k; ++t) r = div_p_exact(mul(r, p_over_pi), 1);
  return r;
}

RationalOK PrimeContext::rat(OKElem n, int den) const {
  RationalOK r{std::move(n), den};
  if (is_zero(r.num)) {
    r.den = 0;
    return r;
  }
  while (r.den > 0) {
    bool div = true;
    for (uint64_t c : r.num)
      if (c % p != 0) { div = false; break; }
    if (!div) break;
    r.num = div_p_exact(r.num, 1);
    --r.den;
  }
  return r;
}

RationalOK PrimeContext::rat_add(const RationalOK& x, const RationalOK& y) const {
  int m = std::max(x.den, y.den);
  OKElem nx = mul_p_pow(x.num, m - x.den);
  OKElem ny = mul_p_pow(y.num, m - y.den);
  return rat(add(nx, ny), m);
}

RationalOK PrimeContext::rat_sub(const RationalOK& x, const RationalOK& y) const {
  int m = std::max(x.den, y.den);
  OKElem nx = mul_p_pow(x.num, m - x.den);
  OKElem ny = mul_p_pow(y.num, m - y.den);
  return rat(sub(nx, ny), m);
}

RationalOK PrimeContext::rat_neg(const RationalOK& x) const {
  return RationalOK{neg(x.num), x.den};
}

RationalOK PrimeContext::rat_mul(const RationalOK& x, const RationalOK& y) const {
  return rat(mul(x.num, y.num), x.den + y.den);
}

RationalOK PrimeContext::rat_mul_ok(const RationalOK& x, const OKElem& y) const {
  return rat(mul(x.num, y), x.den);
}

RationalOK PrimeContext::rat_scale_nat(const RationalOK& x, uint64_t c) const {
  OKElem r(e);
  uint64_t cc = c % q;
  for (int i = 0; i < e; ++i) r[i] = mulmod(x.num[i], cc, q);
  return rat(std::move(r), x.den);
}

RationalOK PrimeContext::rat_invert(const RationalOK& x) const {
  if (is_zero(x.num)) fail(errc::not_a_unit, "inverting zero at precision");
  int k = valuation(x.num);
  // num = pi^k * unit; 1/x = p^den * unit^{-1} * (p/pi)^k / p^k
  OKElem unit = div_pi_exact(x.num, k);
  OKElem r = invert(unit);
  for (int t = 0; t < k; ++t) r = mul(r, p_over_pi);
  int scale_up = std::max(x.den - k, 0);
  int den = std::max(k - x.den, 0);
  return rat(mul_p_pow(r, scale_up), den);
}

int PrimeContext::rat_valuation(const RationalOK& x) const {
  if (is_zero(x.num)) return cap();
  return valuation(x.num) - e * x.den;
}

bool PrimeContext::rat_eq(const RationalOK& x, const RationalOK& y) const {
  return rat_is_zero(rat_sub(x, y));
}

PrimeContext make_context(uint64_t p, const std::vector<int64_t>& E_coeffs,
                          int N, Variant variant, int D) {
  if (!is_prime_u64(p)) fail(errc::not_prime, std::to_string(p) + " is not prime");
  if (N < 1) fail(errc::precision_too_small, "precision exponent N must be >= 1");
  if (E_coeffs.size() < 2) fail(errc::not_eisenstein, "deg E must be >= 1");
  int e = static_cast<int>(E_coeffs.size()) - 1;
  if (E_coeffs[e] != 1) fail(errc::not_eisenstein, "leading coefficient is not 1");
  for (int i = 1; i < e; ++i)
    if (E_coeffs[i] % static_cast<int64_t>(p) != 0)
      fail(errc::not_eisenstein,
           "coefficient of u^" + std::to_string(i) + " not divisible by p");
  int64_t c0 = E_coeffs[0];
  if (c0 % static_cast<int64_t>(p) != 0)
    fail(errc::not_eisenstein, "constant term valuation 0");
  if ((c0 / static_cast<int64_t>(p)) % static_cast<int64_t>(p) == 0)
    fail(errc::not_eisenstein, "constant term valuation >= 2");

  PrimeContext C;
  C.p = p;
  C.N = N;
  C.e = e;
  C.E_coeffs = E_coeffs;
  C.variant = variant;
  C.D = D;

  // p^N, guarded so that products fit the 128-bit multiply path
  long double qd = std::pow(static_cast<long double>(p), N);
  if (qd > 4.6e18L) fail(errc::precision_too_small, "p^N too large for exact arithmetic");
  C.q = 1;
  for (int i = 0; i < N; ++i) C.q *= p;

  // reduction table u^(e+k), k = 0..e-2
  if (e > 1) {
    OKElem ue(static_cast<size_t>(e), 0);  // u^e = -sum E_i u^i
    for (int i = 0; i < e; ++i) ue[i] = redmod(-E_coeffs[i], C.q);
    C.upow.push_back(ue);
    for (int k = 1; k <= e - 2; ++k) {
      // u^(e+k) = u * u^(e+k-1)
      const OKElem& prev = C.upow.back();
      std::vector<uint64_t> shifted(e + 1, 0);
      for (int i = 0; i < e; ++i) shifted[i + 1] = prev[i];
      OKElem red(shifted.begin(), shifted.begin() + e);
      if (shifted[e] != 0)
        for (int i = 0; i < e; ++i)
          red[i] = addmod(red[i], mulmod(shifted[e], ue[i], C.q), C.q);
      C.upow.push_back(red);
    }
  }

  C.pi = C.from_poly({0, 1});

  // E'(u) evaluated at pi
  {
    OKElem acc = C.zero();
    OKElem pw = C.one();
    for (int i = 1; i <= e; ++i) {
      // derivative term i*E_i u^(i-1)
      acc = C.add(acc, C.mul_int(pw, static_cast<int64_t>(i) * E_coeffs[i]));
      pw = C.mul(pw, C.pi);
    }
    C.Eprime_pi = acc;
  }
  C.val_Eprime = C.valuation(C.Eprime_pi);

  // a = -E'(pi) (prismatic) or -pi*E'(pi) (log)
  C.a = C.neg(C.Eprime_pi);
  if (variant == Variant::log) C.a = C.mul(C.a, C.pi);
  C.val_a = C.valuation(C.a);
  if (C.val_a >= C.cap())
    fail(errc::precision_too_small, "structure constant vanishes at precision");

  // p/pi = pi^{e-1} * inv(pi^e / p); pi^e has all coordinates divisible by p.
  {
    OKElem pie = C.one();
    for (int i = 0; i < e; ++i) pie = C.mul(pie, C.pi);
    OKElem w = C.invert(C.div_p_exact(pie, 1));
    OKElem r = w;
    for (int i = 0; i < e - 1; ++i) r = C.mul(r, C.pi);
    C.p_over_pi = r;
  }
  return C;
}

OKElem ok_arith(const PrimeContext& C, OkOp op, const OKElem& x, const OKElem& y) {
  switch (op) {
    case OkOp::add: return C.add(x, y);
    case OkOp::sub: return C.sub(x, y);
    case OkOp::mul: return C.mul(x, y);
  }
  fail(errc::internal, "bad op");
}

}  // namespace htck
