#pragma once

// Truncated divided-power polynomial rings R{X_1,...,X_s} with the
// cosimplicial face/degeneracy structure. Multiplication follows
// X^[i] X^[j] = binom(i+j, i) X^[i+j]; truncation is by total degree.
// Coefficients are either scalars in K or d x d matrices over K, selected
// through a small ring-view parameter.

#include <cstdint>
#include <map>
#include <vector>

#include "htck/matrix.hpp"

namespace htck {

using PdIndex = std::vector<uint32_t>;

inline int pd_degree(const PdIndex& I) {
  int s = 0;
  for (uint32_t i : I) s += static_cast<int>(i);
  return s;
}

std::string pd_index_str(const PdIndex& I);

// Exact binomial / multinomial helpers (inputs stay desk-scale).
uint64_t binom_u64(int n, int k);
// Coefficient of the n-th divided power of the monomial X^[I]:
// (X^[I])^[n] = c * X^[nI].
uint64_t pd_monomial_power_coeff(const PdIndex& I, int n);

template <class Elem>
struct PdSeries {
  int arity = 0;
  int cap = 0;
  std::map<PdIndex, Elem> terms;  // zero coefficients are never stored
};

// --- coefficient ring views ------------------------------------------------

struct OkScalarRing {
  const PrimeContext* C;
  using Elem = RationalOK;
  Elem zero() const { return C->rat_zero(); }
  Elem one() const { return C->rat_one(); }
  bool is_zero(const Elem& x) const { return C->rat_is_zero(x); }
  Elem add(const Elem& x, const Elem& y) const { return C->rat_add(x, y); }
  Elem sub(const Elem& x, const Elem& y) const { return C->rat_sub(x, y); }
  Elem neg(const Elem& x) const { return C->rat_neg(x); }
  Elem mul(const Elem& x, const Elem& y) const { return C->rat_mul(x, y); }
  Elem scale_nat(const Elem& x, uint64_t c) const { return C->rat_scale_nat(x, c); }
  Elem scale_scalar(const Elem& x, const RationalOK& c) const { return C->rat_mul(x, c); }
};

struct MatCoeffRing {
  const PrimeContext* C;
  int d;
  using Elem = MatK;
  Elem zero() const { return mat_zero(*C, d); }
  Elem one() const { return mat_identity(*C, d); }
  bool is_zero(const Elem& x) const { return mat_is_zero(*C, x); }
  Elem add(const Elem& x, const Elem& y) const { return mat_add(*C, x, y); }
  Elem sub(const Elem& x, const Elem& y) const { return mat_sub(*C, x, y); }
  Elem neg(const Elem& x) const { return mat_sub(*C, mat_zero(*C, d), x); }
  Elem mul(const Elem& x, const Elem& y) const { return mat_mul(*C, x, y); }
  Elem scale_nat(const Elem& x, uint64_t c) const { return mat_scale_nat(*C, x, c); }
  Elem scale_scalar(const Elem& x, const RationalOK& c) const { return mat_scale(*C, x, c); }
};

// --- generic series operations ----------------------------------------------

template <class R>
using PdOf = PdSeries<typename R::Elem>;

template <class R>
PdOf<R> pd_zero(const R&, int arity, int cap) {
  return PdOf<R>{arity, cap, {}};
}

template <class R>
PdOf<R> pd_one(const R& ring, int arity, int cap) {
  PdOf<R> f{arity, cap, {}};
  f.terms.emplace(PdIndex(static_cast<size_t>(arity), 0), ring.one());
  return f;
}

template <class R>
void pd_accum(const R& ring, PdOf<R>& f, const PdIndex& I,
              const typename R::Elem& c) {
  if (ring.is_zero(c)) return;
  auto it = f.terms.find(I);
  if (it == f.terms.end()) {
    f.terms.emplace(I, c);
  } else {
    it->second = ring.add(it->second, c);
    if (ring.is_zero(it->second)) f.terms.erase(it);
  }
}

template <class R>
typename R::Elem pd_coeff(const R& ring, const PdOf<R>& f, const PdIndex& I) {
  auto it = f.terms.find(I);
  return it == f.terms.end() ? ring.zero() : it->second;
}

template <class R>
PdOf<R> pd_add(const R& ring, const PdOf<R>& f, const PdOf<R>& g) {
  if (f.arity != g.arity) fail(errc::arity_mismatch, "pd_add");
  PdOf<R> r{f.arity, std::min(f.cap, g.cap), {}};
  for (const auto& [I, c] : f.terms)
    if (pd_degree(I) <= r.cap) pd_accum(ring, r, I, c);
  for (const auto& [I, c] : g.terms)
    if (pd_degree(I) <= r.cap) pd_accum(ring, r, I, c);
  return r;
}

template <class R>
PdOf<R> pd_sub(const R& ring, const PdOf<R>& f, const PdOf<R>& g) {
  if (f.arity != g.arity) fail(errc::arity_mismatch, "pd_sub");
  PdOf<R> r{f.arity, std::min(f.cap, g.cap), {}};
  for (const auto& [I, c] : f.terms)
    if (pd_degree(I) <= r.cap) pd_accum(ring, r, I, c);
  for (const auto& [I, c] : g.terms)
    if (pd_degree(I) <= r.cap) pd_accum(ring, r, I, ring.neg(c));
  return r;
}

// Product under the divided-power law; coefficient order is preserved
// (left series coefficient multiplies on the left).
template <class R>
PdOf<R> pd_mul(const R& ring, const PdOf<R>& f, const PdOf<R>& g) {
  if (f.arity != g.arity) fail(errc::arity_mismatch, "pd_mul");
  PdOf<R> r{f.arity, std::min(f.cap, g.cap), {}};
  for (const auto& [I, ci] : f.terms) {
    int di = pd_degree(I);
    if (di > r.cap) continue;
    for (const auto& [J, cj] : g.terms) {
      int dj = pd_degree(J);
      if (di + dj > r.cap) continue;
      PdIndex Kk(I.size());
      uint64_t b = 1;
      for (size_t t = 0; t < I.size(); ++t) {
        Kk[t] = I[t] + J[t];
        b *= binom_u64(static_cast<int>(Kk[t]), static_cast<int>(I[t]));
      }
      pd_accum(ring, r, Kk, ring.scale_nat(ring.mul(ci, cj), b));
    }
  }
  return r;
}

// Mixed multiply: scalar series times coefficient series.
template <class R>
PdOf<R> pd_mul_scalar_series(const R& ring, const PdSeries<RationalOK>& s,
                             const PdOf<R>& f) {
  if (s.arity != f.arity) fail(errc::arity_mismatch, "pd_mul_scalar_series");
  PdOf<R> r{f.arity, std::min(s.cap, f.cap), {}};
  for (const auto& [I, ci] : s.terms) {
    int di = pd_degree(I);
    if (di > r.cap) continue;
    for (const auto& [J, cj] : f.terms) {
      int dj = pd_degree(J);
      if (di + dj > r.cap) continue;
      PdIndex Kk(I.size());
      uint64_t b = 1;
      for (size_t t = 0; t < I.size(); ++t) {
        Kk[t] = I[t] + J[t];
        b *= binom_u64(static_cast<int>(Kk[t]), static_cast<int>(I[t]));
      }
      pd_accum(ring, r, Kk, ring.scale_nat(ring.scale_scalar(cj, ci), b));
    }
  }
  return r;
}

template <class R>
bool pd_eq(const R& ring, const PdOf<R>& f, const PdOf<R>& g) {
  int cap = std::min(f.cap, g.cap);
  for (const auto& [I, c] : f.terms) {
    if (pd_degree(I) > cap) continue;
    if (!ring.is_zero(ring.sub(c, pd_coeff(ring, g, I)))) return false;
  }
  for (const auto& [I, c] : g.terms) {
    if (pd_degree(I) > cap) continue;
    if (f.terms.find(I) == f.terms.end() && !ring.is_zero(c)) return false;
  }
  return true;
}

template <class R>
PdOf<R> pd_truncate(const R&, const PdOf<R>& f, int cap) {
  PdOf<R> r{f.arity, cap, {}};
  for (const auto& [I, c] : f.terms)
    if (pd_degree(I) <= cap) r.terms.emplace(I, c);
  return r;
}

// --- structural series -------------------------------------------------------

// (1 + a X_var)^{-r}, coefficients (-a)^n r(r+1)...(r+n-1) on X_var^[n].
PdSeries<RationalOK> pd_geom_inverse(const PrimeContext& C, int var, int r,
                                     int arity, int cap);

// (1 + a X_var)^{A/a - r} = sum_n prod_{i=0}^{n-1}(A - (r+i)a) X_var^[n].
PdSeries<MatK> binom_power(const PrimeContext& C, const MatK& A, int r,
                           int var, int arity, int cap);

// Expansion of (X_to - X_1)^[n] = sum_{l+m=n} (-1)^l X_1^[l] X_to^[m].
PdSeries<RationalOK> pd_shift_expansion(const PrimeContext& C, int to, int n,
                                        int arity, int cap);

// n-th divided power of a scalar series with zero constant term.
PdSeries<RationalOK> pd_divided_power(const PrimeContext& C,
                                      const PdSeries<RationalOK>& u, int n);

// --- cosimplicial structure --------------------------------------------------

// Face p_i : arity s -> s+1, 0 <= i <= s+1. p_0 substitutes
// X_j -> (X_{j+1} - X_1)(1 + a X_1)^{-1}; p_i for i >= 1 relabels.
template <class R>
PdOf<R> face_map(const R& ring, const PrimeContext& C, int i, const PdOf<R>& f) {
  int s = f.arity;
  if (i < 0 || i > s + 1) fail(errc::index_out_of_range, "face index");
  PdOf<R> r{s + 1, f.cap, {}};
  if (i >= 1) {
    for (const auto& [I, c] : f.terms) {
      PdIndex J(static_cast<size_t>(s) + 1, 0);
      for (int k = 0; k < s + 1; ++k) {
        int v = k + 1;  // variable number in the output
        if (v < i) J[k] = I[k];
        else if (v == i) J[k] = 0;
        else J[k] = I[k - 1];
      }
      pd_accum(ring, r, J, c);
    }
    return r;
  }
  for (const auto& [I, c] : f.terms) {
    int deg = pd_degree(I);
    if (deg > f.cap) continue;
    PdSeries<RationalOK> t = pd_geom_inverse(C, 1, deg, s + 1, f.cap);
    OkScalarRing SR{&C};
    for (int j = 1; j <= s; ++j) {
      if (I[j - 1] == 0) continue;
      t = pd_mul(SR, t, pd_shift_expansion(C, j + 1, static_cast<int>(I[j - 1]),
                                           s + 1, f.cap));
    }
    for (const auto& [J, sc] : t.terms)
      pd_accum(ring, r, J, ring.scale_scalar(c, sc));
  }
  return r;
}

// Degeneracy sigma_i : arity s -> s-1, 0 <= i <= s-1. sigma_0 kills X_1 and
// shifts down; sigma_i for i >= 1 merges X_i and X_{i+1}.
template <class R>
PdOf<R> degeneracy_map(const R& ring, const PrimeContext&, int i, const PdOf<R>& f) {
  int s = f.arity;
  if (i < 0 || i > s - 1) fail(errc::index_out_of_range, "degeneracy index");
  PdOf<R> r{s - 1, f.cap, {}};
  for (const auto& [I, c] : f.terms) {
    if (i == 0) {
      if (I[0] != 0) continue;
      PdIndex J(I.begin() + 1, I.end());
      pd_accum(ring, r, J, c);
    } else {
      PdIndex J(static_cast<size_t>(s) - 1, 0);
      for (int k = 0; k < s - 1; ++k) {
        int v = k + 1;
        if (v < i) J[k] = I[k];
        else if (v == i) J[k] = I[i - 1] + I[i];
        else J[k] = I[k + 1];
      }
      uint64_t b = binom_u64(static_cast<int>(I[i - 1] + I[i]),
                             static_cast<int>(I[i - 1]));
      pd_accum(ring, r, J, ring.scale_nat(c, b));
    }
  }
  return r;
}

}  // namespace htck
