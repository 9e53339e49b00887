#include "htck/pd.hpp"

#include <sstream>

namespace htck {

std::string pd_index_str(const PdIndex& I) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < I.size(); ++i) {
    if (i) os << ",";
    os << I[i];
  }
  os << ")";
  return os.str();
}

uint64_t binom_u64(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<uint64_t>(n - k + i) / static_cast<uint64_t>(i);
  }
  return static_cast<uint64_t>(r);
}

uint64_t pd_monomial_power_coeff(const PdIndex& I, int n) {
  // (prod_j X_j^[i_j])^[n] = prod_j (n i_j)! / (n! prod_j (i_j!)^n) * X^[nI]
  auto fact = [](int m) {
    unsigned __int128 f = 1;
    for (int i = 2; i <= m; ++i) f *= static_cast<unsigned>(i);
    return f;
  };
  unsigned __int128 num = 1;
  for (uint32_t ij : I)
    if (ij) num *= fact(static_cast<int>(ij) * n);
  unsigned __int128 den = fact(n);
  for (uint32_t ij : I) {
    if (!ij) continue;
    unsigned __int128 fij = fact(static_cast<int>(ij));
    for (int t = 0; t < n; ++t) den *= fij;
  }
  return static_cast<uint64_t>(num / den);
}

PdSeries<RationalOK> pd_geom_inverse(const PrimeContext& C, int var, int r,
                                     int arity, int cap) {
  PdSeries<RationalOK> f{arity, cap, {}};
  RationalOK coeff = C.rat_one();
  RationalOK nega = C.rat(C.neg(C.a));
  for (int n = 0; n <= cap; ++n) {
    if (!C.rat_is_zero(coeff)) {
      PdIndex I(static_cast<size_t>(arity), 0);
      I[var - 1] = static_cast<uint32_t>(n);
      f.terms.emplace(std::move(I), coeff);
    }
    coeff = C.rat_scale_nat(C.rat_mul(coeff, nega), static_cast<uint64_t>(r + n));
  }
  return f;
}

PdSeries<MatK> binom_power(const PrimeContext& C, const MatK& A, int r,
                           int var, int arity, int cap) {
  PdSeries<MatK> f{arity, cap, {}};
  MatK coeff = mat_identity(C, A.n);
  RationalOK a = C.rat(C.a);
  for (int n = 0; n <= cap; ++n) {
    if (!mat_is_zero(C, coeff)) {
      PdIndex I(static_cast<size_t>(arity), 0);
      I[var - 1] = static_cast<uint32_t>(n);
      f.terms.emplace(std::move(I), coeff);
    }
    // next factor: A - (r+n) a
    MatK shift = mat_scale(C, mat_identity(C, A.n),
                           C.rat_scale_nat(a, static_cast<uint64_t>(r + n)));
    coeff = mat_mul(C, coeff, mat_sub(C, A, shift));
  }
  return f;
}

PdSeries<RationalOK> pd_shift_expansion(const PrimeContext& C, int to, int n,
                                        int arity, int cap) {
  PdSeries<RationalOK> f{arity, cap, {}};
  for (int l = 0; l <= n; ++l) {
    int m = n - l;
    if (n > cap) continue;
    PdIndex I(static_cast<size_t>(arity), 0);
    I[0] += static_cast<uint32_t>(l);
    I[to - 1] += static_cast<uint32_t>(m);
    RationalOK c = C.rat_from_int(l % 2 ? -1 : 1);
    OkScalarRing SR{&C};
    pd_accum(SR, f, I, c);
  }
  return f;
}

PdSeries<RationalOK> pd_divided_power(const PrimeContext& C,
                                      const PdSeries<RationalOK>& u, int n) {
  OkScalarRing SR{&C};
  for (const auto& [I, c] : u.terms)
    if (pd_degree(I) == 0 && !C.rat_is_zero(c))
      fail(errc::internal, "divided power of a series with constant term");
  // (t_1 + ... + t_k)^[n] = sum over compositions prod t_i^[n_i]
  std::vector<std::pair<PdIndex, RationalOK>> mons(u.terms.begin(), u.terms.end());
  PdSeries<RationalOK> acc = pd_one(SR, u.arity, u.cap);
  if (n == 0) return acc;
  // recursive expansion over the monomial list
  struct Rec {
    const PrimeContext& C;
    const OkScalarRing& SR;
    const std::vector<std::pair<PdIndex, RationalOK>>& mons;
    PdSeries<RationalOK> run(size_t t, int rem, int arity, int cap) const {
      if (t == mons.size())
        return rem == 0 ? pd_one(SR, arity, cap) : pd_zero(SR, arity, cap);
      PdSeries<RationalOK> out = pd_zero(SR, arity, cap);
      const auto& [I, c] = mons[t];
      int dI = pd_degree(I);
      for (int k = 0; k <= rem; ++k) {
        if (k * dI > cap) break;
        PdSeries<RationalOK> rest = run(t + 1, rem - k, arity, cap);
        if (rest.terms.empty()) continue;
        // mons[t]^[k] = c^k * coeff * X^[kI]
        PdSeries<RationalOK> pwr = pd_zero(SR, arity, cap);
        PdIndex J(I.size());
        for (size_t q = 0; q < I.size(); ++q)
          J[q] = I[q] * static_cast<uint32_t>(k);
        RationalOK ck = C.rat_one();
        for (int q = 0; q < k; ++q) ck = C.rat_mul(ck, c);
        ck = C.rat_scale_nat(ck, pd_monomial_power_coeff(I, k));
        pd_accum(SR, pwr, J, ck);
        out = pd_add(SR, out, pd_mul(SR, pwr, rest));
      }
      return out;
    }
  } rec{C, SR, mons};
  return rec.run(0, n, u.arity, u.cap);
}

}  // namespace htck
