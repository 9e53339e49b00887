#include "htck/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace htck {

MatK mat_zero(const PrimeContext& C, int n) {
  MatK m(n);
  for (auto& x : m.a) x = C.rat_zero();
  return m;
}

MatK mat_identity(const PrimeContext& C, int n) {
  MatK m = mat_zero(C, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = C.rat_one();
  return m;
}

MatK mat_add(const PrimeContext& C, const MatK& x, const MatK& y) {
  MatK r(x.n);
  for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = C.rat_add(x.a[i], y.a[i]);
  return r;
}

MatK mat_sub(const PrimeContext& C, const MatK& x, const MatK& y) {
  MatK r(x.n);
  for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = C.rat_sub(x.a[i], y.a[i]);
  return r;
}

MatK mat_mul(const PrimeContext& C, const MatK& x, const MatK& y) {
  MatK r = mat_zero(C, x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      if (C.rat_is_zero(x.at(i, k))) continue;
      for (int j = 0; j < x.n; ++j)
        r.at(i, j) = C.rat_add(r.at(i, j), C.rat_mul(x.at(i, k), y.at(k, j)));
    }
  return r;
}

MatK mat_scale(const PrimeContext& C, const MatK& x, const RationalOK& c) {
  MatK r(x.n);
  for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = C.rat_mul(x.a[i], c);
  return r;
}

MatK mat_scale_ok(const PrimeContext& C, const MatK& x, const OKElem& c) {
  MatK r(x.n);
  for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = C.rat_mul_ok(x.a[i], c);
  return r;
}

MatK mat_scale_nat(const PrimeContext& C, const MatK& x, uint64_t c) {
  MatK r(x.n);
  for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = C.rat_scale_nat(x.a[i], c);
  return r;
}

bool mat_is_zero(const PrimeContext& C, const MatK& x) {
  for (const auto& c : x.a)
    if (!C.rat_is_zero(c)) return false;
  return true;
}

bool mat_eq(const PrimeContext& C, const MatK& x, const MatK& y) {
  if (x.n != y.n) return false;
  for (size_t i = 0; i < x.a.size(); ++i)
    if (!C.rat_eq(x.a[i], y.a[i])) return false;
  return true;
}

int mat_min_valuation(const PrimeContext& C, const MatK& x) {
  int best = C.cap();
  for (const auto& c : x.a) best = std::min(best, C.rat_valuation(c));
  return best;
}

bool mat_is_integral(const MatK& x) {
  for (const auto& c : x.a)
    if (c.den != 0) return false;
  return true;
}

VecK vec_zero(const PrimeContext& C, int n) {
  return VecK(static_cast<size_t>(n), C.rat_zero());
}

VecK vec_add(const PrimeContext& C, const VecK& x, const VecK& y) {
  VecK r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = C.rat_add(x[i], y[i]);
  return r;
}

VecK vec_sub(const PrimeContext& C, const VecK& x, const VecK& y) {
  VecK r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = C.rat_sub(x[i], y[i]);
  return r;
}

VecK vec_scale(const PrimeContext& C, const VecK& x, const RationalOK& c) {
  VecK r(x.size());
  for (size_t i = 0; i < x.size(); ++i) r[i] = C.rat_mul(x[i], c);
  return r;
}

VecK mat_apply(const PrimeContext& C, const MatK& m, const VecK& x) {
  VecK r = vec_zero(C, m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      r[i] = C.rat_add(r[i], C.rat_mul(m.at(i, j), x[j]));
  return r;
}

bool vec_is_zero(const PrimeContext& C, const VecK& x) {
  for (const auto& c : x)
    if (!C.rat_is_zero(c)) return false;
  return true;
}

std::vector<RationalOK> charpoly(const PrimeContext& C, const MatK& A) {
  // Berkowitz: iterate over leading principal minors, combining with
  // lower-triangular Toeplitz products. No divisions.
  int n = A.n;
  if (n == 0) return {C.rat_one()};
  // poly holds coefficients in descending powers: poly[k] = coeff of x^(m-k)
  std::vector<RationalOK> poly{C.rat_one()};
  for (int m = 1; m <= n; ++m) {
    // q[0] = 1, q[1] = -A[m-1][m-1], q[k] = -(R * B^{k-2} * S) for k >= 2
    std::vector<RationalOK> qv(static_cast<size_t>(m) + 1, C.rat_zero());
    qv[0] = C.rat_one();
    qv[1] = C.rat_neg(A.at(m - 1, m - 1));
    if (m >= 2) {
      VecK s(static_cast<size_t>(m - 1));
      for (int i = 0; i < m - 1; ++i) s[i] = A.at(i, m - 1);
      for (int k = 2; k <= m; ++k) {
        RationalOK dot = C.rat_zero();
        for (int j = 0; j < m - 1; ++j)
          dot = C.rat_add(dot, C.rat_mul(A.at(m - 1, j), s[j]));
        qv[k] = C.rat_neg(dot);
        if (k < m) {
          // s <- B s with B the (m-1)x(m-1) leading block
          VecK t(static_cast<size_t>(m - 1), C.rat_zero());
          for (int i = 0; i < m - 1; ++i)
            for (int j = 0; j < m - 1; ++j)
              t[i] = C.rat_add(t[i], C.rat_mul(A.at(i, j), s[j]));
          s = std::move(t);
        }
      }
    }
    std::vector<RationalOK> next(static_cast<size_t>(m) + 1, C.rat_zero());
    for (size_t i = 0; i < poly.size(); ++i)
      for (size_t j = 0; j < qv.size() && i + j < next.size(); ++j)
        next[i + j] = C.rat_add(next[i + j], C.rat_mul(poly[i], qv[j]));
    poly = std::move(next);
  }
  // convert to ascending order: result[i] = coeff of x^i
  std::vector<RationalOK> out(static_cast<size_t>(n) + 1, C.rat_zero());
  for (int k = 0; k <= n; ++k) out[n - k] = poly[k];
  return out;
}

Frac frac(long long num, long long den) {
  if (den < 0) { num = -num; den = -den; }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) { num /= g; den /= g; }
  return Frac{num, den};
}

bool frac_lt(const Frac& x, const Frac& y) { return x.num * y.den < y.num * x.den; }
bool frac_gt(const Frac& x, const Frac& y) { return frac_lt(y, x); }

std::string frac_str(const Frac& x) {
  if (x.den == 1) return std::to_string(x.num);
  return std::to_string(x.num) + "/" + std::to_string(x.den);
}

std::vector<Slope> newton_slopes(const PrimeContext& C,
                                 const std::vector<RationalOK>& poly) {
  int d = static_cast<int>(poly.size()) - 1;
  if (d < 0 || !C.rat_eq(poly.back(), C.rat_one()))
    fail(errc::parse_error, "newton_slopes expects a monic polynomial");
  std::vector<Slope> out;
  // Strip constant-side coefficients that vanish at precision: each gives a
  // root indistinguishable from 0 (slope reported as cap).
  int lo = 0;
  while (lo < d && C.rat_is_zero(poly[lo])) {
    out.push_back(Slope{true, {}});
    ++lo;
  }
  // Lower convex hull of points (i, v(c_i)) for i in [lo, d]; masked interior
  // points are fine when the hull from visible points stays below the mask.
  std::vector<std::pair<int, int>> pts;  // (i, valuation)
  for (int i = lo; i <= d; ++i) {
    int v = C.rat_valuation(poly[i]);
    if (v >= C.cap() && i != d) continue;  // masked: skip, checked below
    pts.push_back({i, i == d ? 0 : v});
  }
  std::vector<std::pair<int, int>> hull;  // lower hull, increasing i
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      auto& a = hull[hull.size() - 2];
      auto& b = hull[hull.size() - 1];
      // pop b when it lies on or above segment a-pt
      long long lhs = static_cast<long long>(b.second - a.second) * (pt.first - a.first);
      long long rhs = static_cast<long long>(pt.second - a.second) * (b.first - a.first);
      if (lhs >= rhs) hull.pop_back();
      else break;
    }
    hull.push_back(pt);
  }
  // A masked coefficient is only tolerable when the hull at its index is
  // strictly below the precision cap; otherwise the polygon is undecidable.
  for (int i = lo; i <= d; ++i) {
    if (i == d || !(C.rat_valuation(poly[i]) >= C.cap())) continue;
    for (size_t k = 0; k + 1 < hull.size(); ++k) {
      if (hull[k].first <= i && i <= hull[k + 1].first) {
        // hull height at i (times denominators), compare against cap
        long long dx = hull[k + 1].first - hull[k].first;
        long long hy = static_cast<long long>(hull[k].second) * dx +
                       static_cast<long long>(hull[k + 1].second - hull[k].second) *
                           (i - hull[k].first);
        if (hy >= static_cast<long long>(C.cap()) * dx)
          fail(errc::coefficient_at_precision_zero,
               "coefficient of x^" + std::to_string(i) + " masked at precision");
      }
    }
  }
  if (hull.size() == 1 && lo < d)
    fail(errc::coefficient_at_precision_zero, "polygon degenerate at precision");
  for (size_t k = 0; k + 1 < hull.size(); ++k) {
    int di = hull[k + 1].first - hull[k].first;
    int dv = hull[k].second - hull[k + 1].second;  // root valuation = drop / run
    Frac s = frac(dv, di);
    for (int t = 0; t < di; ++t) out.push_back(Slope{false, s});
  }
  // cap-slopes first, then ascending by value
  std::sort(out.begin(), out.end(), [](const Slope& x, const Slope& y) {
    if (x.cap != y.cap) return x.cap;
    if (x.cap) return false;
    return frac_lt(x.value, y.value);
  });
  return out;
}

}  // namespace htck
