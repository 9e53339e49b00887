#pragma once

// Square matrices and vectors over K = O_K[1/p], plus the division-free
// characteristic polynomial and Newton-polygon slope extraction.

#include <optional>
#include <vector>

#include "htck/okring.hpp"

namespace htck {

struct MatK {
  int n = 0;
  std::vector<RationalOK> a;  // row-major, n*n

  MatK() = default;
  explicit MatK(int n_) : n(n_), a(static_cast<size_t>(n_) * n_) {}
  RationalOK& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const RationalOK& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
  bool operator==(const MatK&) const = default;
};

using VecK = std::vector<RationalOK>;

MatK mat_zero(const PrimeContext& C, int n);
MatK mat_identity(const PrimeContext& C, int n);
MatK mat_add(const PrimeContext& C, const MatK& x, const MatK& y);
MatK mat_sub(const PrimeContext& C, const MatK& x, const MatK& y);
MatK mat_mul(const PrimeContext& C, const MatK& x, const MatK& y);
MatK mat_scale(const PrimeContext& C, const MatK& x, const RationalOK& c);
MatK mat_scale_ok(const PrimeContext& C, const MatK& x, const OKElem& c);
MatK mat_scale_nat(const PrimeContext& C, const MatK& x, uint64_t c);
bool mat_is_zero(const PrimeContext& C, const MatK& x);
bool mat_eq(const PrimeContext& C, const MatK& x, const MatK& y);
// Minimum valuation over entries; cap() when the matrix vanishes at precision.
int mat_min_valuation(const PrimeContext& C, const MatK& x);
bool mat_is_integral(const MatK& x);

VecK vec_zero(const PrimeContext& C, int n);
VecK vec_add(const PrimeContext& C, const VecK& x, const VecK& y);
VecK vec_sub(const PrimeContext& C, const VecK& x, const VecK& y);
VecK vec_scale(const PrimeContext& C, const VecK& x, const RationalOK& c);
VecK mat_apply(const PrimeContext& C, const MatK& m, const VecK& x);
bool vec_is_zero(const PrimeContext& C, const VecK& x);

// Monic characteristic polynomial det(xI - A), coefficients ascending
// (result[i] = coefficient of x^i, result[n] = 1). Division-free, so no
// precision is lost to pivoting.
std::vector<RationalOK> charpoly(const PrimeContext& C, const MatK& A);

// Exact rational number, used for Newton slopes.
struct Frac {
  long long num = 0;
  long long den = 1;  // > 0, reduced
  bool operator==(const Frac&) const = default;
};
Frac frac(long long num, long long den);
bool frac_lt(const Frac& x, const Frac& y);
// strict x > y
bool frac_gt(const Frac& x, const Frac& y);
std::string frac_str(const Frac& x);

struct Slope {
  bool cap = false;  // root indistinguishable from 0 at precision
  Frac value;        // valuation of the root, v(pi) = 1
};

// Newton-polygon slopes (root valuations with multiplicity) of a monic
// polynomial, ascending; cap-slopes (roots that vanish at precision) first.
// Throws CoefficientAtPrecisionZero when a vertex needed by the lower hull
// is masked at precision N.
std::vector<Slope> newton_slopes(const PrimeContext& C,
                                 const std::vector<RationalOK>& poly);

}  // namespace htck
