#pragma once

// Dictionary between endomorphisms (M, phi) and descent data over the
// one-variable divided-power ring: eps = (1 + a X_1)^{phi/a}, together with
// cocycle/recurrence verification, the two-variable group law, and series
// evaluation at caller-supplied divided powers.

#include <optional>

#include "htck/pd.hpp"

namespace htck {

struct SenEndo {
  PrimeContext ctx;
  int rank = 0;
  MatK A;               // matrix of phi in a chosen basis
  bool integral = true; // all entries have zero denominator exponent
};

SenEndo make_endo(const PrimeContext& ctx, const MatK& A);

struct Stratification {
  PrimeContext ctx;
  int rank = 0;
  int D = 0;
  std::vector<MatK> coeffs;  // A_0 = I, A_1, ..., A_D
};

struct CocycleReport {
  bool cocycle_ok = false;
  bool sigma_ok = false;
  int max_defect_valuation = 0;  // worst (smallest) defect valuation; cap when clean
  int degree_checked = 0;
  std::optional<PdIndex> first_failing_index;
};

// A_n = prod_{i=0}^{n-1}(A - i a), A_0 = I.
Stratification strat_from_endo(const SenEndo& phi, int D);

// Extracts A_1; requires D >= 1.
SenEndo endo_from_strat(const Stratification& eps);

// Expands p_2*(eps) . p_0*(eps) and p_1*(eps) in the arity-2 ring and
// compares all coefficients mod p^N up to degree D.
CocycleReport verify_cocycle(const Stratification& eps);

// True iff A_n = prod_{i=0}^{n-1}(A_1 - i a) mod p^N for all n <= D.
bool verify_recurrence(const Stratification& eps);

// Checks g_S g_T = g_{S+T+aST} in two variables up to total degree D.
bool compose_group_law(const SenEndo& phi, int D);

struct EvalResult {
  MatK value;
  bool stabilized = false;  // partial sums constant mod p^N before n = D
  int stabilized_at = 0;    // first n после which increments vanish
};

// Sum_n A_n t^[n] for caller-supplied divided powers t^[1..D] of the
// evaluation point. Throws NonConvergent when the trailing ceil(D/4)
// increments are all nonzero at precision.
EvalResult evaluate_strat(const Stratification& eps,
                          const std::vector<RationalOK>& t_pd);

// (M, phi) -> (M, pi phi) into the log-variant sibling context.
SenEndo log_transfer(const SenEndo& phi);

}  // namespace htck
