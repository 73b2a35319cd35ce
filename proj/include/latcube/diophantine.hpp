#pragma once

// a^2 + b^2 + c^2 = 3d^2, k^2 = m^2 - mn + n^2, and the closed-form count of
// the former.

#include <vector>

#include "latcube/arith.hpp"

namespace latcube {

/// Primitive solution of a^2 + b^2 + c^2 = 3d^2 with 0 < a <= b <= c, d odd.
struct PlaneSolution {
  i64 a = 0;
  i64 b = 0;
  i64 c = 0;
  i64 d = 0;

  friend auto operator<=>(const PlaneSolution&, const PlaneSolution&) = default;
};

/// Primitive solution of k^2 = m^2 - mn + n^2 with 0 <= 2m < n.
struct NormFormSolution {
  i64 m = 0;
  i64 n = 1;

  friend auto operator<=>(const NormFormSolution&, const NormFormSolution&) = default;
};

/// Legendre symbol (-3 / p) for an odd prime p.
int legendre_minus3(i64 p);

/// 8d * prod_{p | d} (1 - (-3/p)/p), evaluated exactly.
i64 lambda_d(i64 d);

/// 0 if some prime factor of d is 5 or 7 (mod 8); 1 if d = 3; otherwise 2^k
/// with k the number of distinct prime factors 1 or 3 (mod 8) other than 3.
i64 gamma2(i64 d);

/// Number of PlaneSolutions for d, from (lambda_d + 24 gamma2) / 48.
///
/// gamma2(d) counts the solutions with exactly two equal entries, which have 24
/// signed orderings instead of 48. d = 1 is special: its only solution (1,1,1)
/// has all entries equal and just 8 signed orderings, so the closed form does
/// not apply there and the function returns 1 directly.
i64 pi_epsilon(i64 d);

/// All PlaneSolutions for odd d, sorted lexicographically.
std::vector<PlaneSolution> solve_three_squares(i64 d);

/// All NormFormSolutions for k, sorted.
std::vector<NormFormSolution> solve_norm_form(i64 k);

/// Odd k <= N whose prime factors are all 1 (mod 3); 1 is always included.
std::vector<i64> k_values(i64 N);

}  // namespace latcube
