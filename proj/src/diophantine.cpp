#include "latcube/diophantine.hpp"

#include <string>

#include "latcube/errors.hpp"

namespace latcube {

namespace {

void require_odd_positive(i64 d, const char* who) {
  if (d < 1 || d % 2 == 0) throw PreconditionError(std::string(who) + ": d must be odd and positive, got " + std::to_string(d));
}

}  // namespace

int legendre_minus3(i64 p) {
  if (p % 2 == 0 || !is_prime(p)) throw PreconditionError("legendre_minus3: " + std::to_string(p) + " is not an odd prime");
  if (p == 3) return 0;
  const i64 r = p % 12;
  return (r == 1 || r == 7) ? 1 : -1;
}

i64 lambda_d(i64 d) {
  require_odd_positive(d, "lambda_d");
  // 8d * prod (1 - chi(p)/p) = 8 * prod p^(e-1) (p - chi(p))
  i64 out = 8;
  for (const auto& [p, e] : factorize(d)) {
    out = checked::mul(out, checked::pow(p, e - 1));
    out = checked::mul(out, p - legendre_minus3(p));
  }
  return out;
}

i64 gamma2(i64 d) {
  require_odd_positive(d, "gamma2");
  const auto factors = factorize(d);
  for (const auto& f : factors) {
    if (f.prime % 8 == 5 || f.prime % 8 == 7) return 0;
  }
  if (d == 3) return 1;
  int k = 0;
  for (const auto& f : factors) {
    if (f.prime != 3 && (f.prime % 8 == 1 || f.prime % 8 == 3)) ++k;
  }
  return i64{1} << k;
}

i64 pi_epsilon(i64 d) {
  require_odd_positive(d, "pi_epsilon");
  if (d == 1) return 1;
  const i64 numerator = checked::add(lambda_d(d), checked::mul(24, gamma2(d)));
  if (numerator % 48 != 0) {
    throw InconsistencyError("pi_epsilon: 48 does not divide " + std::to_string(numerator) + " for d=" + std::to_string(d));
  }
  return numerator / 48;
}

std::vector<PlaneSolution> solve_three_squares(i64 d) {
  require_odd_positive(d, "solve_three_squares");
  const i64 total = checked::mul(3, checked::square(d));
  std::vector<PlaneSolution> out;
  // a = 0 would force 3 | b and 3 | c and hence 3 | gcd; a > d gives a^2 > d^2 >= (b^2 + c^2)/2.
  for (i64 a = 1; a <= d; ++a) {
    const i64 rest = total - a * a;
    for (i64 b = a; 2 * b * b <= rest; ++b) {
      const auto c = exact_sqrt(rest - b * b);
      if (!c || gcd(a, b, *c) != 1) continue;
      out.push_back({a, b, *c, d});
    }
  }
  return out;
}

std::vector<NormFormSolution> solve_norm_form(i64 k) {
  if (k < 1) throw PreconditionError("solve_norm_form: k must be positive");
  const i64 target = checked::square(k);
  std::vector<NormFormSolution> out;
  for (i64 m = 0; m <= k; ++m) {
    for (i64 n = 2 * m + 1; n <= 2 * k; ++n) {
      if (m * m - m * n + n * n == target && gcd(m, n) == 1) out.push_back({m, n});
    }
  }
  return out;
}

std::vector<i64> k_values(i64 N) {
  if (N < 1) throw PreconditionError("k_values: N must be positive");
  std::vector<i64> out{1};
  for (i64 k = 3; k <= N; k += 2) {
    bool ok = true;
    for (const auto& f : factorize(k)) ok = ok && (f.prime % 3 == 1);
    if (ok) out.push_back(k);
  }
  return out;
}

}  // namespace latcube
