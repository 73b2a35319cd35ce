#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "latcube/diophantine.hpp"
#include "latcube/errors.hpp"

using namespace latcube;
using latcube::testing::scan_three_squares;

namespace {

bool all_primes_one_mod_three(i64 k) {
  for (i64 p = 2; p <= k; ++p) {
    if (k % p != 0) continue;
    bool prime = true;
    for (i64 q = 2; q * q <= p; ++q) prime = prime && (p % q != 0);
    if (prime && p % 3 != 1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("legendre_minus3") {
  CHECK(legendre_minus3(3) == 0);
  CHECK(legendre_minus3(7) == 1);
  CHECK(legendre_minus3(5) == -1);
  CHECK(legendre_minus3(13) == 1);
  CHECK(legendre_minus3(11) == -1);
  CHECK_THROWS_AS(legendre_minus3(2), PreconditionError);
  CHECK_THROWS_AS(legendre_minus3(9), PreconditionError);
}

TEST_CASE("legendre_minus3 matches quadratic residuosity of -3") {
  for (i64 p = 5; p < 2000; p += 2) {
    if (!is_prime(p)) continue;
    bool residue = false;
    for (i64 x = 1; x < p && !residue; ++x) residue = (x * x) % p == p - 3;
    REQUIRE(legendre_minus3(p) == (residue ? 1 : -1));
  }
}

TEST_CASE("lambda_d") {
  CHECK(lambda_d(1) == 8);
  CHECK(lambda_d(5) == 48);
  CHECK(lambda_d(2011) == 16080);
  CHECK(lambda_d(9) == 72);
  CHECK_THROWS_AS(lambda_d(4), PreconditionError);
}

TEST_CASE("gamma2") {
  CHECK(gamma2(3) == 1);
  CHECK(gamma2(5) == 0);
  CHECK(gamma2(7) == 0);
  CHECK(gamma2(11) == 2);
  CHECK(gamma2(33) == 2);
  CHECK(gamma2(2011) == 2);
}

TEST_CASE("gamma2 counts solutions with exactly two equal entries") {
  for (i64 d = 3; d <= 151; d += 2) {
    i64 pairs = 0;
    for (const auto& s : scan_three_squares(d)) {
      const bool two = (s[0] == s[1]) != (s[1] == s[2]);
      if (two) ++pairs;
    }
    INFO("d=" << d);
    REQUIRE(gamma2(d) == pairs);
  }
}

TEST_CASE("pi_epsilon examples") {
  CHECK(pi_epsilon(1) == 1);
  CHECK(pi_epsilon(5) == 1);
  CHECK(pi_epsilon(3) == 1);
  CHECK(pi_epsilon(2011) == 336);
}

TEST_CASE("pi_epsilon equals the enumerated count for odd d <= 99") {
  for (i64 d = 1; d <= 99; d += 2) {
    INFO("d=" << d);
    const auto expected = static_cast<i64>(scan_three_squares(d).size());
    REQUIRE(pi_epsilon(d) == expected);
    REQUIRE(static_cast<i64>(solve_three_squares(d).size()) == expected);
  }
}

TEST_CASE("d = 2011 has 336 solutions, two of them with a repeated entry") {
  const auto sols = solve_three_squares(2011);
  CHECK(sols.size() == 336);
  std::vector<PlaneSolution> repeated;
  for (const auto& s : sols)
    if (s.a == s.b || s.b == s.c) repeated.push_back(s);
  CHECK(repeated == std::vector<PlaneSolution>{{139, 2461, 2461, 2011}, {913, 913, 3235, 2011}});
}

TEST_CASE("solve_three_squares examples and invariants") {
  CHECK(solve_three_squares(1) == std::vector<PlaneSolution>{{1, 1, 1, 1}});
  CHECK(solve_three_squares(3) == std::vector<PlaneSolution>{{1, 1, 5, 3}});
  CHECK(solve_three_squares(5) == std::vector<PlaneSolution>{{1, 5, 7, 5}});
  CHECK_THROWS_AS(solve_three_squares(2), PreconditionError);
  for (i64 d = 1; d <= 151; d += 2) {
    const auto sols = solve_three_squares(d);
    REQUIRE(std::is_sorted(sols.begin(), sols.end()));
    REQUIRE(std::adjacent_find(sols.begin(), sols.end()) == sols.end());
    std::vector<std::array<i64, 3>> flat;
    for (const auto& s : sols) {
      REQUIRE(s.d == d);
      REQUIRE(s.a * s.a + s.b * s.b + s.c * s.c == 3 * d * d);
      REQUIRE(0 < s.a);
      REQUIRE(s.a <= s.b);
      REQUIRE(s.b <= s.c);
      REQUIRE(gcd(s.a, s.b, s.c) == 1);
      flat.push_back({s.a, s.b, s.c});
    }
    REQUIRE(flat == scan_three_squares(d));
  }
}

TEST_CASE("solve_norm_form examples and invariants") {
  CHECK(solve_norm_form(1) == std::vector<NormFormSolution>{{0, 1}});
  CHECK(solve_norm_form(7) == std::vector<NormFormSolution>{{3, 8}});
  CHECK(solve_norm_form(5).empty());
  CHECK_THROWS_AS(solve_norm_form(0), PreconditionError);
  for (i64 k = 1; k <= 120; ++k) {
    for (const auto& s : solve_norm_form(k)) {
      REQUIRE(s.m * s.m - s.m * s.n + s.n * s.n == k * k);
      REQUIRE(gcd(s.m, s.n) == 1);
      REQUIRE(s.m >= 0);
      REQUIRE(2 * s.m < s.n);
    }
  }
}

TEST_CASE("k_values examples") {
  CHECK(k_values(1) == std::vector<i64>{1});
  CHECK(k_values(10) == std::vector<i64>{1, 7});
  CHECK(k_values(50) == std::vector<i64>{1, 7, 13, 19, 31, 37, 43, 49});
  CHECK_THROWS_AS(k_values(0), PreconditionError);
}

TEST_CASE("k_values is exactly the odd k with primitive norm-form solutions, N = 100") {
  const auto ks = k_values(100);
  for (i64 k = 1; k <= 100; k += 2) {
    const bool listed = std::find(ks.begin(), ks.end(), k) != ks.end();
    INFO("k=" << k);
    REQUIRE(listed == all_primes_one_mod_three(k));
    REQUIRE(listed == !solve_norm_form(k).empty());
  }
}
