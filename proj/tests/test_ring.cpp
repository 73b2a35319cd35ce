#include <doctest.h>

#include "fixtures.hpp"
#include "latcube/diophantine.hpp"
#include "latcube/errors.hpp"
#include "latcube/ring.hpp"

using namespace latcube;
using latcube::testing::uniform;

TEST_CASE("norm is multiplicative and conj gives the norm") {
  for (int trial = 0; trial < 10000; ++trial) {
    const RingElem z{uniform(-10000, 10000), uniform(-10000, 10000)};
    const RingElem w{uniform(-10000, 10000), uniform(-10000, 10000)};
    REQUIRE(norm(z * w) == norm(z) * norm(w));
    REQUIRE(z * conj(z) == RingElem{norm(z), 0});
  }
}

TEST_CASE("ring basics") {
  CHECK(norm({1, 1}) == 4);
  CHECK(RingElem{1, 1} * RingElem{1, -1} == RingElem{4, 0});
  CHECK(pow(RingElem{2, 1}, 0) == RingElem{1, 0});
  CHECK(pow(RingElem{2, 1}, 3) == RingElem{2, 1} * RingElem{2, 1} * RingElem{2, 1});
  CHECK(exact_quotient({7, 0}, {2, 1}) == RingElem{2, -1});
  CHECK_FALSE(exact_quotient({1, 0}, {2, 1}).has_value());
  CHECK_THROWS_AS(exact_quotient({1, 0}, {0, 0}), PreconditionError);
}

TEST_CASE("unique_decomposition examples") {
  // exhaustive search for the expected pairs
  auto search = [](i64 p) {
    for (i64 x = 1; x * x <= p; ++x)
      for (i64 y = 1; 3 * y * y <= p; ++y)
        if (x * x + 3 * y * y == p) return NormRep{x, y};
    return NormRep{};
  };
  CHECK(unique_decomposition(7) == search(7));
  CHECK(unique_decomposition(7) == NormRep{2, 1});
  CHECK(unique_decomposition(13) == search(13));
  CHECK(unique_decomposition(13) == NormRep{1, 2});
  CHECK(unique_decomposition(2) == NormRep{1, 1});
}

TEST_CASE("unique_decomposition rejects unrepresentable input") {
  CHECK_THROWS_AS(unique_decomposition(3), NotRepresentable);
  CHECK_THROWS_AS(unique_decomposition(5), NotRepresentable);
  CHECK_THROWS_AS(unique_decomposition(11), NotRepresentable);
  CHECK_THROWS_AS(unique_decomposition(21), PreconditionError);
}

TEST_CASE("unique_decomposition covers every prime 1 mod 3 below 10^5") {
  constexpr int limit = 100000;
  std::vector<bool> composite(limit, false);
  int checked_primes = 0;
  for (int p = 2; p < limit; ++p) {
    if (composite[p]) continue;
    for (long q = static_cast<long>(p) * p; q < limit; q += p) composite[q] = true;
    if (p % 3 != 1) continue;
    const NormRep r = unique_decomposition(p);
    REQUIRE(r.x > 0);
    REQUIRE(r.y > 0);
    REQUIRE(r.x * r.x + 3 * r.y * r.y == p);
    ++checked_primes;
  }
  CHECK(checked_primes > 4000);
}

TEST_CASE("factor_ring examples") {
  const RingFactorization one = factor_ring(1, 1);
  CHECK(one.integer_content == 1);
  REQUIRE(one.factors.size() == 1);
  CHECK(norm(one.factors[0].prime) == 4);
  CHECK(one.factors[0].multiplicity == 1);
  CHECK(one.reassemble() == RingElem{1, 1});

  const RingFactorization two = factor_ring(2, 0);
  CHECK(two.integer_content == 2);
  CHECK(two.factors.empty());

  const RingFactorization big = factor_ring(139 * 23 * 107, -2011 * 23 * 107);
  CHECK(big.integer_content == 2461);
  REQUIRE(big.factors.size() == 2);
  CHECK(big.factors[0].prime == RingElem{1, -1});
  CHECK(big.factors[0].multiplicity == 1);
  CHECK(big.factors[1].prime == RingElem{1543, -468});
  CHECK(big.factors[1].multiplicity == 1);
  CHECK(big.reassemble() == RingElem{139 * 23 * 107, -2011 * 23 * 107});

  CHECK_THROWS_AS(factor_ring(0, 0), PreconditionError);
}

TEST_CASE("factor_ring round-trips every element of norm at most 10^6") {
  constexpr i64 limit = 1000000;
  i64 count = 0;
  for (i64 v = -577; v <= 577; ++v) {
    for (i64 u = -1000; u <= 1000; ++u) {
      if ((u == 0 && v == 0) || u * u + 3 * v * v > limit) continue;
      const RingFactorization f = factor_ring(u, v);
      i64 norms = f.integer_content * f.integer_content;
      for (const auto& fac : f.factors)
        for (int i = 0; i < fac.multiplicity; ++i) norms *= norm(fac.prime);
      REQUIRE(norms == u * u + 3 * v * v);
      REQUIRE(f.reassemble() == RingElem{u, v});
      ++count;
    }
  }
  CHECK(count > 1800000);
}

TEST_CASE("find_rs examples") {
  const i64 q = 139 * 139 + 2461 * 2461;
  CHECK(find_rs(139 * 2461, -2461 * 2011, q) == RsPair{-2011, 139});

  const RsPair unit = find_rs(1, -1, 2);
  CHECK(unit.s * unit.s + 3 * unit.r * unit.r == 4);
  CHECK(std::abs(unit.r) == 1);
  CHECK(std::abs(unit.s) == 1);

  CHECK_THROWS_AS(find_rs(1, 0, 2), PreconditionError);
}

TEST_CASE("find_rs satisfies the defining identities on every plane solution up to d = 99") {
  int cases = 0;
  for (i64 d = 1; d <= 99; d += 2) {
    for (const auto& sol : solve_three_squares(d)) {
      const i64 A = sol.a * sol.c;
      const i64 B = sol.b * sol.d;
      const i64 q = sol.a * sol.a + sol.b * sol.b;
      const RsPair rs = find_rs(A, -B, q);
      INFO("d=" << d << " a=" << sol.a << " b=" << sol.b << " c=" << sol.c);
      REQUIRE(rs.s * rs.s + 3 * rs.r * rs.r == 2 * q);
      REQUIRE(rs_orientation_ok(A, -B, q, rs));
      REQUIRE(mod(A * rs.s - 3 * B * rs.r, 2 * q) == 0);
      REQUIRE(mod(A * rs.r + B * rs.s, 2 * q) == 0);
      ++cases;
    }
  }
  CHECK(cases > 200);
}
