#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace latcube {

using i64 = std::int64_t;

// Overflow-checked 64-bit arithmetic. Every function throws OverflowError
// instead of wrapping.
namespace checked {
i64 add(i64 a, i64 b);
i64 sub(i64 a, i64 b);
i64 mul(i64 a, i64 b);
i64 neg(i64 a);
i64 square(i64 a);
i64 pow(i64 base, int exponent);
}  // namespace checked

/// Floor of the square root; n must be non-negative.
i64 isqrt(i64 n);

/// The integer root of n when n is a perfect square.
std::optional<i64> exact_sqrt(i64 n);

/// num / den when den divides num exactly.
std::optional<i64> exact_div(i64 num, i64 den);

/// Same as exact_div, but throws NonIntegralError carrying `what`.
i64 require_div(i64 num, i64 den, const char* what);

/// Non-negative gcd; gcd(0, 0) = 0.
i64 gcd(i64 a, i64 b);
i64 gcd(i64 a, i64 b, i64 c);

/// Euclidean residue in [0, |m|).
i64 mod(i64 a, i64 m);

struct PrimePower {
  i64 prime = 0;
  int exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Trial-division factorization of n >= 1, primes ascending. factorize(1) is empty.
std::vector<PrimePower> factorize(i64 n);

bool is_prime(i64 n);

}  // namespace latcube
