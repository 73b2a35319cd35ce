#include "latcube/arith.hpp"

#include <numeric>
#include <string>

#include "latcube/errors.hpp"

namespace latcube {

namespace checked {

i64 add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("add overflow: " + std::to_string(a) + " + " + std::to_string(b));
  return r;
}

i64 sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("sub overflow: " + std::to_string(a) + " - " + std::to_string(b));
  return r;
}

i64 mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("mul overflow: " + std::to_string(a) + " * " + std::to_string(b));
  return r;
}

i64 neg(i64 a) { return sub(0, a); }

i64 square(i64 a) { return mul(a, a); }

i64 pow(i64 base, int exponent) {
  i64 r = 1;
  for (int i = 0; i < exponent; ++i) r = mul(r, base);
  return r;
}

}  // namespace checked

i64 isqrt(i64 n) {
  if (n < 0) throw PreconditionError("isqrt of negative value");
  auto r = static_cast<i64>(__builtin_sqrtl(static_cast<long double>(n)));
  while (r > 0 && (r > n / r)) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

std::optional<i64> exact_sqrt(i64 n) {
  if (n < 0) return std::nullopt;
  const i64 r = isqrt(n);
  if (r * r != n) return std::nullopt;
  return r;
}

std::optional<i64> exact_div(i64 num, i64 den) {
  if (den == 0) throw PreconditionError("division by zero");
  if (num % den != 0) return std::nullopt;
  return num / den;
}

i64 require_div(i64 num, i64 den, const char* what) {
  auto q = exact_div(num, den);
  if (!q) {
    throw NonIntegralError(std::string(what) + ": " + std::to_string(num) + " / " + std::to_string(den));
  }
  return *q;
}

i64 gcd(i64 a, i64 b) { return std::gcd(a, b); }

i64 gcd(i64 a, i64 b, i64 c) { return std::gcd(std::gcd(a, b), c); }

i64 mod(i64 a, i64 m) {
  if (m == 0) throw PreconditionError("mod by zero");
  if (m < 0) m = -m;
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

std::vector<PrimePower> factorize(i64 n) {
  if (n < 1) throw PreconditionError("factorize requires n >= 1");
  std::vector<PrimePower> out;
  for (i64 p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (i64 p = 3; p <= n / p; p += 2) {
    if (n % p == 0) return false;
  }
  return true;
}

}  // namespace latcube
