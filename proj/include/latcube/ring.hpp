#pragma once

// Arithmetic in Z[i*sqrt(3)]: elements u + v*i*sqrt(3) with integer u, v.

#include <optional>
#include <vector>

#include "latcube/arith.hpp"

namespace latcube {

struct RingElem {
  i64 re = 0;  // rational part u
  i64 im = 0;  // coefficient v of i*sqrt(3)

  friend bool operator==(const RingElem&, const RingElem&) = default;
};

/// re^2 + 3 im^2.
i64 norm(const RingElem& z);
RingElem conj(const RingElem& z);
RingElem operator*(const RingElem& z, const RingElem& w);
RingElem operator*(i64 t, const RingElem& z);
RingElem pow(RingElem z, int exponent);

/// z / w when the quotient lies in Z[i*sqrt(3)].
std::optional<RingElem> exact_quotient(const RingElem& z, const RingElem& w);

struct RingFactor {
  RingElem prime;
  int multiplicity = 0;
  friend bool operator==(const RingFactor&, const RingFactor&) = default;
};

struct RingFactorization {
  i64 integer_content = 1;          // gcd(u, v), positive
  int unit = 1;                     // +-1, so that reassemble() is exact
  std::vector<RingFactor> factors;  // one entry per rational prime of the reduced norm

  /// unit * integer_content * prod(prime^multiplicity).
  RingElem reassemble() const;
};

struct NormRep {
  i64 x = 0;
  i64 y = 0;
  friend bool operator==(const NormRep&, const NormRep&) = default;
};

/// The representation p = x^2 + 3y^2 with x, y > 0 of a prime p = 1 (mod 3).
/// For p = 2 returns the sentinel (1, 1), standing for the factor 1 + i*sqrt(3)
/// of 4. Throws NotRepresentable for p = 3 and primes p = 2 (mod 3).
NormRep unique_decomposition(i64 p);

/// Splits off the rational content of u + v*i*sqrt(3) and factors the primitive
/// remainder into prime elements. For each split prime the conjugate that
/// divides exactly is chosen.
RingFactorization factor_ring(i64 u, i64 v);

struct RsPair {
  i64 r = 0;
  i64 s = 0;
  friend bool operator==(const RsPair&, const RsPair&) = default;
};

/// The gcd s + i*sqrt(3)*r of A + i*sqrt(3)*B and 2q, for A = a*c and B = -b*d
/// (pass B already negated). The result satisfies s^2 + 3r^2 = 2q and is the
/// sign orientation for which the triangle basis vectors come out integral.
RsPair find_rs(i64 A, i64 B, i64 q);

/// True when (r, s) makes the A/B-only entries of the triangle basis integral:
/// q | (rA - sB), 2q | (A(r+s) - B(s-3r)) and r = s (mod 2).
bool rs_orientation_ok(i64 A, i64 B, i64 q, const RsPair& rs);

}  // namespace latcube
