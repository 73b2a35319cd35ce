#include "latcube/ring.hpp"

#include <array>
#include <string>

#include "latcube/errors.hpp"

namespace latcube {

i64 norm(const RingElem& z) { return checked::add(checked::square(z.re), checked::mul(3, checked::square(z.im))); }

RingElem conj(const RingElem& z) { return {z.re, checked::neg(z.im)}; }

RingElem operator*(const RingElem& z, const RingElem& w) {
  // (u + v t)(x + y t) with t^2 = -3
  const i64 re = checked::sub(checked::mul(z.re, w.re), checked::mul(3, checked::mul(z.im, w.im)));
  const i64 im = checked::add(checked::mul(z.re, w.im), checked::mul(z.im, w.re));
  return {re, im};
}

RingElem operator*(i64 t, const RingElem& z) { return {checked::mul(t, z.re), checked::mul(t, z.im)}; }

RingElem pow(RingElem z, int exponent) {
  RingElem r{1, 0};
  for (int i = 0; i < exponent; ++i) r = r * z;
  return r;
}

std::optional<RingElem> exact_quotient(const RingElem& z, const RingElem& w) {
  const i64 n = norm(w);
  if (n == 0) throw PreconditionError("exact_quotient by zero");
  const RingElem num = z * conj(w);
  auto re = exact_div(num.re, n);
  auto im = exact_div(num.im, n);
  if (!re || !im) return std::nullopt;
  return RingElem{*re, *im};
}

RingElem RingFactorization::reassemble() const {
  RingElem out{checked::mul(unit, integer_content), 0};
  for (const auto& f : factors) out = out * pow(f.prime, f.multiplicity);
  return out;
}

NormRep unique_decomposition(i64 p) {
  if (p == 2) return {1, 1};
  if (!is_prime(p)) throw PreconditionError("unique_decomposition: " + std::to_string(p) + " is not prime");
  if (p % 3 != 1) throw NotRepresentable(std::to_string(p) + " is not of the form x^2 + 3y^2 with x, y > 0");
  for (i64 y = 1; 3 * y * y < p; ++y) {
    if (auto x = exact_sqrt(p - 3 * y * y)) return {*x, y};
  }
  throw InconsistencyError("no x^2 + 3y^2 representation found for prime " + std::to_string(p));
}

namespace {

// Prime element of Z[i*sqrt(3)] lying over the rational prime p that divides z.
RingElem dividing_prime_over(i64 p, const RingElem& z) {
  RingElem pi;
  if (p == 3) {
    pi = {0, 1};
  } else if (p % 3 == 2 && p != 2) {
    throw InconsistencyError("inert prime " + std::to_string(p) + " divides the norm of a primitive element");
  } else {
    const NormRep rep = unique_decomposition(p);
    pi = {rep.x, rep.y};
  }
  if (exact_quotient(z, pi)) return pi;
  if (exact_quotient(z, conj(pi))) return conj(pi);
  throw InconsistencyError("neither conjugate over " + std::to_string(p) + " divides the element");
}

}  // namespace

RingFactorization factor_ring(i64 u, i64 v) {
  if (u == 0 && v == 0) throw PreconditionError("factor_ring of zero");
  RingFactorization out;
  out.integer_content = gcd(u, v);
  RingElem reduced{u / out.integer_content, v / out.integer_content};
  const RingElem primitive = reduced;

  for (const auto& [p, e] : factorize(norm(reduced))) {
    // 2 only shows up as 2^2 = N(1 +- i*sqrt(3)) once the content is removed.
    const int multiplicity = (p == 2) ? 1 : e;
    if (p == 2 && e != 2) throw InconsistencyError("unexpected power of 2 in a primitive norm");
    const RingElem pi = dividing_prime_over(p, primitive);
    for (int i = 0; i < multiplicity; ++i) {
      auto q = exact_quotient(reduced, pi);
      if (!q) throw InconsistencyError("prime power does not divide the element");
      reduced = *q;
    }
    out.factors.push_back({pi, multiplicity});
  }
  // What is left is a unit, i.e. +-1.
  if (reduced == RingElem{1, 0}) {
    out.unit = 1;
  } else if (reduced == RingElem{-1, 0}) {
    out.unit = -1;
  } else {
    throw InconsistencyError("factorization left a non-unit cofactor");
  }
  return out;
}

bool rs_orientation_ok(i64 A, i64 B, i64 q, const RsPair& rs) {
  using namespace checked;
  const i64 two_q = mul(2, q);
  const i64 zeta1 = sub(mul(rs.r, A), mul(rs.s, B));
  const i64 eta1 = sub(mul(A, add(rs.r, rs.s)), mul(B, sub(rs.s, mul(3, rs.r))));
  return mod(zeta1, q) == 0 && mod(eta1, two_q) == 0 && mod(sub(rs.r, rs.s), 2) == 0;
}

RsPair find_rs(i64 A, i64 B, i64 q) {
  using namespace checked;
  if (q <= 0) throw PreconditionError("find_rs: q must be positive");
  const i64 two_q = mul(2, q);
  const i64 n = add(square(A), mul(3, square(B)));
  if (mod(n, two_q) != 0) throw PreconditionError("find_rs: 2q does not divide A^2 + 3B^2");

  const RingFactorization f = factor_ring(A, B);
  const i64 common = gcd(f.integer_content, two_q);
  const i64 rest = two_q / square(common);

  RingElem g{common, 0};
  for (const auto& [p, e] : factorize(rest)) {
    const int wanted = (p == 2) ? 1 : e;
    for (const auto& factor : f.factors) {
      const RingElem& pi = factor.prime;
      if (norm(pi) == (p == 2 ? 4 : p)) g = g * pow(pi, std::min(factor.multiplicity, wanted));
    }
  }

  RsPair raw{g.im, g.re};
  if (add(square(raw.s), mul(3, square(raw.r))) != two_q) {
    std::swap(raw.r, raw.s);
    if (add(square(raw.s), mul(3, square(raw.r))) != two_q) {
      throw InconsistencyError("find_rs: gcd norm is not 2q for A=" + std::to_string(A) + " B=" + std::to_string(B) +
                               " q=" + std::to_string(q));
    }
  }

  // (r, s) and (-r, -s) always pass together. When |r| = |s| the flipped pair is a
  // unit multiple of the gcd and passes too; otherwise exactly one class may pass.
  const std::array<RsPair, 4> variants{raw, RsPair{-raw.r, -raw.s}, RsPair{raw.r, -raw.s}, RsPair{-raw.r, raw.s}};
  const bool symmetric = raw.r == raw.s || raw.r == -raw.s;
  std::optional<RsPair> chosen;
  for (const auto& v : variants) {
    if (!rs_orientation_ok(A, B, q, v)) continue;
    if (!chosen) {
      chosen = v;
    } else if (!symmetric && !(v == RsPair{-chosen->r, -chosen->s})) {
      throw InconsistencyError("find_rs: more than one sign class passes the integrality test");
    }
  }
  if (!chosen) throw InconsistencyError("find_rs: no sign variant passes the integrality test");
  return *chosen;
}

}  // namespace latcube
