#include "latcube/geometry.hpp"

#include <algorithm>
#include <string>

#include "latcube/errors.hpp"

namespace latcube {

Vec3 operator+(const Vec3& u, const Vec3& v) {
  return {checked::add(u.x, v.x), checked::add(u.y, v.y), checked::add(u.z, v.z)};
}

Vec3 operator-(const Vec3& u, const Vec3& v) {
  return {checked::sub(u.x, v.x), checked::sub(u.y, v.y), checked::sub(u.z, v.z)};
}

Vec3 operator-(const Vec3& u) { return {checked::neg(u.x), checked::neg(u.y), checked::neg(u.z)}; }

Vec3 operator*(i64 t, const Vec3& v) { return {checked::mul(t, v.x), checked::mul(t, v.y), checked::mul(t, v.z)}; }

i64 dot(const Vec3& u, const Vec3& v) {
  return checked::add(checked::add(checked::mul(u.x, v.x), checked::mul(u.y, v.y)), checked::mul(u.z, v.z));
}

Vec3 cross(const Vec3& u, const Vec3& v) {
  using checked::mul;
  using checked::sub;
  return {sub(mul(u.y, v.z), mul(u.z, v.y)), sub(mul(u.z, v.x), mul(u.x, v.z)), sub(mul(u.x, v.y), mul(u.y, v.x))};
}

i64 norm2(const Vec3& v) { return dot(v, v); }

// ---------------------------------------------------------------------------

Cube::Cube(const Vertices& v) : v_(v) { std::sort(v_.begin(), v_.end()); }

Cube Cube::from_trusted(const Vertices& vertices) { return Cube(vertices); }

Cube Cube::make(const Vertices& vertices) {
  const auto s2 = cube_side_squared(vertices);
  if (!s2) throw PreconditionError("points do not form a cube");
  if (!exact_sqrt(*s2)) throw PreconditionError("cube side is not an integer");
  return Cube(vertices);
}

std::size_t CubeHash::operator()(const Cube& c) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& p : c.vertices()) {
    for (int a = 0; a < 3; ++a) {
      h ^= static_cast<std::size_t>(p[a]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
  }
  return h;
}

std::optional<i64> cube_side_squared(std::span<const Vec3, 8> points) {
  std::array<i64, 28> d2{};
  std::size_t n = 0;
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = i + 1; j < 8; ++j) d2[n++] = norm2(points[i] - points[j]);
  }
  std::sort(d2.begin(), d2.end());
  const i64 s2 = d2[0];
  if (s2 == 0) return std::nullopt;
  for (std::size_t i = 0; i < 28; ++i) {
    const i64 expected = i < 12 ? s2 : (i < 24 ? 2 * s2 : 3 * s2);
    if (d2[i] != expected) return std::nullopt;
  }
  return s2;
}

i64 side_length(const Cube& c) {
  const auto s2 = cube_side_squared(c.vertices());
  if (!s2) throw InconsistencyError("cube lost its distance signature");
  const auto s = exact_sqrt(*s2);
  if (!s) throw InconsistencyError("cube side is not an integer");
  return *s;
}

// ---------------------------------------------------------------------------

TriangleBasis zeta_eta(const PlaneSolution& sol, const RsPair& rs) {
  using namespace checked;
  const auto [a, b, c, d] = sol;
  const auto [r, s] = rs;
  const i64 q = add(square(a), square(b));
  const i64 two_q = mul(2, q);
  const i64 ac = mul(a, c);
  const i64 bc = mul(b, c);
  const i64 da = mul(d, a);
  const i64 db = mul(d, b);
  const i64 s_3r = sub(s, mul(3, r));
  const i64 r_s = add(r, s);

  TriangleBasis out;
  out.zeta.x = -require_div(add(mul(r, ac), mul(db, s)), q, "zeta1");
  out.zeta.y = require_div(sub(mul(da, s), mul(bc, r)), q, "zeta2");
  out.zeta.z = r;
  out.eta.x = -require_div(add(mul(db, s_3r), mul(ac, r_s)), two_q, "eta1");
  out.eta.y = require_div(sub(mul(da, s_3r), mul(bc, r_s)), two_q, "eta2");
  out.eta.z = require_div(r_s, 2, "eta3");
  return out;
}

Triangle triangle_vertices(const TriangleBasis& basis, i64 m, i64 n) {
  const Vec3 p = m * basis.zeta - n * basis.eta;
  const Vec3 q = n * basis.zeta - checked::sub(n, m) * basis.eta;
  return {Vec3{}, p, q};
}

std::optional<Vec3> fourth_vertex(const Triangle& tri, const PlaneSolution& sol, i64 k, int sign) {
  if (sign != 1 && sign != -1) throw PreconditionError("fourth_vertex: sign must be +1 or -1");
  if (k < 1) throw PreconditionError("fourth_vertex: k must be positive");
  const i64 edge2 = checked::mul(2, checked::mul(checked::square(sol.d), checked::square(k)));
  if (norm2(tri.p - tri.o) != edge2 || norm2(tri.q - tri.o) != edge2 || norm2(tri.q - tri.p) != edge2) {
    throw PreconditionError("fourth_vertex: triangle edge is not d*k*sqrt(2)");
  }
  const Vec3 normal{sol.a, sol.b, sol.c};
  const Vec3 sum = (tri.o + tri.p + tri.q) + checked::mul(2 * sign, k) * normal;
  const auto x = exact_div(sum.x, 3);
  const auto y = exact_div(sum.y, 3);
  const auto z = exact_div(sum.z, 3);
  if (!x || !y || !z) return std::nullopt;
  return Vec3{*x, *y, *z};
}

Cube complete_cube(const Tetrahedron& tetra) {
  const auto origin = std::find(tetra.begin(), tetra.end(), Vec3{});
  if (origin == tetra.end()) throw PreconditionError("complete_cube: tetrahedron must contain the origin");
  std::array<Vec3, 3> uvw{};
  std::size_t n = 0;
  for (auto it = tetra.begin(); it != tetra.end(); ++it) {
    if (it != origin) uvw[n++] = *it;
  }
  const auto [u, v, w] = uvw;
  auto half = [](const Vec3& p) {
    return Vec3{require_div(p.x, 2, "cube vertex"), require_div(p.y, 2, "cube vertex"), require_div(p.z, 2, "cube vertex")};
  };
  const Cube::Vertices vertices{Vec3{}, u, v, w, half(u + v + w), half(u + v - w), half(u - v + w), half(v + w - u)};
  const auto s2 = cube_side_squared(vertices);
  if (!s2) throw InconsistencyError("complete_cube: input is not a regular tetrahedron");
  return Cube::from_trusted(vertices);
}

Cube build_cube(const PlaneSolution& sol, const NormFormSolution& mn) {
  const auto k = exact_sqrt(mn.m * mn.m - mn.m * mn.n + mn.n * mn.n);
  if (!k) throw PreconditionError("build_cube: m^2 - mn + n^2 is not a square");
  const i64 q = checked::add(checked::square(sol.a), checked::square(sol.b));
  const RsPair rs = find_rs(checked::mul(sol.a, sol.c), checked::neg(checked::mul(sol.b, sol.d)), q);
  const Triangle tri = triangle_vertices(zeta_eta(sol, rs), mn.m, mn.n);
  auto apex = fourth_vertex(tri, sol, *k, +1);
  if (!apex) apex = fourth_vertex(tri, sol, *k, -1);
  if (!apex) {
    throw NonIntegralError("no lattice apex for (a,b,c,d)=(" + std::to_string(sol.a) + "," + std::to_string(sol.b) + "," +
                           std::to_string(sol.c) + "," + std::to_string(sol.d) + ")");
  }
  return complete_cube({tri.o, tri.p, tri.q, *apex});
}

// ---------------------------------------------------------------------------

Cube translate_to_octant(const Cube& c) {
  Vec3 lo = c[0];
  for (const auto& p : c.vertices()) {
    for (int a = 0; a < 3; ++a) lo[a] = std::min(lo[a], p[a]);
  }
  Cube::Vertices out = c.vertices();
  for (auto& p : out) p = p - lo;
  return Cube::from_trusted(out);
}

std::array<i64, 3> extents(const Cube& c) {
  std::array<i64, 3> lo{c[0].x, c[0].y, c[0].z};
  std::array<i64, 3> hi = lo;
  for (const auto& p : c.vertices()) {
    for (int a = 0; a < 3; ++a) {
      lo[a] = std::min(lo[a], p[a]);
      hi[a] = std::max(hi[a], p[a]);
    }
  }
  return {hi[0] - lo[0], hi[1] - lo[1], hi[2] - lo[2]};
}

i64 bounding_dim(const Cube& c) {
  i64 m = 0;
  for (const auto& p : c.vertices()) m = std::max({m, p.x, p.y, p.z});
  return m;
}

std::array<std::pair<Vec3, Vec3>, 4> main_diagonals(const Cube& c) {
  const i64 s2 = checked::square(side_length(c));
  std::array<std::pair<Vec3, Vec3>, 4> out{};
  std::size_t n = 0;
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = i + 1; j < 8; ++j) {
      if (norm2(c[i] - c[j]) == 3 * s2) {
        if (n == 4) throw InconsistencyError("more than four main diagonals");
        out[n++] = {c[i], c[j]};
      }
    }
  }
  if (n != 4) throw InconsistencyError("fewer than four main diagonals");
  return out;
}

std::set<i64> four_k_values(const Cube& c) {
  const i64 side = side_length(c);
  std::set<i64> out;
  for (const auto& [p, q] : main_diagonals(c)) {
    const Vec3 diag = q - p;
    const i64 l = gcd(diag.x, diag.y, diag.z);
    const auto ratio = exact_div(norm2(diag), 3 * l * l);
    const auto n = ratio ? exact_sqrt(*ratio) : std::nullopt;
    if (!n) throw InconsistencyError("diagonal direction has no integral norm witness");
    out.insert(require_div(side, *n, "k-value"));
  }
  return out;
}

Cube dilate(const Cube& c, i64 t) {
  if (t < 1) throw PreconditionError("dilate: factor must be positive");
  Cube::Vertices out = c.vertices();
  for (auto& p : out) p = t * p;
  return Cube::from_trusted(out);
}

std::array<Vec3, 3> corner_edges(const Cube& c) {
  const i64 s2 = checked::square(side_length(c));
  std::array<Vec3, 3> out{};
  std::size_t n = 0;
  for (std::size_t i = 1; i < 8; ++i) {
    const Vec3 e = c[i] - c[0];
    if (norm2(e) == s2) out[n++] = e;
  }
  if (n != 3) throw InconsistencyError("corner does not have three edges");
  return out;
}

bool is_irreducible(const Cube& c) {
  i64 g = 0;
  for (const auto& e : corner_edges(c)) g = gcd(g, gcd(e.x, e.y, e.z));
  return g == 1;
}

RationalMatrix RationalMatrix::transposed() const {
  RationalMatrix t;
  t.den = den;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) t.num[i][j] = num[j][i];
  }
  return t;
}

bool RationalMatrix::is_orthogonal() const {
  const i64 d2 = checked::square(den);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      i64 acc = 0;
      for (int k = 0; k < 3; ++k) acc = checked::add(acc, checked::mul(num[i][k], num[j][k]));
      if (acc != (i == j ? d2 : 0)) return false;
    }
  }
  return true;
}

RationalMatrix orthogonal_matrix(const Cube& c) {
  RationalMatrix m;
  m.den = side_length(c);
  const auto edges = corner_edges(c);
  for (int col = 0; col < 3; ++col) {
    for (int row = 0; row < 3; ++row) m.num[row][col] = edges[col][row];
  }
  return m;
}

}  // namespace latcube
