#pragma once

// Lattice triangles, tetrahedra and cubes in Z^3.

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <utility>

#include "latcube/arith.hpp"
#include "latcube/diophantine.hpp"
#include "latcube/ring.hpp"

namespace latcube {

struct Vec3 {
  i64 x = 0;
  i64 y = 0;
  i64 z = 0;

  constexpr i64 operator[](int axis) const { return axis == 0 ? x : (axis == 1 ? y : z); }
  constexpr i64& operator[](int axis) { return axis == 0 ? x : (axis == 1 ? y : z); }

  friend constexpr auto operator<=>(const Vec3&, const Vec3&) = default;
};

Vec3 operator+(const Vec3& u, const Vec3& v);
Vec3 operator-(const Vec3& u, const Vec3& v);
Vec3 operator-(const Vec3& u);
Vec3 operator*(i64 t, const Vec3& v);
i64 dot(const Vec3& u, const Vec3& v);
Vec3 cross(const Vec3& u, const Vec3& v);
i64 norm2(const Vec3& v);

/// Eight lattice points of a cube, kept sorted lexicographically.
class Cube {
 public:
  using Vertices = std::array<Vec3, 8>;

  /// Throws PreconditionError unless the points form a cube with integral side.
  static Cube make(const Vertices& vertices);
  /// For images of known cubes under lattice isometries; only sorts.
  static Cube from_trusted(const Vertices& vertices);

  const Vertices& vertices() const { return v_; }
  const Vec3& operator[](std::size_t i) const { return v_[i]; }

  friend auto operator<=>(const Cube&, const Cube&) = default;

 private:
  explicit Cube(const Vertices& v);
  Vertices v_{};
};

struct CubeHash {
  std::size_t operator()(const Cube& c) const noexcept;
};

/// Side^2 when the 28 squared distances are {s^2 x12, 2s^2 x12, 3s^2 x4}.
std::optional<i64> cube_side_squared(std::span<const Vec3, 8> points);

/// Integral side length of a cube.
i64 side_length(const Cube& c);

struct TriangleBasis {
  Vec3 zeta;
  Vec3 eta;
};

struct Triangle {
  Vec3 o;
  Vec3 p;
  Vec3 q;
};

using Tetrahedron = std::array<Vec3, 4>;

/// Generators of the triangular lattice in the plane a x + b y + c z = 0:
///   zeta = (-(rac + dbs)/q, (das - bcr)/q, r)
///   eta  = (-(db(s-3r) + ac(r+s))/(2q), (da(s-3r) - bc(r+s))/(2q), (r+s)/2)
/// with q = a^2 + b^2. Throws NonIntegralError if an entry is not integral.
TriangleBasis zeta_eta(const PlaneSolution& sol, const RsPair& rs);

/// O, P = m zeta - n eta, Q = n zeta - (n - m) eta.
Triangle triangle_vertices(const TriangleBasis& basis, i64 m, i64 n);

/// Apex (P + Q + sign * 2k (a, b, c)) / 3 over the triangle's centroid, if
/// integral. Requires |OP|^2 = 2 d^2 k^2.
std::optional<Vec3> fourth_vertex(const Triangle& tri, const PlaneSolution& sol, i64 k, int sign);

/// Circumscribed cube of a regular tetrahedron with one vertex at the origin.
Cube complete_cube(const Tetrahedron& tetra);

/// find_rs -> zeta_eta -> triangle -> apex (+ first, then -) -> cube.
Cube build_cube(const PlaneSolution& sol, const NormFormSolution& mn);

/// Translate so every axis minimum (origin included) becomes zero.
Cube translate_to_octant(const Cube& c);

std::array<i64, 3> extents(const Cube& c);

/// Largest coordinate of an octant-normalized cube.
i64 bounding_dim(const Cube& c);

std::array<std::pair<Vec3, Vec3>, 4> main_diagonals(const Cube& c);

/// side / sqrt(|D|^2 / (3 gcd(D)^2)) over the four main diagonals D.
std::set<i64> four_k_values(const Cube& c);

Cube dilate(const Cube& c, i64 t);

/// The three edge vectors leaving the first vertex.
std::array<Vec3, 3> corner_edges(const Cube& c);

bool is_irreducible(const Cube& c);

/// num / den; entries of a rational matrix with a common denominator.
struct RationalMatrix {
  std::array<std::array<i64, 3>, 3> num{};
  i64 den = 1;

  RationalMatrix transposed() const;
  /// M * M^T == I, checked by integer cross-multiplication.
  bool is_orthogonal() const;
};

/// Columns are the corner edge vectors divided by the side.
RationalMatrix orthogonal_matrix(const Cube& c);

}  // namespace latcube
