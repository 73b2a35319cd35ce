#pragma once

// The 48 signed-permutation symmetries of a bounding box [0, d]^3, cube orbits
// under them, and the orbit invariants (alpha0, alpha, beta, gamma).

#include <array>
#include <unordered_set>
#include <vector>

#include "latcube/geometry.hpp"

namespace latcube {

struct InvariantSet {
  i64 alpha0 = 0;
  i64 alpha = 0;
  i64 beta = 0;
  i64 gamma = 0;

  friend auto operator<=>(const InvariantSet&, const InvariantSet&) = default;
};

/// v -> w with w[i] = v[perm[i]], or dim - v[perm[i]] where reflect[i].
struct BoxSymmetry {
  std::array<int, 3> perm{0, 1, 2};
  std::array<bool, 3> reflect{false, false, false};

  Vec3 apply(const Vec3& v, i64 dim) const;
  Cube apply(const Cube& c, i64 dim) const;
};

/// All 48 maps, identity first.
const std::array<BoxSymmetry, 48>& box_symmetries();

using CubeSet = std::unordered_set<Cube, CubeHash>;

/// Images of an octant-normalized cube under the 48 maps of [0, bounding_dim]^3.
CubeSet symmetry_orbit(const Cube& c);

/// Every cube in [0, d]^3 (d = bounding_dim(c)) congruent to c by a signed
/// permutation and an integer translation.
CubeSet generalized_orbit(const Cube& c);

/// Same set, built the slow way: the symmetry orbit of every slack translate
/// of c. Kept as a reference for testing.
CubeSet generalized_orbit_reference(const Cube& c);

/// Distinct octant-normalized images of c under the 48 signed permutations.
std::vector<Cube> translation_classes(const Cube& c);

/// Smallest octant-normalized image of c; equal for congruent cubes.
Cube canonical_form(const Cube& c);

/// Orbit invariants via closed-form placement counts over translation classes.
/// A class with extents (w1, w2, w3) inside [0, d]^3 has (d-w1+1)(d-w2+1)(d-w3+1)
/// placements, of which (d-w1+1)(d-w2+1)(d-w3) avoid the face z = d and
/// (d-w1+1)(d-w2)(d-w3) avoid both z = d and y = d.
InvariantSet invariants(const Cube& c);

/// Same quadruple, counted on the explicit generalized orbit by removing the
/// cubes touching z = d and then those touching y = d.
InvariantSet invariants_by_enumeration(const Cube& c);

}  // namespace latcube
