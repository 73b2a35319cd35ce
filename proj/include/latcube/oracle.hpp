#pragma once

// Brute-force cube enumeration, independent of the parametrized census: it
// only shares Vec3 and Cube with the rest of the library.

#include <array>
#include <vector>

#include "latcube/geometry.hpp"

namespace latcube::oracle {

using Frame = std::array<Vec3, 3>;

/// All integer vectors of squared length s^2.
std::vector<Vec3> vectors_of_length(i64 s);

/// Ordered orthogonal triples (e1, e2, e3) of integer vectors of length s;
/// e3 = +-(e1 x e2)/s.
std::vector<Frame> enumerate_frames(i64 s);

/// Translation classes of side-s cubes, each moved to touch all three
/// coordinate planes from the positive side.
std::vector<Cube> cube_classes(i64 s);

/// Number of lattice cubes with all vertices in {0, ..., n}^3.
i64 brute_force_count(i64 n, int threads = 1);

/// Per-n counts [count(1), ..., count(n)] from one enumeration.
std::vector<i64> brute_force_sequence(i64 n, int threads = 1);

/// Distinct cubes in [0, n]^3 obtained by translating members of the
/// generalized orbit of c.
i64 brute_force_orbit_fill(const Cube& c, i64 n);

}  // namespace latcube::oracle
