#include "latcube/symmetry.hpp"

#include <algorithm>
#include <set>

#include "latcube/errors.hpp"

namespace latcube {

Vec3 BoxSymmetry::apply(const Vec3& v, i64 dim) const {
  Vec3 w;
  for (int i = 0; i < 3; ++i) {
    const i64 c = v[perm[i]];
    w[i] = reflect[i] ? dim - c : c;
  }
  return w;
}

Cube BoxSymmetry::apply(const Cube& c, i64 dim) const {
  Cube::Vertices out{};
  for (std::size_t i = 0; i < 8; ++i) out[i] = apply(c[i], dim);
  return Cube::from_trusted(out);
}

const std::array<BoxSymmetry, 48>& box_symmetries() {
  static const std::array<BoxSymmetry, 48> maps = [] {
    std::array<BoxSymmetry, 48> out{};
    std::array<int, 3> perm{0, 1, 2};
    std::size_t n = 0;
    do {
      for (int mask = 0; mask < 8; ++mask) {
        out[n].perm = perm;
        out[n].reflect = {(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0};
        ++n;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }();
  return maps;
}

CubeSet symmetry_orbit(const Cube& c) {
  const i64 d = bounding_dim(c);
  CubeSet out;
  for (const auto& g : box_symmetries()) out.insert(g.apply(c, d));
  return out;
}

std::vector<Cube> translation_classes(const Cube& c) {
  const i64 d = bounding_dim(c);
  std::set<Cube> classes;
  for (const auto& g : box_symmetries()) classes.insert(translate_to_octant(g.apply(c, d)));
  return {classes.begin(), classes.end()};
}

Cube canonical_form(const Cube& c) {
  const i64 d = bounding_dim(c);
  std::optional<Cube> best;
  for (const auto& g : box_symmetries()) {
    Cube img = translate_to_octant(g.apply(c, d));
    if (!best || img < *best) best = img;
  }
  return *best;
}

CubeSet generalized_orbit(const Cube& c) {
  const i64 d = bounding_dim(c);
  CubeSet out;
  for (const auto& shape : translation_classes(c)) {
    const auto w = extents(shape);
    for (i64 i = 0; i <= d - w[0]; ++i) {
      for (i64 j = 0; j <= d - w[1]; ++j) {
        for (i64 k = 0; k <= d - w[2]; ++k) {
          Cube::Vertices v = shape.vertices();
          for (auto& p : v) p = p + Vec3{i, j, k};
          out.insert(Cube::from_trusted(v));
        }
      }
    }
  }
  return out;
}

CubeSet generalized_orbit_reference(const Cube& c) {
  const i64 d = bounding_dim(c);
  const auto w = extents(c);
  CubeSet out;
  for (i64 i = 0; i <= d - w[0]; ++i) {
    for (i64 j = 0; j <= d - w[1]; ++j) {
      for (i64 k = 0; k <= d - w[2]; ++k) {
        Cube::Vertices v = c.vertices();
        for (auto& p : v) p = p + Vec3{i, j, k};
        const Cube moved = Cube::from_trusted(v);
        if (bounding_dim(moved) != d) throw InconsistencyError("translation left the bounding box");
        for (const auto& g : box_symmetries()) out.insert(g.apply(moved, d));
      }
    }
  }
  return out;
}

InvariantSet invariants(const Cube& c) {
  const i64 d = bounding_dim(c);
  InvariantSet inv;
  inv.alpha0 = static_cast<i64>(symmetry_orbit(c).size());
  for (const auto& shape : translation_classes(c)) {
    const auto w = extents(shape);
    const i64 sx = d - w[0] + 1;
    const i64 sy = d - w[1] + 1;
    const i64 sz = d - w[2] + 1;
    inv.alpha = checked::add(inv.alpha, checked::mul(checked::mul(sx, sy), sz));
    inv.beta = checked::add(inv.beta, checked::mul(checked::mul(sx, sy), sz - 1));
    inv.gamma = checked::add(inv.gamma, checked::mul(checked::mul(sx, sy - 1), sz - 1));
  }
  return inv;
}

InvariantSet invariants_by_enumeration(const Cube& c) {
  const i64 d = bounding_dim(c);
  const CubeSet all = generalized_orbit_reference(c);
  auto touches = [d](const Cube& cube, int axis) {
    return std::any_of(cube.vertices().begin(), cube.vertices().end(), [&](const Vec3& p) { return p[axis] == d; });
  };
  InvariantSet inv;
  inv.alpha0 = static_cast<i64>(symmetry_orbit(c).size());
  inv.alpha = static_cast<i64>(all.size());
  for (const auto& cube : all) {
    if (touches(cube, 2)) continue;
    ++inv.beta;
    if (!touches(cube, 1)) ++inv.gamma;
  }
  return inv;
}

}  // namespace latcube
