#include "latcube/oracle.hpp"

#include <algorithm>
#include <set>

#include "latcube/errors.hpp"

namespace latcube::oracle {

namespace {

Cube push_to_origin(Cube::Vertices v) {
  Vec3 lo = v[0];
  for (const auto& p : v) {
    lo.x = std::min(lo.x, p.x);
    lo.y = std::min(lo.y, p.y);
    lo.z = std::min(lo.z, p.z);
  }
  for (auto& p : v) p = p - lo;
  return Cube::from_trusted(v);
}

std::array<i64, 3> widths(const Cube& c) {
  std::array<i64, 3> w{0, 0, 0};
  for (const auto& p : c.vertices()) {
    w[0] = std::max(w[0], p.x);
    w[1] = std::max(w[1], p.y);
    w[2] = std::max(w[2], p.z);
  }
  return w;
}

}  // namespace

std::vector<Vec3> vectors_of_length(i64 s) {
  if (s < 1) throw PreconditionError("vectors_of_length: s must be positive");
  const i64 s2 = s * s;
  std::vector<Vec3> out;
  for (i64 x = -s; x <= s; ++x) {
    for (i64 y = -s; y <= s; ++y) {
      const i64 rest = s2 - x * x - y * y;
      if (rest < 0) continue;
      const i64 z = isqrt(rest);
      if (z * z != rest) continue;
      out.push_back({x, y, z});
      if (z != 0) out.push_back({x, y, -z});
    }
  }
  return out;
}

std::vector<Frame> enumerate_frames(i64 s) {
  const auto vs = vectors_of_length(s);
  std::vector<Frame> out;
  for (const auto& e1 : vs) {
    for (const auto& e2 : vs) {
      if (dot(e1, e2) != 0) continue;
      const Vec3 c = cross(e1, e2);
      if (c.x % s != 0 || c.y % s != 0 || c.z % s != 0) continue;
      const Vec3 e3{c.x / s, c.y / s, c.z / s};
      out.push_back({e1, e2, e3});
      out.push_back({e1, e2, -e3});
    }
  }
  return out;
}

std::vector<Cube> cube_classes(i64 s) {
  std::set<Cube> classes;
  for (const auto& [e1, e2, e3] : enumerate_frames(s)) {
    Cube::Vertices v{};
    std::size_t n = 0;
    for (i64 i = 0; i < 2; ++i) {
      for (i64 j = 0; j < 2; ++j) {
        for (i64 k = 0; k < 2; ++k) v[n++] = i * e1 + j * e2 + k * e3;
      }
    }
    classes.insert(push_to_origin(v));
  }
  return {classes.begin(), classes.end()};
}

std::vector<i64> brute_force_sequence(i64 n, int threads) {
  if (n < 1) throw PreconditionError("brute_force_sequence: n must be positive");
  // per_side[s - 1][m - 1] = number of side-s cubes in {0..m}^3
  std::vector<std::vector<i64>> per_side(static_cast<std::size_t>(n), std::vector<i64>(static_cast<std::size_t>(n), 0));

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads > 0 ? threads : 1) if (threads > 1)
  for (i64 s = n; s >= 1; --s) {
    auto& row = per_side[static_cast<std::size_t>(s - 1)];
    for (const auto& cls : cube_classes(s)) {
      const auto w = widths(cls);
      for (i64 m = 1; m <= n; ++m) {
        if (w[0] > m || w[1] > m || w[2] > m) continue;
        row[static_cast<std::size_t>(m - 1)] += (m + 1 - w[0]) * (m + 1 - w[1]) * (m + 1 - w[2]);
      }
    }
  }

  std::vector<i64> out(static_cast<std::size_t>(n), 0);
  for (const auto& row : per_side) {
    for (std::size_t m = 0; m < row.size(); ++m) out[m] = checked::add(out[m], row[m]);
  }
  return out;
}

i64 brute_force_count(i64 n, int threads) { return brute_force_sequence(n, threads).back(); }

i64 brute_force_orbit_fill(const Cube& c, i64 n) {
  const auto w = widths(push_to_origin(c.vertices()));
  if (std::max({w[0], w[1], w[2]}) > n) throw PreconditionError("brute_force_orbit_fill: cube does not fit");
  // Translates of the generalized orbit are the translates of every signed
  // permutation image of c.
  std::set<Cube> placed;
  std::array<int, 3> perm{0, 1, 2};
  do {
    for (int mask = 0; mask < 8; ++mask) {
      Cube::Vertices v{};
      for (std::size_t i = 0; i < 8; ++i) {
        for (int a = 0; a < 3; ++a) v[i][a] = (mask >> a) & 1 ? -c[i][perm[a]] : c[i][perm[a]];
      }
      const Cube image = push_to_origin(v);
      const auto e = widths(image);
      for (i64 x = 0; x <= n - e[0]; ++x) {
        for (i64 y = 0; y <= n - e[1]; ++y) {
          for (i64 z = 0; z <= n - e[2]; ++z) {
            Cube::Vertices moved = image.vertices();
            for (auto& p : moved) p = p + Vec3{x, y, z};
            placed.insert(Cube::from_trusted(moved));
          }
        }
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<i64>(placed.size());
}

}  // namespace latcube::oracle
