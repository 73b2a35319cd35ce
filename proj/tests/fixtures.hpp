#pragma once

#include <array>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "latcube/geometry.hpp"
#include "latcube/symmetry.hpp"

namespace latcube::testing {

struct TableRow {
  i64 side;
  i64 bound_dim;
  Cube::Vertices cube;
  std::set<i64> k_values;
  InvariantSet invariants;
};

// The published table of irreducible cubes with side at most 19.
inline const std::vector<TableRow>& table_rows() {
  static const std::vector<TableRow> rows{
      {1, 1, {{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 0, 0}, {1, 0, 1}, {1, 1, 0}, {1, 1, 1}}}, {1}, {1, 1, 0, 0}},
      {3, 5, {{{0, 3, 2}, {1, 1, 4}, {2, 2, 0}, {2, 5, 3}, {3, 0, 2}, {3, 3, 5}, {4, 4, 1}, {5, 2, 3}}}, {1, 3}, {4, 4, 0, 0}},
      {5, 7, {{{0, 0, 4}, {0, 5, 4}, {3, 0, 0}, {3, 5, 0}, {4, 0, 7}, {4, 5, 7}, {7, 0, 3}, {7, 5, 3}}}, {1}, {12, 18, 4, 0}},
      {7, 11, {{{0, 6, 8}, {2, 9, 2}, {3, 0, 6}, {5, 3, 0}, {6, 8, 11}, {8, 11, 5}, {9, 2, 9}, {11, 5, 3}}}, {1, 7}, {8, 8, 0, 0}},
      {9, 15, {{{0, 5, 5}, {4, 4, 13}, {4, 13, 4}, {7, 1, 1}, {8, 12, 12}, {11, 0, 9}, {11, 9, 0}, {15, 8, 8}}}, {1, 3}, {24, 108, 48, 16}},
      {11, 19, {{{0, 11, 13}, {2, 2, 7}, {6, 17, 6}, {8, 8, 0}, {9, 9, 19}, {11, 0, 13}, {15, 15, 12}, {17, 6, 6}}}, {1}, {24, 108, 48, 16}},
      {13, 19, {{{0, 12, 15}, {3, 16, 3}, {4, 0, 12}, {7, 4, 0}, {12, 15, 19}, {15, 19, 7}, {16, 3, 16}, {19, 7, 4}}}, {1, 13}, {8, 8, 0, 0}},
      {13, 17, {{{0, 0, 12}, {0, 13, 12}, {5, 0, 0}, {5, 13, 0}, {12, 0, 17}, {12, 13, 17}, {17, 0, 5}, {17, 13, 5}}}, {1}, {12, 30, 8, 0}},
      {15, 25, {{{0, 5, 10}, {2, 19, 15}, {10, 0, 20}, {11, 7, 0}, {12, 14, 25}, {13, 21, 5}, {21, 2, 10}, {23, 16, 15}}}, {1, 3}, {48, 360, 176, 64}},
      {17, 29, {{{0, 20, 9}, {1, 8, 21}, {12, 12, 0}, {12, 29, 17}, {13, 0, 12}, {13, 17, 29}, {24, 21, 8}, {25, 9, 20}}}, {1}, {24, 60, 16, 0}},
      {17, 23, {{{0, 0, 15}, {0, 17, 15}, {8, 0, 0}, {8, 17, 0}, {15, 0, 23}, {15, 17, 23}, {23, 0, 8}, {23, 17, 8}}}, {1}, {12, 42, 12, 0}},
      {19, 31, {{{0, 16, 10}, {6, 6, 25}, {10, 31, 16}, {15, 10, 0}, {16, 21, 31}, {21, 0, 15}, {25, 25, 6}, {31, 15, 21}}}, {1, 19}, {8, 8, 0, 0}},
  };
  return rows;
}

inline Cube table_cube(std::size_t row) { return Cube::make(table_rows().at(row).cube); }

inline Cube unit_cube() { return table_cube(0); }

// The 28 pairwise squared distances, counted by value.
inline std::map<i64, int> distance_histogram(const Cube& c) {
  std::map<i64, int> h;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i + 1; j < 8; ++j) ++h[norm2(c[i] - c[j])];
  return h;
}

inline bool has_cube_signature(const Cube& c, i64 side) {
  const i64 s2 = side * side;
  return distance_histogram(c) == std::map<i64, int>{{s2, 12}, {2 * s2, 12}, {3 * s2, 4}};
}

inline Cube shifted(const Cube& c, const Vec3& t) {
  Cube::Vertices v = c.vertices();
  for (auto& p : v) p = p + t;
  return Cube::from_trusted(v);
}

// Plain scan, no shared code with the library solvers.
inline std::vector<std::array<i64, 3>> scan_three_squares(i64 d) {
  std::vector<std::array<i64, 3>> out;
  const i64 target = 3 * d * d;
  for (i64 a = 1; 3 * a * a <= target; ++a)
    for (i64 b = a; a * a + 2 * b * b <= target; ++b)
      for (i64 c = b; a * a + b * b + c * c <= target; ++c) {
        if (a * a + b * b + c * c != target) continue;
        i64 g = std::gcd(std::gcd(a, b), c);
        if (g == 1) out.push_back({a, b, c});
      }
  return out;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20260414);
  return gen;
}

inline i64 uniform(i64 lo, i64 hi) { return std::uniform_int_distribution<i64>(lo, hi)(rng()); }

}  // namespace latcube::testing
