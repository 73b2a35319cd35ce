#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "latcube/oracle.hpp"
#include "latcube/published.hpp"

using namespace latcube;
using latcube::testing::table_cube;
using latcube::testing::unit_cube;

namespace {

Cube frame_cube(const oracle::Frame& f, const Vec3& base) {
  Cube::Vertices v{};
  std::size_t n = 0;
  for (i64 i = 0; i < 2; ++i)
    for (i64 j = 0; j < 2; ++j)
      for (i64 k = 0; k < 2; ++k) v[n++] = base + i * f[0] + j * f[1] + k * f[2];
  return Cube::from_trusted(v);
}

// Every frame at every base point, kept when all vertices land in the grid.
i64 naive_count(i64 n) {
  std::set<Cube> cubes;
  for (i64 s = 1; s <= n; ++s) {
    for (const auto& f : oracle::enumerate_frames(s)) {
      for (i64 x = 0; x <= n; ++x)
        for (i64 y = 0; y <= n; ++y)
          for (i64 z = 0; z <= n; ++z) {
            const Cube c = frame_cube(f, {x, y, z});
            const bool inside = std::all_of(c.vertices().begin(), c.vertices().end(), [n](const Vec3& p) {
              return p.x >= 0 && p.y >= 0 && p.z >= 0 && p.x <= n && p.y <= n && p.z <= n;
            });
            if (inside) cubes.insert(c);
          }
    }
  }
  return static_cast<i64>(cubes.size());
}

}  // namespace

TEST_CASE("vectors_of_length") {
  CHECK(oracle::vectors_of_length(1).size() == 6);
  CHECK(oracle::vectors_of_length(3).size() == 30);
  for (i64 s = 1; s <= 12; ++s)
    for (const auto& v : oracle::vectors_of_length(s)) REQUIRE(norm2(v) == s * s);
}

TEST_CASE("frame counts") {
  CHECK(oracle::enumerate_frames(1).size() == 48);
  CHECK(oracle::enumerate_frames(2).size() == 48);
  for (i64 s = 1; s <= 15; ++s) {
    const auto frames = oracle::enumerate_frames(s);
    INFO("s=" << s);
    REQUIRE(frames.size() % 24 == 0);
    for (const auto& [e1, e2, e3] : frames) {
      REQUIRE(norm2(e1) == s * s);
      REQUIRE(norm2(e2) == s * s);
      REQUIRE(norm2(e3) == s * s);
      REQUIRE(dot(e1, e2) == 0);
      REQUIRE(dot(e1, e3) == 0);
      REQUIRE(dot(e2, e3) == 0);
    }
  }
}

TEST_CASE("side-3 frames include the tilted (1,2,2) frame") {
  const auto frames = oracle::enumerate_frames(3);
  const oracle::Frame tilted{Vec3{1, 2, -2}, Vec3{-2, -1, -2}, Vec3{2, -2, -1}};
  CHECK(std::find(frames.begin(), frames.end(), tilted) != frames.end());
  CHECK(frames.size() > 48);
}

TEST_CASE("cube classes are octant-normalized lattice cubes") {
  CHECK(oracle::cube_classes(1).size() == 1);
  for (i64 s = 1; s <= 10; ++s) {
    const auto classes = oracle::cube_classes(s);
    REQUIRE(std::is_sorted(classes.begin(), classes.end()));
    for (const auto& c : classes) {
      REQUIRE(latcube::testing::has_cube_signature(c, s));
      REQUIRE(translate_to_octant(c) == c);
    }
  }
}

TEST_CASE("class set does not depend on frame order") {
  for (i64 s : {3, 7, 9}) {
    auto frames = oracle::enumerate_frames(s);
    std::shuffle(frames.begin(), frames.end(), latcube::testing::rng());
    std::set<Cube> classes;
    for (const auto& f : frames) classes.insert(translate_to_octant(frame_cube(f, {})));
    const auto expected = oracle::cube_classes(s);
    REQUIRE(std::vector<Cube>(classes.begin(), classes.end()) == expected);
  }
}

TEST_CASE("brute force counts") {
  CHECK(oracle::brute_force_count(1) == 1);
  CHECK(oracle::brute_force_count(2) == 9);
  CHECK(oracle::brute_force_count(4) == 100);
  CHECK(oracle::brute_force_count(5) == 229);
  for (i64 n = 1; n <= 5; ++n) CHECK(oracle::brute_force_count(n) == naive_count(n));
  CHECK_THROWS(oracle::brute_force_count(0));
}

TEST_CASE("brute force sequence is thread independent") {
  const auto serial = oracle::brute_force_sequence(14, 1);
  CHECK(oracle::brute_force_sequence(14, 4) == serial);
  const auto text = published::text_sequence();
  CHECK(std::equal(serial.begin(), serial.end(), text.begin()));
}

TEST_CASE("orbit fill examples") {
  CHECK(oracle::brute_force_orbit_fill(unit_cube(), 3) == 27);
  CHECK(oracle::brute_force_orbit_fill(table_cube(1), 5) == 4);
  CHECK(oracle::brute_force_orbit_fill(table_cube(2), 7) == 18);
  // four orientations, each with 2^3 translates
  CHECK(oracle::brute_force_orbit_fill(table_cube(1), 6) == 32);
  CHECK_THROWS(oracle::brute_force_orbit_fill(table_cube(1), 4));
}

TEST_CASE("published lists agree through 14 terms and then split") {
  const auto text = published::text_sequence();
  const auto sheet = published::worksheet_sequence();
  CHECK(text.size() == 100);
  CHECK(sheet.size() == 50);
  CHECK(std::equal(text.begin(), text.begin() + 14, sheet.begin()));
  CHECK(text[14] == 27190);
  CHECK(sheet[14] == 27298);
}
