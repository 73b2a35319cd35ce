#pragma once

// Irreducible cube list, its dilations, and the total count NC(n) of lattice
// cubes inside {0, ..., n}^3.

#include <map>
#include <set>
#include <vector>

#include "latcube/symmetry.hpp"

namespace latcube {

struct CubeRecord {
  i64 side = 0;
  i64 bound_dim = 0;
  Cube cube = Cube::from_trusted({});
  std::set<i64> k_values;
  InvariantSet invariants;
  PlaneSolution plane;
  NormFormSolution norm_form;
  i64 multiplier = 1;  // dilation factor; 1 for irreducible records

  friend bool operator==(const CubeRecord&, const CubeRecord&) = default;
};

/// Counters from one registry build.
struct CensusStats {
  i64 candidates = 0;
  i64 accepted = 0;
  i64 already_claimed = 0;
  i64 guard_rejected = 0;           // k > 1 candidate whose k-values contain 1
  i64 guard_rejected_unclaimed = 0;  // ... and not produced by the k = 1 pass
  i64 accepted_with_k_above_1 = 0;

  friend bool operator==(const CensusStats&, const CensusStats&) = default;
};

/// Irreducible cubes keyed by side length. Each claimed congruence class is
/// stored as its canonical form, so membership of a cube in a record's
/// generalized orbit is a lookup of canonical_form(cube).
class CubeRegistry {
 public:
  bool claimed(i64 side, const Cube& canonical) const;
  /// True if some record's generalized orbit contains c.
  bool contains(const Cube& c) const;
  void insert(CubeRecord record);

  const std::vector<CubeRecord>& records() const { return records_; }
  const std::map<i64, std::set<Cube>>& by_side() const { return by_side_; }

  i64 max_side = 0;  // N the registry was built for
  CensusStats stats;

 private:
  std::map<i64, std::set<Cube>> by_side_;
  std::vector<CubeRecord> records_;
};

/// (N-d+1)^3 alpha - 3(N-d)(N-d+1)^2 beta + 3(N-d+1)(N-d)^2 gamma.
i64 placement_count(i64 N, i64 d, const InvariantSet& inv);

/// All irreducible cubes of side <= N. Candidates are built in parallel and
/// merged in a fixed order, so the result does not depend on `threads`.
CubeRegistry build_irreducible_list(i64 N, int threads = 1);

/// Dilations j * cube (j >= 2) of every record that still fit in [0, N]^3,
/// with invariants recomputed on the dilated cube.
std::vector<CubeRecord> build_multiples(i64 N, const CubeRegistry& reg, int threads = 1);

i64 count_cubes(i64 N, const CubeRegistry& reg, const std::vector<CubeRecord>& multiples);

/// [NC(1), ..., NC(N)] from a registry built for at least N.
std::vector<i64> sequence(i64 N, const CubeRegistry& reg, int threads = 1);
std::vector<i64> sequence(i64 N, int threads = 1);

}  // namespace latcube
