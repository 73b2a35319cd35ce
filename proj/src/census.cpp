#include "latcube/census.hpp"

#include <exception>
#include <optional>
#include <string>

#include "latcube/errors.hpp"

namespace latcube {

bool CubeRegistry::claimed(i64 side, const Cube& canonical) const {
  const auto it = by_side_.find(side);
  return it != by_side_.end() && it->second.contains(canonical);
}

bool CubeRegistry::contains(const Cube& c) const {
  return claimed(side_length(c), canonical_form(translate_to_octant(c)));
}

void CubeRegistry::insert(CubeRecord record) {
  const Cube canonical = canonical_form(record.cube);
  auto& claimed_here = by_side_[record.side];
  if (!claimed_here.insert(canonical).second) {
    throw InconsistencyError("registry already holds a side-" + std::to_string(record.side) + " cube of this class");
  }
  records_.push_back(std::move(record));
}

i64 placement_count(i64 N, i64 d, const InvariantSet& inv) {
  using namespace checked;
  if (d < 1 || N < d) throw PreconditionError("placement_count: need N >= d >= 1");
  const i64 t = N - d;
  const i64 t1 = t + 1;
  i64 out = mul(mul(square(t1), t1), inv.alpha);
  out = sub(out, mul(mul(mul(3, t), square(t1)), inv.beta));
  out = add(out, mul(mul(mul(3, t1), square(t)), inv.gamma));
  return out;
}

namespace {

struct WorkItem {
  i64 k;
  NormFormSolution norm_form;
  PlaneSolution plane;
};

struct Candidate {
  CubeRecord record;
  Cube canonical = Cube::from_trusted({});
  std::exception_ptr error;
};

// Worksheet order: k outermost, then (m, n), then odd d, then (a, b, c).
std::vector<WorkItem> schedule(i64 N) {
  std::vector<WorkItem> items;
  for (const i64 k : k_values(N)) {
    for (const auto& mn : solve_norm_form(k)) {
      for (i64 d = 1; d * k <= N; d += 2) {
        for (const auto& sol : solve_three_squares(d)) items.push_back({k, mn, sol});
      }
    }
  }
  return items;
}

CubeRecord make_record(const Cube& cube, const PlaneSolution& plane, const NormFormSolution& mn, i64 multiplier) {
  CubeRecord rec;
  rec.cube = cube;
  rec.side = side_length(cube);
  rec.bound_dim = bounding_dim(cube);
  rec.k_values = four_k_values(cube);
  rec.invariants = invariants(cube);
  rec.plane = plane;
  rec.norm_form = mn;
  rec.multiplier = multiplier;
  return rec;
}

void rethrow_first(const std::vector<std::exception_ptr>& errors) {
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

CubeRegistry build_irreducible_list(i64 N, int threads) {
  if (N < 1) throw PreconditionError("build_irreducible_list: N must be positive");
  const std::vector<WorkItem> items = schedule(N);
  std::vector<Candidate> candidates(items.size());
  const auto count = static_cast<std::ptrdiff_t>(items.size());

#pragma omp parallel for schedule(dynamic, 4) num_threads(threads > 0 ? threads : 1) if (threads > 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto& item = items[static_cast<std::size_t>(i)];
    auto& cand = candidates[static_cast<std::size_t>(i)];
    try {
      const Cube cube = translate_to_octant(build_cube(item.plane, item.norm_form));
      cand.record = make_record(cube, item.plane, item.norm_form, 1);
      if (cand.record.side != item.plane.d * item.k) throw InconsistencyError("cube side is not d*k");
      cand.canonical = canonical_form(cube);
    } catch (...) {
      cand.error = std::current_exception();
    }
  }

  CubeRegistry reg;
  reg.max_side = N;
  for (std::size_t i = 0; i < items.size(); ++i) {
    auto& cand = candidates[i];
    if (cand.error) std::rethrow_exception(cand.error);
    ++reg.stats.candidates;
    const bool k_is_one = items[i].k == 1;
    const bool reachable_with_k1 = cand.record.k_values.contains(1);
    const bool seen = reg.claimed(cand.record.side, cand.canonical);
    if (!k_is_one && reachable_with_k1) {
      ++reg.stats.guard_rejected;
      if (!seen) ++reg.stats.guard_rejected_unclaimed;
      continue;
    }
    if (seen) {
      ++reg.stats.already_claimed;
      continue;
    }
    if (!k_is_one) ++reg.stats.accepted_with_k_above_1;
    ++reg.stats.accepted;
    reg.insert(std::move(cand.record));
  }
  return reg;
}

std::vector<CubeRecord> build_multiples(i64 N, const CubeRegistry& reg, int threads) {
  struct Job {
    const CubeRecord* base;
    i64 factor;
  };
  std::vector<Job> jobs;
  for (const auto& rec : reg.records()) {
    for (i64 j = 2; rec.bound_dim <= N / j; ++j) jobs.push_back({&rec, j});
  }
  std::vector<std::optional<CubeRecord>> out(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  const auto count = static_cast<std::ptrdiff_t>(jobs.size());

#pragma omp parallel for schedule(dynamic, 4) num_threads(threads > 0 ? threads : 1) if (threads > 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      const Job& job = jobs[idx];
      out[idx] = make_record(dilate(job.base->cube, job.factor), job.base->plane, job.base->norm_form, job.factor);
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }
  rethrow_first(errors);

  std::vector<CubeRecord> multiples;
  multiples.reserve(out.size());
  for (auto& rec : out) multiples.push_back(std::move(*rec));
  return multiples;
}

i64 count_cubes(i64 N, const CubeRegistry& reg, const std::vector<CubeRecord>& multiples) {
  i64 total = 0;
  for (const auto* list : {&reg.records(), &multiples}) {
    for (const auto& rec : *list) {
      if (rec.bound_dim <= N) total = checked::add(total, placement_count(N, rec.bound_dim, rec.invariants));
    }
  }
  return total;
}

std::vector<i64> sequence(i64 N, const CubeRegistry& reg, int threads) {
  if (N < 1) throw PreconditionError("sequence: N must be positive");
  if (reg.max_side < N) throw PreconditionError("sequence: registry was built for a smaller N");
  const auto multiples = build_multiples(N, reg, threads);
  std::vector<i64> out;
  out.reserve(static_cast<std::size_t>(N));
  for (i64 n = 1; n <= N; ++n) out.push_back(count_cubes(n, reg, multiples));
  return out;
}

std::vector<i64> sequence(i64 N, int threads) { return sequence(N, build_irreducible_list(N, threads), threads); }

}  // namespace latcube
