#pragma once

// JSON forms of cubes and registries, the registry cache file, and sequence
// output formats (OEIS b-file, JSON, CSV, plain table).

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>

#include <json.hpp>

#include "latcube/census.hpp"

namespace latcube::io {

using json = nlohmann::json;

/// Bumped whenever the cached record contents could change.
inline constexpr int kCacheVersion = 1;

/// Array of 8 [x, y, z] triples in canonical (sorted) order.
json cube_to_json(const Cube& c);
/// Throws PreconditionError on malformed input or a non-cube point set.
Cube cube_from_json(const json& j);

json record_to_json(const CubeRecord& rec);
CubeRecord record_from_json(const json& j);

/// {version, N, records: [...]}; records sorted by (side, bound_dim, cube).
json registry_to_json(const CubeRegistry& reg);
CubeRegistry registry_from_json(const json& j);

void save_registry(const std::filesystem::path& path, const CubeRegistry& reg);

/// The cached registry if the file exists, has the current version, and was
/// built for at least N; otherwise nullopt.
std::optional<CubeRegistry> load_registry(const std::filesystem::path& path, i64 N);

/// One "k value" line per term, 1-indexed.
void write_bfile(std::ostream& os, std::span<const i64> seq);
void write_json_sequence(std::ostream& os, std::span<const i64> seq);
/// "n,nc" header, then one row per term.
void write_csv_sequence(std::ostream& os, std::span<const i64> seq);
void write_table_sequence(std::ostream& os, std::span<const i64> seq);

std::string format_k_values(const std::set<i64>& ks);
std::string format_cube(const Cube& c);

}  // namespace latcube::io
