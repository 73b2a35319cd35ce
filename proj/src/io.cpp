#include "latcube/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <tuple>

#include "latcube/errors.hpp"

namespace latcube::io {

json cube_to_json(const Cube& c) {
  json out = json::array();
  for (const auto& p : c.vertices()) out.push_back({p.x, p.y, p.z});
  return out;
}

Cube cube_from_json(const json& j) {
  if (!j.is_array() || j.size() != 8) throw PreconditionError("cube must be an array of 8 [x,y,z] triples");
  Cube::Vertices v{};
  for (std::size_t i = 0; i < 8; ++i) {
    const auto& p = j[i];
    if (!p.is_array() || p.size() != 3) throw PreconditionError("cube vertex must be an [x,y,z] triple");
    for (int a = 0; a < 3; ++a) {
      if (!p[static_cast<std::size_t>(a)].is_number_integer()) throw PreconditionError("cube coordinates must be integers");
      v[i][a] = p[static_cast<std::size_t>(a)].get<i64>();
    }
  }
  return Cube::make(v);
}

json record_to_json(const CubeRecord& rec) {
  const auto& inv = rec.invariants;
  json out{
      {"side", rec.side},
      {"bound_dim", rec.bound_dim},
      {"cube", cube_to_json(rec.cube)},
      {"k_values", json(std::vector<i64>(rec.k_values.begin(), rec.k_values.end()))},
      {"invariants", {inv.alpha0, inv.alpha, inv.beta, inv.gamma}},
      {"source",
       {{"a", rec.plane.a},
        {"b", rec.plane.b},
        {"c", rec.plane.c},
        {"d", rec.plane.d},
        {"m", rec.norm_form.m},
        {"n", rec.norm_form.n}}},
  };
  if (rec.multiplier != 1) out["multiplier"] = rec.multiplier;
  return out;
}

CubeRecord record_from_json(const json& j) {
  try {
    CubeRecord rec;
    rec.cube = cube_from_json(j.at("cube"));
    rec.side = j.at("side").get<i64>();
    rec.bound_dim = j.at("bound_dim").get<i64>();
    for (const auto& k : j.at("k_values")) rec.k_values.insert(k.get<i64>());
    const auto& inv = j.at("invariants");
    if (inv.size() != 4) throw PreconditionError("invariants must have four entries");
    rec.invariants = {inv[0].get<i64>(), inv[1].get<i64>(), inv[2].get<i64>(), inv[3].get<i64>()};
    const auto& src = j.at("source");
    rec.plane = {src.at("a").get<i64>(), src.at("b").get<i64>(), src.at("c").get<i64>(), src.at("d").get<i64>()};
    rec.norm_form = {src.at("m").get<i64>(), src.at("n").get<i64>()};
    rec.multiplier = j.value("multiplier", i64{1});
    if (side_length(rec.cube) != rec.side || bounding_dim(rec.cube) != rec.bound_dim) {
      throw PreconditionError("record side or bound_dim does not match its cube");
    }
    return rec;
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("malformed cube record: ") + e.what());
  }
}

namespace {

std::vector<const CubeRecord*> sorted_records(const std::vector<CubeRecord>& records) {
  std::vector<const CubeRecord*> out;
  for (const auto& r : records) out.push_back(&r);
  std::sort(out.begin(), out.end(), [](const CubeRecord* x, const CubeRecord* y) {
    return std::tie(x->side, x->bound_dim, x->cube) < std::tie(y->side, y->bound_dim, y->cube);
  });
  return out;
}

}  // namespace

json registry_to_json(const CubeRegistry& reg) {
  json records = json::array();
  for (const auto* rec : sorted_records(reg.records())) records.push_back(record_to_json(*rec));
  return {{"version", kCacheVersion}, {"N", reg.max_side}, {"records", std::move(records)}};
}

CubeRegistry registry_from_json(const json& j) {
  try {
    if (j.at("version").get<int>() != kCacheVersion) throw PreconditionError("registry cache version mismatch");
    CubeRegistry reg;
    reg.max_side = j.at("N").get<i64>();
    for (const auto& r : j.at("records")) reg.insert(record_from_json(r));
    return reg;
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("malformed registry: ") + e.what());
  }
}

void save_registry(const std::filesystem::path& path, const CubeRegistry& reg) {
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << registry_to_json(reg).dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

std::optional<CubeRegistry> load_registry(const std::filesystem::path& path, i64 N) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  const json j = json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object() || j.value("version", -1) != kCacheVersion || j.value("N", i64{0}) < N) {
    return std::nullopt;
  }
  return registry_from_json(j);
}

void write_bfile(std::ostream& os, std::span<const i64> seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) os << (i + 1) << ' ' << seq[i] << '\n';
}

void write_json_sequence(std::ostream& os, std::span<const i64> seq) {
  os << json(std::vector<i64>(seq.begin(), seq.end())).dump() << '\n';
}

void write_csv_sequence(std::ostream& os, std::span<const i64> seq) {
  os << "n,nc\n";
  for (std::size_t i = 0; i < seq.size(); ++i) os << (i + 1) << ',' << seq[i] << '\n';
}

void write_table_sequence(std::ostream& os, std::span<const i64> seq) {
  os << std::setw(5) << "n" << "  " << "NC(n)" << '\n';
  for (std::size_t i = 0; i < seq.size(); ++i) os << std::setw(5) << (i + 1) << "  " << seq[i] << '\n';
}

std::string format_k_values(const std::set<i64>& ks) {
  std::ostringstream os;
  bool first = true;
  for (const i64 k : ks) {
    os << (first ? "" : ",") << k;
    first = false;
  }
  return os.str();
}

std::string format_cube(const Cube& c) {
  std::ostringstream os;
  for (std::size_t i = 0; i < 8; ++i) {
    const auto& p = c[i];
    os << (i ? ", " : "") << '[' << p.x << ", " << p.y << ", " << p.z << ']';
  }
  return os.str();
}

}  // namespace latcube::io
