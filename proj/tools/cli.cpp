#include "cli.hpp"

#include <omp.h>

#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>
#include <vector>

#include <CLI11.hpp>

#include "latcube/census.hpp"
#include "latcube/errors.hpp"
#include "latcube/io.hpp"
#include "latcube/oracle.hpp"
#include "latcube/published.hpp"

namespace latcube::cli {

namespace {

using io::json;

int thread_count(const RunConfig& cfg) { return cfg.threads.value_or(omp_get_max_threads()); }

CubeRegistry obtain_registry(const RunConfig& cfg, i64 n, std::ostream& err) {
  if (cfg.cache_path) {
    if (auto cached = io::load_registry(*cfg.cache_path, n)) return std::move(*cached);
  }
  CubeRegistry reg = build_irreducible_list(n, thread_count(cfg));
  if (cfg.cache_path) {
    io::save_registry(*cfg.cache_path, reg);
    err << "wrote registry cache " << *cfg.cache_path << " (N=" << n << ")\n";
  }
  return reg;
}

void write_sequence(const RunConfig& cfg, std::span<const i64> seq, std::ostream& out) {
  switch (cfg.format) {
    case Format::bfile: io::write_bfile(out, seq); break;
    case Format::json: io::write_json_sequence(out, seq); break;
    case Format::csv: io::write_csv_sequence(out, seq); break;
    case Format::table: io::write_table_sequence(out, seq); break;
  }
}

int cmd_count(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const CubeRegistry reg = obtain_registry(cfg, cfg.n, err);
  const i64 nc = count_cubes(cfg.n, reg, build_multiples(cfg.n, reg, thread_count(cfg)));
  switch (cfg.format) {
    case Format::bfile: out << cfg.n << ' ' << nc << '\n'; break;
    case Format::csv: out << "n,nc\n" << cfg.n << ',' << nc << '\n'; break;
    case Format::json:
    case Format::table: out << nc << '\n'; break;
  }
  return kExitOk;
}

int cmd_sequence(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const CubeRegistry reg = obtain_registry(cfg, cfg.n, err);
  const auto seq = sequence(cfg.n, reg, thread_count(cfg));
  write_sequence(cfg, seq, out);
  return kExitOk;
}

std::string invariant_text(const InvariantSet& inv) {
  return "[" + std::to_string(inv.alpha0) + ", " + std::to_string(inv.alpha) + ", " + std::to_string(inv.beta) + ", " +
         std::to_string(inv.gamma) + "]";
}

int cmd_list(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const CubeRegistry reg = obtain_registry(cfg, cfg.n, err);
  std::vector<CubeRecord> rows;
  for (const auto& rec : reg.records()) {
    if (rec.side <= cfg.n) rows.push_back(rec);
  }
  if (cfg.multiples) {
    for (auto& rec : build_multiples(cfg.n, reg, thread_count(cfg))) rows.push_back(std::move(rec));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const CubeRecord& x, const CubeRecord& y) {
    return std::tie(x.side, x.bound_dim, x.cube) < std::tie(y.side, y.bound_dim, y.cube);
  });

  switch (cfg.format) {
    case Format::json: {
      json records = json::array();
      for (const auto& rec : rows) records.push_back(io::record_to_json(rec));
      out << json{{"version", io::kCacheVersion}, {"N", cfg.n}, {"records", records}}.dump(2) << '\n';
      break;
    }
    case Format::csv:
      out << "side,bound_dim,k_values,alpha0,alpha,beta,gamma,multiplier,cube\n";
      for (const auto& rec : rows) {
        const auto& inv = rec.invariants;
        out << rec.side << ',' << rec.bound_dim << ",\"" << io::format_k_values(rec.k_values) << "\"," << inv.alpha0 << ','
            << inv.alpha << ',' << inv.beta << ',' << inv.gamma << ',' << rec.multiplier << ",\""
            << io::cube_to_json(rec.cube).dump() << "\"\n";
      }
      break;
    case Format::table:
      out << std::setw(5) << "n" << " | " << std::setw(5) << "m" << " | " << "A cube" << " | k-values | invariants\n";
      for (const auto& rec : rows) {
        out << std::setw(5) << rec.side << " | " << std::setw(5) << rec.bound_dim << " | " << io::format_cube(rec.cube) << " | "
            << io::format_k_values(rec.k_values) << " | " << invariant_text(rec.invariants);
        if (rec.multiplier != 1) out << " | x" << rec.multiplier;
        out << '\n';
      }
      break;
    case Format::bfile:
      err << "list does not support the bfile format\n";
      return kExitUsage;
  }
  return kExitOk;
}

int cmd_invariants(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Cube cube = Cube::from_trusted({});
  try {
    cube = translate_to_octant(io::cube_from_json(json::parse(cfg.cube_json)));
  } catch (const json::exception& e) {
    err << "invalid cube JSON: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "invalid cube: " << e.what() << '\n';
    return kExitUsage;
  }
  const InvariantSet inv = invariants(cube);
  const auto ks = four_k_values(cube);
  if (cfg.format == Format::json) {
    out << json{{"side", side_length(cube)},
                {"bound_dim", bounding_dim(cube)},
                {"cube", io::cube_to_json(cube)},
                {"invariants", {inv.alpha0, inv.alpha, inv.beta, inv.gamma}},
                {"k_values", std::vector<i64>(ks.begin(), ks.end())}}
               .dump()
        << '\n';
  } else {
    out << "side: " << side_length(cube) << '\n'
        << "bound_dim: " << bounding_dim(cube) << '\n'
        << "invariants: " << inv.alpha0 << ' ' << inv.alpha << ' ' << inv.beta << ' ' << inv.gamma << '\n'
        << "k_values: " << io::format_k_values(ks) << '\n';
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const int threads = thread_count(cfg);
  const CubeRegistry reg = obtain_registry(cfg, cfg.n, err);
  const auto census = sequence(cfg.n, reg, threads);
  const i64 oracle_n = std::min(cfg.n, cfg.oracle_max.value_or(cfg.n));
  const auto oracle = oracle_n >= 1 ? oracle::brute_force_sequence(oracle_n, threads) : std::vector<i64>{};
  const auto text = published::text_sequence();
  const auto sheet = published::worksheet_sequence();

  auto cell = [](std::span<const i64> v, std::size_t i) -> std::optional<i64> {
    if (i < v.size()) return v[i];
    return std::nullopt;
  };

  bool ok = true;
  json rows = json::array();
  if (cfg.format == Format::table) {
    out << std::setw(5) << "n" << std::setw(14) << "census" << std::setw(14) << "oracle" << std::setw(14) << "text"
        << std::setw(14) << "worksheet" << "  notes\n";
  } else if (cfg.format == Format::csv) {
    out << "n,census,oracle,text,worksheet,notes\n";
  }
  for (std::size_t i = 0; i < census.size(); ++i) {
    const i64 c = census[i];
    const auto o = cell(oracle, i);
    const auto t = cell(text, i);
    const auto w = cell(sheet, i);
    std::string notes;
    if (o && *o != c) {
      ok = false;
      notes += "census!=oracle ";
    }
    if (t && *t != c) notes += "text-differs ";
    if (w && *w != c) notes += "worksheet-differs ";
    auto show = [](std::optional<i64> v) { return v ? std::to_string(*v) : std::string("-"); };
    switch (cfg.format) {
      case Format::table:
      case Format::bfile:
        out << std::setw(5) << (i + 1) << std::setw(14) << c << std::setw(14) << show(o) << std::setw(14) << show(t)
            << std::setw(14) << show(w) << "  " << notes << '\n';
        break;
      case Format::csv:
        out << (i + 1) << ',' << c << ',' << show(o) << ',' << show(t) << ',' << show(w) << ',' << notes << '\n';
        break;
      case Format::json: {
        json row{{"n", i + 1}, {"census", c}};
        row["oracle"] = o ? json(*o) : json(nullptr);
        row["text"] = t ? json(*t) : json(nullptr);
        row["worksheet"] = w ? json(*w) : json(nullptr);
        rows.push_back(row);
        break;
      }
    }
  }
  if (cfg.format == Format::json) out << json{{"ok", ok}, {"rows", rows}}.dump(2) << '\n';
  err << (ok ? "census agrees with the brute-force oracle for n <= " : "census DISAGREES with the oracle; checked n <= ")
      << oracle_n << '\n';
  return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_representations(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.d < 1 || cfg.d % 2 == 0) {
    err << "d must be an odd positive integer\n";
    return kExitUsage;
  }
  const auto sols = solve_three_squares(cfg.d);
  const i64 formula = pi_epsilon(cfg.d);
  const auto enumerated = static_cast<i64>(sols.size());
  if (cfg.format == Format::json) {
    json list = json::array();
    for (const auto& s : sols) list.push_back({s.a, s.b, s.c});
    out << json{{"d", cfg.d}, {"solutions", list}, {"enumerated", enumerated}, {"formula", formula}}.dump() << '\n';
  } else if (cfg.format == Format::csv) {
    out << "a,b,c\n";
    for (const auto& s : sols) out << s.a << ',' << s.b << ',' << s.c << '\n';
  } else {
    for (const auto& s : sols) out << s.a << ' ' << s.b << ' ' << s.c << '\n';
    out << "enumerated: " << enumerated << '\n' << "formula: " << formula << '\n';
  }
  if (formula != enumerated) {
    err << "MISMATCH: closed form gives " << formula << ", enumeration gives " << enumerated << '\n';
    return kExitVerifyFailed;
  }
  return kExitOk;
}

}  // namespace

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  switch (cfg.command) {
    case Command::count: return cmd_count(cfg, out, err);
    case Command::sequence: return cmd_sequence(cfg, out, err);
    case Command::list: return cmd_list(cfg, out, err);
    case Command::invariants: return cmd_invariants(cfg, out, err);
    case Command::verify: return cmd_verify(cfg, out, err);
    case Command::representations: return cmd_representations(cfg, out, err);
  }
  return kExitUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact census of lattice cubes in {0,...,n}^3"};
  app.require_subcommand(1);
  RunConfig cfg;

  const std::map<std::string, Format> formats{
      {"table", Format::table}, {"json", Format::json}, {"csv", Format::csv}, {"bfile", Format::bfile}};

  auto common = [&](CLI::App* sub, bool needs_n) {
    auto* n = sub->add_option("--n", cfg.n, "grid size n (vertices in {0..n}^3)")->check(CLI::PositiveNumber);
    if (needs_n) n->required();
    sub->add_option("--format", cfg.format, "output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->default_str("table");
    sub->add_option("--cache", cfg.cache_path, "registry cache file (JSON)");
    sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
  };

  auto* count = app.add_subcommand("count", "print NC(n)");
  common(count, true);
  auto* seq = app.add_subcommand("sequence", "print NC(1..n)");
  common(seq, true);
  auto* list = app.add_subcommand("list", "list irreducible cubes of side <= n");
  common(list, true);
  list->add_flag("--multiples", cfg.multiples, "include dilated (reducible) cubes");
  auto* inv = app.add_subcommand("invariants", "orbit invariants and k-values of a cube given as JSON");
  common(inv, false);
  inv->add_option("cube", cfg.cube_json, "cube as [[x,y,z], ...] with 8 vertices")->required();
  auto* verify = app.add_subcommand("verify", "compare the census with the brute-force oracle");
  common(verify, true);
  verify->add_option("--oracle-max", cfg.oracle_max, "largest n checked by the oracle")->check(CLI::NonNegativeNumber);
  auto* reps = app.add_subcommand("representations", "solutions of a^2+b^2+c^2=3d^2 and their closed-form count");
  common(reps, false);
  reps->add_option("d", cfg.d, "odd positive d")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (count->parsed()) cfg.command = Command::count;
  if (seq->parsed()) cfg.command = Command::sequence;
  if (list->parsed()) cfg.command = Command::list;
  if (inv->parsed()) cfg.command = Command::invariants;
  if (verify->parsed()) cfg.command = Command::verify;
  if (reps->parsed()) cfg.command = Command::representations;

  try {
    return execute(cfg, out, err);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace latcube::cli
