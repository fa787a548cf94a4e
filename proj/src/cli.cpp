#include "infoflow/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <sstream>

#include "infoflow/aleph.hpp"
#include "infoflow/combinadic.hpp"
#include "infoflow/density.hpp"
#include "infoflow/efficiency.hpp"
#include "infoflow/grids.hpp"
#include "infoflow/info.hpp"
#include "infoflow/pairing.hpp"

namespace infoflow {

namespace {

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

std::string resolve_path(const RunConfig& cfg, const std::string& path) {
  if (path.empty() || path.front() == '/') return path;
  if (cfg.output_dir.empty() || cfg.output_dir == ".") return path;
  return cfg.output_dir + "/" + path;
}

std::ofstream open_output(const RunConfig& cfg, const std::string& path) {
  std::ofstream f(resolve_path(cfg, path), std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file: " + path);
  return f;
}

std::vector<std::uint64_t> parse_u64_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    out.push_back(to_u64(parse_nat(
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos))));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

// "10,15,20" or "10..30" or "10..30:5"
std::vector<unsigned> parse_schedule(const std::string& text) {
  std::vector<unsigned> out;
  const std::size_t dots = text.find("..");
  if (dots == std::string::npos) {
    for (std::uint64_t v : parse_u64_list(text)) out.push_back(static_cast<unsigned>(v));
    return out;
  }
  const std::uint64_t start = to_u64(parse_nat(text.substr(0, dots)));
  std::string rest = text.substr(dots + 2);
  std::uint64_t step = 1;
  const std::size_t colon = rest.find(':');
  if (colon != std::string::npos) {
    step = to_u64(parse_nat(rest.substr(colon + 1)));
    rest = rest.substr(0, colon);
  }
  const std::uint64_t stop = to_u64(parse_nat(rest));
  if (step == 0) throw std::invalid_argument("schedule step must be positive");
  for (std::uint64_t t = start; t <= stop; t += step) out.push_back(static_cast<unsigned>(t));
  return out;
}

std::vector<BigNat> parse_nat_list(const std::string& text) {
  std::vector<BigNat> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = text.find(',', pos);
    out.push_back(parse_nat(
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string config_line(const RunConfig& cfg) {
  std::ostringstream s;
  s << "log_base=" << format_double(cfg.log_base) << " seed=" << cfg.seed
    << (cfg.seed_given ? "" : " (default)") << " sets_budget=" << cfg.sets_budget()
    << " node_budget=" << cfg.node_budget() << " out_dir="
    << (cfg.output_dir.empty() ? "." : cfg.output_dir)
    << " density_tol=" << format_double(cfg.density_tolerance)
    << " slope_threshold=" << format_double(cfg.slope_threshold);
  return s.str();
}

void require_seed_if_strict(const RunConfig& cfg) {
  if (cfg.strict && !cfg.seed_given)
    throw std::invalid_argument("--strict requires an explicit --seed for randomized commands");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  if (const char* env_dir = std::getenv("INFOFLOW_OUTPUT_DIR")) cfg.output_dir = env_dir;

  CLI::App app{"infoflow: exact pairing/ranking codecs, information-efficiency measurement, "
               "density estimation, and information grids over finite sets of naturals"};
  app.require_subcommand(1);

  app.add_option("--log-base", cfg.log_base, "log base for information values (must be > 1)")
      ->check(CLI::Range(std::nextafter(1.0, 2.0), 1e9));
  auto* seed_opt = app.add_option("--seed", cfg.seed, "seed for randomized commands");
  app.add_flag("--strict", cfg.strict, "require an explicit seed for randomized commands");
  std::uint64_t budget_arg = 0;
  auto* budget_opt = app.add_option("--budget", budget_arg, "work budget override");
  app.add_option("--out-dir", cfg.output_dir, "directory for output files");
  app.add_option("--density-tol", cfg.density_tolerance,
                 "tolerance for declaring a natural density defined");
  app.add_option("--slope-threshold", cfg.slope_threshold,
                 "|slope| cutoff between conserving and discarding/expanding");

  // Subcommand callbacks fire during parse; they only select the action,
  // which runs after the global configuration is fully resolved.
  std::function<void()> action;
  const auto defer = [&action](std::function<void()> fn) {
    return [&action, fn = std::move(fn)] { action = fn; };
  };

  // --- pairing ---------------------------------------------------------
  std::string arg_x, arg_y, arg_n;
  auto* pair_cmd = app.add_subcommand("pair", "Cantor pairing code (x+y)(x+y+1)/2 + y");
  pair_cmd->add_option("x", arg_x)->required();
  pair_cmd->add_option("y", arg_y)->required();
  pair_cmd->callback(
      defer([&] { out << cantor_pair(parse_nat(arg_x), parse_nat(arg_y)) << '\n'; }));

  auto* unpair_cmd = app.add_subcommand("unpair", "invert the Cantor pairing code");
  unpair_cmd->add_option("n", arg_n)->required();
  unpair_cmd->callback(defer([&] {
    const Pair p = cantor_unpair(parse_nat(arg_n));
    out << p.x << ' ' << p.y << '\n';
  }));

  // --- combinadic --------------------------------------------------------
  std::string arg_set;
  auto* rank_cmd = app.add_subcommand(
      "rank", "combinadic rank of a set among subsets of its cardinality");
  rank_cmd->add_option("set", arg_set, "set literal, e.g. {1,2,4}")->required();
  rank_cmd->callback(defer([&] { out << rank_kset(parse_set(arg_set)) << '\n'; }));

  std::uint64_t arg_k = 0;
  std::string arg_idx;
  auto* unrank_cmd = app.add_subcommand("unrank", "k-subset with the given combinadic rank");
  unrank_cmd->add_option("k", arg_k)->required();
  unrank_cmd->add_option("index", arg_idx)->required();
  unrank_cmd->callback(
      defer([&] { out << format_set(unrank_kset(arg_k, parse_nat(arg_idx))) << '\n'; }));

  auto* setcode_cmd = app.add_subcommand(
      "setcode", "raw and dense codes of a finite set under the canonical enumeration");
  setcode_cmd->add_option("set", arg_set)->required();
  setcode_cmd->callback(defer([&] {
    const FiniteSet s = parse_set(arg_set);
    const SetCode code = set_to_code(s);
    out << "raw=" << code.raw << " dense=" << code.dense
        << " bits=" << format_double(set_info(s).bits) << " base=" << format_double(log_base())
        << '\n';
  }));

  // --- information efficiency --------------------------------------------
  std::string arg_expr;
  std::vector<std::string> arg_binds;
  auto* dexpr_cmd = app.add_subcommand(
      "delta-expr", "information efficiency of an expression tree, per node and summed");
  dexpr_cmd->add_option("expr", arg_expr, "e.g. \"(x+y)+z\"")->required();
  dexpr_cmd->add_option("--bind", arg_binds, "variable binding name=value (repeatable)");
  dexpr_cmd->callback(defer([&] {
    Env env;
    for (const std::string& b : arg_binds) {
      const std::size_t eq = b.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("--bind expects name=value");
      env[b.substr(0, eq)] = parse_nat(b.substr(eq + 1));
    }
    const DeltaReport report = delta_tree(parse_expr(arg_expr), env);
    out << "value=" << report.value << '\n';
    out << "node_delta=" << format_double(report.node_delta) << '\n';
    out << "history_delta=" << format_double(report.history_delta) << '\n';
    for (const auto& [sub, d] : report.per_node)
      out << "node " << sub << " delta=" << format_double(d) << '\n';
  }));

  std::string arg_poly, arg_at;
  auto* dpoly_cmd =
      app.add_subcommand("delta-poly", "information efficiency of a polynomial at a point");
  dpoly_cmd->add_option("poly", arg_poly, "e.g. \"1*x1^3 + 1*x2^3 - 1*x3^3\"")->required();
  dpoly_cmd->add_option("--at", arg_at, "comma-separated input values")->required();
  dpoly_cmd->callback(defer([&] {
    const Polynomial p = parse_polynomial(arg_poly);
    const std::vector<BigNat> at = parse_nat_list(arg_at);
    out << format_double(delta_poly(p, at)) << '\n';
  }));

  std::string arg_schedule = "10..30:5";
  std::uint64_t arg_samples = 1000;
  std::string arg_csv, arg_pgm;
  auto* classify_cmd = app.add_subcommand(
      "classify",
      "Monte Carlo classification of a polynomial as information discarding/conserving/expanding");
  classify_cmd->add_option("poly", arg_poly)->required();
  classify_cmd->add_option("--t", arg_schedule, "magnitude schedule: a..b[:step] or list");
  classify_cmd->add_option("--samples", arg_samples, "samples per magnitude window");
  classify_cmd->add_option("--csv", arg_csv, "write the trend table to a file");
  classify_cmd->callback(defer([&] {
    require_seed_if_strict(cfg);
    const Polynomial p = parse_polynomial(arg_poly);
    const std::vector<unsigned> schedule = parse_schedule(arg_schedule);
    const Classification c =
        classify_polynomial(p, schedule, arg_samples, cfg.seed, cfg.slope_threshold);
    out << "class=" << to_string(c.cls) << " slope=" << format_double(c.slope) << '\n';
    if (arg_csv.empty()) {
      write_classification_csv(c, out);
    } else {
      auto f = open_output(cfg, arg_csv);
      write_classification_csv(c, f);
    }
  }));

  std::uint64_t arg_bound = 100;
  bool arg_exclude_trivial = false;
  std::uint64_t arg_list = 0;
  auto* dio_cmd = app.add_subcommand(
      "dio-density", "solution count and density of p = 0 over [1,bound]^k");
  dio_cmd->add_option("poly", arg_poly)->required();
  dio_cmd->add_option("--bound", arg_bound, "coordinate range upper bound")->required();
  dio_cmd->add_flag("--exclude-trivial", arg_exclude_trivial,
                    "skip tuples with repeated coordinates");
  dio_cmd->add_option("--list", arg_list, "print up to this many solutions");
  dio_cmd->callback(defer([&] {
    const Polynomial p = parse_polynomial(arg_poly);
    const DioCount c = diophantine_density(p, arg_bound, arg_exclude_trivial, cfg.node_budget(),
                                           arg_list);
    out << "solutions=" << c.solutions << " total=" << c.total
        << " density=" << format_double(c.density) << '\n';
    for (const auto& w : c.witnesses) {
      out << '(';
      for (std::size_t i = 0; i < w.size(); ++i) out << (i ? "," : "") << w[i];
      out << ")\n";
    }
  }));

  // --- density -------------------------------------------------------------
  std::string arg_setname;
  std::uint64_t arg_max = 1'000'000;
  std::string arg_checkpoints;
  auto* density_cmd = app.add_subcommand(
      "density", "prefix densities of a named set, with lower/upper/natural estimates");
  density_cmd->add_option("set", arg_setname,
                          "evens|odds|primes|squares|leading1|naturals|mod:<m>:<r,...>")
      ->required();
  density_cmd->add_option("--max", arg_max, "scan bound");
  density_cmd->add_option("--checkpoints", arg_checkpoints, "comma-separated checkpoint list");
  density_cmd->add_option("--csv", arg_csv, "write the profile to a file");
  density_cmd->callback(defer([&] {
    const NumberSet A = named_set(arg_setname);
    std::vector<std::uint64_t> checkpoints;
    if (!arg_checkpoints.empty()) {
      checkpoints = parse_u64_list(arg_checkpoints);
    } else {
      const std::uint64_t points = std::min<std::uint64_t>(20, arg_max);
      for (std::uint64_t i = 1; i <= points; ++i)
        checkpoints.push_back(arg_max / points * i);
    }
    const DensityProfile profile =
        density_profile(A, arg_max, checkpoints, cfg.density_tolerance);
    if (arg_csv.empty()) {
      write_profile_csv(profile, out);
    } else {
      auto f = open_output(cfg, arg_csv);
      write_profile_csv(profile, f);
    }
  }));

  // --- grids -----------------------------------------------------------------
  std::string arg_kind;
  std::uint64_t arg_sets = 28;
  std::uint64_t arg_max_bins = 256;
  std::optional<std::uint64_t> arg_retain;
  auto* grid_cmd = app.add_subcommand(
      "grid", "build an information grid by distributing the canonical set enumeration");
  grid_cmd->add_option("kind", arg_kind, "card|sum|prod")
      ->required()
      ->check(CLI::IsMember({"card", "sum", "prod"}));
  grid_cmd->add_option("--sets", arg_sets, "number of sets to consume");
  grid_cmd->add_option("--csv", arg_csv, "write occupied cells to a file");
  grid_cmd->add_option("--pgm", arg_pgm, "write an occupancy bitmap to a file");
  grid_cmd->add_option("--retain", arg_retain, "keep occupant sets only for bins <= this");
  grid_cmd->add_option("--max-bins", arg_max_bins, "bitmap column limit");
  grid_cmd->callback(defer([&] {
    const GridKind kind = arg_kind == "card"  ? GridKind::Card
                          : arg_kind == "sum" ? GridKind::Sum
                                              : GridKind::Prod;
    std::optional<BigNat> retain;
    if (arg_retain) retain = BigNat(*arg_retain);
    const GridSnapshot snap = build_grid(kind, arg_sets, cfg.sets_budget(), retain);
    out << "kind=" << to_string(snap.kind()) << " sets=" << snap.sets_consumed()
        << " max_bin=" << snap.max_bin() << " max_occupied=" << snap.max_occupied() << '\n';
    if (!arg_csv.empty()) {
      auto f = open_output(cfg, arg_csv);
      write_grid_csv(snap, f);
    }
    if (!arg_pgm.empty()) {
      auto f = open_output(cfg, arg_pgm);
      write_grid_pgm(snap, f, arg_max_bins, config_line(cfg));
    }
  }));

  std::uint64_t arg_pn = 0;
  auto* pc_cmd = app.add_subcommand(
      "partition-count", "number of finite sets of naturals (0 allowed) with the given sum");
  pc_cmd->add_option("n", arg_pn)->required();
  pc_cmd->callback(defer([&] { out << count_subsets_with_sum(arg_pn) << '\n'; }));

  std::string arg_target;
  auto* ss_cmd = app.add_subcommand(
      "subset-sum", "first subset summing to the target, in canonical search order");
  ss_cmd->add_option("set", arg_set)->required();
  ss_cmd->add_option("target", arg_target)->required();
  ss_cmd->callback(defer([&] {
    const auto hit = subset_sum_first(parse_set(arg_set), parse_nat(arg_target),
                                      cfg.node_budget());
    out << (hit ? format_set(*hit) : std::string("none")) << '\n';
  }));

  // --- limit calculus ---------------------------------------------------------
  auto* aleph_cmd = app.add_subcommand(
      "aleph", "evaluate an expression in the symbolic log-limit calculus");
  aleph_cmd->add_option("expr", arg_expr, "e.g. \"a + a\" or \"(a*a)/a\"")->required();
  aleph_cmd->callback(defer([&] { out << format_aleph(parse_aleph_expr(arg_expr)) << '\n'; }));

  // ---------------------------------------------------------------------------
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("infoflow");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  cfg.seed_given = seed_opt->count() > 0;
  if (budget_opt->count() > 0) cfg.work_budget = budget_arg;

  try {
    set_log_base(cfg.log_base);
    err << "# " << config_line(cfg) << '\n';
    if (action) action();
  } catch (const budget_error& e) {
    err << "budget exhausted: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace infoflow
