#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dcsd/csv.hpp"
#include "dcsd/dataset.hpp"
#include "dcsd/error.hpp"
#include "dcsd/evaluation.hpp"
#include "dcsd/fixtures.hpp"
#include "dcsd/objectives.hpp"
#include "dcsd/order_stats.hpp"
#include "dcsd/propositions.hpp"
#include "dcsd/search.hpp"
#include "dcsd/selfcheck.hpp"

namespace dcsd::cli {

namespace {

using json = nlohmann::json;

struct RunConfig {
  std::string input;
  std::string target;
  std::string objective = "f1";
  std::string language = "ccj";
  std::string estimator = "auto";
  double a = 1.0;
  std::optional<std::size_t> depth;
  std::size_t top_k = 1;
  int cuts = 5;
  std::string binning = "frequency";
  double delta = kDefaultDelta;
  std::string format = "json";
  std::string trace;
  std::optional<std::size_t> node_budget;
  std::optional<long> time_budget_ms;
  std::vector<std::string> types;
  std::uint64_t seed = 1;
  std::size_t rows = 400;
};

std::string fmt(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

json optional_number(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

std::string optional_text(const std::optional<double>& x) { return x ? fmt(*x) : ""; }

Binning parse_binning(const std::string& name) {
  if (name == "frequency" || name == "equal-frequency") return Binning::equal_frequency;
  if (name == "width" || name == "equal-width") return Binning::equal_width;
  throw UsageError("unknown binning '" + name + "' (expected frequency|width)");
}

LoadOptions load_options(const RunConfig& cfg) {
  LoadOptions options;
  for (const auto& hint : cfg.types) {
    const auto eq = hint.find('=');
    if (eq == std::string::npos) throw UsageError("type hint must be column=kind, got '" + hint + "'");
    const auto kind = parse_attribute_kind(hint.substr(eq + 1));
    if (!kind) {
      throw UsageError("unknown attribute kind in '" + hint +
                       "' (expected numeric|categorical|ordinal)");
    }
    options.type_hints[hint.substr(0, eq)] = *kind;
  }
  return options;
}

// Estimator and bounding objective for searching `spec`. "top" on a level-2
// objective bounds it through a dominating level-1 objective.
SearchConfig search_config(const RunConfig& cfg, const ObjectiveSpec& spec) {
  SearchConfig sc;
  sc.approximation = cfg.a;
  sc.depth_limit = cfg.depth;
  sc.top_k = cfg.top_k;
  sc.language = parse_language(cfg.language);
  sc.node_budget = cfg.node_budget;
  if (cfg.time_budget_ms) sc.time_budget = std::chrono::milliseconds(*cfg.time_budget_ms);

  if (cfg.estimator == "auto") {
    sc.estimator = spec.is_dcc_form()   ? EstimatorKind::median_linear
                   : spec.level() == 1 ? EstimatorKind::top_sequence
                                       : EstimatorKind::median_general;
    return sc;
  }
  sc.estimator = parse_estimator(cfg.estimator);
  if (sc.estimator == EstimatorKind::top_sequence && spec.level() != 1) {
    sc.bound_objective = dominating_level1(spec);
    if (!sc.bound_objective) {
      throw UsageError("no level-1 bound known for objective '" + spec.name + "'");
    }
  }
  return sc;
}

json report_json(const SubgroupReport& r, std::size_t rank) {
  json j;
  j["rank"] = rank;
  j["selector"] = r.selector;
  j["ids"] = json::parse(r.ids);
  j["value"] = r.value;
  j["size"] = r.size;
  j["coverage"] = r.coverage;
  j["median"] = r.median;
  j["amd"] = r.amd;
  j["mean"] = r.mean;
  j["variance"] = optional_number(r.variance);
  j["epsilon"] = optional_number(r.epsilon);
  j["lcb"] = optional_number(r.lcb);
  j["lcb_score"] = optional_number(r.lcb_score);
  return j;
}

// Fixed CSV column order of the discover report.
const char* const kCsvHeader =
    "rank,selector,ids,value,size,coverage,median,amd,mean,variance,epsilon,lcb,lcb_score";

int cmd_discover(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "text") {
    throw UsageError("unknown format '" + cfg.format + "' (expected json|csv|text)");
  }
  const ObjectiveSpec spec = parse_objective(cfg.objective);
  SearchConfig sc = search_config(cfg, spec);
  const Binning binning = parse_binning(cfg.binning);
  if (cfg.cuts < 1) throw UsageError("--cuts must be at least 1");

  const DataTable table = load_csv(cfg.input, cfg.target, load_options(cfg));
  if (table.dropped_rows() > 0) {
    err << "warning: dropped " << table.dropped_rows()
        << " rows with a missing or non-numeric target\n";
  }
  const PropositionPool pool = build_propositions(table, cfg.cuts, binning);

  std::optional<GlobalConfidence> confidence;
  try {
    confidence = GlobalConfidence::of(table.target(), cfg.delta);
  } catch (const UsageError&) {
    throw;
  } catch (const DataError& e) {
    err << "warning: no confidence bounds: " << e.what() << '\n';
  }

  std::ofstream trace_file;
  if (!cfg.trace.empty()) {
    trace_file.open(cfg.trace);
    if (!trace_file) throw DataError("cannot write trace file '" + cfg.trace + "'");
    sc.on_expand = [&trace_file](const ProgressRecord& p) {
      json line;
      line["nodes_expanded"] = p.nodes_expanded;
      line["incumbent_value"] = p.incumbent_value;
      line["queue_top_bound"] = p.queue_top_bound;
      line["depth"] = p.depth;
      trace_file << line.dump() << '\n';
    };
  }

  BranchAndBound search(table.target(), pool, spec, sc);
  for (const auto& w : search.objective().warnings()) err << "warning: " << w << '\n';
  const SearchOutcome outcome = search.run();

  std::vector<double> sorted(table.target().begin(), table.target().end());
  std::sort(sorted.begin(), sorted.end());
  const double global_median = median(sorted);
  const double global_amd = amd(sorted);

  std::vector<SubgroupReport> reports;
  for (const auto& r : outcome.results) {
    reports.push_back(
        make_report(r.selector, pool, table.target(), search.objective(), confidence, cfg.delta));
  }
  const double wall_ms = outcome.trace.wall_time.count() * 1000.0;

  if (cfg.format == "json") {
    json doc;
    doc["input"] = cfg.input;
    doc["target"] = table.target_name();
    doc["dropped_rows"] = table.dropped_rows();
    doc["propositions"] = pool.size();
    doc["config"] = {{"objective", spec.name},
                     {"language", std::string(to_string(sc.language))},
                     {"estimator", std::string(to_string(sc.estimator))},
                     {"bound_objective", search.bound_objective().name()},
                     {"a", cfg.a},
                     {"depth", cfg.depth ? json(*cfg.depth) : json(nullptr)},
                     {"top_k", cfg.top_k},
                     {"cuts", cfg.cuts},
                     {"binning", std::string(to_string(binning))},
                     {"delta", cfg.delta}};
    json global;
    global["size"] = table.rows();
    global["median"] = global_median;
    global["amd"] = global_amd;
    global["mean"] = mean(sorted);
    global["variance"] = confidence ? json(confidence->variance) : json(nullptr);
    global["epsilon"] = confidence ? json(confidence->epsilon) : json(nullptr);
    global["lcb"] = confidence ? json(confidence->lcb) : json(nullptr);
    doc["global"] = global;
    json results = json::array();
    for (std::size_t i = 0; i < reports.size(); ++i) results.push_back(report_json(reports[i], i + 1));
    doc["results"] = results;
    doc["trace"] = {{"nodes_expanded", outcome.trace.nodes_expanded},
                    {"nodes_enqueued", outcome.trace.nodes_enqueued},
                    {"nodes_evaluated", outcome.trace.nodes_evaluated},
                    {"wall_time_ms", wall_ms},
                    {"incomplete", outcome.incomplete}};
    out << doc.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "# rows=" << table.rows() << " median=" << fmt(global_median)
        << " amd=" << fmt(global_amd) << " nodes_expanded=" << outcome.trace.nodes_expanded
        << " wall_time_ms=" << fmt(wall_ms) << (outcome.incomplete ? " incomplete" : "") << '\n';
    out << kCsvHeader << '\n';
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto& r = reports[i];
      out << i + 1 << ',' << csv_escape(r.selector) << ',' << csv_escape(r.ids) << ','
          << fmt(r.value) << ',' << r.size << ',' << fmt(r.coverage) << ',' << fmt(r.median) << ','
          << fmt(r.amd) << ',' << fmt(r.mean) << ',' << optional_text(r.variance) << ','
          << optional_text(r.epsilon) << ',' << optional_text(r.lcb) << ','
          << optional_text(r.lcb_score) << '\n';
    }
  } else {
    out << "population: " << table.rows() << " rows, median " << fmt(global_median) << ", amd "
        << fmt(global_amd) << '\n';
    out << "search: " << spec.name << " over " << to_string(sc.language) << " with "
        << pool.size() << " propositions, estimator " << to_string(sc.estimator) << " on "
        << search.bound_objective().name() << ", a=" << fmt(cfg.a) << '\n';
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto& r = reports[i];
      out << '#' << i + 1 << "  " << r.selector << '\n';
      out << "    value " << fmt(r.value) << "  size " << r.size << "  coverage "
          << fmt(r.coverage) << "  median " << fmt(r.median) << "  amd " << fmt(r.amd)
          << "  mean " << fmt(r.mean);
      if (r.lcb_score) out << "  lcb_score " << fmt(*r.lcb_score);
      out << '\n';
    }
    out << "trace: " << outcome.trace.nodes_expanded << " nodes expanded, "
        << outcome.trace.nodes_enqueued << " enqueued, " << std::fixed << std::setprecision(3)
        << wall_ms << std::defaultfloat << " ms"
        << (outcome.incomplete ? " (incomplete)" : "") << '\n';
  }

  if (outcome.incomplete) {
    err << "warning: budget exhausted, results are the best found so far\n";
    return kIncomplete;
  }
  return kOk;
}

int cmd_bench(const RunConfig& cfg, bool from_fixture, std::ostream& out, std::ostream& err) {
  const ObjectiveSpec spec = parse_objective(cfg.objective);
  if (!spec.is_dcc_form()) {
    throw UsageError("bench compares bounds for dcc-based objectives (f1|dcb), got '" +
                     spec.name + "'");
  }
  if (cfg.cuts < 1) throw UsageError("--cuts must be at least 1");
  const Binning binning = parse_binning(cfg.binning);

  std::optional<DataTable> table;
  std::string dataset;
  if (from_fixture) {
    PlantedOptions po;
    po.rows = cfg.rows;
    if (cfg.rows < 2) throw UsageError("--rows must be at least 2");
    table.emplace(planted_fixture(cfg.seed, po));
    dataset = "planted";
  } else {
    if (cfg.target.empty()) throw UsageError("--target is required with --input");
    table.emplace(load_csv(cfg.input, cfg.target, load_options(cfg)));
    dataset = cfg.input;
  }
  const PropositionPool pool = build_propositions(*table, cfg.cuts, binning);

  RunConfig tight = cfg;
  tight.estimator = "linear";
  RunConfig loose = cfg;
  loose.estimator = "top";

  out << "dataset,seed,objective,estimator,bound_objective,optimum,nodes_expanded,"
         "nodes_enqueued,nodes_evaluated,wall_time_ms\n";
  std::vector<SearchOutcome> outcomes;
  bool incomplete = false;
  for (const RunConfig* run : {&tight, &loose}) {
    const SearchConfig sc = search_config(*run, spec);
    BranchAndBound search(table->target(), pool, spec, sc);
    SearchOutcome outcome = search.run();
    incomplete = incomplete || outcome.incomplete;
    const double optimum = outcome.results.empty() ? 0.0 : outcome.results.front().value;
    out << csv_escape(dataset) << ',' << (from_fixture ? std::to_string(cfg.seed) : "") << ','
        << spec.name << ',' << to_string(sc.estimator) << ',' << search.bound_objective().name()
        << ',' << fmt(optimum) << ',' << outcome.trace.nodes_expanded << ','
        << outcome.trace.nodes_enqueued << ',' << outcome.trace.nodes_evaluated << ','
        << fmt(outcome.trace.wall_time.count() * 1000.0) << '\n';
    outcomes.push_back(std::move(outcome));
  }

  if (incomplete) {
    err << "warning: budget exhausted, optima are not certified\n";
    return kIncomplete;
  }
  const auto best = [](const SearchOutcome& o) {
    return o.results.empty() ? 0.0 : o.results.front().value;
  };
  if (best(outcomes[0]) != best(outcomes[1])) {
    err << "error: optimum mismatch between estimators: " << fmt(best(outcomes[0])) << " vs "
        << fmt(best(outcomes[1])) << '\n';
    return kInvariant;
  }
  return kOk;
}

int cmd_check(const CheckOptions& options, std::ostream& out, std::ostream& err) {
  if (options.trials == 0) {
    err << "warning: --trials 0, nothing was checked\n";
    out << "PASS (vacuous)\n";
    return kOk;
  }
  bool ok = true;
  for (const auto& r : run_checks(options)) {
    if (r.passed) {
      out << "PASS " << r.name << " (" << r.trials << " trials)\n";
    } else {
      ok = false;
      out << "FAIL " << r.name << ": " << r.counterexample << '\n';
    }
  }
  return ok ? kOk : kInvariant;
}

int cmd_fixture(const RunConfig& cfg, std::ostream& out) {
  if (cfg.rows < 2) throw UsageError("--rows must be at least 2");
  PlantedOptions po;
  po.rows = cfg.rows;
  const DataTable table = planted_fixture(cfg.seed, po);
  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.input.empty()) {
    file.open(cfg.input);
    if (!file) throw DataError("cannot write '" + cfg.input + "'");
    sink = &file;
  }
  for (const auto& col : table.attributes()) *sink << col.name << ',';
  *sink << table.target_name() << '\n';
  for (std::size_t r = 0; r < table.rows(); ++r) {
    for (const auto& col : table.attributes()) {
      if (col.kind == AttributeKind::numeric) {
        *sink << fmt(*col.numbers[r]) << ',';
      } else {
        *sink << csv_escape(*col.labels[r]) << ',';
      }
    }
    *sink << fmt(table.target()[r]) << '\n';
  }
  return kOk;
}

void add_search_options(CLI::App& cmd, RunConfig& cfg) {
  cmd.add_option("--objective", cfg.objective, "impact|f0|f1|dcb")->capture_default_str();
  cmd.add_option("--language", cfg.language, "cnj|ccj")->capture_default_str();
  cmd.add_option("--a", cfg.a, "approximation factor in (0,1]")->capture_default_str();
  cmd.add_option("--depth", cfg.depth, "depth limit (refinement steps)");
  cmd.add_option("--cuts", cfg.cuts, "cutpoints per numeric attribute")->capture_default_str();
  cmd.add_option("--binning", cfg.binning, "frequency|width")->capture_default_str();
  cmd.add_option("--type", cfg.types, "column kind override, column=numeric|categorical|ordinal");
  cmd.add_option("--node-budget", cfg.node_budget, "stop after this many expansions");
  cmd.add_option("--time-budget", cfg.time_budget_ms, "stop after this many milliseconds");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"dcsd: optimal subgroup discovery for numeric targets"};
  app.require_subcommand(1);

  RunConfig discover_cfg;
  auto* discover = app.add_subcommand("discover", "search a CSV file for the best subgroups");
  discover->add_option("--input", discover_cfg.input, "CSV file")->required();
  discover->add_option("--target", discover_cfg.target, "numeric target column")->required();
  add_search_options(*discover, discover_cfg);
  discover->add_option("--estimator", discover_cfg.estimator, "auto|top|general|linear")
      ->capture_default_str();
  discover->add_option("--top-k", discover_cfg.top_k, "number of subgroups")->capture_default_str();
  discover->add_option("--delta", discover_cfg.delta, "confidence parameter")->capture_default_str();
  discover->add_option("--format", discover_cfg.format, "json|csv|text")->capture_default_str();
  discover->add_option("--trace", discover_cfg.trace, "write one JSON line per expansion");

  RunConfig bench_cfg;
  auto* bench = app.add_subcommand("bench", "compare the tight and the top-sequence bound");
  auto* bench_input = bench->add_option("--input", bench_cfg.input, "CSV file");
  bench->add_option("--target", bench_cfg.target, "numeric target column");
  bench->add_option("--seed", bench_cfg.seed, "planted fixture seed")->capture_default_str();
  bench->add_option("--rows", bench_cfg.rows, "planted fixture rows")->capture_default_str();
  add_search_options(*bench, bench_cfg);

  CheckOptions check_opts;
  auto* check = app.add_subcommand("check", "run randomized brute-force self checks");
  check->add_option("--trials", check_opts.trials, "instances per suite")->capture_default_str();
  check->add_option("--seed", check_opts.seed)->capture_default_str();
  check->add_option("--max-size", check_opts.max_size, "largest multiset")->capture_default_str();
  check->add_option("--max-props", check_opts.max_props, "largest proposition pool")
      ->capture_default_str();
  check->add_option("--window-radius", check_opts.window_radius)->group("");

  RunConfig fixture_cfg;
  auto* fixture = app.add_subcommand("fixture", "write a planted-pattern CSV");
  fixture->add_option("--seed", fixture_cfg.seed)->capture_default_str();
  fixture->add_option("--rows", fixture_cfg.rows)->capture_default_str();
  fixture->add_option("--output", fixture_cfg.input, "file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*discover) return cmd_discover(discover_cfg, out, err);
    if (*bench) return cmd_bench(bench_cfg, bench_input->count() == 0, out, err);
    if (*check) return cmd_check(check_opts, out, err);
    if (*fixture) return cmd_fixture(fixture_cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << '\n';
    return kDataError;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInvariant;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInvariant;
  }
  return kUsage;
}

}  // namespace dcsd::cli
