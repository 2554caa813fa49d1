#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "hitting/bounds.hpp"
#include "hitting/exact.hpp"
#include "hitting/flows.hpp"
#include "hitting/generators.hpp"
#include "hitting/graph_io.hpp"
#include "hitting/montecarlo.hpp"
#include "hitting/report.hpp"

namespace hitting::cli {

namespace {

constexpr double kNodeLawTol = 1e-10;
constexpr double kCycleTol = 1e-9;
constexpr double kReconstructTol = 1e-9;
constexpr double kIdentityTol = 1e-9;

/// A validation problem that should be reported without a stack of context.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double rel_gap(double a, double b) { return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b))); }

nlohmann::json manifest(const std::string& command, nlohmann::json parameters,
                        const std::vector<std::string>& inputs, std::uint64_t seed,
                        const std::vector<std::string>& outputs) {
  auto in = nlohmann::json::array();
  for (const auto& path : inputs) in.push_back({{"path", path}, {"sha256", sha256_hex(read_file(path))}});
  return {{"command", command},
          {"parameters", std::move(parameters)},
          {"inputs", in},
          {"seed", seed},
          {"version", kVersion},
          {"outputs", outputs}};
}

std::vector<std::string> outputs_of(const std::string& out_path, bool sidecar) {
  std::vector<std::string> outs;
  if (!out_path.empty()) {
    outs.push_back(out_path);
    if (sidecar) outs.push_back(out_path + ".manifest.json");
  }
  return outs;
}

void emit(const std::string& out_path, const std::string& text, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
  } else {
    write_file_atomic(out_path, text);
  }
}

void emit_with_sidecar(const std::string& out_path, const std::string& text, const nlohmann::json& m,
                       std::ostream& out) {
  emit(out_path, text, out);
  if (!out_path.empty()) write_file_atomic(out_path + ".manifest.json", m.dump(2) + "\n");
}

WeightedGraph prepared(const WeightedGraph& g) { return restrict_accessible(contract_targets(g)); }

struct FlowAudit {
  double node_law = 0.0;
  double reversibility = 0.0;
  std::size_t cycles = 0;
  double reconstruction = 0.0;
  double convex = 0.0;      // |sum alpha P_i - P| over S, R, Gamma
  double engine = 0.0;      // flow parameters against the linear solves
  double array_identity = 0.0;
  double visits_slack = 0.0;  // bound - R; negative means violated
  std::size_t min_length = 0;
  std::size_t distance = 0;
  double total_alpha = 0.0;
  FlowDecomposition decomposition;
  WalkParameters params;
  ArrayRepresentation array;

  bool ok() const {
    return node_law < kNodeLawTol && reversibility < kCycleTol && reconstruction < kReconstructTol &&
           convex < kIdentityTol && engine < kIdentityTol && array_identity < kIdentityTol &&
           visits_slack >= -1e-12 && (decomposition.components.empty() || min_length >= distance);
  }
};

FlowAudit audit_flow(const WeightedGraph& g, double beta, std::uint64_t seed) {
  FlowAudit a;
  const LossFlow f = build_flow(g, beta);
  a.node_law = verify_node_law(f);
  const auto cycles = sample_cycles(f, 64, seed);
  a.cycles = cycles.size();
  a.reversibility = verify_reversibility(f, cycles);
  a.params = flow_parameters(f);
  const auto exact = walk_parameters(g, beta);
  a.engine = std::max({rel_gap(a.params.S, exact.S), rel_gap(a.params.R, exact.R), rel_gap(a.params.Gamma, exact.Gamma)});

  a.decomposition = decompose(f);
  a.reconstruction = reconstruction_error(a.decomposition, f);
  a.total_alpha = a.decomposition.total_alpha();
  WalkParameters mix{beta, 0.0, 0.0, 0.0};
  a.min_length = std::numeric_limits<std::size_t>::max();
  for (const auto& c : a.decomposition.components) {
    const auto p = flow_parameters(c.flow);
    mix.S += c.alpha * p.S;
    mix.R += c.alpha * p.R;
    mix.Gamma += c.alpha * p.Gamma;
    a.min_length = std::min(a.min_length, c.path.size() - 1);
  }
  if (a.decomposition.dead_end) {
    const auto p = flow_parameters(a.decomposition.dead_end->flow);
    mix.S += a.decomposition.dead_end->alpha * p.S;
    mix.R += a.decomposition.dead_end->alpha * p.R;
    mix.Gamma += a.decomposition.dead_end->alpha * p.Gamma;
  }
  a.convex = std::max({rel_gap(mix.S, a.params.S), rel_gap(mix.R, a.params.R), rel_gap(mix.Gamma, a.params.Gamma)});
  const auto dist = origin_target_distance(g);
  a.distance = dist ? *dist : 0;
  if (a.decomposition.components.empty()) a.min_length = 0;

  a.array = array_representation(a.decomposition, beta);
  a.array_identity = std::max(rel_gap(a.array.survival(), a.params.S), rel_gap(a.array.gamma(), a.params.Gamma));
  a.visits_slack = a.array.visits_bound() - a.params.R;
  return a;
}

nlohmann::json audit_json(const FlowAudit& a) {
  return {{"node_law_residual", a.node_law},
          {"cycle_gap", a.reversibility},
          {"cycles_sampled", a.cycles},
          {"reconstruction_error", a.reconstruction},
          {"convex_combination_error", a.convex},
          {"engine_parameter_error", a.engine},
          {"array_identity_error", a.array_identity},
          {"visits_bound_slack", a.visits_slack},
          {"min_path_length", a.min_length},
          {"distance", a.distance},
          {"total_alpha", a.total_alpha},
          {"passed", a.ok()}};
}

// ---------------------------------------------------------------- commands

int cmd_analyze(const std::string& graph_path, const std::vector<double>& betas, const std::vector<double>& as,
                std::size_t horizon, const std::string& out_path, std::ostream& out) {
  const WeightedGraph g = read_graph_file(graph_path);
  AnalyzeOptions opt;
  opt.bounds.beta_grid = betas;
  opt.bounds.a_grid = as;
  opt.horizon = horizon;
  for (double b : betas) {
    if (!(b > 0.0 && b <= 1.0)) throw UsageError("--beta-grid values must lie in (0, 1]");
  }
  const auto dist = origin_target_distance(prepared(g));
  if (dist && *dist < 2) throw UsageError("degenerate distance: dist(o,z) = 1 leaves no room for the bounds");

  nlohmann::json doc;
  doc["manifest"] = manifest("analyze", {{"beta_grid", betas}, {"a_grid", as}, {"horizon", horizon}}, {graph_path}, 0,
                             outputs_of(out_path, false));
  doc["report"] = analyze(g, opt);
  emit(out_path, doc.dump(2) + "\n", out);
  return doc["report"]["bounds"]["violations"].get<std::size_t>() > 0 ? kViolation : kSuccess;
}

int cmd_decompose(const std::string& graph_path, double beta, std::uint64_t seed, const std::string& out_path,
                  std::ostream& out) {
  if (!(beta > 0.0 && beta < 1.0)) throw UsageError("decompose needs 0 < --beta < 1; use analyze for beta = 1");
  const WeightedGraph g = prepared(read_graph_file(graph_path));
  const FlowAudit a = audit_flow(g, beta, seed);

  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : a.array.rows) rows.push_back({{"alpha", r.alpha}, {"length", r.length}, {"s", r.s}});
  nlohmann::json doc;
  doc["manifest"] = manifest("decompose", {{"beta", beta}}, {graph_path}, seed, outputs_of(out_path, false));
  doc["beta"] = beta;
  doc["parameters"] = {{"S", a.params.S}, {"R", a.params.R}, {"Gamma", a.params.Gamma}};
  doc["decomposition"] = to_json(a.decomposition, g);
  doc["array"] = {{"rows", rows},
                  {"survival", a.array.survival()},
                  {"gamma", a.array.gamma()},
                  {"visits_bound", a.array.visits_bound()}};
  doc["residuals"] = audit_json(a);
  emit(out_path, doc.dump(2) + "\n", out);
  return a.ok() ? kSuccess : kViolation;
}

struct GenerateArgs {
  std::string kind;
  std::size_t n = 0;
  double g = 0.0;
  double p = 0.0;
  std::size_t tail = 0;
  std::vector<unsigned> depths;
  std::size_t line_length = 0;
  std::vector<std::size_t> cuts;
  std::size_t first_cut = 0;
  std::size_t blocks = 0;
  std::uint64_t seed = 0;
  std::size_t max_vertices = 0;
  std::size_t min_distance = 3;
  std::string out;
};

int cmd_generate(GenerateArgs a, std::ostream& out) {
  GeneratorSpec s;
  s.kind = a.kind;
  s.n = a.n;
  s.g = a.g;
  s.p = a.p;
  s.tail = a.tail;
  s.depths = a.depths;
  s.line_length = a.line_length;
  s.seed = a.seed;
  if (a.kind == "concatenated_fast" && a.cuts.empty() && a.first_cut != 0) {
    a.cuts = square_schedule(a.first_cut, std::max<std::size_t>(a.blocks, 1));
  }
  s.cuts = a.cuts;
  if (a.kind == "random") {
    s.random.max_vertices = a.max_vertices ? a.max_vertices : 12;
    s.random.min_distance = a.min_distance;
  } else {
    const std::size_t cap = a.max_vertices ? a.max_vertices : 2'000'000;
    s.max_vertices = cap;
    std::size_t need = 0;
    if (a.kind == "unit_path" || a.kind == "fast_path") need = a.n + 1;
    if (a.kind == "biased_line") need = a.n + a.tail + 1;
    if (a.kind == "concatenated_fast" && !a.cuts.empty()) need = a.cuts.back() + 1;
    if (need > cap) {
      throw UsageError("graph needs " + std::to_string(need) + " vertices; pass --max-vertices " +
                       std::to_string(need) + " or more");
    }
  }
  const WeightedGraph g = [&] {
    try {
      return generate(s);
    } catch (const std::length_error& e) {
      throw UsageError(std::string(e.what()) + "; raise --max-vertices");
    }
  }();
  nlohmann::json params = {{"kind", a.kind}, {"n", a.n},       {"g", a.g},       {"p", a.p},
                           {"tail", a.tail}, {"depths", a.depths}, {"line_length", a.line_length},
                           {"cuts", a.cuts}, {"max_vertices", a.max_vertices}, {"min_distance", a.min_distance}};
  if (a.kind == "concatenated_fast" && a.first_cut != 0) params["schedule"] = "x_i = x_{i-1}^2 (default)";
  const auto m = manifest("generate", params, {}, a.seed, outputs_of(a.out, true));
  emit_with_sidecar(a.out, serialize_graph(g), m, out);
  return kSuccess;
}

int cmd_simulate(const std::string& graph_path, const std::string& statistic, std::uint64_t seed, std::size_t reps,
                 std::size_t horizon, const std::vector<std::size_t>& record, unsigned threads,
                 const std::string& out_path, std::ostream& out) {
  const WeightedGraph g = read_graph_file(graph_path);
  SimConfig c;
  c.seed = seed;
  c.replications = reps;
  c.max_steps = horizon;
  c.record_steps = record;
  c.threads = threads;
  std::string csv;
  nlohmann::json summary;
  if (statistic == "hitting") {
    c.estimator = Estimator::HittingTime;
    const auto samples = simulate_hitting(g, c);
    csv = hitting_csv(samples);
    summary = {{"mean", json_number(samples.mean())},
               {"standard_error", json_number(samples.standard_error())},
               {"censored", samples.censored_count()}};
  } else if (statistic == "speed" || statistic == "single-log") {
    c.estimator = statistic == "speed" ? Estimator::SpeedRatio : Estimator::SingleLogRatio;
    const auto s = escape_ratios(g, c);
    csv = escape_csv(s);
    summary = {{"steps", s.steps}, {"mean_ratio", s.mean_ratio}, {"mean_running_max", s.mean_running_max}};
  } else {
    throw UsageError("--statistic must be hitting, speed or single-log");
  }
  const auto m = manifest("simulate",
                          {{"statistic", statistic}, {"reps", reps}, {"horizon", horizon}, {"record", record}},
                          {graph_path}, seed, outputs_of(out_path, true));
  emit_with_sidecar(out_path, csv, m, out);
  if (!out_path.empty()) out << nlohmann::json{{"summary", summary}}.dump(2) << "\n";
  return kSuccess;
}

int cmd_sweep(const std::string& family, double p, const std::vector<std::size_t>& ns, std::size_t cap, bool exact,
              const std::string& out_path, std::ostream& out) {
  if (family != "fast_path" && family != "unit_path") throw UsageError("--family must be fast_path or unit_path");
  if (ns.empty()) throw UsageError("--n-list is empty");
  for (std::size_t n : ns) {
    if (exact && n + 1 > cap) {
      throw UsageError("exact solve for n = " + std::to_string(n) + " needs --max-vertices " + std::to_string(n + 1) +
                       " or more");
    }
  }
  std::ostringstream csv;
  csv << "n,g_minus_1,closed_form_ET,exact_ET,mean_bound,ratio_to_asymptotic\n";
  for (std::size_t n : ns) {
    const double nn = static_cast<double>(n);
    double delta = 0.0, closed = 0.0, log_ratio = 0.0;
    if (family == "fast_path") {
      if (n < 4) throw UsageError("fast_path needs n >= 4");
      delta = polyg_excess(nn, p);
      closed = fast_path_mean(n, delta);
      log_ratio = 2.0 * std::log(delta) + (nn - 3.0) * std::log1p(delta);
    } else {
      if (n < 2) throw UsageError("unit_path sweep needs n >= 2");
      closed = nn * nn;
    }
    std::string exact_cell;
    if (n + 1 <= cap) {
      const WeightedGraph g = family == "fast_path" ? fast_path_excess(n, delta) : unit_path(n);
      exact_cell = format_double(expected_hitting_time(g));
    }
    const double bound = mean_lower_bound(n - 1, solve_volume_g(n - 1, std::exp(log_ratio)));
    csv << n << "," << (family == "fast_path" ? format_double(delta) : "") << "," << format_double(closed) << ","
        << exact_cell << "," << format_double(bound) << "," << format_double(closed / poly_mean_asymptotic(nn, p))
        << "\n";
  }
  const auto m = manifest("sweep", {{"family", family}, {"p", p}, {"n_list", ns}, {"max_vertices", cap}, {"exact", exact}},
                          {}, 0, outputs_of(out_path, true));
  emit_with_sidecar(out_path, csv.str(), m, out);
  return kSuccess;
}

int cmd_corpus_check(const CorpusCheckOptions& opt, const std::string& out_path, std::ostream& out) {
  nlohmann::json doc;
  doc["manifest"] = manifest("corpus-check",
                             {{"count", opt.count},
                              {"max_vertices", opt.max_vertices},
                              {"min_distance", opt.min_distance},
                              {"flow_betas", opt.flow_betas}},
                             {}, opt.seed, outputs_of(out_path, false));
  doc["result"] = corpus_check(opt);
  emit(out_path, doc.dump(2) + "\n", out);
  return doc["result"]["violations"].get<std::size_t>() > 0 ? kViolation : kSuccess;
}

}  // namespace

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int{md[i]};
  return hex.str();
}

WeightedGraph swap_endpoints(const WeightedGraph& g) {
  if (g.targets().size() != 1) throw std::invalid_argument("swap_endpoints needs a single target");
  GraphBuilder b;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    b.add_vertex(g.label(x));
    for (const Arc& a : g.neighbors(x)) {
      if (a.to >= x) b.add_edge(g.label(x), g.label(a.to), a.weight);
    }
  }
  b.set_origin(g.label(g.targets().front()));
  b.add_target(g.label(g.origin()));
  return b.build();
}

nlohmann::json corpus_check(const CorpusCheckOptions& opt) {
  RandomGraphOptions ro;
  ro.max_vertices = opt.max_vertices;
  ro.min_distance = opt.min_distance;
  std::size_t bound_checks = 0, bound_violations = 0, flow_violations = 0, commute_violations = 0;
  double worst_commute = 0.0, worst_node = 0.0, worst_cycle = 0.0, worst_reconstruct = 0.0, worst_identity = 0.0;
  std::vector<std::uint64_t> failing;
  for (std::size_t i = 0; i < opt.count; ++i) {
    const std::uint64_t seed = opt.seed + i;
    const WeightedGraph g = random_graph(seed, ro);
    bool bad = false;

    const auto report = check_hitting_bounds(g);
    bound_checks += report.checks.size();
    bound_violations += report.violations();
    bad |= report.violations() > 0;

    for (double beta : opt.flow_betas) {
      const FlowAudit a = audit_flow(g, beta, seed);
      worst_node = std::max(worst_node, a.node_law);
      worst_cycle = std::max(worst_cycle, a.reversibility);
      worst_reconstruct = std::max(worst_reconstruct, a.reconstruction);
      worst_identity = std::max({worst_identity, a.convex, a.engine, a.array_identity});
      if (!a.ok()) {
        ++flow_violations;
        bad = true;
      }
    }

    double total = 0.0;
    for (Vertex x = 0; x < g.vertex_count(); ++x) total += vertex_weight(g, x);
    const double commute = expected_hitting_time(g) + expected_hitting_time(swap_endpoints(g));
    const double gap = rel_gap(commute, total * effective_resistance(g));
    worst_commute = std::max(worst_commute, gap);
    if (gap >= kIdentityTol) {
      ++commute_violations;
      bad = true;
    }
    if (bad) failing.push_back(seed);
  }
  return {{"graphs", opt.count},
          {"bound_checks", bound_checks},
          {"bound_violations", bound_violations},
          {"flow_violations", flow_violations},
          {"commute_violations", commute_violations},
          {"max_node_law_residual", worst_node},
          {"max_cycle_gap", worst_cycle},
          {"max_reconstruction_error", worst_reconstruct},
          {"max_identity_error", worst_identity},
          {"max_commute_error", worst_commute},
          {"failing_seeds", failing},
          {"violations", bound_violations + flow_violations + commute_violations}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hitting times of random walks on weighted graphs: exact values, bounds, flows, simulation."};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string graph_path, out_path;
  std::vector<double> betas, as;
  std::size_t horizon = 0;
  auto* analyze_cmd = app.add_subcommand("analyze", "Exact statistics and bound checks for a graph file");
  analyze_cmd->add_option("graph", graph_path, "Graph file")->required();
  analyze_cmd->add_option("--beta-grid", betas, "Comma-separated beta values")->delimiter(',');
  analyze_cmd->add_option("--a-grid", as, "Comma-separated tail parameters a")->delimiter(',');
  analyze_cmd->add_option("--horizon", horizon, "Steps of hitting-time pmf (0: automatic)");
  analyze_cmd->add_option("--out", out_path, "Output file");

  double beta = 0.5;
  std::uint64_t seed = 0;
  auto* decompose_cmd = app.add_subcommand("decompose", "Loss-flow decomposition with law checks");
  decompose_cmd->add_option("graph", graph_path, "Graph file")->required();
  decompose_cmd->add_option("--beta", beta, "Loss factor in (0, 1)")->required();
  decompose_cmd->add_option("--seed", seed, "Seed for cycle sampling");
  decompose_cmd->add_option("--out", out_path, "Output file");

  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand("generate", "Write a graph file from a named family");
  generate_cmd->add_option("kind", gen.kind, "unit_path | biased_line | fast_path | recurrent_tree_line | "
                                             "concatenated_fast | random")
      ->required();
  generate_cmd->add_option("--n", gen.n, "Path length");
  generate_cmd->add_option("--g", gen.g, "Growth parameter (fast_path: omit to derive from --p)");
  generate_cmd->add_option("--p", gen.p, "Boundary growth power");
  generate_cmd->add_option("--tail", gen.tail, "Vertices behind the origin (biased_line)");
  generate_cmd->add_option("--depths", gen.depths, "Tree depths along the line")->delimiter(',');
  generate_cmd->add_option("--line-length", gen.line_length, "Line vertices (recurrent_tree_line)");
  generate_cmd->add_option("--cuts", gen.cuts, "Cut points (concatenated_fast)")->delimiter(',');
  generate_cmd->add_option("--first-cut", gen.first_cut, "First cut of the squaring schedule");
  generate_cmd->add_option("--blocks", gen.blocks, "Blocks in the squaring schedule");
  generate_cmd->add_option("--seed", gen.seed, "Seed (random)");
  generate_cmd->add_option("--max-vertices", gen.max_vertices, "Vertex cap (random: graph size)");
  generate_cmd->add_option("--min-distance", gen.min_distance, "Minimum dist(o,z) (random)");
  generate_cmd->add_option("--out", gen.out, "Output file");

  std::string statistic = "hitting";
  std::size_t reps = 1000, max_steps = 1'000'000;
  std::vector<std::size_t> record;
  unsigned threads = 0;
  auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo samples as CSV");
  simulate_cmd->add_option("graph", graph_path, "Graph file")->required();
  simulate_cmd->add_option("--statistic", statistic, "hitting | speed | single-log");
  simulate_cmd->add_option("--seed", seed, "Seed");
  simulate_cmd->add_option("--reps", reps, "Replications");
  simulate_cmd->add_option("--horizon", max_steps, "Censoring step count");
  simulate_cmd->add_option("--record", record, "Steps at which |X_k| is recorded")->delimiter(',');
  simulate_cmd->add_option("--threads", threads, "Worker threads (0: all cores)");
  simulate_cmd->add_option("--out", out_path, "Output file");

  std::string family = "fast_path";
  double p = 0.0;
  std::vector<std::size_t> ns;
  std::size_t cap = 2'000'000;
  bool exact = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "Mean hitting times along a family as CSV");
  sweep_cmd->add_option("--family", family, "fast_path | unit_path");
  sweep_cmd->add_option("--p", p, "Boundary growth power");
  sweep_cmd->add_option("--n-list", ns, "Comma-separated path lengths")->required()->delimiter(',');
  sweep_cmd->add_option("--max-vertices", cap, "Largest graph solved exactly");
  sweep_cmd->add_flag("--exact", exact, "Refuse instead of skipping exact solves above the cap");
  sweep_cmd->add_option("--out", out_path, "Output file");

  CorpusCheckOptions corpus;
  auto* corpus_cmd = app.add_subcommand("corpus-check", "Property suite over a seeded random corpus");
  corpus_cmd->add_option("--seed", corpus.seed, "First seed");
  corpus_cmd->add_option("--count", corpus.count, "Number of graphs");
  corpus_cmd->add_option("--max-vertices", corpus.max_vertices, "Largest graph");
  corpus_cmd->add_option("--min-distance", corpus.min_distance, "Minimum dist(o,z)");
  corpus_cmd->add_option("--beta-grid", corpus.flow_betas, "Loss factors for the flow checks")->delimiter(',');
  corpus_cmd->add_option("--out", out_path, "Output file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kValidationFailure;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(graph_path, betas, as, horizon, out_path, out);
    if (*decompose_cmd) return cmd_decompose(graph_path, beta, seed, out_path, out);
    if (*generate_cmd) return cmd_generate(gen, out);
    if (*simulate_cmd) return cmd_simulate(graph_path, statistic, seed, reps, max_steps, record, threads, out_path, out);
    if (*sweep_cmd) return cmd_sweep(family, p, ns, cap, exact, out_path, out);
    if (*corpus_cmd) return cmd_corpus_check(corpus, out_path, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kValidationFailure;
  }
  return kValidationFailure;
}

}  // namespace hitting::cli
