// Copyright 2026 The disagree-kit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.h"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "disagree/approx_delta.h"
#include "disagree/dynamics.h"
#include "disagree/edge_list.h"
#include "disagree/errors.h"
#include "disagree/generators.h"
#include "disagree/parallel.h"
#include "disagree/serialize.h"
#include "disagree/spectral.h"
#include "disagree/validation.h"
#include "disagree/walk_sampler.h"

namespace disagree::cli {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr double kCostWarningSteps = 1e10;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << v;
  return s.str();
}

// A graph ready for the estimators: the largest component of the input,
// with the original ids of its nodes.
struct PreparedGraph {
  std::string name;
  WeightedGraph graph;
  std::vector<std::uint64_t> ids;
  bool bipartite = false;
  std::vector<std::string> warnings;
};

PreparedGraph prepare(std::string name, WeightedGraph g, std::vector<std::uint64_t> ids) {
  PreparedGraph pg;
  pg.name = std::move(name);
  const GraphValidation v = validate(g);
  if (v.lcc_nodes) {
    const auto& keep = *v.lcc_nodes;
    pg.warnings.push_back("graph has " + std::to_string(v.component_count) +
                          " components; using the largest (" + std::to_string(keep.size()) +
                          " of " + std::to_string(g.node_count()) + " nodes)");
    std::vector<std::uint64_t> kept_ids;
    for (NodeId u : keep) kept_ids.push_back(ids.empty() ? u : ids[u]);
    pg.graph = induced_subgraph(g, keep);
    pg.ids = std::move(kept_ids);
    pg.bipartite = validate(pg.graph).bipartite;
  } else {
    pg.graph = std::move(g);
    pg.ids = std::move(ids);
    pg.bipartite = v.bipartite;
  }
  if (pg.ids.empty()) {
    for (NodeId u = 0; u < pg.graph.node_count(); ++u) pg.ids.push_back(u);
  }
  return pg;
}

PreparedGraph load_graph(const std::string& path) {
  LoadedGraph loaded = load_edge_list_file(path);
  return prepare(path, std::move(loaded.graph), std::move(loaded.original_ids));
}

void require_ergodic(const PreparedGraph& pg, const std::string& method) {
  if (pg.bipartite) {
    throw DomainError("graph is bipartite; method '" + method +
                      "' needs an ergodic two-step walk");
  }
}

// ---------------------------------------------------------------------------
// Method options and runners.

struct SampleOptions {
  double epsilon = 0.25;
  std::optional<double> lambda_bound;
  bool estimate_gap = false;
  std::size_t gap_iterations = 2000;
  std::optional<std::size_t> ell;
  std::optional<std::size_t> walks;
  std::optional<std::size_t> node_budget;
  bool reuse_walks = false;
  bool pseudocode_visits = false;
};

struct ApproxCliOptions {
  double epsilon = 0.25;
  double oversample = 1.0;
  std::size_t max_cg_iterations = 10000;
  std::optional<double> kappa_override;
};

struct DynamicsOptions {
  std::optional<std::size_t> burn_in;
  std::size_t horizon = 100000;
  std::size_t truncation_cap = 10000;
  std::size_t walks_per_target = 10000;
  std::string noise = "gaussian";
};

struct MethodResult {
  double value = 0.0;
  json body;
  std::vector<std::string> warnings;
  std::optional<SampleParams> sample_params;
};

SampleParams resolve_sample_params(const WeightedGraph& g, const SampleOptions& o,
                                   std::uint64_t seed, json& info,
                                   std::vector<std::string>& warnings) {
  const std::size_t n = g.node_count();
  std::optional<double> lambda = o.lambda_bound;
  if (!lambda && o.estimate_gap) {
    const GapEstimate gap = estimate_spectral_bound(g, o.gap_iterations, seed);
    info["gap_estimate"] = {{"lambda_hat", gap.lambda_hat},
                            {"lambda_bound", gap.lambda_bound},
                            {"iterations", gap.iterations}};
    lambda = gap.lambda_bound;
  }
  SampleParams p;
  if (lambda) {
    p = derive_params(n, o.epsilon, *lambda, &warnings);
  } else if (o.ell && o.node_budget) {
    p.epsilon = o.epsilon;
    p.lambda_bound = std::nan("");
  } else {
    throw UsageError("sample needs --lambda-bound or --estimate-gap (or both --ell and "
                     "--node-budget)");
  }
  if (o.ell) p.ell = *o.ell;
  if (!lambda || o.ell) p.walks_per_length = walks_per_length(n, p.ell, o.epsilon);
  if (o.walks) p.walks_per_length = *o.walks;
  if (o.node_budget) p.node_budget = std::min(*o.node_budget, n);
  p.seed = seed;
  p.reuse_walks = o.reuse_walks;
  p.counting = o.pseudocode_visits ? ReturnCounting::kPseudocodeVisits : ReturnCounting::kEndpoint;
  const double cost = sample_cost(p);
  if (cost > kCostWarningSteps) {
    std::ostringstream msg;
    msg << "expensive run: about " << std::setprecision(3) << cost
        << " walk steps (ell = " << p.ell << ", r = " << p.walks_per_length
        << ", |X| = " << p.node_budget << ")";
    warnings.push_back(msg.str());
  }
  return p;
}

MethodResult run_exact(const PreparedGraph& pg, bool bypass) {
  SpectralOptions so;
  so.allow_bipartite_pseudoinverse = bypass;
  const SpectralSummary s = decompose(pg.graph, so);
  const DisagreementExact d = exact_delta(pg.graph, s);
  MethodResult r;
  r.value = d.delta;
  r.warnings = d.warnings;
  json per_node = json::array();
  for (const NodeContribution& c : d.per_node) {
    json row = to_json(c);
    row["id"] = pg.ids[c.node];
    per_node.push_back(row);
  }
  r.body = {{"delta", d.delta},
            {"lambda", s.gap_bound},
            {"kemeny", exact_kemeny_two_step(s)},
            {"bipartite_bypass", bypass},
            {"per_node", per_node}};
  return r;
}

MethodResult run_sample(const PreparedGraph& pg, const SampleOptions& o, std::uint64_t seed) {
  require_ergodic(pg, "sample");
  MethodResult r;
  json info = json::object();
  const SampleParams p = resolve_sample_params(pg.graph, o, seed, info, r.warnings);
  const SampleDeltaResult s = sample_delta(pg.graph, p);
  r.value = s.estimate.delta;
  r.sample_params = p;
  r.warnings.insert(r.warnings.end(), s.estimate.warnings.begin(), s.estimate.warnings.end());
  r.body = {{"delta_hat", s.estimate.delta},
            {"kemeny_hat", s.kemeny},
            {"params", to_json(p)},
            {"sampled_nodes", s.estimate.per_node.size()}};
  r.body.update(info);
  return r;
}

MethodResult run_approx(const PreparedGraph& pg, const ApproxCliOptions& o, std::uint64_t seed) {
  require_ergodic(pg, "approx");
  ApproxOptions ao;
  ao.sparsify.oversample = o.oversample;
  ao.max_cg_iterations = o.max_cg_iterations;
  ao.kappa_override = o.kappa_override;
  const ApproxDeltaResult a = approx_delta(pg.graph, o.epsilon, seed, ao);
  MethodResult r;
  r.value = a.estimate.delta;
  r.warnings = a.estimate.warnings;
  r.body = {{"delta", a.estimate.delta},
            {"kemeny", a.kemeny},
            {"epsilon", o.epsilon},
            {"diagnostics", to_json(a.diagnostics)}};
  return r;
}

NoiseKind parse_noise(const std::string& s) {
  if (s == "gaussian") return NoiseKind::kGaussian;
  if (s == "rademacher") return NoiseKind::kRademacher;
  throw UsageError("unknown noise '" + s + "'");
}

MCConfig mc_config(const PreparedGraph& pg, const DynamicsOptions& o, std::uint64_t seed,
                   json& info) {
  MCConfig c;
  c.seed = seed;
  c.horizon = o.horizon;
  c.truncation_cap = o.truncation_cap;
  c.walks_per_target = o.walks_per_target;
  c.noise = parse_noise(o.noise);
  if (o.burn_in) {
    c.burn_in = *o.burn_in;
  } else {
    const GapEstimate gap = estimate_spectral_bound(pg.graph, 2000, seed);
    c.burn_in = default_burn_in(gap.lambda_hat);
    info["burn_in_from_lambda_hat"] = gap.lambda_hat;
  }
  return c;
}

MethodResult run_mc(const PreparedGraph& pg, const DynamicsOptions& o, std::uint64_t seed) {
  require_ergodic(pg, "mc");
  json info = json::object();
  const MCConfig c = mc_config(pg, o, seed, info);
  const MCResult m = simulate_mc_delta(pg.graph, c);
  MethodResult r;
  r.value = m.delta;
  r.warnings = m.warnings;
  r.body = {{"delta", m.delta},
            {"config", to_json(c)},
            {"truncation", {{"cap", c.truncation_cap},
                            {"max_rate", m.max_truncation_rate},
                            {"per_target", m.truncation_rate}}}};
  return r;
}

MethodResult run_simulate(const PreparedGraph& pg, const DynamicsOptions& o, std::uint64_t seed) {
  require_ergodic(pg, "simulate");
  json info = json::object();
  const MCConfig c = mc_config(pg, o, seed, info);
  const DynamicsResult d = simulate_noisy_degroot(pg.graph, c);
  MethodResult r;
  r.value = d.delta;
  r.warnings = d.warnings;
  r.body = {{"delta", d.delta},
            {"standard_error", d.standard_error},
            {"steps", d.steps},
            {"config", to_json(c)}};
  r.body.update(info);
  return r;
}

json run_record(const std::string& command, const std::string& method, const PreparedGraph& pg,
                std::uint64_t seed, double wall, MethodResult& r) {
  std::vector<std::string> warnings = pg.warnings;
  warnings.insert(warnings.end(), r.warnings.begin(), r.warnings.end());
  json rec = {{"command", command},
              {"method", method},
              {"graph", {{"path", pg.name},
                         {"nodes", pg.graph.node_count()},
                         {"edges", pg.graph.edge_count()}}},
              {"graph_fingerprint", hex64(graph_fingerprint(pg.graph))},
              {"seed", seed},
              {"timestamp", utc_timestamp()},
              {"wall_time_s", wall},
              {"result", r.value},
              {"warnings", warnings}};
  rec.update(r.body);
  return rec;
}

void emit(std::ostream& out, const std::string& format, const json& rec) {
  if (format == "json") {
    out << rec.dump(2) << '\n';
    return;
  }
  out << "command,method,graph_fingerprint,N,M,value,wall_time_s,seed\n";
  out << rec["command"].get<std::string>() << ',' << rec["method"].get<std::string>() << ','
      << rec["graph_fingerprint"].get<std::string>() << ',' << rec["graph"]["nodes"] << ','
      << rec["graph"]["edges"] << ',' << std::setprecision(17) << rec["result"].get<double>()
      << ',' << rec["wall_time_s"].get<double>() << ',' << rec["seed"] << '\n';
}

// ---------------------------------------------------------------------------
// Flag registration shared by compute, mc, simulate.

struct ComputeFlags {
  std::string file;
  std::string method;
  std::uint64_t seed = 0;
  std::string output = "json";
  bool bypass = false;
  SampleOptions sample;
  ApproxCliOptions approx;
  DynamicsOptions dynamics;
  double epsilon = 0.25;
};

void add_compute_flags(CLI::App* sub, ComputeFlags& f) {
  sub->add_option("--epsilon", f.epsilon, "Accuracy parameter")->check(CLI::PositiveNumber);
  sub->add_option("--seed", f.seed, "RNG seed");
  sub->add_option("--output", f.output, "Output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_flag("--bipartite-bypass", f.bypass,
                "Exact method only: drop the lambda = -1 eigenspace instead of failing");
  sub->add_option("--lambda-bound", f.sample.lambda_bound, "Upper bound on the spectral gap value")
      ->check(CLI::Range(0.0, 1.0));
  sub->add_flag("--estimate-gap", f.sample.estimate_gap, "Estimate the bound by power iteration");
  sub->add_option("--gap-iterations", f.sample.gap_iterations, "Power-iteration budget");
  sub->add_option("--ell", f.sample.ell, "Truncation length override")->check(CLI::PositiveNumber);
  sub->add_option("--walks", f.sample.walks, "Walks per length override")
      ->check(CLI::PositiveNumber);
  sub->add_option("--node-budget", f.sample.node_budget, "Sampled node count override")
      ->check(CLI::PositiveNumber);
  sub->add_flag("--reuse-walks", f.sample.reuse_walks, "One walk serves every length");
  sub->add_flag("--pseudocode-visits", f.sample.pseudocode_visits,
                "Debug: count visits instead of walk end points");
  sub->add_option("--oversample-c", f.approx.oversample, "Sparsifier oversampling constant")
      ->check(CLI::PositiveNumber);
  sub->add_option("--max-cg-iters", f.approx.max_cg_iterations, "Conjugate gradient cap");
  sub->add_option("--kappa-override", f.approx.kappa_override, "Solver tolerance override")
      ->check(CLI::PositiveNumber);
  sub->add_option("--burn-in", f.dynamics.burn_in, "Discarded DeGroot steps");
  sub->add_option("--horizon", f.dynamics.horizon, "Averaged DeGroot steps")
      ->check(CLI::PositiveNumber);
  sub->add_option("--truncation-cap", f.dynamics.truncation_cap, "Max moves per hitting walk")
      ->check(CLI::PositiveNumber);
  sub->add_option("--walks-per-target", f.dynamics.walks_per_target, "Hitting walks per node")
      ->check(CLI::PositiveNumber);
  sub->add_option("--noise", f.dynamics.noise, "Noise distribution")
      ->check(CLI::IsMember({"gaussian", "rademacher"}));
}

MethodResult dispatch(const std::string& method, const PreparedGraph& pg, ComputeFlags f) {
  f.sample.epsilon = f.epsilon;
  f.approx.epsilon = f.epsilon;
  if (method == "exact") return run_exact(pg, f.bypass);
  if (method == "sample") return run_sample(pg, f.sample, f.seed);
  if (method == "approx") return run_approx(pg, f.approx, f.seed);
  if (method == "mc") return run_mc(pg, f.dynamics, f.seed);
  if (method == "simulate") return run_simulate(pg, f.dynamics, f.seed);
  throw UsageError("unknown method '" + method + "'");
}

int cmd_compute(const ComputeFlags& f, const std::string& command, std::ostream& out) {
  const auto start = Clock::now();
  const PreparedGraph pg = load_graph(f.file);
  MethodResult r = dispatch(f.method, pg, f);
  emit(out, f.output, run_record(command, f.method, pg, f.seed, seconds_since(start), r));
  return kSuccess;
}

// ---------------------------------------------------------------------------
// gen

struct GenFlags {
  std::string family;
  std::optional<std::size_t> m0;
  std::size_t m = 2;
  std::optional<std::size_t> n;
  std::size_t d = 2;
  double p = 0.5;
  std::optional<unsigned> g;
  std::uint64_t seed = 0;
  std::string out_path;
};

GeneratorSpec gen_spec(const GenFlags& f) {
  auto need_n = [&] {
    if (!f.n) throw UsageError(f.family + " needs --n");
    return *f.n;
  };
  GeneratorSpec spec;
  spec.seed = f.seed;
  if (f.family == "ba") {
    spec.params = BaParams{f.m0.value_or(std::max<std::size_t>(f.m, 3)), f.m, need_n()};
  } else if (f.family == "apollonian") {
    spec.params = ApollonianParams{f.d, need_n()};
  } else if (f.family == "gsw") {
    spec.params = GswParams{f.p, need_n()};
  } else {
    if (!f.g) throw UsageError("psfw needs --g");
    spec.params = PsfwParams{*f.g};
  }
  return spec;
}

int cmd_gen(const GenFlags& f, std::ostream& out) {
  const GeneratorSpec spec = gen_spec(f);
  const WeightedGraph g = generate(spec);
  if (f.out_path.empty()) {
    write_edge_list(out, g);
    return kSuccess;
  }
  std::ofstream file(f.out_path);
  if (!file) throw DomainError("cannot write '" + f.out_path + "'");
  write_edge_list(file, g);
  json sidecar = to_json(spec);
  sidecar["nodes"] = g.node_count();
  sidecar["edges"] = g.edge_count();
  sidecar["graph_fingerprint"] = hex64(graph_fingerprint(g));
  std::ofstream(f.out_path + ".json") << sidecar.dump(2) << '\n';
  return kSuccess;
}

// ---------------------------------------------------------------------------
// kemeny

struct KemenyFlags {
  std::string file;
  std::string method = "exact";
  std::optional<unsigned> psfw;
  ComputeFlags compute;
};

int cmd_kemeny(const KemenyFlags& f, std::ostream& out) {
  const auto start = Clock::now();
  json rec = {{"command", "kemeny"}, {"seed", f.compute.seed}, {"timestamp", utc_timestamp()}};
  if (f.psfw) {
    rec["method"] = "closed-form";
    rec["psfw_g"] = *f.psfw;
    rec["kemeny"] = psfw_kemeny_closed_form(*f.psfw);
    rec["nodes"] = psfw_node_count(*f.psfw);
    rec["wall_time_s"] = seconds_since(start);
    out << rec.dump(2) << '\n';
    return kSuccess;
  }
  if (f.file.empty()) throw UsageError("kemeny needs a graph file or --psfw");
  const PreparedGraph pg = load_graph(f.file);
  MethodResult r = dispatch(f.method, pg, f.compute);
  double k = 0.0;
  if (f.method == "exact") k = r.body["kemeny"];
  if (f.method == "sample") k = r.body["kemeny_hat"];
  if (f.method == "approx") k = r.body["kemeny"];
  r.value = k;
  rec = run_record("kemeny", f.method, pg, f.compute.seed, seconds_since(start), r);
  rec["kemeny"] = k;
  rec.erase("per_node");
  out << rec.dump(2) << '\n';
  return kSuccess;
}

// ---------------------------------------------------------------------------
// sweep

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(12) << v;
  return s.str();
}

PreparedGraph sweep_graph(const json& entry, std::size_t index) {
  const std::string name = entry.value("name", "graph" + std::to_string(index));
  if (entry.contains("path")) {
    PreparedGraph pg = load_graph(entry["path"].get<std::string>());
    pg.name = name;
    return pg;
  }
  if (!entry.contains("generator")) throw UsageError("sweep graph needs 'path' or 'generator'");
  const json& gj = entry["generator"];
  GenFlags f;
  f.family = gj.at("family").get<std::string>();
  if (gj.contains("m0")) f.m0 = gj["m0"].get<std::size_t>();
  f.m = gj.value("m", f.m);
  if (gj.contains("n")) f.n = gj["n"].get<std::size_t>();
  f.d = gj.value("d", f.d);
  f.p = gj.value("p", f.p);
  if (gj.contains("g")) f.g = gj["g"].get<unsigned>();
  f.seed = gj.value("seed", std::uint64_t{0});
  return prepare(name, generate(gen_spec(f)), {});
}

template <typename T>
void read_opt(const json& j, const char* key, std::optional<T>& dst) {
  if (j.contains(key) && !j[key].is_null()) dst = j[key].get<T>();
}

struct SweepRow {
  std::string text;
};

int cmd_sweep(const std::string& path, const std::string& out_path, std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open sweep config '" + path + "'");
  json cfg;
  try {
    cfg = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(0, std::string("sweep config: ") + e.what());
  }
  if (!cfg.is_object() || !cfg.contains("graphs") || !cfg["graphs"].is_array() ||
      cfg["graphs"].empty()) {
    throw UsageError("sweep config lists no graphs");
  }
  const std::vector<std::string> methods =
      cfg.value("methods", std::vector<std::string>{"exact", "sample", "approx"});
  if (methods.empty()) throw UsageError("sweep config lists no methods");
  const std::vector<double> epsilons =
      cfg.value("epsilons", std::vector<double>{0.35, 0.3, 0.25});
  const std::size_t trials = cfg.value("trials", std::size_t{20});
  const std::uint64_t seed = cfg.value("seed", std::uint64_t{0});
  const json sample_cfg = cfg.value("sample", json::object());
  const json approx_cfg = cfg.value("approx", json::object());
  const json dyn_cfg = cfg.value("dynamics", json::object());

  std::ofstream file;
  std::ostream* sink = &out;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw DomainError("cannot write '" + out_path + "'");
    sink = &file;
  }
  *sink << "graph,N,M,method,epsilon,trial,value,rel_error_vs_exact,wall_time_s,ell,walks,"
           "node_budget\n";

  for (std::size_t gi = 0; gi < cfg["graphs"].size(); ++gi) {
    const PreparedGraph pg = sweep_graph(cfg["graphs"][gi], gi);
    std::optional<double> exact, lambda;
    if (pg.graph.node_count() <= kDefaultDenseCap && !pg.bipartite) {
      const SpectralSummary s = decompose(pg.graph);
      exact = exact_delta(pg.graph, s).delta;
      lambda = s.gap_bound;
    }

    struct Cell {
      std::string method;
      std::optional<double> epsilon;
      std::size_t trial;
      std::uint64_t seed;
    };
    std::vector<Cell> cells;
    for (std::size_t mi = 0; mi < methods.size(); ++mi) {
      const std::string& m = methods[mi];
      const bool uses_eps = m == "sample" || m == "approx";
      const std::size_t reps = m == "exact" ? 1 : trials;
      const std::size_t eps_count = uses_eps ? epsilons.size() : 1;
      for (std::size_t ei = 0; ei < eps_count; ++ei) {
        for (std::size_t t = 0; t < reps; ++t) {
          cells.push_back({m, uses_eps ? std::optional(epsilons[ei]) : std::nullopt, t,
                           derive_seed(seed, {gi, mi, ei, t})});
        }
      }
    }

    std::vector<SweepRow> rows(cells.size());
    parallel_for(cells.size(), [&](std::size_t ci) {
      const Cell& cell = cells[ci];
      ComputeFlags f;
      f.seed = cell.seed;
      f.epsilon = cell.epsilon.value_or(0.25);
      if (cell.method == "sample") {
        const json& lb = sample_cfg.contains("lambda_bound") ? sample_cfg["lambda_bound"]
                                                             : json("estimate");
        if (lb.is_number()) {
          f.sample.lambda_bound = lb.get<double>();
        } else if (lb == "exact") {
          if (!lambda) throw UsageError("lambda_bound 'exact' needs a feasible exact run");
          f.sample.lambda_bound = *lambda;
        } else {
          f.sample.estimate_gap = true;
        }
        read_opt(sample_cfg, "ell", f.sample.ell);
        read_opt(sample_cfg, "walks", f.sample.walks);
        read_opt(sample_cfg, "node_budget", f.sample.node_budget);
        f.sample.reuse_walks = sample_cfg.value("reuse_walks", false);
      } else if (cell.method == "approx") {
        f.approx.oversample = approx_cfg.value("oversample_c", 1.0);
        f.approx.max_cg_iterations = approx_cfg.value("max_cg_iters", std::size_t{10000});
        read_opt(approx_cfg, "kappa_override", f.approx.kappa_override);
      } else if (cell.method == "mc" || cell.method == "simulate") {
        read_opt(dyn_cfg, "burn_in", f.dynamics.burn_in);
        f.dynamics.horizon = dyn_cfg.value("horizon", f.dynamics.horizon);
        f.dynamics.truncation_cap = dyn_cfg.value("truncation_cap", f.dynamics.truncation_cap);
        f.dynamics.walks_per_target =
            dyn_cfg.value("walks_per_target", f.dynamics.walks_per_target);
        f.dynamics.noise = dyn_cfg.value("noise", f.dynamics.noise);
      }
      const auto start = Clock::now();
      const MethodResult r = dispatch(cell.method, pg, f);
      const double wall = seconds_since(start);
      std::ostringstream row;
      row << csv_field(pg.name) << ',' << pg.graph.node_count() << ',' << pg.graph.edge_count()
          << ',' << cell.method << ',' << (cell.epsilon ? fmt(*cell.epsilon) : "") << ','
          << cell.trial << ',' << fmt(r.value) << ','
          << (exact ? fmt(std::abs(r.value - *exact) / *exact) : "") << ',' << fmt(wall) << ',';
      if (r.sample_params) {
        row << r.sample_params->ell << ',' << r.sample_params->walks_per_length << ','
            << r.sample_params->node_budget;
      } else {
        row << ",,";
      }
      rows[ci].text = row.str();
    });
    for (const SweepRow& row : rows) *sink << row.text << '\n';
  }
  return kSuccess;
}

// ---------------------------------------------------------------------------

int run_app(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Opinion disagreement estimators for graphs", "disagree-kit"};
  app.require_subcommand(1);

  GenFlags gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a model network edge list");
  gen_cmd->add_option("family", gen.family, "Network family")
      ->required()
      ->check(CLI::IsMember({"ba", "apollonian", "gsw", "psfw"}));
  gen_cmd->add_option("--m0", gen.m0, "BA seed cycle length (default max(m, 3))");
  gen_cmd->add_option("--m", gen.m, "BA edges per new node");
  gen_cmd->add_option("--n", gen.n, "Node count");
  gen_cmd->add_option("--d", gen.d, "Apollonian dimension");
  gen_cmd->add_option("--p", gen.p, "GSW edge-removal probability")->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--g", gen.g, "PSFW generation");
  gen_cmd->add_option("--seed", gen.seed, "RNG seed");
  gen_cmd->add_option("--out", gen.out_path, "Output edge list (a .json sidecar is written too)");

  ComputeFlags compute;
  CLI::App* compute_cmd = app.add_subcommand("compute", "Estimate disagreement on a graph file");
  compute_cmd->add_option("file", compute.file, "Edge list")->required();
  compute_cmd->add_option("method", compute.method, "Estimator")
      ->required()
      ->check(CLI::IsMember({"exact", "sample", "approx", "mc", "simulate"}));
  add_compute_flags(compute_cmd, compute);

  ComputeFlags mc, simulate;
  CLI::App* mc_cmd = app.add_subcommand("mc", "Alias for 'compute <file> mc'");
  mc_cmd->add_option("file", mc.file, "Edge list")->required();
  add_compute_flags(mc_cmd, mc);
  CLI::App* sim_cmd = app.add_subcommand("simulate", "Alias for 'compute <file> simulate'");
  sim_cmd->add_option("file", simulate.file, "Edge list")->required();
  add_compute_flags(sim_cmd, simulate);

  KemenyFlags kemeny;
  CLI::App* kemeny_cmd = app.add_subcommand("kemeny", "Kemeny constant of the two-step graph");
  kemeny_cmd->add_option("file", kemeny.file, "Edge list");
  kemeny_cmd->add_option("--method", kemeny.method, "Estimator")
      ->check(CLI::IsMember({"exact", "sample", "approx"}));
  kemeny_cmd->add_option("--psfw", kemeny.psfw, "Closed form for PSFW generation g");
  add_compute_flags(kemeny_cmd, kemeny.compute);

  std::string sweep_config, sweep_out;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Run an experiment grid from a JSON config");
  sweep_cmd->add_option("config", sweep_config, "Sweep config")->required();
  sweep_cmd->add_option("--out", sweep_out, "CSV destination (default stdout)");

  std::vector<std::string> argv_store{"disagree-kit"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  if (*gen_cmd) return cmd_gen(gen, out);
  if (*compute_cmd) return cmd_compute(compute, "compute", out);
  if (*mc_cmd) {
    mc.method = "mc";
    return cmd_compute(mc, "mc", out);
  }
  if (*sim_cmd) {
    simulate.method = "simulate";
    return cmd_compute(simulate, "simulate", out);
  }
  if (*kemeny_cmd) return cmd_kemeny(kemeny, out);
  return cmd_sweep(sweep_config, sweep_out, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return run_app(args, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kDomain;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return kResource;
  } catch (const ConvergenceError& e) {
    err << "convergence error: " << e.what() << '\n';
    return kConvergence;
  } catch (const nlohmann::json::exception& e) {
    err << "usage error: malformed config: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace disagree::cli
