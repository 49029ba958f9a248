// Copyright 2026 The Authors.
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

// Command-line front end: loads an edge-list graph, runs one analysis
// subcommand, and prints a deterministic JSON report (sorted keys, numbers
// quantized to 12 significant digits). Exit codes: 0 success, 2 input
// error, 3 budget exceeded, 4 internal invariant violation.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json_report.hpp"
#include "spreadopt/spreadopt.hpp"

namespace {

using spreadopt::cli::emit;
using spreadopt::cli::family_json;
using spreadopt::cli::fixed_precision;
using spreadopt::cli::format_number;
using spreadopt::cli::json;
using spreadopt::cli::report_base;
using spreadopt::cli::set_json;
using spreadopt::cli::split_labels;

struct Options {
  std::string graph_file;
  std::string set_arg;
  std::string from;
  std::string method = "brute";
  std::string seed_source = "cover";
  std::string domain = "members";
  std::string csv_dir;
  double nu = 0.0;
  int cap = 0;  // 0 means derive from the matching cover
  int k = 0;
  int min_size = 1;
  long long walks = 100000;
  long long step_cap = 10000000;
  std::uint64_t budget = 10000000;
  std::uint64_t seed = 0;
  bool exact = false;
  bool no_certify = false;
  bool timing = false;
};

spreadopt::Graph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw spreadopt::InputError("cannot open graph file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  spreadopt::Graph g = spreadopt::Graph::parse(buffer.str());
  if (spreadopt::is_bipartite(g))
    std::fprintf(stderr,
                 "spreadopt: warning: graph is bipartite (periodic walk); "
                 "hitting times remain well-defined\n");
  return g;
}

int resolve_cap(const spreadopt::RankContext& ctx, const Options& opt) {
  return opt.cap > 0 ? opt.cap : ctx.cardinality;
}

void write_text_file(const std::filesystem::path& p, const std::string& body) {
  std::ofstream out(p, std::ios::binary);
  if (!out)
    throw spreadopt::InputError("cannot write output file: " + p.string());
  out << body;
}

std::filesystem::path prepare_csv_dir(const std::string& dir) {
  std::filesystem::path p(dir);
  std::error_code ec;
  std::filesystem::create_directories(p, ec);
  if (ec)
    throw spreadopt::InputError("cannot create output directory: " + dir);
  return p;
}

std::string join_labels(const spreadopt::Graph& g, const spreadopt::NodeSet& a,
                        char sep) {
  std::string out;
  bool leading = true;
  a.for_each([&](int v) {
    if (!leading) out += sep;
    out += g.label(v);
    leading = false;
  });
  return out;
}

json axioms_json(const spreadopt::Graph& g, const spreadopt::AxiomReport& rep) {
  json a;
  a["g1"] = rep.g1;
  a["g2"] = rep.g2;
  a["g3"] = rep.g3;
  if (rep.g2_counterexample)
    a["g2_counterexample"] = set_json(g, *rep.g2_counterexample);
  if (rep.g3_counterexample)
    a["g3_counterexample"] = {{"x", set_json(g, rep.g3_counterexample->first)},
                              {"y", set_json(g, rep.g3_counterexample->second)}};
  return a;
}

json class_summary_json(const spreadopt::NearOptimalClass& cls) {
  return {{"nu", fixed_precision(cls.nu)},
          {"cap", cls.cap},
          {"count", cls.members.size()},
          {"min_cardinality", cls.min_cardinality}};
}

std::string members_csv(const spreadopt::Graph& g,
                        const spreadopt::Objective& obj,
                        const spreadopt::NearOptimalClass& cls) {
  std::string out = "set,cardinality,objective,rank\n";
  for (const spreadopt::NodeSet& a : cls.members) {
    out += join_labels(g, a, ';');
    out += ',' + std::to_string(a.size());
    out += ',' + format_number(obj.F(a));
    out += ',' + format_number(rank(cls.ctx, obj, a));
    out += '\n';
  }
  return out;
}

// Seed family used by the cover strategy: the cardinality-m subsets of the
// matching cover that belong to the near-optimal class.
std::vector<spreadopt::NodeSet> cover_seeds(
    const spreadopt::NearOptimalClass& cls) {
  if (cls.min_cardinality == 0)
    throw spreadopt::EmptySeedFamilyError("near-optimal class is empty");
  std::vector<int> elems = cls.ctx.cover.elements();
  int m = cls.min_cardinality;
  int universe = cls.ctx.cover.universe();
  std::vector<spreadopt::NodeSet> seeds;
  if (m <= static_cast<int>(elems.size())) {
    std::vector<int> pick(m);
    for (int i = 0; i < m; ++i) pick[i] = i;
    do {
      spreadopt::NodeSet s(universe);
      for (int i : pick) s.add(elems[i]);
      if (cls.contains(s)) seeds.push_back(s);
    } while (spreadopt::detail::next_combination(
        pick, static_cast<int>(elems.size())));
  }
  if (seeds.empty())
    throw spreadopt::EmptySeedFamilyError(
        "no cardinality-" + std::to_string(m) +
        " subset of the matching cover lies in the class");
  return seeds;
}

json trace_json(const spreadopt::Graph& g,
                const spreadopt::ExtensionTrace& tr) {
  json steps = json::array();
  for (const spreadopt::ExtensionStep& st : tr.steps)
    steps.push_back({{"added", g.label(st.node)},
                     {"objective", fixed_precision(st.f_after)}});
  return {{"seed", set_json(g, tr.seed)},
          {"steps", steps},
          {"set", set_json(g, tr.final_set)},
          {"objective", fixed_precision(tr.final_f)},
          {"rank", fixed_precision(tr.final_rank)}};
}

std::string traces_csv(const spreadopt::Graph& g,
                       const std::vector<spreadopt::ExtensionTrace>& traces) {
  std::string out = "trace,seed,step,added,objective\n";
  for (std::size_t t = 0; t < traces.size(); ++t) {
    const spreadopt::ExtensionTrace& tr = traces[t];
    for (std::size_t s = 0; s < tr.steps.size(); ++s) {
      out += std::to_string(t);
      out += ',' + join_labels(g, tr.seed, ';');
      out += ',' + std::to_string(s);
      out += ',' + g.label(tr.steps[s].node);
      out += ',' + format_number(tr.steps[s].f_after);
      out += '\n';
    }
  }
  return out;
}

int run_objective(const Options& opt) {
  spreadopt::Graph g = load_graph(opt.graph_file);
  spreadopt::NodeSet a = g.set_of(split_labels(opt.set_arg));
  spreadopt::HittingProfile prof = spreadopt::hitting_times(g, a);
  double f = 0.0;
  json times = json::array();
  for (std::size_t i = 0; i < prof.outside.size(); ++i) {
    f += prof.times[i];
    times.push_back({{"node", g.label(prof.outside[i])},
                     {"time", fixed_precision(prof.times[i])}});
  }
  json report = report_base("objective", g, opt.seed);
  report["set"] = set_json(g, a);
  report["objective"] = fixed_precision(f);
  report["hitting"] = times;
  emit(report);
  return 0;
}

int run_hitting(const Options& opt) {
  spreadopt::Graph g = load_graph(opt.graph_file);
  spreadopt::NodeSet a = g.set_of(split_labels(opt.set_arg));
  spreadopt::HittingProfile prof = spreadopt::hitting_times(g, a);
  json times = json::array();
  for (std::size_t i = 0; i < prof.outside.size(); ++i)
    times.push_back({{"node", g.label(prof.outside[i])},
                     {"time", fixed_precision(prof.times[i])}});
  json report = report_base("hitting", g, opt.seed);
  report["set"] = set_json(g, a);
  report["times"] = times;
  emit(report);
  return 0;
}

int run_cover(const Options& opt) {
  spreadopt::Graph g = load_graph(opt.graph_file);
  spreadopt::Objective obj(g);
  spreadopt::MatchingCover mc = spreadopt::maximal_matching_cover(g);
  json matching = json::array();
  for (const auto& [u, v] : mc.matching)
    matching.push_back(json::array({g.label(u), g.label(v)}));
  json report = report_base("cover", g, opt.seed);
  report["matching"] = matching;
  report["cover"] = set_json(g, mc.cover);
  report["cardinality"] = mc.cardinality();
  report["objective"] = fixed_precision(obj.F(mc.cover));
  if (opt.exact) {
    spreadopt::NodeSet ec = spreadopt::exact_min_cover(g);
    report["exact"] = {
        {"cover", set_json(g, ec)},
        {"cardinality", ec.size()},
        {"matching_within_factor_two", mc.cardinality() <= 2 * ec.size()}};
  }
  emit(report);
  return 0;
}

int run_rank(const Options& opt) {
  spreadopt::Graph g = load_graph(opt.graph_file);
  spreadopt::Objective obj(g);
  spreadopt::RankContext ctx = spreadopt::rank_context(obj);
  spreadopt::NodeSet a = g.set_of(split_labels(opt.set_arg));
  json report = report_base("rank", g, opt.seed);
  report["set"] = set_json(g, a);
  report["rank"] = fixed_precision(spreadopt::rank(ctx, obj, a));
  if (!a.empty()) report["objective"] = fixed_precision(obj.F(a));
  report["beyond_cap"] = a.size() > ctx.cardinality;
  report["context"] = {{"cover", set_json(g, ctx.cover)},
                       {"cardinality", ctx.cardinality},
                       {"f_min", fixed_precision(ctx.f_min)},
                       {"f_max", fixed_precision(ctx.f_max)}};
  emit(report);
  return 0;
}

int run_class(const Options& opt) {
  spreadopt::Graph g = load_graph(opt.graph_file);
  spreadopt::Objective obj(g);
  spreadopt::RankContext ctx = spreadopt::rank_context(obj);
  spreadopt::NearOptimalClass cls = spreadopt::enumerate_class(
      obj, opt.nu, resolve_cap(ctx, opt), opt.budget);
  json members = json::array();
  for (const spreadopt::NodeSet& a : cls.members)
    members.push_back({{"set", set_json(g, a)},
                       {"objective", fixed_precision(obj.F(a))},
                       {"rank", fixed_precision(rank(cls.ctx, obj, a))}});
  json report = report_base("class", g, opt.seed);
  report["class"] = class_summary_json(cls);
  report["members"] = members;
  emit(report);
  if (!opt.csv_dir.empty()) {
    std::filesystem::path dir = prepare_csv_dir(opt.csv_dir);
    write_text_file(dir / "members.csv", members_csv(g, obj, cls));
  }
  return 0;
}

int run_solve(const Options& opt) {
  spreadopt::Graph g = load_graph(opt.graph_file);
  spreadopt::Objective obj(g);
  spreadopt::RankContext ctx = spreadopt::rank_context(obj);
  if (opt.k < 1 || opt.k > g.node_count())
    throw spreadopt::InvalidArgumentError("--k must lie in [1, N]");
  json report = report_base("solve", g, opt.seed);
  report["method"] = opt.method;
  report["k"] = opt.k;
  std::vector<spreadopt::ExtensionTrace> traces;

  if (opt.method == "brute") {
    spreadopt::BruteForceResult bf =
        spreadopt::brute_force_optimum(obj, opt.k, opt.budget);
    report["best"] = {{"set", set_json(g, bf.best)},
                      {"objective", fixed_precision(bf.f)},
                      {"rank", fixed_precision(rank(ctx, obj, bf.best))}};
  } else if (opt.method == "greedy") {
    spreadopt::ExtensionTrace tr = spreadopt::greedy(obj, ctx, opt.k);
    report["best"] = {{"set", set_json(g, tr.final_set)},
                      {"objective", fixed_precision(tr.final_f)},
                      {"rank", fixed_precision(tr.final_rank)}};
    report["trace"] = trace_json(g, tr);
    traces.push_back(std::move(tr));
  } else {  // seeded
    if (!(opt.nu > 0.0))
      throw spreadopt::InvalidArgumentError(
          "--method seeded requires --nu in (0, 1]");
    int cap = resolve_cap(ctx, opt);
    spreadopt::NearOptimalClass cls =
        spreadopt::enumerate_class(obj, opt.nu, cap, opt.budget);
    std::vector<spreadopt::NodeSet> seeds;
    if (opt.seed_source == "cover") {
      seeds = cover_seeds(cls);
    } else {
      spreadopt::GreedoidFamily fam = spreadopt::build_greedoid(cls);
      seeds = spreadopt::feasible_seeds(fam, cls.min_cardinality);
    }
    spreadopt::SearchOptions search;
    search.certify = !opt.no_certify;
    search.brute_budget = opt.budget;
    spreadopt::SearchResult sr =
        spreadopt::seeded_search(obj, ctx, seeds, opt.k, search);
    report["class"] = class_summary_json(cls);
    report["seed_source"] = opt.seed_source;
    report["seeds"] = family_json(g, seeds);
    json trace_arr = json::array();
    for (const spreadopt::ExtensionTrace& tr : sr.traces)
      trace_arr.push_back(trace_json(g, tr));
    report["traces"] = trace_arr;
    report["best"] = {{"set", set_json(g, sr.best)},
                      {"objective", fixed_precision(sr.best_f)},
                      {"rank", fixed_precision(sr.best_rank)}};
    json cert;
    cert["attempted"] = sr.certificate_attempted;
    cert["certified"] = sr.certified;
    if (sr.certificate_attempted)
      cert["optimal_objective"] = fixed_precision(sr.optimum_f);
    report["certificate"] = cert;
    traces = sr.traces;
  }
  emit(report);
  if (!opt.csv_dir.empty() && !traces.empty()) {
    std::filesystem::path dir = prepare_csv_dir(opt.csv_dir);
    write_text_file(dir / "traces.csv", traces_csv(g, traces));
  }
  return 0;
}

int run_greedoid(const Options& opt) {
  spreadopt::Graph g = load_graph(opt.graph_file);
  spreadopt::Objective obj(g);
  spreadopt::RankContext ctx = spreadopt::rank_context(obj);
  spreadopt::NearOptimalClass cls = spreadopt::enumerate_class(
      obj, opt.nu, resolve_cap(ctx, opt), opt.budget);
  json report = report_base("greedoid", g, opt.seed);
  report["class"] = class_summary_json(cls);
  std::string canonical;
  try {
    spreadopt::GreedoidFamily fam = spreadopt::build_greedoid(cls);
    json family = json::array();
    for (std::size_t i = 0; i < fam.feasible.size(); ++i) {
      const char* origin = fam.origin[i] == spreadopt::SetOrigin::kEmpty
                               ? "empty"
                               : fam.origin[i] == spreadopt::SetOrigin::kAugmentable
                                     ? "augmentable"
                                     : "member";
      family.push_back({{"set", set_json(g, fam.feasible[i])},
                        {"origin", origin}});
    }
    canonical = spreadopt::serialize_family(fam, g);
    report["status"] = "ok";
    report["family"] = family;
    report["axioms"] = axioms_json(g, fam.report);
    report["canonical"] = canonical;
  } catch (const spreadopt::ConstructionFailed& e) {
    report["status"] = "construction_failed";
    report["message"] = e.what();
    report["axioms"] = axioms_json(g, e.report());
  }
  emit(report);
  if (!opt.csv_dir.empty() && !canonical.empty()) {
    std::filesystem::path dir = prepare_csv_dir(opt.csv_dir);
    write_text_file(dir / "family.txt", canonical);
  }
  return 0;
}

spreadopt::CurvatureOptions curvature_options(const Options& opt) {
  spreadopt::CurvatureOptions copt;
  copt.domain = opt.domain == "all" ? spreadopt::KappaDomain::kAllSubsets
                                    : spreadopt::KappaDomain::kClassMembers;
  copt.budget = opt.budget;
  return copt;
}

json curvature_json(const spreadopt::Graph& g,
                    const spreadopt::RankContext& ctx,
                    const spreadopt::CurvatureReport& rep) {
  json c;
  c["kappa"] = fixed_precision(rep.kappa);
  if (rep.gamma) c["gamma"] = fixed_precision(*rep.gamma);
  c["samples"] = rep.samples;
  c["skipped"] = rep.skipped;
  c["extension_used"] = rep.max_used_extension;
  c["note"] = rep.domain_note;
  c["reference"] = set_json(g, ctx.cover);
  return c;
}

int run_curvature(const Options& opt) {
  spreadopt::Graph g = load_graph(opt.graph_file);
  spreadopt::Objective obj(g);
  spreadopt::RankContext ctx = spreadopt::rank_context(obj);
  spreadopt::NearOptimalClass cls = spreadopt::enumerate_class(
      obj, opt.nu, resolve_cap(ctx, opt), opt.budget);
  spreadopt::CurvatureReport rep =
      spreadopt::curvature_report(obj, cls, curvature_options(opt));
  json report = report_base("curvature", g, opt.seed);
  report["class"] = class_summary_json(cls);
  report["curvature"] = curvature_json(g, ctx, rep);
  emit(report);
  return 0;
}

int run_analyze(const Options& opt) {
  spreadopt::Graph g = load_graph(opt.graph_file);
  spreadopt::Objective obj(g);
  spreadopt::RankContext ctx = spreadopt::rank_context(obj);
  int cap = resolve_cap(ctx, opt);
  spreadopt::NearOptimalClass cls =
      spreadopt::enumerate_class(obj, opt.nu, cap, opt.budget);
  json report = report_base("analyze", g, opt.seed);
  report["class"] = class_summary_json(cls);

  std::string canonical;
  json greedoid;
  try {
    spreadopt::GreedoidFamily fam = spreadopt::build_greedoid(cls);
    canonical = spreadopt::serialize_family(fam, g);
    greedoid["status"] = "ok";
    greedoid["family_size"] = fam.feasible.size();
    greedoid["axioms"] = axioms_json(g, fam.report);
  } catch (const spreadopt::ConstructionFailed& e) {
    greedoid["status"] = "construction_failed";
    greedoid["message"] = e.what();
    greedoid["axioms"] = axioms_json(g, e.report());
  }
  report["greedoid"] = greedoid;

  std::string tradeoff_csv = "nu,r,m,bound\n";
  json curvature;
  json tradeoff_rows = json::array();
  try {
    spreadopt::CurvatureReport rep =
        spreadopt::curvature_report(obj, cls, curvature_options(opt));
    curvature = curvature_json(g, ctx, rep);
    double gamma = rep.gamma.value();
    for (int i = 10; i <= 20; ++i) {
      double nu_i = 0.05 * i;
      spreadopt::TradeoffResult tr =
          spreadopt::tradeoff(gamma, rep.kappa, cap, nu_i);
      tradeoff_rows.push_back(
          {{"nu", fixed_precision(nu_i)},
           {"r", tr.r_of_nu},
           {"m", tr.m_of_nu},
           {"bound", fixed_precision(tr.bound_value(tr.r_of_nu))}});
      tradeoff_csv += format_number(nu_i);
      tradeoff_csv += ',' + std::to_string(tr.r_of_nu);
      tradeoff_csv += ',' + std::to_string(tr.m_of_nu);
      tradeoff_csv += ',' + format_number(tr.bound_value(tr.r_of_nu));
      tradeoff_csv += '\n';
    }
    spreadopt::TradeoffResult at_nu =
        spreadopt::tradeoff(gamma, rep.kappa, cap, opt.nu);
    report["tradeoff_at_nu"] = {{"nu", fixed_precision(opt.nu)},
                                {"r", at_nu.r_of_nu},
                                {"m", at_nu.m_of_nu}};
  } catch (const spreadopt::NoValidPairsError& e) {
    curvature["status"] = "no_valid_pairs";
    curvature["message"] = e.what();
  }
  report["curvature"] = curvature;
  report["tradeoff"] = tradeoff_rows;
  emit(report);

  if (!opt.csv_dir.empty()) {
    std::filesystem::path dir = prepare_csv_dir(opt.csv_dir);
    write_text_file(dir / "members.csv", members_csv(g, obj, cls));
    write_text_file(dir / "tradeoff.csv", tradeoff_csv);
    if (!canonical.empty()) write_text_file(dir / "family.txt", canonical);
  }
  return 0;
}

int run_simulate(const Options& opt) {
  spreadopt::Graph g = load_graph(opt.graph_file);
  spreadopt::NodeSet a = g.set_of(split_labels(opt.set_arg));
  int start = g.index_of(opt.from);
  spreadopt::McEstimate est =
      spreadopt::mc_hitting(g, a, start, opt.walks, opt.seed, opt.step_cap);
  double exact = spreadopt::hitting_times(g, a).time(start);
  json report = report_base("simulate", g, opt.seed);
  report["set"] = set_json(g, a);
  report["from"] = opt.from;
  report["walks"] = est.walks;
  report["mean"] = fixed_precision(est.mean);
  report["std_error"] = fixed_precision(est.std_error);
  report["exact"] = fixed_precision(exact);
  if (est.std_error > 0.0)
    report["z_score"] =
        fixed_precision(std::fabs(est.mean - exact) / est.std_error);
  emit(report);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spreader-set analysis under random-walk hitting times"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--graph", opt.graph_file, "edge-list graph file")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--seed", opt.seed, "random seed (echoed in the report)");
    sub->add_flag("--timing", opt.timing, "print wall time to stderr");
  };
  auto add_class_opts = [&](CLI::App* sub, bool nu_required) {
    CLI::Option* nu =
        sub->add_option("--nu", opt.nu, "rank threshold in (0, 1]");
    if (nu_required) nu->required();
    CLI::Option* c = sub->add_option(
        "--c", opt.cap, "cardinality cap (default: matching-cover size)");
    CLI::Option* c_auto = sub->add_flag(
        "--c-auto", "derive the cap from the matching cover (default)");
    c->excludes(c_auto);
    c_auto->excludes(c);
    sub->add_option("--budget", opt.budget, "subset enumeration budget");
  };

  CLI::App* cmd_objective =
      app.add_subcommand("objective", "spread objective of a node set");
  add_common(cmd_objective);
  cmd_objective->add_option("--set", opt.set_arg, "comma-separated labels")
      ->required();

  CLI::App* cmd_hitting =
      app.add_subcommand("hitting", "expected hitting times into a node set");
  add_common(cmd_hitting);
  cmd_hitting->add_option("--set", opt.set_arg, "comma-separated labels")
      ->required();

  CLI::App* cmd_cover =
      app.add_subcommand("cover", "matching-based vertex cover");
  add_common(cmd_cover);
  cmd_cover->add_flag("--exact", opt.exact,
                      "also compute an exact minimum cover (N <= 30)");

  CLI::App* cmd_rank =
      app.add_subcommand("rank", "normalized quality of a node set");
  add_common(cmd_rank);
  cmd_rank->add_option("--set", opt.set_arg, "comma-separated labels")
      ->required();

  CLI::App* cmd_class =
      app.add_subcommand("class", "enumerate the near-optimal class");
  add_common(cmd_class);
  add_class_opts(cmd_class, true);
  cmd_class->add_option("--csv", opt.csv_dir, "directory for flat tables");

  CLI::App* cmd_solve = app.add_subcommand("solve", "find a spreader set");
  add_common(cmd_solve);
  cmd_solve->add_option("--k", opt.k, "target cardinality")->required();
  cmd_solve
      ->add_option("--method", opt.method, "brute | greedy | seeded")
      ->required()
      ->check(CLI::IsMember({"brute", "greedy", "seeded"}));
  add_class_opts(cmd_solve, false);
  cmd_solve
      ->add_option("--seed-source", opt.seed_source,
                   "seed family for --method seeded: cover | greedoid")
      ->check(CLI::IsMember({"cover", "greedoid"}));
  cmd_solve->add_flag("--no-certify", opt.no_certify,
                      "skip the brute-force certificate");
  cmd_solve->add_option("--csv", opt.csv_dir, "directory for flat tables");

  CLI::App* cmd_greedoid = app.add_subcommand(
      "greedoid", "build the feasible-set family of the near-optimal class");
  add_common(cmd_greedoid);
  add_class_opts(cmd_greedoid, true);
  cmd_greedoid->add_option("--csv", opt.csv_dir, "directory for flat tables");

  CLI::App* cmd_curvature = app.add_subcommand(
      "curvature", "elemental curvature and max marginal of the rank");
  add_common(cmd_curvature);
  add_class_opts(cmd_curvature, true);
  cmd_curvature
      ->add_option("--domain", opt.domain,
                   "curvature domain: members | all")
      ->check(CLI::IsMember({"members", "all"}));

  CLI::App* cmd_analyze = app.add_subcommand(
      "analyze", "class + family + curvature + quality/effort table");
  add_common(cmd_analyze);
  add_class_opts(cmd_analyze, true);
  cmd_analyze->add_option("--csv", opt.csv_dir, "directory for flat tables");

  CLI::App* cmd_simulate = app.add_subcommand(
      "simulate", "Monte Carlo hitting-time estimate from one start node");
  add_common(cmd_simulate);
  cmd_simulate->add_option("--set", opt.set_arg, "comma-separated labels")
      ->required();
  cmd_simulate->add_option("--from", opt.from, "start node label")->required();
  cmd_simulate->add_option("--walks", opt.walks, "number of walks");
  cmd_simulate->add_option("--step-cap", opt.step_cap,
                           "per-walk step cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto started = std::chrono::steady_clock::now();
  int code = 0;
  try {
    if (*cmd_objective)
      code = run_objective(opt);
    else if (*cmd_hitting)
      code = run_hitting(opt);
    else if (*cmd_cover)
      code = run_cover(opt);
    else if (*cmd_rank)
      code = run_rank(opt);
    else if (*cmd_class)
      code = run_class(opt);
    else if (*cmd_solve)
      code = run_solve(opt);
    else if (*cmd_greedoid)
      code = run_greedoid(opt);
    else if (*cmd_curvature)
      code = run_curvature(opt);
    else if (*cmd_analyze)
      code = run_analyze(opt);
    else if (*cmd_simulate)
      code = run_simulate(opt);
  } catch (const spreadopt::BudgetExceededError& e) {
    std::fprintf(stderr, "spreadopt: budget error: %s\n", e.what());
    code = 3;
  } catch (const spreadopt::InputError& e) {
    std::fprintf(stderr, "spreadopt: input error: %s\n", e.what());
    code = 2;
  } catch (const spreadopt::ConstructionFailed& e) {
    std::fprintf(stderr, "spreadopt: %s\n", e.what());
    code = 2;
  } catch (const spreadopt::InternalError& e) {
    std::fprintf(stderr, "spreadopt: internal error: %s\n", e.what());
    code = 4;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "spreadopt: internal error: %s\n", e.what());
    code = 4;
  }
  if (opt.timing) {
    std::chrono::duration<double, std::milli> ms =
        std::chrono::steady_clock::now() - started;
    std::fprintf(stderr, "spreadopt: wall_ms=%.3f\n", ms.count());
  }
  return code;
}
