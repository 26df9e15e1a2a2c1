#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramsey/amalgam.hpp"
#include "ramsey/arrow.hpp"
#include "ramsey/density.hpp"
#include "ramsey/random_models.hpp"
#include "ramsey/suites.hpp"
#include "ramsey/threshold.hpp"

namespace {

using namespace ramsey;

// exit codes: 0 success, 1 property failure, 2 usage, 3 budget exhaustion
constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

nlohmann::json witness_json(const SubgraphWitness& w) {
  nlohmann::json j;
  j["vertices"] = w.vertices;
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : w.edges) edges.push_back({e.u, e.v});
  j["edges"] = edges;
  return j;
}

nlohmann::json density_json(const DensityReport& r) {
  nlohmann::json j;
  j["value"] = r.value.str();
  j["witness"] = witness_json(r.witness);
  j["witness_count"] = r.witness_count;
  return j;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  if (out.empty()) throw CLI::ValidationError("empty list: " + text);
  return out;
}

std::vector<double> parse_c_grid(const std::string& text) {
  // "lo:hi:step" inclusive, or a comma-separated list
  if (text.find(':') == std::string::npos) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
  }
  std::stringstream ss(text);
  std::string lo_s, hi_s, step_s;
  std::getline(ss, lo_s, ':');
  std::getline(ss, hi_s, ':');
  std::getline(ss, step_s, ':');
  double lo = std::stod(lo_s), hi = std::stod(hi_s), step = std::stod(step_s);
  if (step <= 0 || hi < lo)
    throw CLI::ValidationError("bad c grid: " + text);
  std::vector<double> out;
  for (int i = 0;; ++i) {
    double c = lo + i * step;
    if (c > hi + step / 2) break;
    out.push_back(c);
  }
  return out;
}

void write_or_print(const std::string& content,
                    const std::string& path) {
  if (path.empty()) {
    std::cout << content << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

int cmd_density(const std::string& h_spec, const std::string& g_spec,
                const std::vector<std::string>& ab) {
  Graph h = parse_graph_spec(h_spec);
  nlohmann::json j;
  j["h"] = serialize_graph6(h);
  j["d2"] = d2(h).str();
  j["m2"] = density_json(m2(h));
  if (h.vertex_count() >= 3) {
    j["m_star"] = density_json(m_star(h));
    if (h.edge_count() > 0) j["x_star"] = x_star(h).str();
  }
  std::optional<Graph> g;
  if (!g_spec.empty()) {
    g = parse_graph_spec(g_spec);
    j["g"] = serialize_graph6(*g);
    j["d2_asym"] = d2_asym(*g, h).str();
    j["m2_asym"] = density_json(m2_asym(*g, h));
    if (g->edge_count() > 0 && h.edge_count() > 0)
      j["threshold_exponent"] = threshold_exponent(*g, h).str();
  }
  std::optional<Rational> a, b;
  if (!ab.empty()) {
    a = parse_rational_or_decimal(ab[0]);
    b = parse_rational_or_decimal(ab[1]);
    j["a"] = a->str();
    j["b"] = b->str();
    j["d_ab"] = d_ab(h, *a, *b).str();
    j["m_ab"] = density_json(m_ab(h, *a, *b));
  }
  BalancednessBundle bundle = balancedness(g, h, a, b);
  nlohmann::json bal;
  bal["two_balanced"] = bundle.two_balanced;
  bal["strictly_two_balanced"] = bundle.strictly_two_balanced;
  if (bundle.balanced_wrt_g) {
    bal["balanced_wrt_g"] = *bundle.balanced_wrt_g;
    bal["strictly_balanced_wrt_g"] = *bundle.strictly_balanced_wrt_g;
  }
  if (bundle.balanced_ab) {
    bal["balanced_ab"] = *bundle.balanced_ab;
    bal["strictly_balanced_ab"] = *bundle.strictly_balanced_ab;
  }
  j["balancedness"] = bal;
  std::cout << j.dump(2) << '\n';
  return kOk;
}

int cmd_arrow(const std::string& host_spec, const std::string& targets_csv,
              bool restrict, const std::string& witness_path,
              uint64_t budget) {
  Graph host = parse_graph_spec(host_spec);
  std::vector<Graph> targets;
  std::stringstream ss(targets_csv);
  std::string item;
  while (std::getline(ss, item, ',')) targets.push_back(parse_graph_spec(item));
  ArrowOptions options;
  options.restrict_to_h_edges = restrict;
  options.node_budget = budget;
  ArrowResult r = arrow_decide(host, targets, options);
  nlohmann::json j;
  j["host"] = serialize_graph6(host);
  j["nodes_explored"] = r.nodes_explored;
  switch (r.status) {
    case ArrowStatus::kArrow:
      j["status"] = "arrow";
      j["arrow"] = true;
      break;
    case ArrowStatus::kNoArrow:
      j["status"] = "no-arrow";
      j["arrow"] = false;
      break;
    case ArrowStatus::kUnknown:
      j["status"] = "unknown (budget)";
      break;
  }
  if (r.witness) {
    bool valid = verify_coloring(host, targets, *r.witness);
    j["witness_valid"] = valid;
    if (!witness_path.empty())
      write_or_print(r.witness->to_json(), witness_path);
    else
      j["witness"] = nlohmann::json::parse(r.witness->to_json());
  }
  std::cout << j.dump(2) << '\n';
  return r.status == ArrowStatus::kUnknown ? kBudget : kOk;
}

int cmd_sample(int n, double p, uint64_t seed, uint64_t trial,
               const std::string& out_path) {
  Graph g = sample_gnp(n, p, RngSpec{seed, 0, trial});
  write_or_print(serialize_graph6(g), out_path);
  return kOk;
}

int cmd_threshold(const std::string& g_spec, const std::string& h_spec,
                  const std::string& n_list, const std::string& c_spec,
                  uint64_t trials, uint64_t seed, uint64_t budget,
                  const std::string& out_path, const std::string& format) {
  Graph g = parse_graph_spec(g_spec);
  Graph h = parse_graph_spec(h_spec);
  ThresholdOptions options;
  options.trials = trials;
  options.seed = seed;
  options.node_budget = budget;
  ThresholdTable table =
      threshold_scan(g, h, parse_int_list(n_list), parse_c_grid(c_spec),
                     options);
  EmitFormat fmt = parse_format(format);
  if (out_path.empty()) {
    std::cout << emit_table(table, fmt);
  } else {
    emit_table_file(table, fmt, out_path);
  }
  // crossing + slope summary on stderr-free stdout when writing to file
  nlohmann::json summary;
  summary["exponent_exact"] = table.exponent_exact.str();
  summary["m2_exact"] = table.m2_exact.str();
  nlohmann::json crossings = nlohmann::json::array();
  size_t defined = 0;
  for (const CrossingEstimate& c : table.crossings) {
    nlohmann::json x;
    x["n"] = c.n;
    x["defined"] = c.defined;
    if (c.defined) {
      ++defined;
      x["c_half"] = c.c_half;
      x["p_half"] = c.p_half;
    }
    crossings.push_back(x);
  }
  summary["crossings"] = crossings;
  if (defined >= 3) {
    SlopeFit fit = fit_threshold_slope(table);
    summary["slope"] = fit.slope;
    summary["intercept"] = fit.intercept;
    summary["residuals"] = fit.residuals;
  }
  if (!out_path.empty()) std::cout << summary.dump(2) << '\n';
  return kOk;
}

int cmd_two_round(const std::string& g_spec, const std::string& h_spec, int n,
                  double p, double alpha, const std::string& rho,
                  const std::string& d, double zconst,
                  const std::string& strategy, uint64_t seed, uint64_t trial) {
  TwoRoundReport report = two_round_experiment(
      parse_graph_spec(g_spec), parse_graph_spec(h_spec), n, p, alpha,
      parse_rational_or_decimal(rho), parse_rational_or_decimal(d), zconst,
      parse_strategy(strategy), RngSpec{seed, 0, trial});
  std::cout << report.to_json() << '\n';
  return kOk;
}

int cmd_verify(const std::string& suite, int max_vertices, uint64_t seed,
               const std::string& json_path) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = suite_names();
  } else {
    names.push_back(suite);
  }
  SuiteCaps caps;
  caps.max_vertices = max_vertices;
  caps.seed = seed;
  bool all_passed = true;
  nlohmann::json out = nlohmann::json::array();
  for (const std::string& name : names) {
    SuiteReport report = run_suite(name, caps);
    all_passed = all_passed && report.passed();
    std::cout << (report.passed() ? "PASS " : "FAIL ") << name << " ("
              << report.checks << " checks, " << report.failures.size()
              << " failures, " << report.wall_seconds << "s)\n";
    for (const SuiteFailure& f : report.failures)
      std::cout << "  " << f.description << '\n';
    out.push_back(nlohmann::json::parse(report.to_json()));
  }
  if (!json_path.empty()) write_or_print(out.dump(2), json_path);
  return all_passed ? kOk : kPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "ramsey: density calculus, arrow decisions, and threshold experiments "
      "for asymmetric Ramsey properties of random graphs"};
  app.require_subcommand(1);
  // --h is a documented option name; keep help on --help only
  app.set_help_flag("--help", "print help");
  app.set_help_all_flag("--help-all", "print help for all subcommands");

  // density
  std::string den_h, den_g;
  std::vector<std::string> den_ab;
  auto* den = app.add_subcommand("density", "exact density parameters");
  den->set_help_flag("--help", "print help");
  den->add_option("--h", den_h, "target graph H (named spec or graph6)")
      ->required();
  den->add_option("--g", den_g, "optional left graph G");
  den->add_option("--ab", den_ab, "general density parameters a b")
      ->expected(2);

  // arrow
  std::string ar_host, ar_targets, ar_witness;
  bool ar_restrict = false;
  uint64_t ar_budget = 1ULL << 34;
  auto* ar = app.add_subcommand("arrow", "exact arrow decision");
  ar->set_help_flag("--help", "print help");
  ar->add_option("--host", ar_host, "host graph")->required();
  ar->add_option("--targets", ar_targets, "comma-separated target graphs")
      ->required();
  ar->add_flag("--restrict-h-edges", ar_restrict,
               "color only the H-edges, rest implicitly blue");
  ar->add_option("--witness", ar_witness, "write witness JSON here");
  ar->add_option("--budget", ar_budget, "search node/conflict budget");

  // sample
  int sm_n = 0;
  double sm_p = 0;
  uint64_t sm_seed = 0, sm_trial = 0;
  std::string sm_out;
  auto* sm = app.add_subcommand("sample", "sample G_{n,p}");
  sm->set_help_flag("--help", "print help");
  sm->add_option("--n", sm_n, "vertex count")->required();
  sm->add_option("--p", sm_p, "edge probability")->required();
  sm->add_option("--seed", sm_seed, "seed")->required();
  sm->add_option("--trial", sm_trial, "trial index (stream)");
  sm->add_option("--g6", sm_out, "write graph6 here instead of stdout");

  // threshold
  std::string th_g, th_h, th_n, th_c, th_out, th_format = "csv";
  uint64_t th_trials = 500, th_seed = 1, th_budget = 1ULL << 18;
  auto* th = app.add_subcommand("threshold", "Monte Carlo threshold scan");
  th->set_help_flag("--help", "print help");
  th->add_option("--g", th_g)->required();
  th->add_option("--h", th_h)->required();
  th->add_option("--n", th_n, "comma-separated n values")->required();
  th->add_option("--c", th_c, "c grid: lo:hi:step or comma list")->required();
  th->add_option("--trials", th_trials, "trials per cell");
  th->add_option("--seed", th_seed, "seed");
  th->add_option("--budget", th_budget, "per-trial search budget");
  th->add_option("--out", th_out, "output file (stdout if absent)");
  th->add_option("--format", th_format, "csv | json | gnuplot-dat");

  // two-round
  std::string tr_g, tr_h, tr_rho = "1/2", tr_d = "1/100",
              tr_strategy = "all-red";
  int tr_n = 0;
  double tr_p = 0, tr_alpha = 0.5, tr_zconst = 0.01;
  uint64_t tr_seed = 1, tr_trial = 0;
  auto* tr = app.add_subcommand("two-round", "two-round exposure experiment");
  tr->set_help_flag("--help", "print help");
  tr->add_option("--g", tr_g)->required();
  tr->add_option("--h", tr_h)->required();
  tr->add_option("--n", tr_n)->required();
  tr->add_option("--p", tr_p)->required();
  tr->add_option("--alpha", tr_alpha, "round-one fraction (0,1)");
  tr->add_option("--rho", tr_rho, "denseness rho (rational or decimal)");
  tr->add_option("--d", tr_d, "denseness d (rational or decimal)");
  tr->add_option("--zconst", tr_zconst, "scale for the z shape");
  tr->add_option("--strategy", tr_strategy,
                 "all-red | random | greedy-avoid-blue-h");
  tr->add_option("--seed", tr_seed);
  tr->add_option("--trial", tr_trial);

  // verify
  std::string vf_suite, vf_json;
  int vf_max_vertices = 0;
  uint64_t vf_seed = 2024;
  auto* vf = app.add_subcommand("verify", "brute-force verification suites");
  vf->set_help_flag("--help", "print help");
  vf->add_option("--suite", vf_suite, "suite name or 'all'")->required();
  vf->add_option("--max-vertices", vf_max_vertices, "vertex cap override");
  vf->add_option("--seed", vf_seed, "seed for randomized suites");
  vf->add_option("--json", vf_json, "write JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*den) return cmd_density(den_h, den_g, den_ab);
    if (*ar)
      return cmd_arrow(ar_host, ar_targets, ar_restrict, ar_witness,
                       ar_budget);
    if (*sm) return cmd_sample(sm_n, sm_p, sm_seed, sm_trial, sm_out);
    if (*th)
      return cmd_threshold(th_g, th_h, th_n, th_c, th_trials, th_seed,
                           th_budget, th_out, th_format);
    if (*tr)
      return cmd_two_round(tr_g, tr_h, tr_n, tr_p, tr_alpha, tr_rho, tr_d,
                           tr_zconst, tr_strategy, tr_seed, tr_trial);
    if (*vf) return cmd_verify(vf_suite, vf_max_vertices, vf_seed, vf_json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPropertyFailure;
  }
  return kUsage;
}
