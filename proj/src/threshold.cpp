#include "ramsey/threshold.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ramsey/amalgam.hpp"
#include "ramsey/arrow.hpp"
#include "ramsey/density.hpp"
#include "ramsey/parallel.hpp"
#include "ramsey/random_models.hpp"

namespace ramsey {

namespace {

constexpr double kZ95 = 1.959963984540054;

// experiment-id layout keeps every (purpose, n) pair on its own stream
constexpr uint64_t kExperimentThreshold = 1;
constexpr uint64_t kExperimentTwoRound = 2;
uint64_t experiment_id(uint64_t kind, int n) {
  return (kind << 32) | static_cast<uint64_t>(n);
}

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// one trial: sample under the coupled stream, decide the restricted arrow
int8_t arrow_trial(const Graph& g, const Graph& h, int n, double p,
                   const RngSpec& spec, uint64_t node_budget) {
  Graph f = sample_gnp(n, p, spec);
  ArrowOptions options;
  options.restrict_to_h_edges = true;
  options.node_budget = node_budget;
  ArrowResult r = arrow_decide(f, {g, h}, options);
  if (r.status == ArrowStatus::kUnknown) return 2;
  return r.status == ArrowStatus::kArrow ? 1 : 0;
}

ThresholdRow aggregate_row(int n, double c, double p, bool clamped,
                           const std::vector<int8_t>& status) {
  ThresholdRow row;
  row.n = n;
  row.c = c;
  row.p = p;
  row.clamped = clamped;
  for (int8_t s : status) {
    if (s == 2) {
      ++row.budget_limited;
    } else {
      ++row.trials;
      if (s == 1) ++row.successes;
    }
  }
  row.estimate = row.trials == 0
                     ? 0.0
                     : static_cast<double>(row.successes) /
                           static_cast<double>(row.trials);
  WilsonInterval ci = wilson95(row.successes, row.trials);
  row.ci_lo = ci.lo;
  row.ci_hi = ci.hi;
  return row;
}

}  // namespace

WilsonInterval wilson95(uint64_t successes, uint64_t trials) {
  if (trials == 0) return {0.0, 1.0};
  double nt = static_cast<double>(trials);
  double phat = static_cast<double>(successes) / nt;
  double z2 = kZ95 * kZ95;
  double denom = 1.0 + z2 / nt;
  double center = (phat + z2 / (2 * nt)) / denom;
  double half =
      kZ95 * std::sqrt(phat * (1 - phat) / nt + z2 / (4 * nt * nt)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

ThresholdRow estimate_arrow_prob(const Graph& g, const Graph& h, int n,
                                 double p, uint64_t trials, const RngSpec& rng,
                                 uint64_t node_budget) {
  if (trials == 0) throw std::invalid_argument("need at least one trial");
  std::vector<int8_t> status(trials, 2);
  parallel_for(trials, [&](size_t t) {
    status[t] =
        arrow_trial(g, h, n, p, rng.with_trial(static_cast<uint64_t>(t)),
                    node_budget);
  });
  ThresholdRow row = aggregate_row(n, 0.0, p, false, status);
  if (row.trials == 0)
    throw std::runtime_error(
        "all trials exhausted the node budget; no estimate");
  return row;
}

ThresholdTable threshold_scan(const Graph& g, const Graph& h,
                              const std::vector<int>& n_values,
                              const std::vector<double>& c_grid,
                              const ThresholdOptions& options) {
  if (g.edge_count() == 0 || h.edge_count() == 0)
    throw std::invalid_argument("threshold scan needs nonempty G and H");
  if (n_values.empty() || c_grid.empty())
    throw std::invalid_argument("empty grid");

  ThresholdTable table;
  table.g_spec = serialize_graph6(g);
  table.h_spec = serialize_graph6(h);
  table.m2_exact = m2_asym(g, h).value;
  table.exponent_exact = -(table.m2_exact.inverse());
  table.seed = options.seed;
  table.n_values = n_values;
  table.c_grid = c_grid;
  double exponent = table.exponent_exact.to_double();

  for (int n : n_values) {
    RngSpec base{options.seed, experiment_id(kExperimentThreshold, n), 0};
    // status[c][trial]
    std::vector<std::vector<int8_t>> status(
        c_grid.size(), std::vector<int8_t>(options.trials, 2));
    parallel_for(options.trials, [&](size_t t) {
      RngSpec spec = base.with_trial(static_cast<uint64_t>(t));
      for (size_t ci = 0; ci < c_grid.size(); ++ci) {
        double p = c_grid[ci] * std::pow(n, exponent);
        if (p > 1.0) p = 1.0;
        status[ci][t] = arrow_trial(g, h, n, p, spec, options.node_budget);
      }
    });
    for (size_t ci = 0; ci < c_grid.size(); ++ci) {
      double p_raw = c_grid[ci] * std::pow(n, exponent);
      bool clamped = p_raw > 1.0;
      table.rows.push_back(aggregate_row(n, c_grid[ci],
                                         clamped ? 1.0 : p_raw, clamped,
                                         status[ci]));
    }
    if (options.record_trials) table.trial_status.push_back(status);

    // first upward crossing of 1/2, linear interpolation
    CrossingEstimate crossing;
    crossing.n = n;
    size_t base_row = table.rows.size() - c_grid.size();
    for (size_t ci = 0; ci + 1 < c_grid.size(); ++ci) {
      const ThresholdRow& lo = table.rows[base_row + ci];
      const ThresholdRow& hi = table.rows[base_row + ci + 1];
      if (lo.trials == 0 || hi.trials == 0) continue;
      if (lo.estimate <= 0.5 && hi.estimate >= 0.5 &&
          hi.estimate > lo.estimate) {
        crossing.defined = true;
        crossing.c_half = lo.c + (0.5 - lo.estimate) * (hi.c - lo.c) /
                                      (hi.estimate - lo.estimate);
        crossing.p_half = crossing.c_half * std::pow(n, exponent);
        break;
      }
    }
    table.crossings.push_back(crossing);
  }
  return table;
}

SlopeFit fit_threshold_slope(
    const std::vector<std::pair<double, double>>& n_and_p_half) {
  if (n_and_p_half.size() < 3)
    throw std::invalid_argument("slope fit needs at least 3 crossings");
  SlopeFit fit;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [n, p_half] : n_and_p_half) {
    if (!(n > 0) || !(p_half > 0))
      throw std::invalid_argument("slope fit needs positive n and p_half");
    double x = std::log(n);
    double y = std::log(p_half);
    fit.log_n.push_back(x);
    fit.log_p_half.push_back(y);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double m = static_cast<double>(n_and_p_half.size());
  double denom = m * sxx - sx * sx;
  if (denom == 0) throw std::invalid_argument("degenerate n values");
  fit.slope = (m * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / m;
  for (size_t i = 0; i < fit.log_n.size(); ++i)
    fit.residuals.push_back(fit.log_p_half[i] -
                            (fit.slope * fit.log_n[i] + fit.intercept));
  return fit;
}

SlopeFit fit_threshold_slope(const ThresholdTable& table) {
  std::vector<std::pair<double, double>> points;
  for (const CrossingEstimate& c : table.crossings)
    if (c.defined) points.emplace_back(c.n, c.p_half);
  return fit_threshold_slope(points);
}

ColoringStrategy parse_strategy(const std::string& name) {
  if (name == "all-red") return ColoringStrategy::kAllRed;
  if (name == "random") return ColoringStrategy::kRandom;
  if (name == "greedy-avoid-blue-h" || name == "greedy-avoid-blue-H")
    return ColoringStrategy::kGreedyAvoidBlueH;
  throw std::invalid_argument("unknown coloring strategy: " + name);
}

namespace {

Coloring apply_strategy(const Graph& round1, const Graph& h,
                        const EdgeSet& domain, ColoringStrategy strategy,
                        const RngSpec& rng) {
  Coloring coloring;
  coloring.n = round1.vertex_count();
  coloring.domain = domain;
  coloring.colors.assign(domain.size(), 0);
  switch (strategy) {
    case ColoringStrategy::kAllRed:
      break;
    case ColoringStrategy::kRandom: {
      for (size_t i = 0; i < domain.size(); ++i)
        coloring.colors[i] = static_cast<int8_t>(
            counter_uniform(rng, pair_index(domain[i].u, domain[i].v)) < 0.5
                ? 0
                : 1);
      break;
    }
    case ColoringStrategy::kGreedyAvoidBlueH: {
      // blue unless that finishes an all-blue copy of H
      Graph domain_graph(round1.vertex_count());
      for (const Edge& e : domain) domain_graph.add_edge(e.u, e.v);
      std::vector<EdgeSet> copies =
          enumerate_copy_edge_sets(domain_graph, h.core());
      std::vector<std::vector<size_t>> through(domain.size());
      for (size_t ci = 0; ci < copies.size(); ++ci)
        for (const Edge& e : copies[ci]) {
          size_t idx = static_cast<size_t>(
              std::lower_bound(domain.begin(), domain.end(), e) -
              domain.begin());
          through[idx].push_back(ci);
        }
      std::vector<int> blue_needed(copies.size());
      for (size_t ci = 0; ci < copies.size(); ++ci)
        blue_needed[ci] = static_cast<int>(copies[ci].size());
      for (size_t i = 0; i < domain.size(); ++i) {
        bool completes_blue = false;
        for (size_t ci : through[i])
          if (blue_needed[ci] == 1) {
            completes_blue = true;
            break;
          }
        if (completes_blue) {
          coloring.colors[i] = 0;  // red
        } else {
          coloring.colors[i] = 1;  // blue
          for (size_t ci : through[i]) --blue_needed[ci];
        }
      }
      break;
    }
  }
  return coloring;
}

}  // namespace

TwoRoundReport two_round_experiment(const Graph& g, const Graph& h, int n,
                                    double p, double alpha,
                                    const Rational& rho, const Rational& dens,
                                    double z_const, ColoringStrategy strategy,
                                    const RngSpec& rng) {
  if (g.edge_count() == 0 || h.edge_count() == 0)
    throw std::invalid_argument("two-round experiment needs nonempty G and H");
  TwoRoundReport report;
  report.n = n;
  report.p = p;
  report.alpha = alpha;
  auto [p1, p2] = two_round_split(p, alpha);
  report.p1 = p1;
  report.p2 = p2;
  report.strategy = strategy == ColoringStrategy::kAllRed ? "all-red"
                    : strategy == ColoringStrategy::kRandom
                        ? "random"
                        : "greedy-avoid-blue-h";

  uint64_t seed = rng.seed;
  RngSpec round1_spec{seed, experiment_id(kExperimentTwoRound, n), rng.trial};
  RngSpec coloring_spec{seed, experiment_id(kExperimentTwoRound + 1, n),
                        rng.trial};
  RngSpec round2_spec{seed, experiment_id(kExperimentTwoRound + 2, n),
                      rng.trial};
  RngSpec dense_spec{seed, experiment_id(kExperimentTwoRound + 3, n),
                     rng.trial};

  Graph round1 = sample_gnp(n, p1, round1_spec);
  report.round1_edges = static_cast<uint64_t>(round1.edge_count());
  EdgeSet domain = h_edges(round1, h);
  report.h_edge_count = static_cast<uint64_t>(domain.size());
  report.c_budget = 2.0 * h.edge_count() *
                    std::pow(n, h.vertex_count()) *
                    std::pow(p1, h.edge_count());
  report.c_budget_exceeded =
      static_cast<double>(report.h_edge_count) > report.c_budget;

  Coloring coloring = apply_strategy(round1, h, domain, strategy,
                                     coloring_spec);

  report.z = z_from_shape(z_const, n, g, h, p1);
  Graph g_minus = g;
  Edge first = g.edges().front();
  g_minus.remove_edge(first.u, first.v);
  BaseGraphResult base =
      base_graph(round1, coloring, g, g_minus, h, report.z);
  report.gamma_size = static_cast<uint64_t>(base.gamma.size());
  report.red_h_covered = base.red_h_covered_copies;

  Graph gamma_graph(n);
  for (const Edge& e : base.gamma) gamma_graph.add_edge(e.u, e.v);
  DensenessMode mode =
      n <= 30 ? DensenessMode::kExact : DensenessMode::kFalsify;
  DensenessVerdict verdict =
      is_rho_d_dense(gamma_graph, rho, dens, mode, false, dense_spec);
  report.gamma_dense = verdict.dense;
  report.dense_exact = verdict.exact;

  Graph round2 = sample_gnp(n, p2, round2_spec);
  report.round2_edges = static_cast<uint64_t>(round2.edge_count());
  Graph overlap(n);
  for (const Edge& e : base.gamma)
    if (round2.has_edge(e.u, e.v)) overlap.add_edge(e.u, e.v);
  report.gamma_round2_edges = static_cast<uint64_t>(overlap.edge_count());
  report.disjoint_h_copies =
      static_cast<uint64_t>(disjoint_copies(overlap, h).copies.size());
  return report;
}

std::string TwoRoundReport::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["p"] = p;
  j["alpha"] = alpha;
  j["p1"] = p1;
  j["p2"] = p2;
  j["z"] = z;
  j["strategy"] = strategy;
  j["round1_edges"] = round1_edges;
  j["h_edge_count"] = h_edge_count;
  j["c_budget"] = c_budget;
  j["c_budget_exceeded"] = c_budget_exceeded;
  j["gamma_size"] = gamma_size;
  j["red_h_covered"] = red_h_covered;
  j["gamma_dense"] = gamma_dense;
  j["dense_exact"] = dense_exact;
  j["round2_edges"] = round2_edges;
  j["gamma_round2_edges"] = gamma_round2_edges;
  j["disjoint_h_copies"] = disjoint_h_copies;
  return j.dump(2);
}

EmitFormat parse_format(const std::string& name) {
  if (name == "csv") return EmitFormat::kCsv;
  if (name == "json") return EmitFormat::kJson;
  if (name == "gnuplot-dat" || name == "gnuplot") return EmitFormat::kGnuplot;
  throw std::invalid_argument("unknown format: " + name);
}

std::string emit_table(const ThresholdTable& table, EmitFormat format) {
  std::ostringstream out;
  switch (format) {
    case EmitFormat::kCsv: {
      out << "n,c,p,trials,successes,estimate,ci_lo,ci_hi,clamped\n";
      for (const ThresholdRow& r : table.rows)
        out << r.n << ',' << fmt_double(r.c) << ',' << fmt_double(r.p) << ','
            << r.trials << ',' << r.successes << ',' << fmt_double(r.estimate)
            << ',' << fmt_double(r.ci_lo) << ',' << fmt_double(r.ci_hi) << ','
            << (r.clamped ? 1 : 0) << '\n';
      break;
    }
    case EmitFormat::kJson: {
      nlohmann::json j;
      j["g"] = table.g_spec;
      j["h"] = table.h_spec;
      j["m2_exact"] = table.m2_exact.str();
      j["exponent_exact"] = table.exponent_exact.str();
      j["seed"] = table.seed;
      j["n_values"] = table.n_values;
      nlohmann::json grid = nlohmann::json::array();
      for (double c : table.c_grid) grid.push_back(fmt_double(c));
      j["c_grid"] = grid;
      nlohmann::json rows = nlohmann::json::array();
      for (const ThresholdRow& r : table.rows) {
        nlohmann::json row;
        row["n"] = r.n;
        row["c"] = fmt_double(r.c);
        row["p"] = fmt_double(r.p);
        row["trials"] = r.trials;
        row["successes"] = r.successes;
        row["budget_limited"] = r.budget_limited;
        row["estimate"] = fmt_double(r.estimate);
        row["ci_lo"] = fmt_double(r.ci_lo);
        row["ci_hi"] = fmt_double(r.ci_hi);
        row["clamped"] = r.clamped;
        rows.push_back(row);
      }
      j["rows"] = rows;
      nlohmann::json crossings = nlohmann::json::array();
      for (const CrossingEstimate& c : table.crossings) {
        nlohmann::json x;
        x["n"] = c.n;
        x["defined"] = c.defined;
        if (c.defined) {
          x["c_half"] = fmt_double(c.c_half);
          x["p_half"] = fmt_double(c.p_half);
        }
        crossings.push_back(x);
      }
      j["crossings"] = crossings;
      out << j.dump(2) << '\n';
      break;
    }
    case EmitFormat::kGnuplot: {
      out << "# threshold scan: G=" << table.g_spec << " H=" << table.h_spec
          << " exponent=" << table.exponent_exact.str()
          << " seed=" << table.seed << '\n';
      out << "# columns: n c p trials successes estimate ci_lo ci_hi "
             "clamped budget_limited\n";
      for (const ThresholdRow& r : table.rows)
        out << r.n << ' ' << fmt_double(r.c) << ' ' << fmt_double(r.p) << ' '
            << r.trials << ' ' << r.successes << ' ' << fmt_double(r.estimate)
            << ' ' << fmt_double(r.ci_lo) << ' ' << fmt_double(r.ci_hi) << ' '
            << (r.clamped ? 1 : 0) << ' ' << r.budget_limited << '\n';
      break;
    }
  }
  return out.str();
}

void emit_table_file(const ThresholdTable& table, EmitFormat format,
                     const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << emit_table(table, format);
}

ThresholdTable parse_table_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  ThresholdTable table;
  table.g_spec = j.at("g").get<std::string>();
  table.h_spec = j.at("h").get<std::string>();
  table.m2_exact = Rational::parse(j.at("m2_exact").get<std::string>());
  table.exponent_exact =
      Rational::parse(j.at("exponent_exact").get<std::string>());
  table.seed = j.at("seed").get<uint64_t>();
  table.n_values = j.at("n_values").get<std::vector<int>>();
  for (const auto& c : j.at("c_grid"))
    table.c_grid.push_back(std::stod(c.get<std::string>()));
  for (const auto& row : j.at("rows")) {
    ThresholdRow r;
    r.n = row.at("n").get<int>();
    r.c = std::stod(row.at("c").get<std::string>());
    r.p = std::stod(row.at("p").get<std::string>());
    r.trials = row.at("trials").get<uint64_t>();
    r.successes = row.at("successes").get<uint64_t>();
    r.budget_limited = row.at("budget_limited").get<uint64_t>();
    r.estimate = std::stod(row.at("estimate").get<std::string>());
    r.ci_lo = std::stod(row.at("ci_lo").get<std::string>());
    r.ci_hi = std::stod(row.at("ci_hi").get<std::string>());
    r.clamped = row.at("clamped").get<bool>();
    table.rows.push_back(r);
  }
  for (const auto& x : j.at("crossings")) {
    CrossingEstimate c;
    c.n = x.at("n").get<int>();
    c.defined = x.at("defined").get<bool>();
    if (c.defined) {
      c.c_half = std::stod(x.at("c_half").get<std::string>());
      c.p_half = std::stod(x.at("p_half").get<std::string>());
    }
    table.crossings.push_back(c);
  }
  return table;
}

Rational parse_rational_or_decimal(const std::string& text) {
  if (text.find('/') != std::string::npos) return Rational::parse(text);
  auto dot = text.find('.');
  if (dot == std::string::npos) return Rational::parse(text);
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  long long den = 1;
  for (size_t i = dot + 1; i < text.size(); ++i) den *= 10;
  return Rational(std::stoll(digits), den);
}

}  // namespace ramsey
