#ifndef RAMSEY_THRESHOLD_HPP
#define RAMSEY_THRESHOLD_HPP

#include <optional>
#include <string>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/rational.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

struct WilsonInterval {
  double lo = 0;
  double hi = 1;
};
// 95% Wilson score interval; [0,1] when trials == 0.
WilsonInterval wilson95(uint64_t successes, uint64_t trials);

struct ThresholdRow {
  int n = 0;
  double c = 0;
  double p = 0;
  bool clamped = false;        // c n^exponent exceeded 1
  uint64_t trials = 0;         // decided trials only
  uint64_t successes = 0;
  uint64_t budget_limited = 0; // excluded from the estimate, reported
  double estimate = 0;
  double ci_lo = 0;
  double ci_hi = 1;
};

struct CrossingEstimate {
  int n = 0;
  bool defined = false;
  double c_half = 0;  // linear interpolation where the estimate passes 1/2
  double p_half = 0;
};

struct ThresholdTable {
  std::string g_spec, h_spec;
  Rational m2_exact;
  Rational exponent_exact;  // -1/m2(G,H)
  uint64_t seed = 0;
  std::vector<int> n_values;
  std::vector<double> c_grid;
  std::vector<ThresholdRow> rows;  // n-major, c-minor
  std::vector<CrossingEstimate> crossings;
  // optional per-trial record: status[n_idx][c_idx][trial] = 0/1/2 (budget)
  std::vector<std::vector<std::vector<int8_t>>> trial_status;
};

struct ThresholdOptions {
  uint64_t trials = 500;
  uint64_t seed = 1;
  uint64_t node_budget = 1ULL << 22;
  bool record_trials = false;
};

// Monte Carlo estimate of Pr(G_{n,p} -> (g,h)) over the H-edge-restricted
// arrow decision. Budget-limited trials never count either way; if every
// trial hits the budget the estimate is undefined and this throws.
ThresholdRow estimate_arrow_prob(const Graph& g, const Graph& h, int n,
                                 double p, uint64_t trials, const RngSpec& rng,
                                 uint64_t node_budget = 1ULL << 22);

// Full factorial scan over n_values x c_grid with p = c n^{-1/m2(G,H)}.
// One uniform per vertex pair per (n, trial), shared across the whole
// c-grid: the per-trial arrow indicator is monotone in c by coupling.
ThresholdTable threshold_scan(const Graph& g, const Graph& h,
                              const std::vector<int>& n_values,
                              const std::vector<double>& c_grid,
                              const ThresholdOptions& options);

struct SlopeFit {
  double slope = 0;
  double intercept = 0;
  std::vector<double> log_n, log_p_half, residuals;
};

// Least squares of log p_half against log n; needs >= 3 defined crossings.
SlopeFit fit_threshold_slope(const std::vector<std::pair<double, double>>&
                                 n_and_p_half);
SlopeFit fit_threshold_slope(const ThresholdTable& table);

enum class ColoringStrategy { kAllRed, kRandom, kGreedyAvoidBlueH };
ColoringStrategy parse_strategy(const std::string& name);

struct TwoRoundReport {
  int n = 0;
  double p = 0, alpha = 0, p1 = 0, p2 = 0;
  long long z = 1;
  std::string strategy;
  uint64_t round1_edges = 0;
  uint64_t h_edge_count = 0;
  double c_budget = 0;           // 2 e_H n^{v_H} p1^{e_H}
  bool c_budget_exceeded = false;
  uint64_t gamma_size = 0;
  long long red_h_covered = 0;
  bool gamma_dense = false;
  bool dense_exact = false;
  uint64_t round2_edges = 0;
  uint64_t gamma_round2_edges = 0;
  uint64_t disjoint_h_copies = 0;

  std::string to_json() const;
};

TwoRoundReport two_round_experiment(const Graph& g, const Graph& h, int n,
                                    double p, double alpha,
                                    const Rational& rho, const Rational& dens,
                                    double z_const, ColoringStrategy strategy,
                                    const RngSpec& rng);

enum class EmitFormat { kCsv, kJson, kGnuplot };
EmitFormat parse_format(const std::string& name);

// Bit-stable serialization: fixed %.12g decimals, rationals as num/den.
std::string emit_table(const ThresholdTable& table, EmitFormat format);
void emit_table_file(const ThresholdTable& table, EmitFormat format,
                     const std::string& path);
ThresholdTable parse_table_json(const std::string& text);

// Accepts "3/4", "0.75", or "2"
Rational parse_rational_or_decimal(const std::string& text);

}  // namespace ramsey

#endif  // RAMSEY_THRESHOLD_HPP
