#ifndef RAMSEY_RANDOM_MODELS_HPP
#define RAMSEY_RANDOM_MODELS_HPP

#include <optional>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/rational.hpp"
#include "ramsey/rng.hpp"
#include "ramsey/subgraph.hpp"

namespace ramsey {

// G_{n,p}: edge {u,v} present iff the deviate at counter pair_index(u,v)
// falls below p. Identical RngSpec -> identical graph, any thread count.
Graph sample_gnp(int n, double p, const RngSpec& rng);

// p1 = alpha p, p2 = (p - p1)/(1 - p1); union of independent rounds
// reproduces G_{n,p} exactly. p = 1 forces p1 = alpha, p2 = 1.
std::pair<double, double> two_round_split(double p, double alpha);
std::pair<Rational, Rational> two_round_split_exact(const Rational& p,
                                                    const Rational& alpha);

enum class DensenessMode { kExact, kFalsify };

struct DensenessVerdict {
  bool dense = false;
  // in exact mode: a set of ceil(rho n) vertices minimizing induced edges;
  // in falsify mode: a violating set when one was found
  std::optional<std::vector<int>> violating_set;
  long long witness_edges = 0;  // induced edges of the returned set
  long long required_edges = 0; // threshold it was compared against
  bool exact = false;
};

// Every vertex set V with |V| = ceil(rho n) must induce at least
// d * C(|V|, 2) edges. literal_denominator switches the bound to the
// paper-literal d * C(n, 2).
DensenessVerdict is_rho_d_dense(const Graph& f, const Rational& rho,
                                const Rational& d, DensenessMode mode,
                                bool literal_denominator = false,
                                const RngSpec& rng = {});

struct DisjointFamily {
  std::vector<EdgeSet> copies;  // pairwise edge-disjoint
  bool truncated = false;       // copy enumeration hit the cap
  long long conflict_nodes = 0;
  long long conflict_edges = 0;
  long long turan_bound = 0;    // ceil(v^2 / (v + 2e)) on the conflict graph
};

// Greedy independent set in the conflict graph of H-copies (copies conflict
// when they share an edge): repeatedly take a minimum-conflict-degree copy
// and drop its conflicting neighbors. Meets the Turan bound on every input.
DisjointFamily disjoint_copies(const Graph& f, const Graph& h,
                               size_t copy_cap = 200000);

struct JansonBound {
  double mu = 0;     // sum of p^{e(H_i)} over copies
  double delta = 0;  // sum over ordered conflicting pairs of E[X_i X_j]
  double bound = 1;  // exp(-delta^2 mu^2 / (2(mu + Delta)))
  long long copy_count = 0;
};

JansonBound janson_lower_tail(const Graph& f, const Graph& h, double p,
                              double tail_delta);

// Exact lower-tail probability Pr(#copies of h in f cap G_{e(f),p} <= bound)
// by weighted enumeration over all edge subsets of f.
double exact_copy_lower_tail(const Graph& f, const Graph& h, double p,
                             double fraction_of_mean);

// Distribution of F -> (G,H) over all labelled graphs on [n]: counts[e] =
// number of edge-e graphs with the arrow property.
struct ArrowPolynomial {
  int n = 0;
  int max_edges = 0;
  std::vector<uint64_t> counts;

  double eval(double p) const;
  Rational eval_exact(const Rational& p) const;
};

ArrowPolynomial exact_arrow_polynomial(const Graph& g, const Graph& h, int n);
double exact_arrow_probability(const Graph& g, const Graph& h, int n,
                               double p);

// --- Harris inequality checking -------------------------------------------

enum class PropKind {
  kContainsCopy,     // increasing
  kEdgeCountAtMost,  // decreasing
  kMaxDegreeAtMost,  // decreasing
  kRhoDDense,        // increasing
  kCopyCountAtMost,  // decreasing
};

struct PropSpec {
  PropKind kind;
  Graph pattern;      // for copy-based predicates
  long long bound = 0;
  Rational rho, dens; // for denseness

  bool increasing() const {
    return kind == PropKind::kContainsCopy || kind == PropKind::kRhoDDense;
  }
  bool evaluate(const Graph& f) const;
};

struct HarrisResult {
  Rational joint;    // Pr(A and B)
  Rational product;  // Pr(A) Pr(B)
  bool holds = false;
};

// Exact check of Pr(A cap B) >= Pr(A) Pr(B) for same-direction monotone
// properties over G_{n,p}; n <= 5, p rational.
HarrisResult harris_check(const PropSpec& a, const PropSpec& b, int n,
                          const Rational& p);

}  // namespace ramsey

#endif  // RAMSEY_RANDOM_MODELS_HPP
