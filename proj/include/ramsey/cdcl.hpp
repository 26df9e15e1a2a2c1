#ifndef RAMSEY_CDCL_HPP
#define RAMSEY_CDCL_HPP

#include <cstdint>
#include <vector>

namespace ramsey {

// Small deterministic CDCL SAT solver: two-watched-literal propagation,
// 1UIP learning, VSIDS with lowest-index tie-breaks, phase saving, Luby
// restarts. Drives the two-color arrow search, where avoiding a red copy of
// G and a blue copy of H is exactly CNF over one boolean per edge.
class CdclSolver {
 public:
  explicit CdclSolver(int num_vars);

  // literal: +v means "var v true", -v means "var v false" (v is 1-based)
  void add_clause(const std::vector<int>& lits);

  enum class Result { kSat, kUnsat, kUnknown };
  Result solve(uint64_t conflict_budget);

  bool model_value(int var) const;  // valid after kSat; var is 1-based
  uint64_t conflicts() const { return conflicts_; }
  uint64_t decisions() const { return decisions_; }

 private:
  using Lit = int32_t;  // internal: 2*var + sign, var 0-based
  static Lit make_lit(int var0, bool negative) {
    return static_cast<Lit>(2 * var0 + (negative ? 1 : 0));
  }
  static int lit_var(Lit l) { return l >> 1; }
  static bool lit_sign(Lit l) { return l & 1; }
  static Lit lit_neg(Lit l) { return l ^ 1; }

  struct Clause {
    std::vector<Lit> lits;
    bool learned = false;
  };

  enum : int8_t { kUndef = 0, kTrue = 1, kFalse = 2 };
  int8_t value_of(Lit l) const {
    int8_t v = assigns_[static_cast<size_t>(lit_var(l))];
    if (v == kUndef) return kUndef;
    bool is_true = (v == kTrue) != lit_sign(l);
    return is_true ? kTrue : kFalse;
  }

  bool enqueue(Lit l, int reason);
  int propagate();  // returns conflicting clause index or -1
  void analyze(int conflict, std::vector<Lit>& learned, int& backjump);
  void backtrack(int level);
  int pick_branch_var();  // -1 when all assigned
  void bump(int var);
  void decay() { var_inc_ /= 0.95; }
  static uint64_t luby(uint64_t i);

  int num_vars_;
  std::vector<Clause> clauses_;
  std::vector<std::vector<int>> watches_;  // per literal
  std::vector<int8_t> assigns_;            // per var
  std::vector<int> levels_;
  std::vector<int> reasons_;               // clause index or -1
  std::vector<Lit> trail_;
  std::vector<size_t> trail_limits_;
  size_t propagate_head_ = 0;
  std::vector<double> activity_;
  double var_inc_ = 1.0;
  std::vector<int8_t> saved_phase_;
  std::vector<Lit> pending_units_;
  bool trivially_unsat_ = false;
  uint64_t conflicts_ = 0;
  uint64_t decisions_ = 0;
  std::vector<char> seen_;
};

}  // namespace ramsey

#endif  // RAMSEY_CDCL_HPP
