#include "ramsey/cdcl.hpp"

#include <algorithm>
#include <stdexcept>

namespace ramsey {

CdclSolver::CdclSolver(int num_vars)
    : num_vars_(num_vars),
      watches_(static_cast<size_t>(2 * num_vars)),
      assigns_(static_cast<size_t>(num_vars), kUndef),
      levels_(static_cast<size_t>(num_vars), 0),
      reasons_(static_cast<size_t>(num_vars), -1),
      activity_(static_cast<size_t>(num_vars), 0.0),
      saved_phase_(static_cast<size_t>(num_vars), kFalse),
      seen_(static_cast<size_t>(num_vars), 0) {}

void CdclSolver::add_clause(const std::vector<int>& lits) {
  std::vector<Lit> internal;
  for (int l : lits) {
    int var = std::abs(l) - 1;
    if (var < 0 || var >= num_vars_)
      throw std::invalid_argument("literal out of range");
    internal.push_back(make_lit(var, l < 0));
  }
  std::sort(internal.begin(), internal.end());
  internal.erase(std::unique(internal.begin(), internal.end()),
                 internal.end());
  for (size_t i = 1; i < internal.size(); ++i)
    if (internal[i] == lit_neg(internal[i - 1])) return;  // tautology
  if (internal.empty()) {
    trivially_unsat_ = true;
    return;
  }
  if (internal.size() == 1) {
    pending_units_.push_back(internal[0]);
    return;
  }
  clauses_.push_back({std::move(internal), false});
  int idx = static_cast<int>(clauses_.size()) - 1;
  watches_[static_cast<size_t>(lit_neg(clauses_.back().lits[0]))].push_back(idx);
  watches_[static_cast<size_t>(lit_neg(clauses_.back().lits[1]))].push_back(idx);
}

bool CdclSolver::enqueue(Lit l, int reason) {
  int8_t v = value_of(l);
  if (v == kTrue) return true;
  if (v == kFalse) return false;
  int var = lit_var(l);
  assigns_[static_cast<size_t>(var)] = lit_sign(l) ? kFalse : kTrue;
  levels_[static_cast<size_t>(var)] =
      static_cast<int>(trail_limits_.size());
  reasons_[static_cast<size_t>(var)] = reason;
  trail_.push_back(l);
  return true;
}

int CdclSolver::propagate() {
  while (propagate_head_ < trail_.size()) {
    Lit l = trail_[propagate_head_++];  // l became true; scan watchers of ~l
    std::vector<int>& watch_list = watches_[static_cast<size_t>(l)];
    size_t keep = 0;
    for (size_t wi = 0; wi < watch_list.size(); ++wi) {
      int ci = watch_list[wi];
      Clause& clause = clauses_[static_cast<size_t>(ci)];
      std::vector<Lit>& lits = clause.lits;
      // normalize: watched literals are lits[0], lits[1]
      Lit falsified = lit_neg(l);
      if (lits[0] == falsified) std::swap(lits[0], lits[1]);
      if (value_of(lits[0]) == kTrue) {
        watch_list[keep++] = ci;
        continue;
      }
      bool moved = false;
      for (size_t k = 2; k < lits.size(); ++k) {
        if (value_of(lits[k]) != kFalse) {
          std::swap(lits[1], lits[k]);
          watches_[static_cast<size_t>(lit_neg(lits[1]))].push_back(ci);
          moved = true;
          break;
        }
      }
      if (moved) continue;  // watcher migrated
      watch_list[keep++] = ci;
      if (!enqueue(lits[0], ci)) {
        // conflict: keep the remaining watchers before returning
        for (size_t rest = wi + 1; rest < watch_list.size(); ++rest)
          watch_list[keep++] = watch_list[rest];
        watch_list.resize(keep);
        return ci;
      }
    }
    watch_list.resize(keep);
  }
  return -1;
}

void CdclSolver::bump(int var) {
  activity_[static_cast<size_t>(var)] += var_inc_;
  if (activity_[static_cast<size_t>(var)] > 1e100) {
    for (double& a : activity_) a *= 1e-100;
    var_inc_ *= 1e-100;
  }
}

void CdclSolver::analyze(int conflict, std::vector<Lit>& learned,
                         int& backjump) {
  learned.clear();
  learned.push_back(0);  // slot for the asserting literal
  int counter = 0;
  Lit p = 0;
  bool have_p = false;
  size_t trail_idx = trail_.size();
  int current_level = static_cast<int>(trail_limits_.size());

  int reason = conflict;
  for (;;) {
    const Clause& clause = clauses_[static_cast<size_t>(reason)];
    for (Lit q : clause.lits) {
      if (have_p && q == p) continue;
      int v = lit_var(q);
      if (seen_[static_cast<size_t>(v)] || value_of(q) != kFalse) continue;
      if (levels_[static_cast<size_t>(v)] == 0) continue;
      seen_[static_cast<size_t>(v)] = 1;
      bump(v);
      if (levels_[static_cast<size_t>(v)] == current_level)
        ++counter;
      else
        learned.push_back(q);
    }
    // next literal to resolve on
    do {
      --trail_idx;
    } while (!seen_[static_cast<size_t>(lit_var(trail_[trail_idx]))]);
    p = trail_[trail_idx];
    have_p = true;
    seen_[static_cast<size_t>(lit_var(p))] = 0;
    --counter;
    if (counter == 0) break;
    reason = reasons_[static_cast<size_t>(lit_var(p))];
  }
  learned[0] = lit_neg(p);

  backjump = 0;
  if (learned.size() > 1) {
    size_t max_i = 1;
    for (size_t i = 2; i < learned.size(); ++i)
      if (levels_[static_cast<size_t>(lit_var(learned[i]))] >
          levels_[static_cast<size_t>(lit_var(learned[max_i]))])
        max_i = i;
    std::swap(learned[1], learned[max_i]);
    backjump = levels_[static_cast<size_t>(lit_var(learned[1]))];
  }
  for (Lit q : learned) seen_[static_cast<size_t>(lit_var(q))] = 0;
}

void CdclSolver::backtrack(int level) {
  if (static_cast<int>(trail_limits_.size()) <= level) return;
  size_t bound = trail_limits_[static_cast<size_t>(level)];
  for (size_t i = trail_.size(); i-- > bound;) {
    int var = lit_var(trail_[i]);
    saved_phase_[static_cast<size_t>(var)] =
        assigns_[static_cast<size_t>(var)];
    assigns_[static_cast<size_t>(var)] = kUndef;
    reasons_[static_cast<size_t>(var)] = -1;
  }
  trail_.resize(bound);
  trail_limits_.resize(static_cast<size_t>(level));
  propagate_head_ = trail_.size();
}

int CdclSolver::pick_branch_var() {
  int best = -1;
  double best_act = -1.0;
  for (int v = 0; v < num_vars_; ++v) {
    if (assigns_[static_cast<size_t>(v)] != kUndef) continue;
    if (activity_[static_cast<size_t>(v)] > best_act) {
      best_act = activity_[static_cast<size_t>(v)];
      best = v;
    }
  }
  return best;
}

uint64_t CdclSolver::luby(uint64_t x) {
  // Luby sequence 1 1 2 1 1 2 4 1 1 2 1 1 2 4 8 ... (x is 0-based)
  uint64_t size = 1, seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x %= size;
  }
  return 1ULL << seq;
}

CdclSolver::Result CdclSolver::solve(uint64_t conflict_budget) {
  if (trivially_unsat_) return Result::kUnsat;
  for (Lit u : pending_units_)
    if (!enqueue(u, -1)) return Result::kUnsat;
  pending_units_.clear();
  if (propagate() >= 0) return Result::kUnsat;

  uint64_t restart_index = 0;
  uint64_t restart_budget = 100 * luby(restart_index);
  uint64_t conflicts_at_restart = 0;
  std::vector<Lit> learned;

  for (;;) {
    int conflict = propagate();
    if (conflict >= 0) {
      ++conflicts_;
      if (trail_limits_.empty()) return Result::kUnsat;
      if (conflicts_ >= conflict_budget) return Result::kUnknown;
      int backjump = 0;
      analyze(conflict, learned, backjump);
      backtrack(backjump);
      decay();
      if (learned.size() == 1) {
        if (!enqueue(learned[0], -1)) return Result::kUnsat;
      } else {
        clauses_.push_back({learned, true});
        int idx = static_cast<int>(clauses_.size()) - 1;
        watches_[static_cast<size_t>(lit_neg(learned[0]))].push_back(idx);
        watches_[static_cast<size_t>(lit_neg(learned[1]))].push_back(idx);
        enqueue(learned[0], idx);
      }
      if (conflicts_ - conflicts_at_restart >= restart_budget) {
        backtrack(0);
        conflicts_at_restart = conflicts_;
        restart_budget = 100 * luby(++restart_index);
      }
      continue;
    }
    int var = pick_branch_var();
    if (var < 0) return Result::kSat;
    ++decisions_;
    trail_limits_.push_back(trail_.size());
    Lit choice = make_lit(
        var, saved_phase_[static_cast<size_t>(var)] != kTrue);
    enqueue(choice, -1);
  }
}

bool CdclSolver::model_value(int var) const {
  return assigns_[static_cast<size_t>(var - 1)] == kTrue;
}

}  // namespace ramsey
