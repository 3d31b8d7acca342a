#pragma once

#include "mvplan/automaton.hpp"
#include "mvplan/ltl_eval.hpp"
#include "mvplan/mission.hpp"
#include "mvplan/transition_system.hpp"

#include <vector>

namespace mvplan {

// Lasso-word membership by nested search over (state, word position).
bool accepts(const BuchiAutomaton& a, const LassoWord& word);
bool accepts(const GeneralizedBuchiAutomaton& a, const LassoWord& word);

// Layered Cartesian product: states Q_1 x ... x Q_n x {1..n}, the counter
// advancing when the coordinate it waits for is accepting; accepting
// F_1 x Q_2 x ... x Q_n x {1}. Reachable part only. Throws ValidationError
// on an empty list or mismatched alphabets.
BuchiAutomaton intersect(const std::vector<BuchiAutomaton>& bas);

struct OracleLimits {
    std::size_t max_ts_states = 12;
    std::size_t max_formulas = 4;
};

struct OraclePlan {
    Reward reward = 0;
    // Subset whose intersection was found non-empty, by original index.
    std::vector<bool> witness;
    // Formulas true on the witness lasso, including incidental ones.
    std::vector<bool> satisfied;
    TraceLasso trace;
};

// Subset enumeration baseline: for every subset (largest reward sum first)
// build the intersection of the degeneralized automata, take its product
// with the system and look for an accepting lasso. The first subset with a
// non-empty product is optimal; among equal sums the lexicographically
// greatest membership vector in reward-sorted order wins.
// Throws LimitError past `limits`.
OraclePlan brute_force_plan(const TransitionSystem& ts, const MissionSpec& spec,
                            const OracleLimits& limits = {});

// Every subset (membership by original index) whose intersection is
// realizable by some trace and whose reward sum equals the optimum.
std::vector<std::vector<bool>> optimal_subsets(const TransitionSystem& ts, const MissionSpec& spec,
                                               const OracleLimits& limits = {});

// Whether some trace of `ts` satisfies every formula of `subset` (indices
// into spec.objectives(), i.e. reward-sorted order). Fills `trace` when
// non-null.
bool realizable(const TransitionSystem& ts, const MissionSpec& spec,
                const std::vector<std::size_t>& subset, TraceLasso* trace = nullptr);

} // namespace mvplan
