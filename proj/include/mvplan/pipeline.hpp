#pragma once

#include "mvplan/mission.hpp"
#include "mvplan/planner.hpp"
#include "mvplan/trace_reward.hpp"
#include "mvplan/translate.hpp"
#include "mvplan/weighted.hpp"

#include <vector>

namespace mvplan {

struct PipelineOptions {
    TranslationOptions translation;
    std::size_t max_weighted_states = 2000000;
    std::size_t max_product_states = 20000000;
    PlannerOptions planner;
};

// Intermediate automata of one planning run, in mission (reward-sorted)
// order.
struct PlanningArtifacts {
    std::vector<GeneralizedBuchiAutomaton> gbas; // non-blocking
    WeightedBuchiAutomaton wba;
    WeightedProductAutomaton product;
};

struct LassoPlan {
    Reward reward = 0;
    // Empty when no accepting product cycle exists and `trace` is an
    // arbitrary lasso of the system.
    ProductLasso product_lasso;
    TraceLasso trace;
    std::vector<bool> satisfied; // by original formula index
};

PlanningArtifacts build_artifacts(const TransitionSystem& ts, const MissionSpec& spec,
                                  const PipelineOptions& options = {});

TraceLasso project(const WeightedProductAutomaton& product, const ProductLasso& lasso);

// Translate every formula, build the weighted automaton and the product,
// run the planner and project the result back onto the system.
LassoPlan solve(const TransitionSystem& ts, const MissionSpec& spec,
                const PipelineOptions& options = {});
LassoPlan solve(const TransitionSystem& ts, const MissionSpec& spec,
                const PlanningArtifacts& artifacts, const PipelineOptions& options = {});

} // namespace mvplan
