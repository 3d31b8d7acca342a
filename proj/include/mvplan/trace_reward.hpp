#pragma once

#include "mvplan/ltl_eval.hpp"
#include "mvplan/mission.hpp"
#include "mvplan/transition_system.hpp"

#include <vector>

namespace mvplan {

struct TraceScore {
    Reward reward = 0;
    // Indexed by original formula position.
    std::vector<bool> satisfied;
};

LassoWord word_of(const TransitionSystem& ts, const TraceLasso& lasso);

// Sum of the rewards of the formulas that the lasso's word satisfies.
// Throws InvalidLassoError when the lasso is not a trace of `ts`.
TraceScore trace_reward(const TransitionSystem& ts, const MissionSpec& spec,
                        const TraceLasso& lasso);

} // namespace mvplan
