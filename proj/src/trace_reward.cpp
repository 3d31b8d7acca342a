#include "mvplan/trace_reward.hpp"

namespace mvplan {

LassoWord word_of(const TransitionSystem& ts, const TraceLasso& lasso) {
    LassoWord w;
    for (auto s : lasso.prefix) {
        w.prefix.push_back(ts.label(s));
    }
    for (auto s : lasso.cycle) {
        w.cycle.push_back(ts.label(s));
    }
    return w;
}

TraceScore trace_reward(const TransitionSystem& ts, const MissionSpec& spec,
                        const TraceLasso& lasso) {
    check_lasso(ts, lasso);
    const LassoWord word = word_of(ts, lasso);
    TraceScore score;
    score.satisfied.assign(spec.size(), false);
    for (const auto& o : spec.objectives()) {
        if (ltl_eval_lasso(o.formula, word, ts.alphabet())) {
            score.satisfied[o.original_index] = true;
            score.reward += o.reward;
        }
    }
    return score;
}

} // namespace mvplan
