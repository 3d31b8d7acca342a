#include "mvplan/pipeline.hpp"

#include "mvplan/error.hpp"

namespace mvplan {

PlanningArtifacts build_artifacts(const TransitionSystem& ts, const MissionSpec& spec,
                                  const PipelineOptions& options) {
    std::vector<GeneralizedBuchiAutomaton> gbas;
    for (const auto& o : spec.objectives()) {
        for (const auto& atom : o.formula.atoms()) {
            if (!ts.alphabet().find(atom)) {
                throw ValidationError("formula " + std::to_string(o.original_index + 1) +
                                      " uses undeclared proposition '" + atom + "'");
            }
        }
        gbas.push_back(make_nonblocking(ltl_to_gba(o.formula, ts.alphabet(), options.translation)));
    }
    auto wba = build_weighted_ba(gbas, spec.rewards(), options.max_weighted_states);
    auto product = build_product(ts, wba, options.max_product_states);
    return PlanningArtifacts{std::move(gbas), std::move(wba), std::move(product)};
}

TraceLasso project(const WeightedProductAutomaton& product, const ProductLasso& lasso) {
    TraceLasso t;
    for (auto p : lasso.prefix) {
        t.prefix.push_back(product.state(p).ts);
    }
    for (auto p : lasso.cycle) {
        t.cycle.push_back(product.state(p).ts);
    }
    return t;
}

LassoPlan solve(const TransitionSystem& ts, const MissionSpec& spec,
                const PlanningArtifacts& artifacts, const PipelineOptions& options) {
    auto result = plan(artifacts.product, spec.total_reward(), options.planner);
    LassoPlan out;
    if (result.found) {
        out.reward = result.reward;
        out.product_lasso = std::move(result.lasso);
        out.trace = project(artifacts.product, out.product_lasso);
    } else {
        out.trace = arbitrary_lasso(ts);
    }
    out.satisfied = trace_reward(ts, spec, out.trace).satisfied;
    return out;
}

LassoPlan solve(const TransitionSystem& ts, const MissionSpec& spec,
                const PipelineOptions& options) {
    return solve(ts, spec, build_artifacts(ts, spec, options), options);
}

} // namespace mvplan
