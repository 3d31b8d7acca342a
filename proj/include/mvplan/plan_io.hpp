#pragma once

#include "mvplan/pipeline.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace mvplan {

// Text form of a plan:
//   reward: 11
//   prefix: s0 s3
//   cycle: s5 s7
//   satisfied: 1 3
// Formula indices are 1-based input positions. With a product, the
// product-level lasso follows as `product-prefix:` / `product-cycle:` lines
// of `<ts-state>/<wba-state>[j.l]` items.
std::string serialize_plan(const TransitionSystem& ts, const LassoPlan& plan,
                           const PlanningArtifacts* product_trace = nullptr);

struct PlanFile {
    Reward reward = 0;
    TraceLasso trace;
    std::vector<std::size_t> satisfied; // 1-based
};

// Reads a serialized plan back; states are resolved against `ts`, product
// lines are ignored. Throws ParseError.
PlanFile parse_plan(std::string_view text, const TransitionSystem& ts);

} // namespace mvplan
