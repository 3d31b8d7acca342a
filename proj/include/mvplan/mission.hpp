#pragma once

#include "mvplan/formula.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mvplan {

using Reward = std::int64_t;

struct Objective {
    Formula formula;
    Reward reward = 0;
    std::size_t original_index = 0; // position in the input, 0-based
    std::string text;               // source text, kept for reports
};

// Prioritized formulas. Objectives are held sorted by non-increasing reward
// (stable with respect to input order); original indices are kept for
// reporting.
class MissionSpec {
public:
    MissionSpec() = default;
    // Indices are assigned from input order.
    explicit MissionSpec(std::vector<Objective> objectives);

    const std::vector<Objective>& objectives() const { return objectives_; }
    std::size_t size() const { return objectives_.size(); }
    bool empty() const { return objectives_.empty(); }
    Reward total_reward() const { return total_; }
    std::vector<Reward> rewards() const;

    // Objectives back in input order.
    std::vector<Objective> in_input_order() const;

    // Every reward multiplied by `factor` (> 0).
    MissionSpec scaled(Reward factor) const;
    // rew(phi_i) = 2^(n-i) over input positions i = 1..n.
    MissionSpec lexicographic() const;
    MissionSpec with(Formula f, Reward reward, std::string text = {}) const;

    // One message per zero-reward objective.
    std::vector<std::string> warnings() const;

private:
    std::vector<Objective> objectives_;
    Reward total_ = 0;
};

} // namespace mvplan
