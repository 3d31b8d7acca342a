#include "mvplan/mission.hpp"

#include "mvplan/error.hpp"

#include <algorithm>
#include <limits>

namespace mvplan {

MissionSpec::MissionSpec(std::vector<Objective> objectives) {
    for (std::size_t i = 0; i < objectives.size(); ++i) {
        objectives[i].original_index = i;
        if (objectives[i].reward < 0) {
            throw ValidationError("objective " + std::to_string(i + 1) +
                                  " has a negative reward");
        }
        if (objectives[i].text.empty()) {
            objectives[i].text = to_string(objectives[i].formula);
        }
        if (total_ > std::numeric_limits<Reward>::max() - objectives[i].reward) {
            throw ValidationError("total reward overflows a 64-bit integer");
        }
        total_ += objectives[i].reward;
    }
    std::stable_sort(objectives.begin(), objectives.end(),
                     [](const Objective& a, const Objective& b) { return a.reward > b.reward; });
    objectives_ = std::move(objectives);
}

std::vector<Reward> MissionSpec::rewards() const {
    std::vector<Reward> out;
    for (const auto& o : objectives_) {
        out.push_back(o.reward);
    }
    return out;
}

std::vector<Objective> MissionSpec::in_input_order() const {
    std::vector<Objective> out = objectives_;
    std::sort(out.begin(), out.end(), [](const Objective& a, const Objective& b) {
        return a.original_index < b.original_index;
    });
    return out;
}

MissionSpec MissionSpec::scaled(Reward factor) const {
    if (factor <= 0) {
        throw ValidationError("reward scaling factor must be positive");
    }
    auto objs = in_input_order();
    for (auto& o : objs) {
        if (o.reward > std::numeric_limits<Reward>::max() / factor) {
            throw ValidationError("scaled reward overflows a 64-bit integer");
        }
        o.reward *= factor;
    }
    return MissionSpec(std::move(objs));
}

MissionSpec MissionSpec::lexicographic() const {
    auto objs = in_input_order();
    const std::size_t n = objs.size();
    if (n > 63) {
        throw ValidationError("lexicographic rewards for " + std::to_string(n) +
                              " formulas overflow a 64-bit integer");
    }
    for (std::size_t i = 0; i < n; ++i) {
        objs[i].reward = Reward{1} << (n - 1 - i);
    }
    return MissionSpec(std::move(objs));
}

MissionSpec MissionSpec::with(Formula f, Reward reward, std::string text) const {
    auto objs = in_input_order();
    objs.push_back(Objective{std::move(f), reward, objs.size(), std::move(text)});
    return MissionSpec(std::move(objs));
}

std::vector<std::string> MissionSpec::warnings() const {
    std::vector<std::string> out;
    for (const auto& o : in_input_order()) {
        if (o.reward == 0) {
            out.push_back("formula " + std::to_string(o.original_index + 1) +
                          " has reward 0 and cannot influence the plan");
        }
    }
    return out;
}

} // namespace mvplan
