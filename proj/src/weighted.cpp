#include "mvplan/weighted.hpp"

#include "mvplan/error.hpp"

#include <algorithm>
#include <deque>

namespace mvplan {

std::size_t WeightedBuchiAutomaton::num_transitions() const {
    std::size_t n = 0;
    for (const auto& e : out_) {
        n += e.size();
    }
    return n;
}

std::optional<StateId> WeightedBuchiAutomaton::find(const WeightedState& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::size_t WeightedBuchiAutomaton::component_index(ComponentTag tag) const {
    if (tag.is_hub()) {
        return 0;
    }
    return component_offset_.at(static_cast<std::size_t>(tag.layer) - 1) +
           static_cast<std::size_t>(tag.set) - 1;
}

namespace {

// All combinations of one edge per coordinate whose guards are jointly
// satisfiable, as (guard, target coordinates).
void joint_moves(const std::vector<GeneralizedBuchiAutomaton>& gbas,
                 const std::vector<StateId>& coords, std::size_t k, const Guard& guard,
                 std::vector<StateId>& targets,
                 std::vector<std::pair<Guard, std::vector<StateId>>>& out) {
    if (k == gbas.size()) {
        out.emplace_back(guard, targets);
        return;
    }
    for (const auto& e : gbas[k].out[coords[k]]) {
        auto g = conjoin(guard, e.guard);
        if (!g) {
            continue;
        }
        targets[k] = e.target;
        joint_moves(gbas, coords, k + 1, *g, targets, out);
    }
}

} // namespace

WeightedBuchiAutomaton build_weighted_ba(const std::vector<GeneralizedBuchiAutomaton>& gbas,
                                         const std::vector<Reward>& rewards,
                                         std::size_t max_states) {
    if (gbas.size() != rewards.size()) {
        throw ValidationError("one reward per automaton is required");
    }
    if (!std::is_sorted(rewards.begin(), rewards.end(), std::greater<>())) {
        throw ValidationError("rewards must be sorted non-increasingly");
    }
    WeightedBuchiAutomaton w;
    for (std::size_t j = 0; j < gbas.size(); ++j) {
        validate(gbas[j]);
        if (j == 0) {
            w.alphabet_ = gbas[j].alphabet;
        } else if (!(gbas[j].alphabet == w.alphabet_)) {
            throw ValidationError("specification automata use different alphabets");
        }
        if (!is_nonblocking(gbas[j])) {
            throw ValidationError("specification automaton " + std::to_string(j + 1) +
                                  " is blocking");
        }
        if (rewards[j] < 0) {
            throw ValidationError("rewards must be non-negative");
        }
    }
    // An empty acceptance family means every run is accepting.
    std::vector<std::vector<std::vector<bool>>> sets;
    for (const auto& g : gbas) {
        auto family = g.acceptance;
        if (family.empty()) {
            family.assign(1, std::vector<bool>(g.num_states(), true));
        }
        w.layer_sizes_.push_back(static_cast<int>(family.size()));
        w.component_offset_.push_back(w.component_offset_.back() + family.size());
        sets.push_back(std::move(family));
    }
    w.rewards_ = rewards;
    const int n = static_cast<int>(gbas.size());

    auto intern = [&](WeightedState s, std::deque<StateId>& queue) -> StateId {
        auto it = w.index_.find(s);
        if (it != w.index_.end()) {
            return it->second;
        }
        if (w.states_.size() >= max_states) {
            throw LimitError("weighted automaton exceeds " + std::to_string(max_states) +
                             " states");
        }
        auto id = static_cast<StateId>(w.states_.size());
        w.index_.emplace(s, id);
        w.states_.push_back(std::move(s));
        w.out_.emplace_back();
        queue.push_back(id);
        return id;
    };

    std::deque<StateId> queue;
    WeightedState init;
    for (const auto& g : gbas) {
        init.coords.push_back(g.initial);
    }
    intern(init, queue);

    std::vector<std::pair<Guard, std::vector<StateId>>> moves;
    std::vector<StateId> scratch(gbas.size());
    while (!queue.empty()) {
        const StateId q = queue.front();
        queue.pop_front();
        const WeightedState src = w.states_[q];
        moves.clear();
        joint_moves(gbas, src.coords, 0, Guard{}, scratch, moves);

        // Target tags and weights depend only on the source.
        std::vector<std::pair<ComponentTag, Reward>> tags;
        const ComponentTag t = src.tag;
        if (t.is_hub()) {
            tags.emplace_back(ComponentTag{0, 0}, 0);
            for (int j = 1; j <= n; ++j) {
                tags.emplace_back(ComponentTag{j, 1}, rewards[j - 1]);
            }
        } else {
            const auto j = static_cast<std::size_t>(t.layer - 1);
            const bool in_set = sets[j][static_cast<std::size_t>(t.set - 1)][src.coords[j]];
            if (!in_set) {
                tags.emplace_back(t, 0);
            } else if (t.set < w.layer_sizes_[j]) {
                tags.emplace_back(ComponentTag{t.layer, t.set + 1}, 0);
            } else {
                for (int next = t.layer + 1; next <= n; ++next) {
                    tags.emplace_back(ComponentTag{next, 1}, rewards[next - 1]);
                }
                tags.emplace_back(ComponentTag{0, 0}, 0);
            }
        }

        std::vector<WeightedEdge> edges;
        for (const auto& [guard, coords] : moves) {
            for (const auto& [tag, weight] : tags) {
                StateId target = intern(WeightedState{coords, tag}, queue);
                edges.push_back(WeightedEdge{guard, target, weight});
            }
        }
        std::sort(edges.begin(), edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
            return std::tie(a.target, a.guard) < std::tie(b.target, b.guard);
        });
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        w.out_[q] = std::move(edges);
    }
    return w;
}

} // namespace mvplan
