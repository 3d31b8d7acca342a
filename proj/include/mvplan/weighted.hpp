#pragma once

#include "mvplan/automaton.hpp"
#include "mvplan/mission.hpp"

#include <map>
#include <optional>
#include <vector>

namespace mvplan {

// Component of a weighted Buechi state: (0,0) is the accepting hub, (j,l)
// with 1 <= j <= n and 1 <= l <= m_j means "inside layer j, waiting for the
// l-th acceptance set of the j-th automaton".
struct ComponentTag {
    int layer = 0;
    int set = 0;

    bool is_hub() const { return layer == 0; }
    auto operator<=>(const ComponentTag&) const = default;
};

struct WeightedState {
    std::vector<StateId> coords; // one state per specification automaton
    ComponentTag tag;

    auto operator<=>(const WeightedState&) const = default;
};

struct WeightedEdge {
    Guard guard;
    StateId target;
    Reward weight;

    auto operator<=>(const WeightedEdge&) const = default;
};

// Layered weighted Buechi automaton over n specification automata. Only the
// part reachable from the initial state is materialized; ids follow
// breadth-first discovery order.
class WeightedBuchiAutomaton {
public:
    const Alphabet& alphabet() const { return alphabet_; }
    StateId initial() const { return 0; }
    std::size_t num_states() const { return states_.size(); }
    std::size_t num_transitions() const;
    std::size_t num_layers() const { return layer_sizes_.size(); }
    // m_j for layer j = 1..n (index j-1).
    const std::vector<int>& layer_sizes() const { return layer_sizes_; }
    const std::vector<Reward>& rewards() const { return rewards_; }

    const WeightedState& state(StateId q) const { return states_.at(q); }
    const std::vector<WeightedEdge>& out(StateId q) const { return out_.at(q); }
    bool accepting(StateId q) const { return states_.at(q).tag.is_hub(); }
    std::optional<StateId> find(const WeightedState& s) const;

    // Position of a tag in the order (0,0) < (1,1) < ... < (1,m_1) < (2,1) < ...
    std::size_t component_index(ComponentTag tag) const;
    std::size_t num_components() const { return component_offset_.back(); }

private:
    friend WeightedBuchiAutomaton build_weighted_ba(const std::vector<GeneralizedBuchiAutomaton>&,
                                                    const std::vector<Reward>&, std::size_t);

    Alphabet alphabet_;
    std::vector<int> layer_sizes_;
    std::vector<Reward> rewards_;
    std::vector<std::size_t> component_offset_{1};
    std::vector<WeightedState> states_;
    std::vector<std::vector<WeightedEdge>> out_;
    std::map<WeightedState, StateId> index_;
};

// Builds the layered automaton. `gbas` must be non-blocking and share one
// alphabet; `rewards` must be sorted non-increasingly. Layer j may only be
// left for a layer j' > j, so each layer is entered at most once per fragment.
// Throws ValidationError on unsorted rewards or blocking input and
// LimitError past `max_states`.
WeightedBuchiAutomaton build_weighted_ba(const std::vector<GeneralizedBuchiAutomaton>& gbas,
                                         const std::vector<Reward>& rewards,
                                         std::size_t max_states = 2000000);

} // namespace mvplan
