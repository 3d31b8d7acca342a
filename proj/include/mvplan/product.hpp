#pragma once

#include "mvplan/transition_system.hpp"
#include "mvplan/weighted.hpp"

#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

namespace mvplan {

struct ProductState {
    StateId ts;  // projection onto the transition system
    StateId wba; // weighted automaton state
};

struct ProductEdge {
    StateId target;
    Reward weight;
};

// Reachable part of T x B. State 0 is (s_init, q_init); ids follow
// breadth-first discovery order and successor lists are sorted by target id.
class WeightedProductAutomaton {
public:
    StateId initial() const { return 0; }
    std::size_t num_states() const { return states_.size(); }
    std::size_t num_transitions() const { return edges_.size(); }

    const ProductState& state(StateId p) const { return states_[p]; }
    std::span<const ProductEdge> successors(StateId p) const {
        return {edges_.data() + offsets_[p], edges_.data() + offsets_[p + 1]};
    }
    bool accepting(StateId p) const { return component_[p] == 0; }
    // Flattened component index, 0 for the hub (0,0).
    std::uint32_t component(StateId p) const { return component_[p]; }
    std::size_t num_components() const { return num_components_; }
    std::optional<StateId> find(StateId ts_state, StateId wba_state) const;

private:
    friend WeightedProductAutomaton build_product(const TransitionSystem&,
                                                  const WeightedBuchiAutomaton&, std::size_t);

    std::vector<ProductState> states_;
    std::vector<std::uint32_t> component_;
    std::vector<std::size_t> offsets_{0};
    std::vector<ProductEdge> edges_;
    std::size_t num_components_ = 1;
    std::size_t wba_states_ = 0;
    std::unordered_map<std::uint64_t, StateId> index_;
};

// ((s,q),(s',q')) is a transition iff (s,s') in R and some edge q -> q'
// matches L(s); it inherits that edge's weight. Every proposition of the
// automaton must be declared by the system. Throws LimitError past
// `max_states`.
WeightedProductAutomaton build_product(const TransitionSystem& ts,
                                       const WeightedBuchiAutomaton& wba,
                                       std::size_t max_states = 20000000);

} // namespace mvplan
