#pragma once

#include "mvplan/alphabet.hpp"
#include "mvplan/automaton.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace mvplan {

// Labeled transition system. Successor lists are sorted and duplicate-free;
// the planner chooses among successors, so several are allowed.
class TransitionSystem {
public:
    TransitionSystem() = default;
    TransitionSystem(Alphabet alphabet, std::vector<std::string> state_names, StateId initial,
                     std::vector<std::vector<StateId>> successors,
                     std::vector<Valuation> labels);

    const Alphabet& alphabet() const { return alphabet_; }
    StateId initial() const { return initial_; }
    std::size_t num_states() const { return names_.size(); }
    std::size_t num_transitions() const;
    const std::string& name(StateId s) const { return names_.at(s); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<StateId> find(const std::string& name) const;
    const std::vector<StateId>& successors(StateId s) const { return succ_.at(s); }
    bool has_transition(StateId from, StateId to) const;
    const Valuation& label(StateId s) const { return labels_.at(s); }

    bool operator==(const TransitionSystem& other) const;

private:
    Alphabet alphabet_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, StateId> index_;
    StateId initial_ = 0;
    std::vector<std::vector<StateId>> succ_;
    std::vector<Valuation> labels_;
};

// A trace prefix . cycle^omega of a transition system.
struct TraceLasso {
    std::vector<StateId> prefix;
    std::vector<StateId> cycle;

    bool operator==(const TraceLasso&) const = default;
};

// Throws InvalidLassoError unless the lasso starts in the initial state,
// follows transitions, and its cycle closes.
void check_lasso(const TransitionSystem& ts, const TraceLasso& lasso);

// Some lasso of the system: follows the first successor until a repeat.
TraceLasso arbitrary_lasso(const TransitionSystem& ts);

} // namespace mvplan
