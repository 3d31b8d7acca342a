#pragma once

#include "mvplan/automaton.hpp"

#include <optional>
#include <vector>

namespace mvplan {

// Plain successor-list graph with an initial node and an accepting set.
struct ExplicitGraph {
    StateId initial = 0;
    std::vector<std::vector<StateId>> succ;
    std::vector<bool> accepting;
};

struct GraphLasso {
    std::vector<StateId> prefix; // initial node first, excluding the cycle head
    std::vector<StateId> cycle;  // accepting head first; closes back to it
};

// Classic nested depth-first search (blue/red). Returns a reachable
// accepting cycle with its access path, or nullopt when none exists.
std::optional<GraphLasso> find_accepting_lasso(const ExplicitGraph& g);

} // namespace mvplan
