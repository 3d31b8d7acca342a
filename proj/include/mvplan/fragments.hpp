#pragma once

#include "mvplan/product.hpp"

#include <span>
#include <vector>

namespace mvplan {

// Segment run[begin..end] that starts and ends in accepting states with no
// accepting state strictly inside; weight is the sum of its step weights.
struct Fragment {
    std::size_t begin;
    std::size_t end;
    Reward weight;

    bool operator==(const Fragment&) const = default;
};

// Fragments of a finite run given per-position acceptance and per-step
// weights (step i goes from position i to i+1).
std::vector<Fragment> fragments(const std::vector<bool>& accepting,
                                std::span<const Reward> step_weights);

struct ProductLasso {
    std::vector<StateId> prefix; // from the initial state, excluding the cycle head
    std::vector<StateId> cycle;  // cycle head first; closes back to it

    bool operator==(const ProductLasso&) const = default;
};

// Weight of the product transition a -> b. Throws InvalidLassoError when
// there is none.
Reward edge_weight(const WeightedProductAutomaton& product, StateId a, StateId b);

// Fragments of a finite product run.
std::vector<Fragment> fragments(const WeightedProductAutomaton& product,
                                std::span<const StateId> run);

// Fragments of one traversal of a cycle; positions index the cycle, with
// position cycle.size() standing for the closing return to cycle[0].
// Throws InvalidLassoError unless cycle[0] is accepting.
std::vector<Fragment> cycle_fragments(const WeightedProductAutomaton& product,
                                      std::span<const StateId> cycle);

// Largest fragment weight that recurs forever, i.e. the largest weight among
// the cycle's fragments; prefix fragments occur once and do not count.
// Throws InvalidLassoError when the cycle has no accepting state.
Reward run_reward(const WeightedProductAutomaton& product, const ProductLasso& lasso);

} // namespace mvplan
