#pragma once

#include "mvplan/fragments.hpp"
#include "mvplan/product.hpp"

#include <optional>
#include <vector>

namespace mvplan {

struct PlannerOptions {
    // Skip states already expanded by an earlier inner search of the same
    // strongly connected component. Never changes the optimal reward.
    bool reuse_inner_visits = true;
};

struct ProductPlan {
    bool found = false; // false: no accepting cycle is reachable
    ProductLasso lasso;
    Reward reward = 0;
};

// Cycle through an accepting root whose first fragment has maximal weight;
// the rest of the cycle runs inside the hub component at weight 0.
struct CycleResult {
    std::vector<StateId> cycle; // root first, closes back to root
    Reward weight = 0;
};

// Inner search of the weighted nested DFS. Owns the per-state scratch
// annotations (dist, pred, visit marks); the product is only read.
class CycleSearch {
public:
    CycleSearch(const WeightedProductAutomaton& product, PlannerOptions options = {});

    // Maximizes the first-fragment weight over cycles through `root`, which
    // must be accepting. Components are relaxed in their topological order
    // (0,0) < (1,1) < ... < (n,m_n); within a component all weights are 0, so
    // each state takes the largest entry distance that reaches it.
    std::optional<CycleResult> longest_cycle(StateId root);

    // The weight part of longest_cycle; cycle() then materializes the cycle
    // of the last successful search.
    std::optional<Reward> search(StateId root);
    std::vector<StateId> cycle() const;

    // After a search from `root`: maximal simple distance from the root to a
    // non-hub state, or the best fragment weight arriving at a hub state.
    // Nullopt for states the last search did not reach.
    std::optional<Reward> distance(StateId p) const;

private:
    bool in_scope(StateId root, StateId p) const;
    bool pruned(StateId p) const;
    void relax(StateId root, StateId from, StateId to, Reward value);
    std::vector<StateId> stem(StateId root, StateId end) const;

    const WeightedProductAutomaton& product_;
    PlannerOptions options_;
    std::vector<std::uint32_t> scc_;

    std::uint32_t generation_ = 0;
    std::vector<Reward> dist_;
    std::vector<StateId> pred_;
    std::vector<std::uint32_t> reached_;  // dist/pred valid for this generation
    std::vector<std::uint32_t> expanded_; // generation that expanded the state
    std::vector<std::uint32_t> queued_;
    std::vector<std::vector<StateId>> queues_;
    std::vector<StateId> search_from_;
    std::optional<Reward> root_arrival_;
    StateId root_arrival_pred_ = 0;
    StateId root_ = 0;
    std::optional<StateId> best_end_;
};

// Breadth-first shortest path with at least one edge from `from` to `to`,
// both endpoints included; with `hub_only` every state on it must lie in the
// hub component. Empty when there is none.
std::vector<StateId> find_path(const WeightedProductAutomaton& product, StateId from, StateId to,
                               bool hub_only);

// Weighted nested DFS. Accepting states are taken in postorder of an outer
// DFS that picks successors by ascending id; each gets a longest-cycle
// search and the best (first found on ties) lasso is kept. Stops early once
// the reward reaches `total_reward`.
ProductPlan plan(const WeightedProductAutomaton& product, Reward total_reward,
                 const PlannerOptions& options = {});

// Component index of every state, by Tarjan's algorithm.
std::vector<std::uint32_t> strongly_connected_components(const WeightedProductAutomaton& product);

} // namespace mvplan
