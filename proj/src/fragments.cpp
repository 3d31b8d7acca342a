#include "mvplan/fragments.hpp"

#include "mvplan/error.hpp"

#include <algorithm>

namespace mvplan {

std::vector<Fragment> fragments(const std::vector<bool>& accepting,
                                std::span<const Reward> step_weights) {
    if (!accepting.empty() && step_weights.size() + 1 != accepting.size()) {
        throw InvalidLassoError("a run of k states needs k-1 step weights");
    }
    std::vector<Fragment> out;
    std::optional<std::size_t> open;
    Reward sum = 0;
    for (std::size_t i = 0; i < accepting.size(); ++i) {
        if (accepting[i]) {
            if (open) {
                out.push_back(Fragment{*open, i, sum});
            }
            open = i;
            sum = 0;
        }
        if (i < step_weights.size()) {
            sum += step_weights[i];
        }
    }
    return out;
}

Reward edge_weight(const WeightedProductAutomaton& product, StateId a, StateId b) {
    if (a >= product.num_states() || b >= product.num_states()) {
        throw InvalidLassoError("run mentions an unknown product state");
    }
    auto succ = product.successors(a);
    auto it = std::lower_bound(succ.begin(), succ.end(), b,
                               [](const ProductEdge& e, StateId t) { return e.target < t; });
    if (it == succ.end() || it->target != b) {
        throw InvalidLassoError("no product transition " + std::to_string(a) + " -> " +
                                std::to_string(b));
    }
    return it->weight;
}

namespace {

std::vector<Fragment> run_fragments(const WeightedProductAutomaton& product,
                                    std::span<const StateId> run) {
    std::vector<bool> acc;
    std::vector<Reward> weights;
    for (std::size_t i = 0; i < run.size(); ++i) {
        if (run[i] >= product.num_states()) {
            throw InvalidLassoError("run mentions an unknown product state");
        }
        acc.push_back(product.accepting(run[i]));
        if (i + 1 < run.size()) {
            weights.push_back(edge_weight(product, run[i], run[i + 1]));
        }
    }
    return fragments(acc, weights);
}

} // namespace

std::vector<Fragment> fragments(const WeightedProductAutomaton& product,
                                std::span<const StateId> run) {
    return run_fragments(product, run);
}

std::vector<Fragment> cycle_fragments(const WeightedProductAutomaton& product,
                                      std::span<const StateId> cycle) {
    if (cycle.empty() || cycle[0] >= product.num_states() || !product.accepting(cycle[0])) {
        throw InvalidLassoError("cycle must start in an accepting state");
    }
    std::vector<StateId> closed(cycle.begin(), cycle.end());
    closed.push_back(cycle[0]);
    return run_fragments(product, closed);
}

Reward run_reward(const WeightedProductAutomaton& product, const ProductLasso& lasso) {
    const auto& c = lasso.cycle;
    auto head = std::find_if(c.begin(), c.end(), [&](StateId p) {
        return p < product.num_states() && product.accepting(p);
    });
    if (head == c.end()) {
        throw InvalidLassoError("run is not accepting: its cycle has no accepting state");
    }
    std::vector<StateId> rotated(head, c.end());
    rotated.insert(rotated.end(), c.begin(), head);
    Reward best = 0;
    for (const auto& f : cycle_fragments(product, rotated)) {
        best = std::max(best, f.weight);
    }
    return best;
}

} // namespace mvplan
