#include "mvplan/product.hpp"

#include "mvplan/error.hpp"

#include <algorithm>

namespace mvplan {

std::optional<StateId> WeightedProductAutomaton::find(StateId ts_state, StateId wba_state) const {
    auto it = index_.find(std::uint64_t{ts_state} * wba_states_ + wba_state);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

WeightedProductAutomaton build_product(const TransitionSystem& ts,
                                       const WeightedBuchiAutomaton& wba,
                                       std::size_t max_states) {
    // Re-express the automaton's guards over the system's proposition ids.
    std::vector<PropId> remap;
    for (const auto& name : wba.alphabet().names()) {
        auto id = ts.alphabet().find(name);
        if (!id) {
            throw ValidationError("proposition '" + name +
                                  "' is not declared by the transition system");
        }
        remap.push_back(*id);
    }
    std::vector<std::vector<Guard>> guards(wba.num_states());
    for (StateId q = 0; q < wba.num_states(); ++q) {
        for (const auto& e : wba.out(q)) {
            Guard g;
            for (auto p : e.guard.pos) g.pos.push_back(remap[p]);
            for (auto p : e.guard.neg) g.neg.push_back(remap[p]);
            g.normalize();
            guards[q].push_back(std::move(g));
        }
    }

    WeightedProductAutomaton prod;
    prod.num_components_ = wba.num_components();
    prod.wba_states_ = wba.num_states();
    auto intern = [&](StateId s, StateId q) -> StateId {
        const std::uint64_t key = std::uint64_t{s} * prod.wba_states_ + q;
        auto [it, inserted] = prod.index_.try_emplace(key, static_cast<StateId>(prod.states_.size()));
        if (inserted) {
            if (prod.states_.size() >= max_states) {
                throw LimitError("product automaton exceeds " + std::to_string(max_states) +
                                 " states");
            }
            prod.states_.push_back(ProductState{s, q});
            prod.component_.push_back(
                static_cast<std::uint32_t>(wba.component_index(wba.state(q).tag)));
        }
        return it->second;
    };

    intern(ts.initial(), wba.initial());
    std::vector<ProductEdge> local;
    // States are expanded in id order, which is breadth-first order.
    for (StateId p = 0; p < prod.states_.size(); ++p) {
        const auto [s, q] = prod.states_[p];
        const Valuation& label = ts.label(s);
        local.clear();
        const auto& edges = wba.out(q);
        for (std::size_t k = 0; k < edges.size(); ++k) {
            if (!guards[q][k].matches(label)) {
                continue;
            }
            for (auto t : ts.successors(s)) {
                local.push_back(ProductEdge{intern(t, edges[k].target), edges[k].weight});
            }
        }
        std::sort(local.begin(), local.end(), [](const ProductEdge& a, const ProductEdge& b) {
            return a.target < b.target || (a.target == b.target && a.weight > b.weight);
        });
        local.erase(std::unique(local.begin(), local.end(),
                                [](const ProductEdge& a, const ProductEdge& b) {
                                    return a.target == b.target;
                                }),
                    local.end());
        prod.edges_.insert(prod.edges_.end(), local.begin(), local.end());
        prod.offsets_.push_back(prod.edges_.size());
    }
    return prod;
}

} // namespace mvplan
