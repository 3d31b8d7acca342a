#include "mvplan/lasso_search.hpp"

namespace mvplan {

namespace {

struct Frame {
    StateId node;
    std::size_t next = 0;
};

} // namespace

std::optional<GraphLasso> find_accepting_lasso(const ExplicitGraph& g) {
    const std::size_t n = g.succ.size();
    if (n == 0) {
        return std::nullopt;
    }
    std::vector<bool> blue(n, false);
    std::vector<bool> red(n, false);
    std::vector<bool> on_blue_stack(n, false);
    std::vector<Frame> outer{{g.initial}};
    blue[g.initial] = true;
    on_blue_stack[g.initial] = true;

    while (!outer.empty()) {
        auto& top = outer.back();
        const auto& succ = g.succ[top.node];
        if (top.next < succ.size()) {
            auto t = succ[top.next++];
            if (!blue[t]) {
                blue[t] = true;
                on_blue_stack[t] = true;
                outer.push_back({t});
            }
            continue;
        }
        const StateId seed = top.node;
        if (g.accepting[seed]) {
            // Red search: any node on the blue stack closes a cycle through
            // the seed (standard CVWY argument).
            std::vector<Frame> inner{{seed}};
            while (!inner.empty()) {
                auto& f = inner.back();
                const auto& s2 = g.succ[f.node];
                if (f.next == s2.size()) {
                    inner.pop_back();
                    continue;
                }
                auto t = s2[f.next++];
                if (on_blue_stack[t] || t == seed) {
                    // Cycle: seed, the red path, then the blue stack from t
                    // back up to the seed.
                    GraphLasso lasso;
                    std::size_t t_pos = 0;
                    while (outer[t_pos].node != t) {
                        ++t_pos;
                    }
                    for (std::size_t i = 0; i + 1 < outer.size(); ++i) {
                        lasso.prefix.push_back(outer[i].node);
                    }
                    lasso.cycle.push_back(seed);
                    for (std::size_t k = 1; k < inner.size(); ++k) {
                        lasso.cycle.push_back(inner[k].node);
                    }
                    for (std::size_t i = t_pos; i + 1 < outer.size(); ++i) {
                        lasso.cycle.push_back(outer[i].node);
                    }
                    return lasso;
                }
                if (!red[t]) {
                    red[t] = true;
                    inner.push_back({t});
                }
            }
        }
        on_blue_stack[seed] = false;
        outer.pop_back();
    }
    return std::nullopt;
}

} // namespace mvplan
