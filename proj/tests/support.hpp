#pragma once

// Test-only helpers: small instance builders and exhaustive enumerators used
// as independent references.

#include "mvplan/fragments.hpp"
#include "mvplan/ltl_eval.hpp"
#include "mvplan/ltl_parser.hpp"
#include "mvplan/model_io.hpp"
#include "mvplan/product.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace mvplan::test {

inline TransitionSystem model(const std::string& text) {
    return parse_model(text);
}

inline MissionSpec spec(const std::vector<std::pair<std::string, Reward>>& items) {
    std::vector<Objective> objectives;
    for (const auto& [text, reward] : items) {
        objectives.push_back(Objective{parse_formula(text), reward, objectives.size(), text});
    }
    return MissionSpec(std::move(objectives));
}

// One state with a self-loop and the given label.
inline TransitionSystem self_loop(const std::string& props, const std::string& label) {
    return model("ap: " + props + "\nstates: s0\ninit: s0\nlabel s0: " + label +
                 "\ntrans s0 -> s0\n");
}

// Every valuation over `num_props` propositions.
inline std::vector<Valuation> all_letters(std::size_t num_props) {
    std::vector<Valuation> out;
    for (std::size_t bits = 0; bits < (std::size_t{1} << num_props); ++bits) {
        Valuation v(num_props);
        for (PropId p = 0; p < num_props; ++p) {
            if (bits >> p & 1) {
                v.insert(p);
            }
        }
        out.push_back(v);
    }
    return out;
}

// Every lasso word with 1 <= |prefix| + |cycle| <= max_length.
inline std::vector<LassoWord> all_words(std::size_t num_props, std::size_t max_length) {
    const auto letters = all_letters(num_props);
    std::vector<LassoWord> out;
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> rec = [&](std::size_t length) {
        if (pick.size() == length) {
            for (std::size_t cut = 0; cut < length; ++cut) {
                LassoWord w;
                for (std::size_t i = 0; i < length; ++i) {
                    (i < cut ? w.prefix : w.cycle).push_back(letters[pick[i]]);
                }
                out.push_back(std::move(w));
            }
            return;
        }
        for (std::size_t l = 0; l < letters.size(); ++l) {
            pick.push_back(l);
            rec(length);
            pick.pop_back();
        }
    };
    for (std::size_t length = 1; length <= max_length; ++length) {
        rec(length);
    }
    return out;
}

// Every product lasso whose prefix is a simple path from the initial state
// and whose cycle is a simple cycle through the prefix's end; calls `visit`
// until it returns false. Gives up after `max_steps` search steps and then
// returns false; true means the enumeration was complete.
inline bool for_each_lasso(const WeightedProductAutomaton& p,
                           const std::function<bool(const ProductLasso&)>& visit,
                           std::size_t max_steps = SIZE_MAX) {
    const std::size_t n = p.num_states();
    std::vector<std::vector<StateId>> pred(n);
    for (StateId x = 0; x < n; ++x) {
        for (const auto& e : p.successors(x)) {
            pred[e.target].push_back(x);
        }
    }
    std::vector<StateId> path{p.initial()};
    std::vector<bool> on_path(n, false);
    on_path[p.initial()] = true;
    bool stop = false;
    bool exhausted = false;
    std::size_t steps = 0;
    auto step = [&] {
        if (++steps > max_steps) {
            exhausted = stop = true;
        }
        return !stop;
    };

    auto cycles = [&](StateId head) {
        // Only states that can still reach the head are worth entering.
        std::vector<bool> back(n, false);
        std::vector<StateId> stack{head};
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            for (auto y : pred[x]) {
                if (!back[y]) {
                    back[y] = true;
                    stack.push_back(y);
                }
            }
        }
        std::vector<StateId> cyc{head};
        std::vector<bool> in_cycle(n, false);
        in_cycle[head] = true;
        std::function<void(StateId)> rec = [&](StateId x) {
            for (const auto& e : p.successors(x)) {
                if (!step()) {
                    return;
                }
                if (e.target == head) {
                    ProductLasso l;
                    l.prefix.assign(path.begin(), path.end() - 1);
                    l.cycle = cyc;
                    if (!visit(l)) {
                        stop = true;
                    }
                } else if (!in_cycle[e.target] && back[e.target]) {
                    in_cycle[e.target] = true;
                    cyc.push_back(e.target);
                    rec(e.target);
                    cyc.pop_back();
                    in_cycle[e.target] = false;
                }
            }
        };
        rec(head);
    };
    std::function<void(StateId)> rec = [&](StateId x) {
        cycles(x);
        for (const auto& e : p.successors(x)) {
            if (!step()) {
                return;
            }
            if (!on_path[e.target]) {
                on_path[e.target] = true;
                path.push_back(e.target);
                rec(e.target);
                path.pop_back();
                on_path[e.target] = false;
            }
        }
    };
    rec(p.initial());
    return !exhausted;
}

// Largest weight of a simple path root -> p, for every p, over paths whose
// interior avoids accepting states and the root. Unreached states stay -1.
inline std::vector<Reward> brute_force_distances(const WeightedProductAutomaton& p, StateId root) {
    std::vector<Reward> best(p.num_states(), -1);
    std::vector<bool> on_path(p.num_states(), false);
    on_path[root] = true;
    std::function<void(StateId, Reward)> rec = [&](StateId x, Reward w) {
        for (const auto& e : p.successors(x)) {
            const StateId y = e.target;
            if (y == root || on_path[y]) {
                continue;
            }
            best[y] = std::max(best[y], w + e.weight);
            if (!p.accepting(y)) {
                on_path[y] = true;
                rec(y, w + e.weight);
                on_path[y] = false;
            }
        }
    };
    rec(root, 0);
    return best;
}

} // namespace mvplan::test
