#include "mvplan/oracle.hpp"

#include "mvplan/error.hpp"
#include "mvplan/lasso_search.hpp"
#include "mvplan/trace_reward.hpp"
#include "mvplan/translate.hpp"

#include <algorithm>
#include <map>

namespace mvplan {

namespace {

// Graph over (state, position) pairs; position p reads letter p and moves to
// p+1, wrapping from the end of the cycle back to its start.
ExplicitGraph word_graph(const AutomatonCore& a, const LassoWord& word,
                         const std::vector<bool>& accepting) {
    if (word.cycle.empty()) {
        throw ValidationError("lasso word has an empty cycle");
    }
    const std::size_t len = word.prefix.size() + word.cycle.size();
    auto letter = [&](std::size_t p) -> const Valuation& {
        return p < word.prefix.size() ? word.prefix[p] : word.cycle[p - word.prefix.size()];
    };
    auto next = [&](std::size_t p) { return p + 1 < len ? p + 1 : word.prefix.size(); };
    ExplicitGraph g;
    g.initial = static_cast<StateId>(a.initial * len);
    g.succ.resize(a.num_states() * len);
    g.accepting.resize(a.num_states() * len);
    for (StateId q = 0; q < a.num_states(); ++q) {
        for (std::size_t p = 0; p < len; ++p) {
            auto id = q * len + p;
            g.accepting[id] = accepting[q];
            for (const auto& e : a.out[q]) {
                if (e.guard.matches(letter(p))) {
                    g.succ[id].push_back(static_cast<StateId>(e.target * len + next(p)));
                }
            }
        }
    }
    return g;
}

Guard rename(const Guard& g, const Alphabet& from, const Alphabet& to) {
    Guard r;
    for (auto p : g.pos) {
        r.pos.push_back(to.at(from.name(p)));
    }
    for (auto p : g.neg) {
        r.neg.push_back(to.at(from.name(p)));
    }
    r.normalize();
    return r;
}

struct SystemProduct {
    ExplicitGraph graph;
    std::vector<StateId> ts_state;
};

// Reachable pairs (s, q) with (s,q) -> (s',q') iff s -> s' and some guard of
// q -> q' matches L(s).
SystemProduct system_product(const TransitionSystem& ts, const BuchiAutomaton& ba) {
    std::vector<std::vector<Edge>> out(ba.num_states());
    for (StateId q = 0; q < ba.num_states(); ++q) {
        for (const auto& e : ba.out[q]) {
            out[q].push_back({rename(e.guard, ba.alphabet, ts.alphabet()), e.target});
        }
    }
    std::map<std::pair<StateId, StateId>, StateId> index;
    std::vector<std::pair<StateId, StateId>> states;
    auto intern = [&](StateId s, StateId q) {
        auto [it, fresh] = index.try_emplace({s, q}, static_cast<StateId>(states.size()));
        if (fresh) {
            states.push_back({s, q});
        }
        return it->second;
    };
    SystemProduct p;
    p.graph.initial = intern(ts.initial(), ba.initial);
    for (std::size_t i = 0; i < states.size(); ++i) {
        auto [s, q] = states[i];
        std::vector<StateId> succ;
        for (const auto& e : out[q]) {
            if (!e.guard.matches(ts.label(s))) {
                continue;
            }
            for (auto t : ts.successors(s)) {
                succ.push_back(intern(t, e.target));
            }
        }
        std::sort(succ.begin(), succ.end());
        succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
        p.graph.succ.push_back(std::move(succ));
    }
    for (auto [s, q] : states) {
        p.graph.accepting.push_back(ba.accepting[q]);
        p.ts_state.push_back(s);
    }
    return p;
}

std::vector<BuchiAutomaton> translate_all(const TransitionSystem& ts, const MissionSpec& spec) {
    std::vector<BuchiAutomaton> bas;
    for (const auto& o : spec.objectives()) {
        bas.push_back(degeneralize(ltl_to_gba(o.formula, ts.alphabet())));
    }
    return bas;
}

std::optional<TraceLasso> search(const TransitionSystem& ts, const std::vector<BuchiAutomaton>& bas,
                                 const std::vector<std::size_t>& subset) {
    BuchiAutomaton target;
    if (subset.empty()) {
        target = universal_buchi(ts.alphabet());
    } else {
        std::vector<BuchiAutomaton> chosen;
        for (auto i : subset) {
            chosen.push_back(bas[i]);
        }
        target = intersect(chosen);
    }
    auto product = system_product(ts, target);
    auto lasso = find_accepting_lasso(product.graph);
    if (!lasso) {
        return std::nullopt;
    }
    TraceLasso trace;
    for (auto x : lasso->prefix) {
        trace.prefix.push_back(product.ts_state[x]);
    }
    for (auto x : lasso->cycle) {
        trace.cycle.push_back(product.ts_state[x]);
    }
    return trace;
}

void check_limits(const TransitionSystem& ts, const MissionSpec& spec, const OracleLimits& limits) {
    if (ts.num_states() > limits.max_ts_states) {
        throw LimitError("oracle: " + std::to_string(ts.num_states()) + " states exceed the cap of " +
                         std::to_string(limits.max_ts_states));
    }
    if (spec.size() > limits.max_formulas) {
        throw LimitError("oracle: " + std::to_string(spec.size()) + " formulas exceed the cap of " +
                         std::to_string(limits.max_formulas));
    }
}

struct Candidate {
    std::uint64_t mask; // bit n-1-i set when objective i (reward-sorted) is chosen
    Reward sum;
};

// Largest sum first; among equal sums the lexicographically greatest
// membership vector, which is the numerically greatest mask.
std::vector<Candidate> candidates(const MissionSpec& spec) {
    const std::size_t n = spec.size();
    std::vector<Candidate> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Reward sum = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> (n - 1 - i) & 1) {
                sum += spec.objectives()[i].reward;
            }
        }
        out.push_back({mask, sum});
    }
    std::sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
        return a.sum != b.sum ? a.sum > b.sum : a.mask > b.mask;
    });
    return out;
}

std::vector<std::size_t> members(std::uint64_t mask, std::size_t n) {
    std::vector<std::size_t> m;
    for (std::size_t i = 0; i < n; ++i) {
        if (mask >> (n - 1 - i) & 1) {
            m.push_back(i);
        }
    }
    return m;
}

std::vector<bool> by_original_index(const MissionSpec& spec, const std::vector<std::size_t>& subset) {
    std::vector<bool> v(spec.size(), false);
    for (auto i : subset) {
        v[spec.objectives()[i].original_index] = true;
    }
    return v;
}

} // namespace

bool accepts(const BuchiAutomaton& a, const LassoWord& word) {
    return find_accepting_lasso(word_graph(a, word, a.accepting)).has_value();
}

bool accepts(const GeneralizedBuchiAutomaton& a, const LassoWord& word) {
    return accepts(degeneralize(a), word);
}

BuchiAutomaton intersect(const std::vector<BuchiAutomaton>& bas) {
    if (bas.empty()) {
        throw ValidationError("intersect: empty automaton list");
    }
    for (const auto& b : bas) {
        if (!(b.alphabet == bas[0].alphabet)) {
            throw ValidationError("intersect: automata over different alphabets");
        }
    }
    if (bas.size() == 1) {
        return bas[0];
    }
    const std::size_t n = bas.size();
    using Key = std::pair<std::vector<StateId>, std::size_t>;
    std::map<Key, StateId> index;
    std::vector<Key> states;
    auto intern = [&](Key k) {
        auto [it, fresh] = index.try_emplace(k, static_cast<StateId>(states.size()));
        if (fresh) {
            states.push_back(std::move(k));
        }
        return it->second;
    };
    BuchiAutomaton r;
    r.alphabet = bas[0].alphabet;
    std::vector<StateId> init;
    for (const auto& b : bas) {
        init.push_back(b.initial);
    }
    r.initial = intern({init, 0});
    for (std::size_t i = 0; i < states.size(); ++i) {
        const auto [coords, k] = states[i];
        const std::size_t k2 = bas[k].accepting[coords[k]] ? (k + 1) % n : k;
        std::vector<Edge> out;
        std::vector<StateId> next(n);
        // Every combination of one edge per coordinate with a consistent
        // conjunction of guards.
        auto rec = [&](auto&& self, std::size_t j, const Guard& g) -> void {
            if (j == n) {
                out.push_back({g, intern({next, k2})});
                return;
            }
            for (const auto& e : bas[j].out[coords[j]]) {
                if (auto c = conjoin(g, e.guard)) {
                    next[j] = e.target;
                    self(self, j + 1, *c);
                }
            }
        };
        rec(rec, 0, Guard{});
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        r.out.push_back(std::move(out));
    }
    for (const auto& [coords, k] : states) {
        r.accepting.push_back(k == 0 && bas[0].accepting[coords[0]]);
    }
    return r;
}

bool realizable(const TransitionSystem& ts, const MissionSpec& spec,
                const std::vector<std::size_t>& subset, TraceLasso* trace) {
    auto found = search(ts, translate_all(ts, spec), subset);
    if (found && trace) {
        *trace = *found;
    }
    return found.has_value();
}

OraclePlan brute_force_plan(const TransitionSystem& ts, const MissionSpec& spec,
                            const OracleLimits& limits) {
    check_limits(ts, spec, limits);
    const auto bas = translate_all(ts, spec);
    for (const auto& c : candidates(spec)) {
        auto subset = members(c.mask, spec.size());
        if (auto trace = search(ts, bas, subset)) {
            OraclePlan plan;
            plan.reward = c.sum;
            plan.witness = by_original_index(spec, subset);
            plan.satisfied = trace_reward(ts, spec, *trace).satisfied;
            plan.trace = std::move(*trace);
            return plan;
        }
    }
    // The empty subset is always realizable on a deadlock-free system.
    throw Error("internal", "oracle found no realizable subset");
}

std::vector<std::vector<bool>> optimal_subsets(const TransitionSystem& ts, const MissionSpec& spec,
                                               const OracleLimits& limits) {
    check_limits(ts, spec, limits);
    const auto bas = translate_all(ts, spec);
    std::vector<std::vector<bool>> out;
    std::optional<Reward> best;
    for (const auto& c : candidates(spec)) {
        if (best && c.sum < *best) {
            break;
        }
        auto subset = members(c.mask, spec.size());
        if (search(ts, bas, subset)) {
            best = c.sum;
            out.push_back(by_original_index(spec, subset));
        }
    }
    return out;
}

} // namespace mvplan
