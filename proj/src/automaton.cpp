#include "mvplan/automaton.hpp"

#include "mvplan/error.hpp"

#include <string>

namespace mvplan {

std::size_t AutomatonCore::num_transitions() const {
    std::size_t n = 0;
    for (const auto& edges : out) {
        n += edges.size();
    }
    return n;
}

namespace {

void validate_core(const AutomatonCore& a) {
    if (a.out.empty()) {
        throw ValidationError("automaton has no states");
    }
    if (a.initial >= a.num_states()) {
        throw ValidationError("initial state " + std::to_string(a.initial) + " out of range");
    }
    for (std::size_t q = 0; q < a.out.size(); ++q) {
        for (const auto& e : a.out[q]) {
            if (e.target >= a.num_states()) {
                throw ValidationError("transition " + std::to_string(q) + " -> " +
                                      std::to_string(e.target) + " leaves the state set");
            }
            if (!e.guard.consistent()) {
                throw ValidationError("contradictory guard on a transition of state " +
                                      std::to_string(q));
            }
        }
    }
}

// Disjoint cubes of valuations that no edge of `edges` matches.
std::vector<Guard> uncovered(const std::vector<Edge>& edges) {
    std::vector<Guard> rest{Guard{}};
    for (const auto& e : edges) {
        std::vector<Guard> next;
        for (const auto& cube : rest) {
            auto pieces = subtract(cube, e.guard);
            next.insert(next.end(), pieces.begin(), pieces.end());
        }
        rest = std::move(next);
        if (rest.empty()) {
            break;
        }
    }
    return rest;
}

} // namespace

void validate(const GeneralizedBuchiAutomaton& a) {
    validate_core(a);
    for (const auto& set : a.acceptance) {
        if (set.size() != a.num_states()) {
            throw ValidationError("acceptance set size does not match the state count");
        }
    }
}

void validate(const BuchiAutomaton& a) {
    validate_core(a);
    if (a.accepting.size() != a.num_states()) {
        throw ValidationError("accepting set size does not match the state count");
    }
}

BuchiAutomaton degeneralize(const GeneralizedBuchiAutomaton& g) {
    validate(g);
    GeneralizedBuchiAutomaton normalized = g;
    if (normalized.acceptance.empty()) {
        normalized.acceptance.assign(1, std::vector<bool>(g.num_states(), true));
    }
    const std::size_t m = normalized.num_sets();
    const std::size_t n = g.num_states();

    BuchiAutomaton b;
    b.alphabet = g.alphabet;
    b.out.resize(n * m);
    b.accepting.assign(n * m, false);
    b.initial = static_cast<StateId>(g.initial * m);
    for (std::size_t q = 0; q < n; ++q) {
        for (std::size_t j = 0; j < m; ++j) {
            const auto id = q * m + j;
            const bool in_set = normalized.acceptance[j][q];
            const std::size_t next_j = in_set ? (j + 1) % m : j;
            for (const auto& e : g.out[q]) {
                b.out[id].push_back(Edge{e.guard, static_cast<StateId>(e.target * m + next_j)});
            }
            if (j == 0 && normalized.acceptance[0][q]) {
                b.accepting[id] = true;
            }
        }
    }
    return b;
}

bool is_nonblocking(const AutomatonCore& a) {
    for (const auto& edges : a.out) {
        if (!uncovered(edges).empty()) {
            return false;
        }
    }
    return true;
}

GeneralizedBuchiAutomaton make_nonblocking(const GeneralizedBuchiAutomaton& a) {
    validate(a);
    std::vector<std::vector<Guard>> gaps(a.num_states());
    bool complete = true;
    for (std::size_t q = 0; q < a.num_states(); ++q) {
        gaps[q] = uncovered(a.out[q]);
        complete = complete && gaps[q].empty();
    }
    if (complete) {
        return a;
    }
    GeneralizedBuchiAutomaton r = a;
    if (r.acceptance.empty()) {
        // An empty family accepts every infinite run; pin that down before
        // adding a state that must not be accepting.
        r.acceptance.assign(1, std::vector<bool>(a.num_states(), true));
    }
    const auto sink = static_cast<StateId>(a.num_states());
    for (std::size_t q = 0; q < a.num_states(); ++q) {
        for (auto& cube : gaps[q]) {
            r.out[q].push_back(Edge{std::move(cube), sink});
        }
    }
    r.out.push_back({Edge{Guard{}, sink}});
    for (auto& set : r.acceptance) {
        set.push_back(false);
    }
    return r;
}

BuchiAutomaton universal_buchi(const Alphabet& alphabet) {
    BuchiAutomaton b;
    b.alphabet = alphabet;
    b.out = {{Edge{Guard{}, 0}}};
    b.accepting = {true};
    return b;
}

} // namespace mvplan
