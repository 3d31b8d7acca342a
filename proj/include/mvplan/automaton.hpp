#pragma once

#include "mvplan/alphabet.hpp"

#include <cstdint>
#include <vector>

namespace mvplan {

using StateId = std::uint32_t;

struct Edge {
    Guard guard;
    StateId target;

    auto operator<=>(const Edge&) const = default;
};

// Transition structure shared by the omega-automata. Transitions read the
// letter at the current position: (q, sigma, q') is enabled when the guard of
// an edge q -> q' matches sigma.
struct AutomatonCore {
    Alphabet alphabet;
    StateId initial = 0;
    std::vector<std::vector<Edge>> out;

    std::size_t num_states() const { return out.size(); }
    std::size_t num_transitions() const;
};

// Generalized Buechi acceptance: an ordered family F^1..F^m of state sets,
// each a membership vector over the states.
struct GeneralizedBuchiAutomaton : AutomatonCore {
    std::vector<std::vector<bool>> acceptance;

    std::size_t num_sets() const { return acceptance.size(); }
};

struct BuchiAutomaton : AutomatonCore {
    std::vector<bool> accepting;
};

// Throw ValidationError on dangling endpoints, contradictory guards or
// acceptance vectors of the wrong length.
void validate(const GeneralizedBuchiAutomaton& a);
void validate(const BuchiAutomaton& a);

// Counter construction: states Q x {1..m} numbered q*m + (j-1), initial
// (q_init, 1), accepting F^1 x {1}. The counter advances when the source state
// lies in the set it currently waits for.
BuchiAutomaton degeneralize(const GeneralizedBuchiAutomaton& g);

// Routes every (state, letter) pair without a successor to a fresh
// non-accepting sink with a true self-loop. Returns the input unchanged when
// it is already complete.
GeneralizedBuchiAutomaton make_nonblocking(const GeneralizedBuchiAutomaton& a);

bool is_nonblocking(const AutomatonCore& a);

// One-state automaton accepting every word.
BuchiAutomaton universal_buchi(const Alphabet& alphabet);

} // namespace mvplan
