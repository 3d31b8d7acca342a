#pragma once

#include "mvplan/automaton.hpp"
#include "mvplan/formula.hpp"

namespace mvplan {

struct TranslationOptions {
    std::size_t max_states = 100000;
};

// Tableau translation to a generalized Buechi automaton with one acceptance
// set per Until subformula of the negation normal form (a single all-states
// set when there is none). Every atom must be declared in `alphabet`.
// Throws LimitError when the state count exceeds options.max_states.
GeneralizedBuchiAutomaton ltl_to_gba(const Formula& f, const Alphabet& alphabet,
                                     const TranslationOptions& options = {});

// Same, over the alphabet of the formula's atoms in sorted order.
GeneralizedBuchiAutomaton ltl_to_gba(const Formula& f, const TranslationOptions& options = {});

} // namespace mvplan
