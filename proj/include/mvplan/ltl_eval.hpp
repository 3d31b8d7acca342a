#pragma once

#include "mvplan/alphabet.hpp"
#include "mvplan/formula.hpp"

#include <vector>

namespace mvplan {

// Ultimately periodic word prefix . cycle^omega over 2^AP.
struct LassoWord {
    std::vector<Valuation> prefix;
    std::vector<Valuation> cycle;
};

// Direct semantic evaluation of `f` at position 0 of the word, by dynamic
// programming over the |prefix| + |cycle| distinct positions; Until is the
// least fixpoint of its one-step unfolding. Atoms are resolved through
// `alphabet`; an atom missing from it is false everywhere.
// Throws ValidationError on an empty cycle.
bool ltl_eval_lasso(const Formula& f, const LassoWord& word, const Alphabet& alphabet);

} // namespace mvplan
