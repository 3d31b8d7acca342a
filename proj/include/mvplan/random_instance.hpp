#pragma once

#include "mvplan/ltl_eval.hpp"
#include "mvplan/mission.hpp"
#include "mvplan/transition_system.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace mvplan {

struct RandomInstanceOptions {
    std::size_t max_states = 6;
    std::size_t max_props = 3;
    std::size_t max_formulas = 3;
    std::size_t max_successors = 3;
    Reward max_reward = 5;
};

struct RandomInstance {
    TransitionSystem ts;
    MissionSpec spec;
};

// Reachability, surveillance, safety, response or sequencing formula over
// literals of `atoms`.
Formula random_template_formula(std::mt19937_64& rng, const std::vector<std::string>& atoms);

// Uniformly shaped formula over the full core grammar with at most
// `max_operators` operators.
Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& atoms,
                       std::size_t max_operators);

// prefix + cycle length in [1, max_length], cycle non-empty.
LassoWord random_word(std::mt19937_64& rng, std::size_t num_props, std::size_t max_length);

// Deadlock-free system and template-based mission, fully determined by the
// seed.
RandomInstance random_instance(std::uint64_t seed, const RandomInstanceOptions& options = {});

} // namespace mvplan
