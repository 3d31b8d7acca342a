#include "mvplan/random_instance.hpp"

#include <algorithm>

namespace mvplan {

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng, double p) {
    return std::bernoulli_distribution(p)(rng);
}

Formula literal(std::mt19937_64& rng, const std::vector<std::string>& atoms) {
    auto a = Formula::atom(atoms[pick(rng, 0, atoms.size() - 1)]);
    return coin(rng, 0.3) ? Formula::negation(a) : a;
}

} // namespace

Formula random_template_formula(std::mt19937_64& rng, const std::vector<std::string>& atoms) {
    auto a = literal(rng, atoms);
    auto b = literal(rng, atoms);
    switch (pick(rng, 0, 4)) {
    case 0:
        return Formula::eventually(a);
    case 1:
        return Formula::always(Formula::eventually(a));
    case 2:
        return Formula::always(a);
    case 3:
        return Formula::always(Formula::implication(a, Formula::eventually(b)));
    default:
        return Formula::eventually(Formula::conjunction(a, Formula::eventually(b)));
    }
}

Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& atoms,
                       std::size_t max_operators) {
    if (max_operators == 0 || coin(rng, 0.25)) {
        if (coin(rng, 0.1)) {
            return coin(rng, 0.5) ? Formula::top() : Formula::bottom();
        }
        return Formula::atom(atoms[pick(rng, 0, atoms.size() - 1)]);
    }
    // Sugar expands to more than one core operator, so the budget is
    // charged by the resulting size.
    const std::size_t budget = max_operators - 1;
    switch (pick(rng, 0, 8)) {
    case 0:
        return Formula::negation(random_formula(rng, atoms, budget));
    case 1:
        return Formula::next(random_formula(rng, atoms, budget));
    case 2: {
        auto left = pick(rng, 0, budget);
        return Formula::conjunction(random_formula(rng, atoms, left),
                                    random_formula(rng, atoms, budget - left));
    }
    case 3: {
        auto left = pick(rng, 0, budget);
        return Formula::until(random_formula(rng, atoms, left),
                              random_formula(rng, atoms, budget - left));
    }
    case 4:
        return Formula::eventually(random_formula(rng, atoms, budget));
    case 5:
        if (max_operators >= 3) {
            return Formula::always(random_formula(rng, atoms, max_operators - 3));
        }
        return Formula::negation(random_formula(rng, atoms, budget));
    case 6:
        if (max_operators >= 4) {
            auto left = pick(rng, 0, max_operators - 4);
            return Formula::disjunction(random_formula(rng, atoms, left),
                                        random_formula(rng, atoms, max_operators - 4 - left));
        }
        [[fallthrough]];
    default: {
        auto left = pick(rng, 0, budget);
        return Formula::until(random_formula(rng, atoms, left),
                              random_formula(rng, atoms, budget - left));
    }
    }
}

LassoWord random_word(std::mt19937_64& rng, std::size_t num_props, std::size_t max_length) {
    const std::size_t length = pick(rng, 1, max_length);
    const std::size_t cycle = pick(rng, 1, length);
    LassoWord w;
    for (std::size_t i = 0; i < length; ++i) {
        Valuation v(num_props);
        for (PropId p = 0; p < num_props; ++p) {
            if (coin(rng, 0.5)) {
                v.insert(p);
            }
        }
        (i < length - cycle ? w.prefix : w.cycle).push_back(std::move(v));
    }
    return w;
}

RandomInstance random_instance(std::uint64_t seed, const RandomInstanceOptions& options) {
    std::mt19937_64 rng(seed);
    const std::size_t n_states = pick(rng, 1, options.max_states);
    const std::size_t n_props = pick(rng, 1, options.max_props);
    std::vector<std::string> props;
    for (std::size_t i = 0; i < n_props; ++i) {
        props.push_back(std::string(1, static_cast<char>('a' + i)));
    }
    Alphabet alphabet(props);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n_states; ++i) {
        names.push_back("s" + std::to_string(i));
    }
    std::vector<std::vector<StateId>> succ(n_states);
    std::vector<Valuation> labels;
    for (std::size_t s = 0; s < n_states; ++s) {
        const auto k = pick(rng, 1, std::min(options.max_successors, n_states));
        while (succ[s].size() < k) {
            auto t = static_cast<StateId>(pick(rng, 0, n_states - 1));
            if (std::find(succ[s].begin(), succ[s].end(), t) == succ[s].end()) {
                succ[s].push_back(t);
            }
        }
        std::sort(succ[s].begin(), succ[s].end());
        Valuation v(n_props);
        for (PropId p = 0; p < n_props; ++p) {
            if (coin(rng, 0.4)) {
                v.insert(p);
            }
        }
        labels.push_back(std::move(v));
    }
    TransitionSystem ts(alphabet, names, 0, std::move(succ), std::move(labels));

    std::vector<Objective> objectives;
    const std::size_t n_formulas = pick(rng, 1, options.max_formulas);
    for (std::size_t i = 0; i < n_formulas; ++i) {
        auto f = random_template_formula(rng, props);
        const Reward reward =
            coin(rng, 0.1) ? 0 : static_cast<Reward>(pick(rng, 1, options.max_reward));
        objectives.push_back(Objective{f, reward, i, to_string(f)});
    }
    return {std::move(ts), MissionSpec(std::move(objectives))};
}

} // namespace mvplan
