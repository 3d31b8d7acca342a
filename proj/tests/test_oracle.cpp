#include "doctest.h"

#include "mvplan/error.hpp"
#include "mvplan/lasso_search.hpp"
#include "mvplan/oracle.hpp"
#include "mvplan/random_instance.hpp"
#include "mvplan/trace_reward.hpp"
#include "mvplan/translate.hpp"

#include "support.hpp"

#include <algorithm>
#include <functional>
#include <random>

using namespace mvplan;

namespace {

Valuation letter(std::initializer_list<PropId> props, std::size_t size) {
    Valuation v(size);
    for (auto p : props) {
        v.insert(p);
    }
    return v;
}

// Some reachable accepting node lies on a cycle.
bool has_accepting_cycle(const ExplicitGraph& g) {
    const std::size_t n = g.succ.size();
    auto reach_from = [&](StateId s) {
        std::vector<bool> seen(n, false);
        std::vector<StateId> stack;
        for (auto t : g.succ[s]) {
            if (!seen[t]) {
                seen[t] = true;
                stack.push_back(t);
            }
        }
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            for (auto t : g.succ[x]) {
                if (!seen[t]) {
                    seen[t] = true;
                    stack.push_back(t);
                }
            }
        }
        return seen;
    };
    auto from_init = reach_from(g.initial);
    from_init[g.initial] = true;
    for (StateId a = 0; a < n; ++a) {
        if (g.accepting[a] && from_init[a] && reach_from(a)[a]) {
            return true;
        }
    }
    return false;
}

void check_lasso_shape(const ExplicitGraph& g, const GraphLasso& l) {
    std::vector<StateId> run = l.prefix;
    run.insert(run.end(), l.cycle.begin(), l.cycle.end());
    run.push_back(l.cycle.front());
    CHECK(run.front() == g.initial);
    CHECK(g.accepting[l.cycle.front()]);
    for (std::size_t i = 0; i + 1 < run.size(); ++i) {
        const auto& s = g.succ[run[i]];
        CHECK(std::find(s.begin(), s.end(), run[i + 1]) != s.end());
    }
}

} // namespace

TEST_SUITE("oracle") {

TEST_CASE("direct evaluation examples") {
    Alphabet ap({"p"});
    LassoWord first{{letter({0}, 1)}, {letter({}, 1)}};
    CHECK(ltl_eval_lasso(parse_formula("p"), first, ap));
    CHECK_FALSE(ltl_eval_lasso(parse_formula("G F p"), first, ap));
    LassoWord recurring{{letter({}, 1)}, {letter({}, 1), letter({0}, 1)}};
    CHECK(ltl_eval_lasso(parse_formula("G F p"), recurring, ap));
    CHECK_FALSE(ltl_eval_lasso(parse_formula("F G p"), recurring, ap));
    CHECK(ltl_eval_lasso(parse_formula("X X p"), recurring, ap));
    CHECK(ltl_eval_lasso(parse_formula("!p U p"), recurring, ap));
    CHECK_FALSE(ltl_eval_lasso(parse_formula("p U false"), recurring, ap));
    CHECK_FALSE(ltl_eval_lasso(parse_formula("q"), recurring, ap));
    CHECK_THROWS_AS(ltl_eval_lasso(parse_formula("p"), LassoWord{{letter({0}, 1)}, {}}, ap),
                    ValidationError);
}

TEST_CASE("evaluation agrees with a hand-written unrolling semantics") {
    // Reference: positions beyond the lasso are folded back; Until is
    // checked over one full unrolling of prefix + two cycles, which covers
    // every distinct suffix.
    std::mt19937_64 rng(3);
    const std::vector<std::string> atoms{"p", "q"};
    Alphabet ap(atoms);
    std::function<bool(const Formula&, const LassoWord&, std::size_t)> eval;
    eval = [&](const Formula& f, const LassoWord& w, std::size_t i) -> bool {
        const std::size_t np = w.prefix.size(), nc = w.cycle.size();
        auto norm = [&](std::size_t k) { return k < np ? k : np + (k - np) % nc; };
        i = norm(i);
        switch (f.kind()) {
        case Formula::Kind::True:
            return true;
        case Formula::Kind::Atom: {
            const auto& v = i < np ? w.prefix[i] : w.cycle[i - np];
            return v.contains(ap.at(f.name()));
        }
        case Formula::Kind::Not:
            return !eval(f.left(), w, i);
        case Formula::Kind::And:
            return eval(f.left(), w, i) && eval(f.right(), w, i);
        case Formula::Kind::Next:
            return eval(f.left(), w, i + 1);
        case Formula::Kind::Until:
            for (std::size_t k = i; k < i + np + nc + 1; ++k) {
                if (eval(f.right(), w, k)) {
                    return true;
                }
                if (!eval(f.left(), w, k)) {
                    return false;
                }
            }
            return false;
        }
        return false;
    };
    for (int n = 0; n < 300; ++n) {
        auto f = random_formula(rng, atoms, 5);
        auto w = random_word(rng, 2, 5);
        CHECK(ltl_eval_lasso(f, w, ap) == eval(f, w, 0));
    }
}

TEST_CASE("nested search") {
    SUBCASE("accepting self-loop") {
        ExplicitGraph g{0, {{0}}, {true}};
        auto l = find_accepting_lasso(g);
        REQUIRE(l);
        CHECK(l->prefix.empty());
        CHECK(l->cycle == std::vector<StateId>{0});
    }
    SUBCASE("acyclic graph") {
        ExplicitGraph g{0, {{1, 2}, {2}, {}}, {true, true, true}};
        CHECK_FALSE(find_accepting_lasso(g));
    }
    SUBCASE("random graphs agree with exhaustive cycle detection") {
        std::mt19937_64 rng(5);
        int found = 0;
        for (int n = 0; n < 400; ++n) {
            const std::size_t size = std::uniform_int_distribution<std::size_t>(1, 10)(rng);
            std::bernoulli_distribution edge(0.18), acc(0.3);
            ExplicitGraph g;
            g.succ.resize(size);
            for (StateId a = 0; a < size; ++a) {
                for (StateId b = 0; b < size; ++b) {
                    if (edge(rng)) {
                        g.succ[a].push_back(b);
                    }
                }
                g.accepting.push_back(acc(rng));
            }
            auto l = find_accepting_lasso(g);
            CHECK(l.has_value() == has_accepting_cycle(g));
            if (l) {
                ++found;
                check_lasso_shape(g, *l);
            }
        }
        CHECK(found > 40);
    }
}

TEST_CASE("intersection") {
    Alphabet ap({"p"});
    auto gfp = degeneralize(ltl_to_gba(parse_formula("G F p"), ap));
    auto gfnp = degeneralize(ltl_to_gba(parse_formula("G F !p"), ap));
    SUBCASE("single automaton") {
        auto r = intersect({gfp});
        CHECK(r.num_states() == gfp.num_states());
        CHECK(r.out == gfp.out);
        CHECK(r.accepting == gfp.accepting);
    }
    SUBCASE("both letters recur") {
        auto r = intersect({gfp, gfnp});
        auto both = parse_formula("G F p & G F !p");
        for (const auto& w : test::all_words(1, 4)) {
            CHECK(accepts(r, w) == ltl_eval_lasso(both, w, ap));
        }
    }
    SUBCASE("empty language") {
        auto none = degeneralize(ltl_to_gba(parse_formula("false"), ap));
        auto r = intersect({gfp, none});
        for (const auto& w : test::all_words(1, 3)) {
            CHECK_FALSE(accepts(r, w));
        }
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(intersect({}), ValidationError);
        auto other = degeneralize(ltl_to_gba(parse_formula("G F q"), Alphabet({"q"})));
        CHECK_THROWS_AS(intersect({gfp, other}), ValidationError);
    }
}

TEST_CASE("brute-force plans") {
    SUBCASE("exclusive formulas") {
        auto ts = test::self_loop("p", "p");
        auto o = brute_force_plan(ts, test::spec({{"G p", 3}, {"G !p", 2}}));
        CHECK(o.reward == 3);
        CHECK(o.witness == std::vector<bool>{true, false});
        CHECK(o.satisfied == std::vector<bool>{true, false});
    }
    SUBCASE("unsatisfiable formulas never enter a witness") {
        auto ts = test::model("ap: p\nstates: a b\ninit: a\nlabel a: p\ntrans a -> b\n"
                              "trans a -> a\ntrans b -> a\n");
        auto o = brute_force_plan(ts, test::spec({{"p & !p", 5}, {"G F p", 1}, {"F !p", 1}}));
        CHECK(o.reward == 2);
        CHECK_FALSE(o.witness[0]);
    }
    SUBCASE("incidental satisfaction is reported") {
        auto ts = test::self_loop("p", "p");
        auto o = brute_force_plan(ts, test::spec({{"G p", 3}, {"F p", 0}}));
        CHECK(o.reward == 3);
        CHECK(o.satisfied == std::vector<bool>{true, true});
    }
    SUBCASE("caps") {
        auto ts = test::self_loop("p", "p");
        auto spec = test::spec({{"p", 1}, {"p", 1}, {"p", 1}, {"p", 1}, {"p", 1}});
        CHECK_THROWS_AS(brute_force_plan(ts, spec), LimitError);
        CHECK(brute_force_plan(ts, spec, {12, 5}).reward == 5);
    }
}

TEST_CASE("oracle optimum is invariant under permuting equal rewards") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto inst = random_instance(seed);
        auto base = brute_force_plan(inst.ts, inst.spec).reward;
        auto items = inst.spec.in_input_order();
        std::reverse(items.begin(), items.end());
        CHECK(brute_force_plan(inst.ts, MissionSpec(items)).reward == base);
    }
}

TEST_CASE("translated emptiness agrees with evaluation on small systems") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto inst = random_instance(seed, {3, 2, 1, 2, 5});
        // Every lasso of the system with at most eight positions.
        bool any = false;
        std::vector<StateId> path{inst.ts.initial()};
        std::function<void()> rec = [&] {
            for (std::size_t cut = 0; cut < path.size(); ++cut) {
                if (inst.ts.has_transition(path.back(), path[cut])) {
                    TraceLasso l{{path.begin(), path.begin() + static_cast<std::ptrdiff_t>(cut)},
                                 {path.begin() + static_cast<std::ptrdiff_t>(cut), path.end()}};
                    any = any || trace_reward(inst.ts, inst.spec, l).satisfied[0];
                }
            }
            if (path.size() == 8) {
                return;
            }
            for (auto t : inst.ts.successors(path.back())) {
                path.push_back(t);
                rec();
                path.pop_back();
            }
        };
        rec();
        CHECK(realizable(inst.ts, inst.spec, {0}) == any);
    }
}

}
