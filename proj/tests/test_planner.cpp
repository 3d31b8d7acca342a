#include "doctest.h"

#include "mvplan/error.hpp"
#include "mvplan/oracle.hpp"
#include "mvplan/pipeline.hpp"
#include "mvplan/plan_io.hpp"
#include "mvplan/random_instance.hpp"

#include "support.hpp"

using namespace mvplan;

namespace {

void check_structure(const WeightedProductAutomaton& p, const ProductPlan& plan) {
    REQUIRE(plan.found);
    const auto& l = plan.lasso;
    REQUIRE_FALSE(l.cycle.empty());
    CHECK(p.accepting(l.cycle.front()));
    if (l.prefix.empty()) {
        CHECK(l.cycle.front() == p.initial());
    } else {
        CHECK(l.prefix.front() == p.initial());
        for (std::size_t i = 0; i + 1 < l.prefix.size(); ++i) {
            CHECK_NOTHROW(edge_weight(p, l.prefix[i], l.prefix[i + 1]));
        }
        CHECK_NOTHROW(edge_weight(p, l.prefix.back(), l.cycle.front()));
    }
    auto frags = cycle_fragments(p, l.cycle);
    REQUIRE_FALSE(frags.empty());
    CHECK(frags.front().weight == plan.reward);
    for (std::size_t i = 1; i < frags.size(); ++i) {
        CHECK(frags[i].weight == 0);
    }
    CHECK(run_reward(p, l) == plan.reward);
}

} // namespace

TEST_SUITE("planner") {

TEST_CASE("exclusive formulas: the higher reward wins") {
    auto ts = test::self_loop("p", "p");
    auto spec = test::spec({{"G p", 3}, {"G !p", 2}});
    auto r = solve(ts, spec);
    CHECK(r.reward == 3);
    CHECK(r.satisfied == std::vector<bool>{true, false});
}

TEST_CASE("compatible formulas add up") {
    auto ts = test::self_loop("p", "p");
    auto r = solve(ts, test::spec({{"G p", 3}, {"F p", 2}}));
    CHECK(r.reward == 5);
    CHECK(r.satisfied == std::vector<bool>{true, true});
}

TEST_CASE("empty mission plans an arbitrary lasso with reward 0") {
    auto ts = test::model("ap: p\nstates: a b\ninit: a\ntrans a -> b\ntrans b -> a\n");
    auto r = solve(ts, MissionSpec{});
    CHECK(r.reward == 0);
    CHECK_NOTHROW(check_lasso(ts, r.trace));
}

TEST_CASE("cycle search on small products") {
    SUBCASE("zero-weight self-loop") {
        auto ts = test::self_loop("p", "");
        auto art = build_artifacts(ts, MissionSpec{});
        CycleSearch search(art.product);
        auto c = search.longest_cycle(art.product.initial());
        REQUIRE(c);
        CHECK(c->weight == 0);
        CHECK(c->cycle == std::vector<StateId>{art.product.initial()});
    }
    SUBCASE("one layer traversal") {
        auto ts = test::self_loop("p", "p");
        auto art = build_artifacts(ts, test::spec({{"G F p", 6}}));
        CycleSearch search(art.product);
        auto c = search.longest_cycle(art.product.initial());
        REQUIRE(c);
        CHECK(c->weight == 6);
    }
    SUBCASE("two layers beat one") {
        auto ts = test::model(R"(ap: p q
states: s0 a b c
init: s0
label a: p
label b: q
label c: q
trans s0 -> a
trans s0 -> c
trans a -> b
trans b -> s0
trans c -> s0
)");
        auto art = build_artifacts(ts, test::spec({{"G F p", 3}, {"G F q", 2}}));
        auto best = plan(art.product, 5, {false});
        REQUIRE(best.found);
        CHECK(best.reward == 5);
        const StateId root = best.lasso.cycle.front();
        CycleSearch search(art.product, {false});
        auto c = search.longest_cycle(root);
        REQUIRE(c);
        CHECK(c->weight == 5);
        REQUIRE(art.product.num_states() <= 20);
        auto expected = test::brute_force_distances(art.product, root);
        for (StateId x = 0; x < art.product.num_states(); ++x) {
            if (x == root) {
                continue;
            }
            auto d = search.distance(x);
            CHECK(d.value_or(-1) == expected[x]);
        }
    }
    SUBCASE("root must be accepting") {
        auto ts = test::self_loop("p", "p");
        auto art = build_artifacts(ts, test::spec({{"G F p", 6}}));
        CycleSearch search(art.product);
        for (StateId x = 0; x < art.product.num_states(); ++x) {
            if (!art.product.accepting(x)) {
                CHECK_THROWS_AS(search.longest_cycle(x), ValidationError);
            }
        }
    }
}

TEST_CASE("propagation matches brute-force maximal simple distances") {
    int compared = 0;
    for (std::uint64_t seed = 0; seed < 400 && compared < 60; ++seed) {
        auto inst = random_instance(seed);
        auto art = build_artifacts(inst.ts, inst.spec);
        const auto& p = art.product;
        if (p.num_states() > 14) {
            continue;
        }
        ++compared;
        CycleSearch search(p, {false});
        for (StateId root = 0; root < p.num_states(); ++root) {
            if (!p.accepting(root)) {
                continue;
            }
            auto c = search.longest_cycle(root);
            auto expected = test::brute_force_distances(p, root);
            Reward best_cycle = -1;
            for (StateId x = 0; x < p.num_states(); ++x) {
                if (x != root) {
                    CHECK(search.distance(x).value_or(-1) == expected[x]);
                }
                if (p.accepting(x) && expected[x] >= 0 &&
                    (x == root || !find_path(p, x, root, true).empty())) {
                    best_cycle = std::max(best_cycle, expected[x]);
                }
            }
            // A cycle closing straight back to the root.
            for (const auto& e : p.successors(root)) {
                if (e.target == root) {
                    best_cycle = std::max(best_cycle, e.weight);
                }
            }
            std::function<void(StateId, Reward, std::vector<bool>&)> back;
            std::vector<bool> on(p.num_states(), false);
            on[root] = true;
            back = [&](StateId x, Reward w, std::vector<bool>& mark) {
                for (const auto& e : p.successors(x)) {
                    if (e.target == root) {
                        best_cycle = std::max(best_cycle, w + e.weight);
                    } else if (!mark[e.target] && !p.accepting(e.target)) {
                        mark[e.target] = true;
                        back(e.target, w + e.weight, mark);
                        mark[e.target] = false;
                    }
                }
            };
            back(root, 0, on);
            if (best_cycle < 0) {
                CHECK_FALSE(c);
            } else {
                REQUIRE(c);
                CHECK(c->weight == best_cycle);
            }
        }
    }
    CHECK(compared >= 30);
}

TEST_CASE("find_path") {
    auto ts = test::self_loop("p", "p");
    auto art = build_artifacts(ts, MissionSpec{});
    CHECK(find_path(art.product, 0, 0, true) == std::vector<StateId>{0, 0});
    auto two = test::model("ap: p\nstates: a b\ninit: a\ntrans a -> a\ntrans b -> b\n");
    auto art2 = build_artifacts(two, MissionSpec{});
    CHECK(art2.product.num_states() == 1);
    auto line = test::model("ap: p\nstates: a b\ninit: a\ntrans a -> b\ntrans b -> b\n");
    auto art3 = build_artifacts(line, MissionSpec{});
    REQUIRE(art3.product.num_states() == 2);
    CHECK(find_path(art3.product, 1, 0, false).empty());
    CHECK(find_path(art3.product, 0, 1, false) == std::vector<StateId>{0, 1});
}

TEST_CASE("hub restriction never loses a return path") {
    for (std::uint64_t seed = 300; seed < 360; ++seed) {
        auto inst = random_instance(seed);
        auto art = build_artifacts(inst.ts, inst.spec);
        const auto& p = art.product;
        for (StateId a = 0; a < p.num_states(); ++a) {
            for (StateId b = 0; b < p.num_states(); ++b) {
                if (p.accepting(a) && p.accepting(b)) {
                    CHECK(find_path(p, a, b, true).empty() == find_path(p, a, b, false).empty());
                }
            }
        }
    }
}

TEST_CASE("plans are well-formed and agree with the oracle") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        CAPTURE(seed);
        auto inst = random_instance(seed);
        auto art = build_artifacts(inst.ts, inst.spec);
        auto plan_on = plan(art.product, inst.spec.total_reward(), {true});
        auto plan_off = plan(art.product, inst.spec.total_reward(), {false});
        check_structure(art.product, plan_on);
        check_structure(art.product, plan_off);
        CHECK(plan_on.reward == plan_off.reward);
        auto result = solve(inst.ts, inst.spec, art);
        CHECK(trace_reward(inst.ts, inst.spec, result.trace).reward == result.reward);
        CHECK(brute_force_plan(inst.ts, inst.spec).reward == result.reward);
    }
}

TEST_CASE("early stop reaches the total reward") {
    auto ts = test::self_loop("p", "p");
    auto spec = test::spec({{"G p", 2}, {"F p", 2}, {"G F p", 1}});
    auto r = solve(ts, spec);
    CHECK(r.reward == spec.total_reward());
}

TEST_CASE("planning is deterministic") {
    for (std::uint64_t seed = 500; seed < 520; ++seed) {
        auto inst = random_instance(seed);
        auto a = solve(inst.ts, inst.spec);
        auto b = solve(inst.ts, inst.spec);
        CHECK(a.product_lasso == b.product_lasso);
        CHECK(serialize_plan(inst.ts, a) == serialize_plan(inst.ts, b));
    }
}

TEST_CASE("plan files round-trip") {
    auto inst = random_instance(42);
    auto art = build_artifacts(inst.ts, inst.spec);
    auto r = solve(inst.ts, inst.spec, art);
    auto text = serialize_plan(inst.ts, r, &art);
    CHECK(text.find("product-cycle:") != std::string::npos);
    auto back = parse_plan(text, inst.ts);
    CHECK(back.reward == r.reward);
    CHECK(back.trace == r.trace);
    CHECK_THROWS_AS(parse_plan("prefix: s0\n", inst.ts), ParseError);
    CHECK_THROWS_AS(parse_plan("reward: 1\ncycle: nowhere\n", inst.ts), ParseError);
    CHECK_THROWS_AS(parse_plan("reward: x\ncycle: s0\n", inst.ts), ParseError);
}

}
