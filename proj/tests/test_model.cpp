#include "doctest.h"

#include "mvplan/error.hpp"
#include "mvplan/oracle.hpp"
#include "mvplan/rescue.hpp"
#include "mvplan/trace_reward.hpp"

#include "support.hpp"

using namespace mvplan;

namespace {

const char* ping_pong = R"(# two states
ap: p
states: s0 s1
init: s0
label s0: p
trans s0 -> s1
trans s1 -> s0
)";

std::string validation_message(const std::string& text) {
    try {
        parse_model(text);
    } catch (const ValidationError& e) {
        return e.what();
    } catch (const ParseError& e) {
        return std::string("parse: ") + e.what();
    }
    return "";
}

} // namespace

TEST_SUITE("model") {

TEST_CASE("ping-pong model reads back") {
    auto ts = parse_model(ping_pong);
    CHECK(ts.num_states() == 2);
    CHECK(ts.name(ts.initial()) == "s0");
    const auto p = ts.alphabet().at("p");
    CHECK(ts.label(*ts.find("s0")).contains(p));
    CHECK(ts.label(*ts.find("s1")).empty());
    CHECK(ts.has_transition(0, 1));
    CHECK(ts.has_transition(1, 0));
    CHECK_FALSE(ts.has_transition(0, 0));
}

TEST_CASE("model validation") {
    CHECK(validation_message("ap: p\nstates: a b\ninit: a\ntrans a -> b\n").find("'b'") !=
          std::string::npos);
    CHECK(validation_message("ap: p\nstates: a b\ninit: a\ntrans a -> b\n").find("deadlock") !=
          std::string::npos);
    CHECK_THROWS_AS(parse_model("ap: p\nstates: a\ninit: a\ntrans a -> c\n"), ParseError);
    CHECK_THROWS_AS(parse_model("ap: p\nstates: a\ninit: a\nlabel a: r\ntrans a -> a\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_model("ap: p p\nstates: a\ninit: a\ntrans a -> a\n"), ParseError);
    CHECK_THROWS_AS(parse_model("ap: p\nstates: a a\ninit: a\ntrans a -> a\n"), ParseError);
    CHECK_THROWS_AS(parse_model("ap: p\nstates: a\ntrans a -> a\n"), ValidationError);
    CHECK_THROWS_AS(parse_model("ap: p\nstates: a\ninit: a\ninit: a\ntrans a -> a\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_model("ap: p\nstates: a\ninit: a\ntrans a -> a\ntrans a -> a\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_model("ap: p\nstates: a\ninit: a\ntrans a a\n"), ParseError);
    CHECK_THROWS_AS(parse_model("ap: p\nbogus\n"), ParseError);
}

TEST_CASE("CRLF line endings are tolerated") {
    std::string crlf;
    for (char c : std::string(ping_pong)) {
        if (c == '\n') {
            crlf += '\r';
        }
        crlf += c;
    }
    CHECK(parse_model(crlf) == parse_model(ping_pong));
}

TEST_CASE("model serialization round-trips") {
    auto ts = parse_model(ping_pong);
    auto text = serialize_model(ts);
    CHECK(parse_model(text) == ts);
    CHECK(serialize_model(parse_model(text)) == text);
}

TEST_CASE("spec files") {
    auto spec = parse_spec("# mission\nreward 2 : G F p\nreward 5 : F (p & F q)\n\nreward 0 : X p\n");
    REQUIRE(spec.size() == 3);
    CHECK(spec.total_reward() == 7);
    CHECK(spec.objectives()[0].reward == 5);
    CHECK(spec.objectives()[0].original_index == 1);
    CHECK(spec.rewards() == std::vector<Reward>{5, 2, 0});
    CHECK(spec.warnings().size() == 1);
    CHECK(parse_spec(serialize_spec(spec)).in_input_order()[2].formula ==
          spec.in_input_order()[2].formula);
    CHECK_THROWS_AS(parse_spec("reward -1 : p\n"), ParseError);
    CHECK_THROWS_AS(parse_spec("reward 1 : p &\n"), ParseError);
    try {
        parse_spec("reward 1 : p\nreward 2 :  p $\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 15);
    }
}

TEST_CASE("lexicographic and scaled rewards") {
    auto spec = test::spec({{"p", 1}, {"q", 1}, {"G p", 1}});
    auto lex = spec.lexicographic();
    auto in_order = lex.in_input_order();
    CHECK(in_order[0].reward == 4);
    CHECK(in_order[1].reward == 2);
    CHECK(in_order[2].reward == 1);
    CHECK(spec.scaled(10).total_reward() == 30);
    std::vector<std::pair<std::string, Reward>> many(64, {"p", 1});
    CHECK_THROWS_AS(test::spec(many).lexicographic(), ValidationError);
    CHECK_THROWS_AS(test::spec({{"p", INT64_MAX}, {"q", 1}}), ValidationError);
}

TEST_CASE("trace reward") {
    SUBCASE("empty spec") {
        auto ts = test::self_loop("p", "p");
        CHECK(trace_reward(ts, MissionSpec{}, {{}, {0}}).reward == 0);
    }
    SUBCASE("only trace satisfies G p") {
        auto ts = test::self_loop("p", "p");
        CHECK(trace_reward(ts, test::spec({{"G p", 5}}), {{}, {0}}).reward == 5);
    }
    SUBCASE("mutually exclusive formulas") {
        auto ts = test::self_loop("p", "p");
        auto score = trace_reward(ts, test::spec({{"G p", 3}, {"G !p", 2}}), {{}, {0}});
        CHECK(score.reward == 3);
        CHECK(score.satisfied == std::vector<bool>{true, false});
    }
    SUBCASE("invalid lassos") {
        auto ts = parse_model(ping_pong);
        auto spec = test::spec({{"p", 1}});
        CHECK_THROWS_AS(trace_reward(ts, spec, {{}, {}}), InvalidLassoError);
        CHECK_THROWS_AS(trace_reward(ts, spec, {{1}, {0}}), InvalidLassoError);
        CHECK_THROWS_AS(trace_reward(ts, spec, {{}, {0, 0}}), InvalidLassoError);
        CHECK_THROWS_AS(trace_reward(ts, spec, {{}, {0}}), InvalidLassoError);
        CHECK(trace_reward(ts, spec, {{}, {0, 1}}).reward == 1);
    }
}

TEST_CASE("trace reward is invariant under cycle unrolling") {
    auto ts = parse_model(R"(ap: a b
states: s0 s1 s2
init: s0
label s0: a
label s1: b
label s2: a b
trans s0 -> s1
trans s1 -> s2
trans s2 -> s0
trans s2 -> s1
)");
    auto spec = test::spec({{"G F a", 1}, {"F G b", 2}, {"G (a -> X b)", 4}, {"X X (a & b)", 8},
                            {"b U (a & b)", 16}});
    for (const TraceLasso& base : {TraceLasso{{}, {0, 1, 2}}, TraceLasso{{0}, {1, 2}},
                                   TraceLasso{{0, 1, 2, 0}, {1, 2}}}) {
        const auto expected = trace_reward(ts, spec, base);
        for (int k = 2; k <= 3; ++k) {
            TraceLasso unrolled{base.prefix, {}};
            for (int i = 0; i < k; ++i) {
                unrolled.cycle.insert(unrolled.cycle.end(), base.cycle.begin(), base.cycle.end());
            }
            auto score = trace_reward(ts, spec, unrolled);
            CHECK(score.reward == expected.reward);
            CHECK(score.satisfied == expected.satisfied);
        }
    }
}

TEST_CASE("rescue generator") {
    SUBCASE("default scenario shape") {
        auto mission = generate_rescue_mission(default_rescue_config());
        CHECK(mission.spec.size() == 3);
        CHECK(mission.spec.total_reward() == 12);
        for (StateId s = 0; s < mission.ts.num_states(); ++s) {
            CHECK_FALSE(mission.ts.successors(s).empty());
        }
        CHECK(mission.ts.alphabet().find("aV1"));
        CHECK(mission.ts.alphabet().find("pV2_F1"));
        CHECK(mission.ts.alphabet().find("pV1_Base"));
        CHECK_FALSE(mission.ts.alphabet().find("pV1_F1"));
    }
    SUBCASE("generated files round-trip") {
        auto mission = generate_rescue_mission(default_rescue_config());
        auto text = serialize_model(mission.ts);
        CHECK(parse_model(text) == mission.ts);
        auto spec = parse_spec(serialize_spec(mission.spec));
        REQUIRE(spec.size() == mission.spec.size());
        for (std::size_t i = 0; i < spec.size(); ++i) {
            CHECK(spec.objectives()[i].formula == mission.spec.objectives()[i].formula);
            CHECK(spec.objectives()[i].reward == mission.spec.objectives()[i].reward);
        }
    }
    SUBCASE("lone vehicle on a 2x2 grid rescues the friendly") {
        RescueConfig c;
        c.rows = c.columns = 2;
        c.vehicles.push_back({"V", {0, 0}, true, {}, {}, {}});
        c.friendlies.push_back({"F", {1, 1}});
        auto mission = generate_rescue_mission(c);
        auto o = brute_force_plan(mission.ts, mission.spec, {64, 4});
        CHECK(o.reward == mission.spec.total_reward());
    }
    SUBCASE("lethal route forces dropping the cheaper formula") {
        // The only way to F crosses T, which kills V; W clears it at the
        // cost of itself.
        RescueConfig c;
        c.rows = 1;
        c.columns = 4;
        c.vehicles.push_back({"V", {0, 0}, true, {}, {}, {"T"}});
        c.vehicles.push_back({"W", {0, 0}, false, {}, {"T"}, {}});
        c.targets.push_back({"T", {0, 2}, 0});
        c.friendlies.push_back({"F", {0, 3}});
        auto mission = generate_rescue_mission(c);
        auto subsets = optimal_subsets(mission.ts, mission.spec, {64, 4});
        REQUIRE(subsets.size() == 1);
        CHECK(subsets[0] == std::vector<bool>{true, true, false});
    }
    SUBCASE("configuration errors") {
        RescueConfig c;
        CHECK_THROWS_AS(generate_rescue_mission(c), ValidationError);
        c.vehicles.push_back({"V", {5, 5}, true, {}, {}, {}});
        CHECK_THROWS_AS(generate_rescue_mission(c), ValidationError);
        c.vehicles[0].start = {0, 0};
        c.vehicles[0].engages = {"T9"};
        CHECK_THROWS_AS(generate_rescue_mission(c), ValidationError);
        c.vehicles[0].engages.clear();
        c.max_states = 3;
        CHECK_THROWS_AS(generate_rescue_mission(c), LimitError);
    }
    SUBCASE("JSON configuration") {
        auto c = parse_rescue_config(R"({
            "grid": [3, 3], "base": [0, 0],
            "vehicles": [{"name": "V", "can_pickup": true, "vulnerable_to": ["T"]},
                         {"name": "W", "start": [0, 1], "sacrifices": ["T"]}],
            "targets": [{"name": "T", "cell": [2, 1], "range": 1}],
            "friendlies": [{"name": "F", "cell": [2, 2]}, {"name": "G", "cell": [0, 2]}],
            "order": [["F", "G"]],
            "rewards": {"pickup": 7, "order": 5, "survival": 2}
        })");
        CHECK(c.rows == 3);
        CHECK(c.vehicles.size() == 2);
        CHECK(c.vehicles[0].start == Cell{0, 0});
        CHECK(c.vehicles[1].sacrifices == std::vector<std::string>{"T"});
        CHECK(c.order.size() == 1);
        CHECK(c.pickup_reward == 7);
        auto mission = generate_rescue_mission(c);
        CHECK(mission.spec.size() == 5);
        CHECK(mission.spec.total_reward() == 7 + 7 + 5 + 2 + 2);
        CHECK_THROWS_AS(parse_rescue_config("{\"vehicles\": 3"), ValidationError);
        CHECK_THROWS_AS(parse_rescue_config("{\"vehicles\": [{\"start\": [0,0]}]}"),
                        ValidationError);
    }
}

}
