// Command-line front end: plan, translate, check, gen-rescue, gen-random.

#include "mvplan/automaton_io.hpp"
#include "mvplan/error.hpp"
#include "mvplan/ltl_parser.hpp"
#include "mvplan/model_io.hpp"
#include "mvplan/oracle.hpp"
#include "mvplan/pipeline.hpp"
#include "mvplan/plan_io.hpp"
#include "mvplan/random_instance.hpp"
#include "mvplan/rescue.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <iostream>

using namespace mvplan;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_other = 1;
constexpr int exit_invalid = 2;
constexpr int exit_mismatch = 3;

int exit_code_for(const Error& e) {
    const auto& c = e.code();
    if (c == "parse" || c == "validation" || c == "invalid-lasso") {
        return exit_invalid;
    }
    return exit_other;
}

// Re-throws parse errors with the file name in front of the location.
template <typename F>
auto with_file(const std::string& path, F&& f) {
    try {
        return f(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) +
                             ": " + e.what(),
                         e.line(), e.column());
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

struct PlanArgs {
    std::string model;
    std::string spec;
    bool oracle = false;
    std::string dot_dir;
    std::size_t max_states = 0;
    bool lexicographic = false;
    bool product_trace = false;
    bool no_reuse = false;
};

int cmd_plan(const PlanArgs& a) {
    auto ts = with_file(a.model, [](const std::string& t) { return parse_model(t); });
    auto spec = with_file(a.spec, [](const std::string& t) { return parse_spec(t); });
    if (a.lexicographic) {
        spec = spec.lexicographic();
    }
    for (const auto& w : spec.warnings()) {
        std::cerr << "warning: " << w << '\n';
    }
    PipelineOptions options;
    if (a.max_states > 0) {
        options.translation.max_states = a.max_states;
        options.max_weighted_states = a.max_states;
        options.max_product_states = a.max_states;
    }
    options.planner.reuse_inner_visits = !a.no_reuse;
    auto artifacts = build_artifacts(ts, spec, options);
    auto result = solve(ts, spec, artifacts, options);
    std::cout << serialize_plan(ts, result, a.product_trace ? &artifacts : nullptr);

    if (!a.dot_dir.empty()) {
        namespace fs = std::filesystem;
        fs::create_directories(a.dot_dir);
        for (std::size_t i = 0; i < artifacts.gbas.size(); ++i) {
            auto index = spec.objectives()[i].original_index + 1;
            write_file((fs::path(a.dot_dir) / ("gba" + std::to_string(index) + ".dot")).string(),
                       to_dot(artifacts.gbas[i]));
        }
        write_file((fs::path(a.dot_dir) / "wba.dot").string(), to_dot(artifacts.wba));
        write_file((fs::path(a.dot_dir) / "product.dot").string(),
                   to_dot(artifacts.product, ts, artifacts.wba));
    }

    if (a.oracle) {
        OracleLimits limits;
        limits.max_ts_states = std::max<std::size_t>(limits.max_ts_states, ts.num_states());
        limits.max_formulas = std::max<std::size_t>(limits.max_formulas, spec.size());
        auto o = brute_force_plan(ts, spec, limits);
        std::cout << "oracle-reward: " << o.reward << "\noracle-witness:";
        for (std::size_t i = 0; i < o.witness.size(); ++i) {
            if (o.witness[i]) {
                std::cout << ' ' << i + 1;
            }
        }
        std::cout << '\n';
        if (o.reward != result.reward) {
            std::cout << "verdict: mismatch\n";
            std::cerr << "error[mismatch]: planner reward " << result.reward
                      << " differs from oracle reward " << o.reward << '\n';
            return exit_mismatch;
        }
        std::cout << "verdict: match\n";
    }
    return exit_ok;
}

struct TranslateArgs {
    std::string formula;
    std::string dot;
    bool nonblocking = false;
    bool degeneralize = false;
};

int cmd_translate(const TranslateArgs& a) {
    Formula f = [&] {
        try {
            return parse_formula(a.formula);
        } catch (const ParseError& e) {
            std::cerr << "error[parse]: " << e.line() << ":" << e.column() << ": " << e.what()
                      << "\n  " << a.formula << "\n  " << std::string(e.column() - 1, ' ')
                      << "^\n";
            throw;
        }
    }();
    auto gba = ltl_to_gba(f);
    if (a.nonblocking) {
        gba = make_nonblocking(gba);
    }
    std::string text;
    std::string dot;
    if (a.degeneralize) {
        auto ba = degeneralize(gba);
        text = dump(ba);
        dot = to_dot(ba);
    } else {
        text = dump(gba);
        dot = to_dot(gba);
    }
    std::cout << "ap:";
    for (const auto& n : gba.alphabet.names()) {
        std::cout << ' ' << n;
    }
    std::cout << '\n' << text;
    if (!a.dot.empty()) {
        write_file(a.dot, dot);
    }
    return exit_ok;
}

struct CheckArgs {
    std::string model;
    std::string spec;
    std::string plan;
    bool lexicographic = false;
};

int cmd_check(const CheckArgs& a) {
    auto ts = with_file(a.model, [](const std::string& t) { return parse_model(t); });
    auto spec = with_file(a.spec, [](const std::string& t) { return parse_spec(t); });
    if (a.lexicographic) {
        spec = spec.lexicographic();
    }
    auto plan = with_file(a.plan, [&](const std::string& t) { return parse_plan(t, ts); });
    auto score = trace_reward(ts, spec, plan.trace);
    for (const auto& o : spec.in_input_order()) {
        std::cout << o.original_index + 1 << '\t' << o.reward << '\t'
                  << (score.satisfied[o.original_index] ? "sat" : "unsat") << '\t' << o.text
                  << '\n';
    }
    std::cout << "reward: " << score.reward << '\n';
    if (score.reward != plan.reward) {
        std::cerr << "error[mismatch]: plan claims reward " << plan.reward << ", trace earns "
                  << score.reward << '\n';
        return exit_mismatch;
    }
    std::vector<std::size_t> satisfied;
    for (std::size_t i = 0; i < score.satisfied.size(); ++i) {
        if (score.satisfied[i]) {
            satisfied.push_back(i + 1);
        }
    }
    if (!plan.satisfied.empty() && plan.satisfied != satisfied) {
        std::cerr << "error[mismatch]: satisfied formulas differ from the plan file\n";
        return exit_mismatch;
    }
    return exit_ok;
}

struct GenArgs {
    std::string config;
    std::string model_out;
    std::string spec_out;
    std::uint64_t seed = 0;
};

void emit(const TransitionSystem& ts, const MissionSpec& spec, const GenArgs& a) {
    if (a.model_out.empty()) {
        std::cout << serialize_model(ts);
    } else {
        write_file(a.model_out, serialize_model(ts));
    }
    if (a.spec_out.empty()) {
        std::cout << serialize_spec(spec);
    } else {
        write_file(a.spec_out, serialize_spec(spec));
    }
}

int cmd_gen_rescue(const GenArgs& a) {
    auto config = a.config.empty() ? default_rescue_config()
                                   : parse_rescue_config(read_file(a.config));
    auto mission = generate_rescue_mission(config);
    emit(mission.ts, mission.spec, a);
    return exit_ok;
}

int cmd_gen_random(const GenArgs& a) {
    auto inst = random_instance(a.seed);
    emit(inst.ts, inst.spec, a);
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum-violation LTL planning over labeled transition systems"};
    app.require_subcommand(1);

    PlanArgs plan;
    auto* p = app.add_subcommand("plan", "Synthesize a maximal-reward lasso");
    p->add_option("--model", plan.model, "Model file")->required();
    p->add_option("--spec", plan.spec, "Spec file")->required();
    p->add_flag("--oracle", plan.oracle, "Compare with the brute-force oracle");
    p->add_option("--dot", plan.dot_dir, "Directory for DOT exports");
    p->add_option("--max-states", plan.max_states, "State cap for every construction");
    p->add_flag("--lexicographic", plan.lexicographic, "Use rewards 2^(n-i) by input position");
    p->add_flag("--product-trace", plan.product_trace, "Also print the product-level lasso");
    p->add_flag("--no-reuse", plan.no_reuse, "Disable visit reuse across inner searches");

    TranslateArgs tr;
    auto* t = app.add_subcommand("translate", "Dump the automaton of one formula");
    t->add_option("--formula", tr.formula, "LTL formula")->required();
    t->add_option("--dot", tr.dot, "DOT output file");
    t->add_flag("--nonblocking", tr.nonblocking, "Complete with a sink state");
    t->add_flag("--degeneralize", tr.degeneralize, "Convert to a Buechi automaton");

    CheckArgs check;
    auto* c = app.add_subcommand("check", "Re-score a serialized plan");
    c->add_option("--model", check.model, "Model file")->required();
    c->add_option("--spec", check.spec, "Spec file")->required();
    c->add_option("--plan", check.plan, "Plan file")->required();
    c->add_flag("--lexicographic", check.lexicographic, "Use rewards 2^(n-i) by input position");

    GenArgs rescue;
    auto* r = app.add_subcommand("gen-rescue", "Emit model and spec of a rescue scenario");
    r->add_option("--config", rescue.config, "JSON scenario (default: built-in 4x4 scenario)");
    r->add_option("--model-out", rescue.model_out, "Model output file");
    r->add_option("--spec-out", rescue.spec_out, "Spec output file");

    GenArgs random;
    auto* g = app.add_subcommand("gen-random", "Emit a seeded random instance");
    g->add_option("--seed", random.seed, "Random seed");
    g->add_option("--model-out", random.model_out, "Model output file");
    g->add_option("--spec-out", random.spec_out, "Spec output file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*p) {
            return cmd_plan(plan);
        }
        if (*t) {
            return cmd_translate(tr);
        }
        if (*c) {
            return cmd_check(check);
        }
        if (*r) {
            return cmd_gen_rescue(rescue);
        }
        return cmd_gen_random(random);
    } catch (const ParseError& e) {
        if (!*t) {
            std::cerr << "error[parse]: " << e.what() << '\n';
        }
        return exit_invalid;
    } catch (const Error& e) {
        std::cerr << "error[" << e.code() << "]: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error[internal]: " << e.what() << '\n';
        return exit_other;
    }
}
