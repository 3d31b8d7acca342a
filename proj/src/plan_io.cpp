#include "mvplan/plan_io.hpp"

#include "mvplan/error.hpp"

#include <sstream>

namespace mvplan {

namespace {

std::string product_item(const PlanningArtifacts& a, StateId p) {
    const auto& ps = a.product.state(p);
    const auto& tag = a.wba.state(ps.wba).tag;
    return std::to_string(ps.ts) + "/" + std::to_string(ps.wba) + "[" +
           std::to_string(tag.layer) + "." + std::to_string(tag.set) + "]";
}

} // namespace

std::string serialize_plan(const TransitionSystem& ts, const LassoPlan& plan,
                           const PlanningArtifacts* product_trace) {
    std::ostringstream os;
    os << "reward: " << plan.reward << "\nprefix:";
    for (auto s : plan.trace.prefix) {
        os << ' ' << ts.name(s);
    }
    os << "\ncycle:";
    for (auto s : plan.trace.cycle) {
        os << ' ' << ts.name(s);
    }
    os << "\nsatisfied:";
    for (std::size_t i = 0; i < plan.satisfied.size(); ++i) {
        if (plan.satisfied[i]) {
            os << ' ' << i + 1;
        }
    }
    os << '\n';
    if (product_trace) {
        os << "product-prefix:";
        for (auto p : plan.product_lasso.prefix) {
            os << ' ' << product_item(*product_trace, p);
        }
        os << "\nproduct-cycle:";
        for (auto p : plan.product_lasso.cycle) {
            os << ' ' << product_item(*product_trace, p);
        }
        os << '\n';
    }
    return os.str();
}

PlanFile parse_plan(std::string_view text, const TransitionSystem& ts) {
    PlanFile plan;
    bool have_reward = false;
    bool have_cycle = false;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        auto colon = line.find(':');
        if (line.find_first_not_of(" \t") == std::string::npos) {
            continue;
        }
        if (colon == std::string::npos) {
            throw ParseError("expected '<key>: <values>'", line_no, 1);
        }
        std::string key = line.substr(0, colon);
        key.erase(0, key.find_first_not_of(" \t"));
        key.erase(key.find_last_not_of(" \t") + 1);
        std::istringstream values(line.substr(colon + 1));
        std::string word;
        std::vector<std::string> words;
        while (values >> word) {
            words.push_back(word);
        }
        auto states = [&](std::vector<StateId>& into) {
            for (const auto& w : words) {
                auto s = ts.find(w);
                if (!s) {
                    throw ParseError("unknown state '" + w + "'", line_no, colon + 2);
                }
                into.push_back(*s);
            }
        };
        if (key == "reward") {
            if (words.size() != 1) {
                throw ParseError("expected one reward value", line_no, colon + 2);
            }
            try {
                std::size_t used = 0;
                plan.reward = std::stoll(words[0], &used);
                if (used != words[0].size()) {
                    throw std::invalid_argument(words[0]);
                }
            } catch (const std::logic_error&) {
                throw ParseError("invalid reward '" + words[0] + "'", line_no, colon + 2);
            }
            have_reward = true;
        } else if (key == "prefix") {
            states(plan.trace.prefix);
        } else if (key == "cycle") {
            states(plan.trace.cycle);
            have_cycle = true;
        } else if (key == "satisfied") {
            for (const auto& w : words) {
                try {
                    plan.satisfied.push_back(std::stoul(w));
                } catch (const std::logic_error&) {
                    throw ParseError("invalid formula index '" + w + "'", line_no, colon + 2);
                }
            }
        } else if (key == "product-prefix" || key == "product-cycle") {
            continue;
        } else {
            throw ParseError("unknown key '" + key + "'", line_no, 1);
        }
    }
    if (!have_reward || !have_cycle) {
        throw ParseError("plan needs 'reward:' and 'cycle:' lines", line_no, 1);
    }
    return plan;
}

} // namespace mvplan
