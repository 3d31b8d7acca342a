#include "mvplan/automaton_io.hpp"

#include <map>
#include <sstream>

namespace mvplan {

namespace {

void dump_edges(std::ostringstream& os, const AutomatonCore& a) {
    for (StateId q = 0; q < a.num_states(); ++q) {
        for (const auto& e : a.out[q]) {
            os << "edge " << q << " -> " << e.target << " : " << to_string(e.guard, a.alphabet)
               << '\n';
        }
    }
}

void dump_set(std::ostringstream& os, const std::vector<bool>& set) {
    for (std::size_t q = 0; q < set.size(); ++q) {
        if (set[q]) {
            os << ' ' << q;
        }
    }
    os << '\n';
}

std::string tag_suffix(ComponentTag t) {
    return " [" + std::to_string(t.layer) + "." + std::to_string(t.set) + "]";
}

// Parallel edges between the same pair of nodes are merged into one DOT edge
// whose label lists every guard.
using EdgeLabels = std::map<std::pair<StateId, StateId>, std::vector<std::string>>;

std::string render(const std::string& name, const std::vector<std::string>& node_labels,
                   const std::vector<bool>& accepting, StateId initial,
                   const EdgeLabels& edges) {
    std::ostringstream os;
    os << "digraph " << name << " {\n  rankdir=LR;\n  init [shape=point];\n";
    for (std::size_t q = 0; q < node_labels.size(); ++q) {
        os << "  " << q << " [label=\"" << node_labels[q] << "\", shape="
           << (accepting[q] ? "doublecircle" : "circle") << "];\n";
    }
    os << "  init -> " << initial << ";\n";
    for (const auto& [key, labels] : edges) {
        os << "  " << key.first << " -> " << key.second << " [label=\"";
        for (std::size_t i = 0; i < labels.size(); ++i) {
            os << (i ? "\\n" : "") << labels[i];
        }
        os << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string core_dot(const AutomatonCore& a, const std::vector<bool>& accepting,
                     const std::string& name) {
    std::vector<std::string> labels;
    for (StateId q = 0; q < a.num_states(); ++q) {
        labels.push_back(std::to_string(q));
    }
    EdgeLabels edges;
    for (StateId q = 0; q < a.num_states(); ++q) {
        for (const auto& e : a.out[q]) {
            edges[{q, e.target}].push_back(to_string(e.guard, a.alphabet));
        }
    }
    return render(name, labels, accepting, a.initial, edges);
}

} // namespace

std::string dump(const GeneralizedBuchiAutomaton& a) {
    std::ostringstream os;
    os << "states " << a.num_states() << "\ninitial " << a.initial << '\n';
    for (std::size_t i = 0; i < a.acceptance.size(); ++i) {
        os << "accept " << i + 1 << " :";
        dump_set(os, a.acceptance[i]);
    }
    dump_edges(os, a);
    return os.str();
}

std::string dump(const BuchiAutomaton& a) {
    std::ostringstream os;
    os << "states " << a.num_states() << "\ninitial " << a.initial << "\naccepting :";
    dump_set(os, a.accepting);
    dump_edges(os, a);
    return os.str();
}

std::string dump(const WeightedBuchiAutomaton& a) {
    std::ostringstream os;
    os << "states " << a.num_states() << "\ninitial " << a.initial() << '\n';
    for (StateId q = 0; q < a.num_states(); ++q) {
        const auto& s = a.state(q);
        os << "state " << q << " :";
        for (auto c : s.coords) {
            os << ' ' << c;
        }
        os << tag_suffix(s.tag) << '\n';
    }
    os << "accepting :";
    for (StateId q = 0; q < a.num_states(); ++q) {
        if (a.accepting(q)) {
            os << ' ' << q;
        }
    }
    os << '\n';
    for (StateId q = 0; q < a.num_states(); ++q) {
        for (const auto& e : a.out(q)) {
            os << "edge " << q << " -> " << e.target << " : " << to_string(e.guard, a.alphabet());
            if (e.weight != 0) {
                os << " +" << e.weight;
            }
            os << '\n';
        }
    }
    return os.str();
}

std::string dump(const WeightedProductAutomaton& p, const TransitionSystem& ts,
                 const WeightedBuchiAutomaton& wba) {
    std::ostringstream os;
    os << "states " << p.num_states() << "\ninitial " << p.initial() << '\n';
    for (StateId x = 0; x < p.num_states(); ++x) {
        const auto& s = p.state(x);
        os << "state " << x << " : " << ts.name(s.ts) << ' ' << s.wba
           << tag_suffix(wba.state(s.wba).tag) << '\n';
    }
    os << "accepting :";
    for (StateId x = 0; x < p.num_states(); ++x) {
        if (p.accepting(x)) {
            os << ' ' << x;
        }
    }
    os << '\n';
    for (StateId x = 0; x < p.num_states(); ++x) {
        for (const auto& e : p.successors(x)) {
            os << "edge " << x << " -> " << e.target;
            if (e.weight != 0) {
                os << " +" << e.weight;
            }
            os << '\n';
        }
    }
    return os.str();
}

std::string to_dot(const GeneralizedBuchiAutomaton& a) {
    std::vector<bool> any(a.num_states(), false);
    for (const auto& set : a.acceptance) {
        for (std::size_t q = 0; q < set.size(); ++q) {
            if (set[q]) {
                any[q] = true;
            }
        }
    }
    // With several sets, membership is spelled out in the node label.
    if (a.acceptance.size() <= 1) {
        return core_dot(a, any, "gba");
    }
    std::vector<std::string> labels;
    for (StateId q = 0; q < a.num_states(); ++q) {
        std::string l = std::to_string(q);
        std::string sets;
        for (std::size_t i = 0; i < a.acceptance.size(); ++i) {
            if (a.acceptance[i][q]) {
                sets += (sets.empty() ? "" : ",") + std::to_string(i + 1);
            }
        }
        labels.push_back(sets.empty() ? l : l + " {" + sets + "}");
    }
    EdgeLabels edges;
    for (StateId q = 0; q < a.num_states(); ++q) {
        for (const auto& e : a.out[q]) {
            edges[{q, e.target}].push_back(to_string(e.guard, a.alphabet));
        }
    }
    return render("gba", labels, any, a.initial, edges);
}

std::string to_dot(const BuchiAutomaton& a) {
    return core_dot(a, a.accepting, "ba");
}

std::string to_dot(const WeightedBuchiAutomaton& a) {
    std::vector<std::string> labels;
    std::vector<bool> accepting;
    EdgeLabels edges;
    for (StateId q = 0; q < a.num_states(); ++q) {
        labels.push_back(std::to_string(q) + tag_suffix(a.state(q).tag));
        accepting.push_back(a.accepting(q));
        for (const auto& e : a.out(q)) {
            auto l = to_string(e.guard, a.alphabet());
            if (e.weight != 0) {
                l += " +" + std::to_string(e.weight);
            }
            edges[{q, e.target}].push_back(l);
        }
    }
    return render("wba", labels, accepting, a.initial(), edges);
}

std::string to_dot(const WeightedProductAutomaton& p, const TransitionSystem& ts,
                   const WeightedBuchiAutomaton& wba) {
    std::vector<std::string> labels;
    std::vector<bool> accepting;
    EdgeLabels edges;
    for (StateId x = 0; x < p.num_states(); ++x) {
        const auto& s = p.state(x);
        labels.push_back(std::to_string(x) + " " + ts.name(s.ts) + "," + std::to_string(s.wba) +
                         tag_suffix(wba.state(s.wba).tag));
        accepting.push_back(p.accepting(x));
        for (const auto& e : p.successors(x)) {
            edges[{x, e.target}].push_back(e.weight != 0 ? "+" + std::to_string(e.weight) : "");
        }
    }
    return render("product", labels, accepting, p.initial(), edges);
}

} // namespace mvplan
