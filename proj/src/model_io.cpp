#include "mvplan/model_io.hpp"

#include "mvplan/error.hpp"
#include "mvplan/ltl_parser.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace mvplan {

namespace {

bool is_identifier(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
        return false;
    }
    for (char c : s) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) {
            return false;
        }
    }
    return true;
}

struct Word {
    std::string text;
    std::size_t column; // 1-based
};

// Splits a line into whitespace-separated words with ':' as a word of its
// own, dropping a `#` comment.
std::vector<Word> words_of(std::string_view line) {
    std::vector<Word> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') {
            break;
        }
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t j = i + 1;
        if (line[i] != ':') {
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
                   line[j] != '#' && line[j] != ':') {
                ++j;
            }
        }
        out.push_back(Word{std::string(line.substr(i, j - i)), i + 1});
        i = j;
    }
    return out;
}

std::vector<std::string_view> lines_of(std::string_view text) {
    if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") {
        text.remove_prefix(3);
    }
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        out.push_back(line);
        if (end == text.size()) {
            break;
        }
        start = end + 1;
    }
    return out;
}

// Index of the first word after the ':' expected at position `from`.
std::size_t after_colon(const std::vector<Word>& w, std::size_t line, std::size_t from) {
    if (from < w.size() && w[from].text == ":") {
        return from + 1;
    }
    throw ParseError("expected ':'", line, from < w.size() ? w[from].column : 1);
}

} // namespace

TransitionSystem parse_model(std::string_view text) {
    Alphabet alphabet;
    std::vector<std::string> states;
    std::unordered_map<std::string, StateId> index;
    std::optional<StateId> init;
    std::vector<std::vector<StateId>> succ;
    std::vector<Valuation> labels;
    std::vector<bool> labelled;
    std::set<std::pair<StateId, StateId>> seen_trans;

    auto lines = lines_of(text);
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        const std::size_t line_no = ln + 1;
        auto w = words_of(lines[ln]);
        if (w.empty()) {
            continue;
        }
        auto state_ref = [&](const Word& word) -> StateId {
            auto it = index.find(word.text);
            if (it == index.end()) {
                throw ParseError("unknown state '" + word.text + "'", line_no, word.column);
            }
            return it->second;
        };
        const std::string& head = w[0].text;
        if (head == "ap") {
            for (std::size_t i = after_colon(w, line_no, 1); i < w.size(); ++i) {
                if (!is_identifier(w[i].text)) {
                    throw ParseError("invalid proposition name '" + w[i].text + "'", line_no,
                                     w[i].column);
                }
                if (alphabet.find(w[i].text)) {
                    throw ParseError("duplicate proposition '" + w[i].text + "'", line_no,
                                     w[i].column);
                }
                alphabet.intern(w[i].text);
            }
        } else if (head == "states") {
            for (std::size_t i = after_colon(w, line_no, 1); i < w.size(); ++i) {
                if (!is_identifier(w[i].text)) {
                    throw ParseError("invalid state name '" + w[i].text + "'", line_no,
                                     w[i].column);
                }
                if (index.count(w[i].text)) {
                    throw ParseError("duplicate state '" + w[i].text + "'", line_no,
                                     w[i].column);
                }
                index.emplace(w[i].text, static_cast<StateId>(states.size()));
                states.push_back(w[i].text);
                succ.emplace_back();
                labels.emplace_back();
                labelled.push_back(false);
            }
        } else if (head == "init") {
            std::size_t i = after_colon(w, line_no, 1);
            if (i + 1 != w.size()) {
                throw ParseError("expected exactly one initial state", line_no, w[0].column);
            }
            if (init) {
                throw ParseError("duplicate init declaration", line_no, w[0].column);
            }
            init = state_ref(w[i]);
        } else if (head == "label") {
            if (w.size() < 3) {
                throw ParseError("expected 'label <state>: <props...>'", line_no, w[0].column);
            }
            StateId s = state_ref(w[1]);
            if (labelled[s]) {
                throw ParseError("duplicate label for state '" + w[1].text + "'", line_no,
                                 w[1].column);
            }
            labelled[s] = true;
            for (std::size_t i = after_colon(w, line_no, 2); i < w.size(); ++i) {
                auto p = alphabet.find(w[i].text);
                if (!p) {
                    throw ParseError("undeclared proposition '" + w[i].text + "'", line_no,
                                     w[i].column);
                }
                labels[s].insert(*p);
            }
        } else if (head == "trans") {
            if (w.size() != 4 || w[2].text != "->") {
                throw ParseError("expected 'trans <state> -> <state>'", line_no, w[0].column);
            }
            StateId a = state_ref(w[1]);
            StateId b = state_ref(w[3]);
            if (!seen_trans.insert({a, b}).second) {
                throw ParseError("duplicate transition " + w[1].text + " -> " + w[3].text,
                                 line_no, w[0].column);
            }
            succ[a].push_back(b);
        } else {
            throw ParseError("unknown directive '" + head + "'", line_no, w[0].column);
        }
    }
    if (states.empty()) {
        throw ValidationError("model declares no states");
    }
    if (!init) {
        throw ValidationError("model has no init declaration");
    }
    for (std::size_t s = 0; s < states.size(); ++s) {
        if (succ[s].empty()) {
            throw ValidationError("deadlock: state '" + states[s] +
                                  "' has no outgoing transition");
        }
    }
    return TransitionSystem(std::move(alphabet), std::move(states), *init, std::move(succ),
                            std::move(labels));
}

std::string serialize_model(const TransitionSystem& ts) {
    std::ostringstream os;
    os << "ap:";
    for (const auto& p : ts.alphabet().names()) {
        os << ' ' << p;
    }
    os << "\nstates:";
    for (const auto& s : ts.names()) {
        os << ' ' << s;
    }
    os << "\ninit: " << ts.name(ts.initial()) << '\n';
    for (StateId s = 0; s < ts.num_states(); ++s) {
        auto members = ts.label(s).members();
        if (members.empty()) {
            continue;
        }
        os << "label " << ts.name(s) << ':';
        for (auto p : members) {
            os << ' ' << ts.alphabet().name(p);
        }
        os << '\n';
    }
    for (StateId s = 0; s < ts.num_states(); ++s) {
        for (auto t : ts.successors(s)) {
            os << "trans " << ts.name(s) << " -> " << ts.name(t) << '\n';
        }
    }
    return os.str();
}

MissionSpec parse_spec(std::string_view text) {
    std::vector<Objective> objectives;
    auto lines = lines_of(text);
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        const std::size_t line_no = ln + 1;
        std::string_view line = lines[ln];
        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        if (i == line.size() || line[i] == '#') {
            continue;
        }
        if (line.substr(i, 6) != "reward") {
            throw ParseError("expected 'reward <int> : <formula>'", line_no, i + 1);
        }
        i += 6;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        std::size_t digits = i;
        while (digits < line.size() && std::isdigit(static_cast<unsigned char>(line[digits]))) {
            ++digits;
        }
        if (digits == i) {
            throw ParseError("expected a non-negative integer reward", line_no, i + 1);
        }
        Reward reward = 0;
        try {
            reward = std::stoll(std::string(line.substr(i, digits - i)));
        } catch (const std::out_of_range&) {
            throw ParseError("reward out of range", line_no, i + 1);
        }
        i = digits;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        if (i == line.size() || line[i] != ':') {
            throw ParseError("expected ':' after the reward", line_no, i + 1);
        }
        ++i;
        std::string_view body = line.substr(i);
        // Strip a trailing comment.
        if (auto hash = body.find('#'); hash != std::string_view::npos) {
            body = body.substr(0, hash);
        }
        try {
            Formula f = parse_formula(body);
            std::string trimmed(body);
            trimmed.erase(0, trimmed.find_first_not_of(" \t"));
            trimmed.erase(trimmed.find_last_not_of(" \t") + 1);
            objectives.push_back(Objective{std::move(f), reward, objectives.size(), trimmed});
        } catch (const ParseError& e) {
            throw ParseError(e.what(), line_no, e.column() + i);
        }
    }
    return MissionSpec(std::move(objectives));
}

std::string serialize_spec(const MissionSpec& spec) {
    std::ostringstream os;
    for (const auto& o : spec.in_input_order()) {
        os << "reward " << o.reward << " : " << o.text << '\n';
    }
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("io", "cannot open '" + path + "'");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("io", "cannot write '" + path + "'");
    }
    out << contents;
}

} // namespace mvplan
