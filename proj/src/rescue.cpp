#include "mvplan/rescue.hpp"

#include "mvplan/error.hpp"
#include "mvplan/ltl_parser.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <set>

namespace mvplan {

namespace {

using nlohmann::json;

Cell cell_of(const json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
        throw ValidationError(what + ": expected [row, column]");
    }
    return {j[0].get<int>(), j[1].get<int>()};
}

std::vector<std::string> names_of(const json& j, const char* key) {
    std::vector<std::string> out;
    if (j.contains(key)) {
        for (const auto& n : j.at(key)) {
            out.push_back(n.get<std::string>());
        }
    }
    return out;
}

bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
        return false;
    }
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

struct Joint {
    std::vector<Cell> position;
    std::vector<bool> vehicle_active;
    std::vector<bool> target_active;
    std::vector<int> friendly; // 0 waiting, 1 picked up, 2 delivered
    auto operator<=>(const Joint&) const = default;
};

class Generator {
public:
    explicit Generator(const RescueConfig& c) : c_(c) { validate(); }

    RescueMission run();

private:
    void validate() const;
    bool inside(Cell x) const {
        return x.first >= 0 && x.first < c_.rows && x.second >= 0 && x.second < c_.columns;
    }
    std::size_t target_index(const std::string& name) const;
    bool lists(const std::vector<std::string>& l, std::size_t target) const {
        return std::find(l.begin(), l.end(), c_.targets[target].name) != l.end();
    }
    void settle(Joint& j) const;
    void successors(const Joint& from, std::size_t v, Joint& cur, std::vector<Joint>& out) const;

    const RescueConfig& c_;
};

void Generator::validate() const {
    if (c_.rows <= 0 || c_.columns <= 0) {
        throw ValidationError("rescue: grid dimensions must be positive");
    }
    if (c_.vehicles.empty()) {
        throw ValidationError("rescue: at least one vehicle is required");
    }
    if (!inside(c_.base)) {
        throw ValidationError("rescue: base lies outside the grid");
    }
    std::set<std::string> seen;
    auto unit = [&](const std::string& name, Cell at) {
        if (!is_identifier(name)) {
            throw ValidationError("rescue: unit name '" + name + "' is not an identifier");
        }
        if (!seen.insert(name).second) {
            throw ValidationError("rescue: duplicate unit '" + name + "'");
        }
        if (!inside(at)) {
            throw ValidationError("rescue: unit '" + name + "' lies outside the grid");
        }
    };
    for (const auto& v : c_.vehicles) {
        unit(v.name, v.start);
    }
    for (const auto& t : c_.targets) {
        unit(t.name, t.cell);
        if (t.range < 0) {
            throw ValidationError("rescue: target '" + t.name + "' has a negative range");
        }
    }
    for (const auto& f : c_.friendlies) {
        unit(f.name, f.cell);
    }
    for (const auto& v : c_.vehicles) {
        for (const auto* list : {&v.engages, &v.sacrifices, &v.vulnerable_to}) {
            for (const auto& t : *list) {
                target_index(t);
            }
        }
    }
    for (const auto& [a, b] : c_.order) {
        auto known = [&](const std::string& f) {
            return std::any_of(c_.friendlies.begin(), c_.friendlies.end(),
                               [&](const RescueFriendly& x) { return x.name == f; });
        };
        if (!known(a) || !known(b)) {
            throw ValidationError("rescue: order constraint names an unknown friendly unit");
        }
    }
    if (c_.pickup_reward < 0 || c_.order_reward < 0 || c_.survival_reward < 0) {
        throw ValidationError("rescue: rewards must be non-negative");
    }
}

std::size_t Generator::target_index(const std::string& name) const {
    for (std::size_t t = 0; t < c_.targets.size(); ++t) {
        if (c_.targets[t].name == name) {
            return t;
        }
    }
    throw ValidationError("rescue: unknown target '" + name + "'");
}

// Engagement, then losses, then pickups and deliveries.
void Generator::settle(Joint& j) const {
    for (std::size_t v = 0; v < c_.vehicles.size(); ++v) {
        if (!j.vehicle_active[v]) {
            continue;
        }
        for (std::size_t t = 0; t < c_.targets.size(); ++t) {
            if (!j.target_active[t] || j.position[v] != c_.targets[t].cell) {
                continue;
            }
            if (lists(c_.vehicles[v].engages, t)) {
                j.target_active[t] = false;
            } else if (lists(c_.vehicles[v].sacrifices, t)) {
                j.target_active[t] = false;
                j.vehicle_active[v] = false;
            }
        }
    }
    for (std::size_t v = 0; v < c_.vehicles.size(); ++v) {
        if (!j.vehicle_active[v]) {
            continue;
        }
        for (std::size_t t = 0; t < c_.targets.size(); ++t) {
            const auto& target = c_.targets[t];
            const int d = std::max(std::abs(j.position[v].first - target.cell.first),
                                   std::abs(j.position[v].second - target.cell.second));
            if (j.target_active[t] && d <= target.range &&
                lists(c_.vehicles[v].vulnerable_to, t)) {
                j.vehicle_active[v] = false;
            }
        }
    }
    for (std::size_t v = 0; v < c_.vehicles.size(); ++v) {
        if (!j.vehicle_active[v] || !c_.vehicles[v].can_pickup) {
            continue;
        }
        for (std::size_t f = 0; f < c_.friendlies.size(); ++f) {
            if (j.friendly[f] == 0 && j.position[v] == c_.friendlies[f].cell) {
                j.friendly[f] = 1;
            } else if (j.friendly[f] == 1 && j.position[v] == c_.base) {
                j.friendly[f] = 2;
            }
        }
    }
}

void Generator::successors(const Joint& from, std::size_t v, Joint& cur,
                           std::vector<Joint>& out) const {
    if (v == c_.vehicles.size()) {
        Joint next = cur;
        settle(next);
        out.push_back(std::move(next));
        return;
    }
    if (!from.vehicle_active[v]) {
        successors(from, v + 1, cur, out);
        return;
    }
    static constexpr int dr[] = {0, -1, 1, 0, 0};
    static constexpr int dc[] = {0, 0, 0, -1, 1};
    for (int k = 0; k < 5; ++k) {
        Cell to{from.position[v].first + dr[k], from.position[v].second + dc[k]};
        if (inside(to)) {
            cur.position[v] = to;
            successors(from, v + 1, cur, out);
        }
    }
    cur.position[v] = from.position[v];
}

RescueMission Generator::run() {
    const std::size_t nv = c_.vehicles.size();
    std::vector<std::string> props;
    std::map<std::pair<std::size_t, std::size_t>, std::string> at_friendly;
    std::vector<std::string> at_base(nv), active(nv);
    for (std::size_t v = 0; v < nv; ++v) {
        const auto& name = c_.vehicles[v].name;
        if (c_.vehicles[v].can_pickup) {
            for (std::size_t f = 0; f < c_.friendlies.size(); ++f) {
                at_friendly[{v, f}] = "p" + name + "_" + c_.friendlies[f].name;
                props.push_back(at_friendly[{v, f}]);
            }
        }
        at_base[v] = "p" + name + "_Base";
        active[v] = "a" + name;
        props.push_back(at_base[v]);
        props.push_back(active[v]);
    }
    Alphabet alphabet(props);

    Joint init;
    for (const auto& v : c_.vehicles) {
        init.position.push_back(v.start);
    }
    init.vehicle_active.assign(nv, true);
    init.target_active.assign(c_.targets.size(), true);
    init.friendly.assign(c_.friendlies.size(), 0);
    settle(init);

    std::map<Joint, StateId> index;
    std::vector<Joint> states;
    auto intern = [&](const Joint& j) {
        auto [it, fresh] = index.try_emplace(j, static_cast<StateId>(states.size()));
        if (fresh) {
            if (states.size() >= c_.max_states) {
                throw LimitError("rescue: more than " + std::to_string(c_.max_states) +
                                 " joint states");
            }
            states.push_back(j);
        }
        return it->second;
    };
    intern(init);
    std::vector<std::vector<StateId>> succ;
    for (std::size_t i = 0; i < states.size(); ++i) {
        const Joint from = states[i];
        Joint cur = from;
        std::vector<Joint> next;
        successors(from, 0, cur, next);
        std::vector<StateId> ids;
        for (const auto& j : next) {
            ids.push_back(intern(j));
        }
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        succ.push_back(std::move(ids));
    }

    std::vector<std::string> names;
    std::vector<Valuation> labels;
    for (std::size_t i = 0; i < states.size(); ++i) {
        const auto& j = states[i];
        names.push_back("s" + std::to_string(i));
        Valuation l(alphabet.size());
        for (std::size_t v = 0; v < nv; ++v) {
            if (!j.vehicle_active[v]) {
                continue;
            }
            l.insert(alphabet.at(active[v]));
            if (j.position[v] == c_.base) {
                l.insert(alphabet.at(at_base[v]));
            }
            for (std::size_t f = 0; f < c_.friendlies.size(); ++f) {
                auto it = at_friendly.find({v, f});
                if (it != at_friendly.end() && j.position[v] == c_.friendlies[f].cell) {
                    l.insert(alphabet.at(it->second));
                }
            }
        }
        labels.push_back(std::move(l));
    }
    TransitionSystem ts(alphabet, names, 0, std::move(succ), std::move(labels));

    std::vector<Objective> objectives;
    auto add = [&](const std::string& text, Reward reward) {
        objectives.push_back(Objective{parse_formula(text), reward, objectives.size(), text});
    };
    auto pickers_at = [&](std::size_t f) {
        std::vector<std::size_t> vs;
        for (std::size_t v = 0; v < nv; ++v) {
            if (at_friendly.count({v, f})) {
                vs.push_back(v);
            }
        }
        return vs;
    };
    auto friendly_index = [&](const std::string& name) {
        for (std::size_t f = 0; f < c_.friendlies.size(); ++f) {
            if (c_.friendlies[f].name == name) {
                return f;
            }
        }
        return std::size_t{0};
    };
    for (std::size_t f = 0; f < c_.friendlies.size(); ++f) {
        std::string text;
        for (auto v : pickers_at(f)) {
            text += (text.empty() ? "" : " | ") + std::string("F (") + at_friendly[{v, f}] +
                    " & F " + at_base[v] + ")";
        }
        if (!text.empty()) {
            add(text, c_.pickup_reward);
        }
    }
    for (const auto& [first, later] : c_.order) {
        const auto a = friendly_index(first);
        const auto b = friendly_index(later);
        std::string text;
        for (auto v : pickers_at(a)) {
            text += (text.empty() ? "" : " & ") + std::string("G (") + at_friendly[{v, b}] +
                    " -> G !" + at_friendly[{v, a}] + ")";
        }
        if (!text.empty()) {
            add(text, c_.order_reward);
        }
    }
    for (std::size_t v = 0; v < nv; ++v) {
        add("G " + active[v] + " & F " + at_base[v], c_.survival_reward);
    }
    return {std::move(ts), MissionSpec(std::move(objectives))};
}

} // namespace

RescueConfig parse_rescue_config(std::string_view json_text) {
    RescueConfig c;
    try {
        const auto j = json::parse(json_text);
        if (j.contains("grid")) {
            auto g = cell_of(j.at("grid"), "grid");
            c.rows = g.first;
            c.columns = g.second;
        }
        if (j.contains("base")) {
            c.base = cell_of(j.at("base"), "base");
        }
        for (const auto& v : j.value("vehicles", json::array())) {
            RescueVehicle rv;
            rv.name = v.at("name").get<std::string>();
            rv.start = v.contains("start") ? cell_of(v.at("start"), rv.name) : c.base;
            rv.can_pickup = v.value("can_pickup", false);
            rv.engages = names_of(v, "engages");
            rv.sacrifices = names_of(v, "sacrifices");
            rv.vulnerable_to = names_of(v, "vulnerable_to");
            c.vehicles.push_back(std::move(rv));
        }
        for (const auto& t : j.value("targets", json::array())) {
            auto name = t.at("name").get<std::string>();
            c.targets.push_back({name, cell_of(t.at("cell"), name), t.value("range", 1)});
        }
        for (const auto& f : j.value("friendlies", json::array())) {
            auto name = f.at("name").get<std::string>();
            c.friendlies.push_back({name, cell_of(f.at("cell"), name)});
        }
        for (const auto& o : j.value("order", json::array())) {
            if (!o.is_array() || o.size() != 2) {
                throw ValidationError("order: expected [first, later] pairs");
            }
            c.order.emplace_back(o[0].get<std::string>(), o[1].get<std::string>());
        }
        if (j.contains("rewards")) {
            const auto& r = j.at("rewards");
            c.pickup_reward = r.value("pickup", c.pickup_reward);
            c.order_reward = r.value("order", c.order_reward);
            c.survival_reward = r.value("survival", c.survival_reward);
        }
        c.max_states = j.value("max_states", c.max_states);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("rescue config: ") + e.what());
    }
    return c;
}

RescueConfig default_rescue_config() {
    RescueConfig c;
    c.rows = 4;
    c.columns = 4;
    c.base = {0, 0};
    c.vehicles.push_back({"V1", {0, 0}, false, {}, {"T1"}, {}});
    c.vehicles.push_back({"V2", {0, 0}, true, {}, {}, {"T1"}});
    c.targets.push_back({"T1", {3, 2}, 1});
    c.friendlies.push_back({"F1", {3, 3}});
    return c;
}

RescueMission generate_rescue_mission(const RescueConfig& config) {
    return Generator(config).run();
}

} // namespace mvplan
