#include "mvplan/transition_system.hpp"

#include "mvplan/error.hpp"

#include <algorithm>

namespace mvplan {

TransitionSystem::TransitionSystem(Alphabet alphabet, std::vector<std::string> state_names,
                                   StateId initial,
                                   std::vector<std::vector<StateId>> successors,
                                   std::vector<Valuation> labels)
    : alphabet_(std::move(alphabet)),
      names_(std::move(state_names)),
      initial_(initial),
      succ_(std::move(successors)),
      labels_(std::move(labels)) {
    if (names_.empty()) {
        throw ValidationError("transition system has no states");
    }
    if (succ_.size() != names_.size() || labels_.size() != names_.size()) {
        throw ValidationError("successor or label table does not match the state count");
    }
    for (std::size_t s = 0; s < names_.size(); ++s) {
        if (!index_.emplace(names_[s], static_cast<StateId>(s)).second) {
            throw ValidationError("duplicate state '" + names_[s] + "'");
        }
    }
    if (initial_ >= names_.size()) {
        throw ValidationError("initial state out of range");
    }
    for (std::size_t s = 0; s < names_.size(); ++s) {
        auto& succ = succ_[s];
        std::sort(succ.begin(), succ.end());
        succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
        if (succ.empty()) {
            throw ValidationError("state '" + names_[s] + "' has no outgoing transition");
        }
        if (succ.back() >= names_.size()) {
            throw ValidationError("transition from '" + names_[s] + "' leaves the state set");
        }
        for (auto p : labels_[s].members()) {
            if (p >= alphabet_.size()) {
                throw ValidationError("label of '" + names_[s] + "' uses an undeclared proposition");
            }
        }
    }
}

std::size_t TransitionSystem::num_transitions() const {
    std::size_t n = 0;
    for (const auto& s : succ_) {
        n += s.size();
    }
    return n;
}

std::optional<StateId> TransitionSystem::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

bool TransitionSystem::has_transition(StateId from, StateId to) const {
    if (from >= succ_.size()) {
        return false;
    }
    return std::binary_search(succ_[from].begin(), succ_[from].end(), to);
}

bool TransitionSystem::operator==(const TransitionSystem& other) const {
    return alphabet_ == other.alphabet_ && names_ == other.names_ &&
           initial_ == other.initial_ && succ_ == other.succ_ && labels_ == other.labels_;
}

void check_lasso(const TransitionSystem& ts, const TraceLasso& lasso) {
    if (lasso.cycle.empty()) {
        throw InvalidLassoError("lasso has an empty cycle");
    }
    std::vector<StateId> seq = lasso.prefix;
    seq.insert(seq.end(), lasso.cycle.begin(), lasso.cycle.end());
    for (auto s : seq) {
        if (s >= ts.num_states()) {
            throw InvalidLassoError("lasso mentions an unknown state");
        }
    }
    if (seq.front() != ts.initial()) {
        throw InvalidLassoError("lasso starts in '" + ts.name(seq.front()) +
                                "' instead of the initial state '" + ts.name(ts.initial()) + "'");
    }
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        if (!ts.has_transition(seq[i], seq[i + 1])) {
            throw InvalidLassoError("no transition " + ts.name(seq[i]) + " -> " +
                                    ts.name(seq[i + 1]));
        }
    }
    if (!ts.has_transition(lasso.cycle.back(), lasso.cycle.front())) {
        throw InvalidLassoError("cycle does not close: no transition " +
                                ts.name(lasso.cycle.back()) + " -> " +
                                ts.name(lasso.cycle.front()));
    }
}

TraceLasso arbitrary_lasso(const TransitionSystem& ts) {
    std::vector<StateId> path;
    std::vector<std::size_t> position(ts.num_states(), SIZE_MAX);
    StateId s = ts.initial();
    while (position[s] == SIZE_MAX) {
        position[s] = path.size();
        path.push_back(s);
        s = ts.successors(s).front();
    }
    TraceLasso lasso;
    lasso.prefix.assign(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(position[s]));
    lasso.cycle.assign(path.begin() + static_cast<std::ptrdiff_t>(position[s]), path.end());
    return lasso;
}

} // namespace mvplan
