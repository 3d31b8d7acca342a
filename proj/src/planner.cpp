#include "mvplan/planner.hpp"

#include "mvplan/error.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace mvplan {

std::vector<std::uint32_t> strongly_connected_components(const WeightedProductAutomaton& product) {
    constexpr std::uint32_t unset = std::numeric_limits<std::uint32_t>::max();
    const std::size_t n = product.num_states();
    std::vector<std::uint32_t> index(n, unset), low(n, 0), comp(n, unset);
    std::vector<bool> on_stack(n, false);
    std::vector<StateId> stack;
    std::vector<std::pair<StateId, std::size_t>> frames;
    std::uint32_t counter = 0;
    std::uint32_t next_comp = 0;

    for (StateId start = 0; start < n; ++start) {
        if (index[start] != unset) {
            continue;
        }
        frames.emplace_back(start, 0);
        index[start] = low[start] = counter++;
        stack.push_back(start);
        on_stack[start] = true;
        while (!frames.empty()) {
            auto& [v, k] = frames.back();
            auto succ = product.successors(v);
            if (k < succ.size()) {
                StateId w = succ[k++].target;
                if (index[w] == unset) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                StateId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = next_comp;
                } while (w != v);
                ++next_comp;
            }
            const StateId done = v;
            frames.pop_back();
            if (!frames.empty()) {
                StateId parent = frames.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
        }
    }
    return comp;
}

std::vector<StateId> find_path(const WeightedProductAutomaton& product, StateId from, StateId to,
                               bool hub_only) {
    constexpr StateId none = std::numeric_limits<StateId>::max();
    std::vector<StateId> parent(product.num_states(), none);
    std::deque<StateId> queue;
    auto usable = [&](StateId p) { return !hub_only || product.accepting(p); };
    // parent[] doubles as the visited mark; `from` is only marked once it is
    // re-entered, so a path back to itself is found.
    for (const auto& e : product.successors(from)) {
        if (usable(e.target) && parent[e.target] == none) {
            parent[e.target] = from;
            queue.push_back(e.target);
        }
    }
    while (!queue.empty() && parent[to] == none) {
        StateId x = queue.front();
        queue.pop_front();
        for (const auto& e : product.successors(x)) {
            if (usable(e.target) && parent[e.target] == none) {
                parent[e.target] = x;
                queue.push_back(e.target);
            }
        }
    }
    if (parent[to] == none) {
        return {};
    }
    std::vector<StateId> path{to};
    StateId x = parent[to];
    while (x != from) {
        path.push_back(x);
        x = parent[x];
    }
    path.push_back(from);
    std::reverse(path.begin(), path.end());
    return path;
}

CycleSearch::CycleSearch(const WeightedProductAutomaton& product, PlannerOptions options)
    : product_(product),
      options_(options),
      scc_(strongly_connected_components(product)),
      dist_(product.num_states(), 0),
      pred_(product.num_states(), 0),
      reached_(product.num_states(), 0),
      expanded_(product.num_states(), 0),
      queued_(product.num_states(), 0),
      queues_(product.num_components()) {}

bool CycleSearch::in_scope(StateId root, StateId p) const {
    return !options_.reuse_inner_visits || scc_[p] == scc_[root];
}

bool CycleSearch::pruned(StateId p) const {
    return options_.reuse_inner_visits && expanded_[p] != 0 && expanded_[p] != generation_;
}

void CycleSearch::relax(StateId root, StateId from, StateId to, Reward value) {
    if (!in_scope(root, to)) {
        return;
    }
    if (to == root) {
        if (!root_arrival_ || value > *root_arrival_) {
            if (!root_arrival_) {
                search_from_.push_back(root);
            }
            root_arrival_ = value;
            root_arrival_pred_ = from;
        }
        return;
    }
    const bool hub = product_.accepting(to);
    if (!hub && pruned(to)) {
        return;
    }
    if (reached_[to] == generation_ && value <= dist_[to]) {
        return;
    }
    if (hub && reached_[to] != generation_) {
        search_from_.push_back(to);
    }
    reached_[to] = generation_;
    dist_[to] = value;
    pred_[to] = from;
    if (!hub && queued_[to] != generation_) {
        queued_[to] = generation_;
        queues_[product_.component(to)].push_back(to);
    }
}

std::vector<StateId> CycleSearch::stem(StateId root, StateId end) const {
    std::vector<StateId> chain;
    StateId x = end == root ? root_arrival_pred_ : pred_[end];
    if (end != root) {
        chain.push_back(end);
    }
    std::size_t guard = 0;
    while (x != root) {
        if (++guard > product_.num_states()) {
            throw Error("internal", "predecessor chain does not return to the root");
        }
        chain.push_back(x);
        x = pred_[x];
    }
    chain.push_back(root);
    std::reverse(chain.begin(), chain.end());
    return chain;
}

std::optional<Reward> CycleSearch::search(StateId root) {
    if (!product_.accepting(root)) {
        throw ValidationError("cycle search root must be accepting");
    }
    ++generation_;
    root_ = root;
    best_end_.reset();
    search_from_.clear();
    root_arrival_.reset();
    for (auto& q : queues_) {
        q.clear();
    }
    reached_[root] = generation_;
    expanded_[root] = generation_;
    dist_[root] = 0;

    // Phase 1: maximal simple distances, component by component.
    for (const auto& e : product_.successors(root)) {
        relax(root, root, e.target, e.weight);
    }
    std::deque<StateId> bfs;
    for (std::size_t c = 1; c < queues_.size(); ++c) {
        auto& entries = queues_[c];
        if (entries.empty()) {
            continue;
        }
        std::sort(entries.begin(), entries.end(), [&](StateId a, StateId b) {
            return dist_[a] > dist_[b] || (dist_[a] == dist_[b] && a < b);
        });
        for (StateId seed : entries) {
            if (expanded_[seed] == generation_) {
                continue;
            }
            expanded_[seed] = generation_;
            bfs.push_back(seed);
            while (!bfs.empty()) {
                const StateId x = bfs.front();
                bfs.pop_front();
                for (const auto& e : product_.successors(x)) {
                    const StateId y = e.target;
                    if (product_.component(y) == c) {
                        if (!in_scope(root, y) || expanded_[y] == generation_ || pruned(y)) {
                            continue;
                        }
                        expanded_[y] = generation_;
                        reached_[y] = generation_;
                        dist_[y] = dist_[x];
                        pred_[y] = x;
                        bfs.push_back(y);
                    } else {
                        relax(root, x, y, dist_[x] + e.weight);
                    }
                }
            }
        }
    }

    // Phase 2: best arrival that can return to the root. Those are exactly
    // the arrivals in the root's strongly connected component, and for them
    // a return path inside the hub exists.
    for (StateId p : search_from_) {
        if (scc_[p] != scc_[root]) {
            continue;
        }
        const Reward w = p == root ? *root_arrival_ : dist_[p];
        const Reward best = !best_end_ ? 0 : (*best_end_ == root ? *root_arrival_ : dist_[*best_end_]);
        if (!best_end_ || w > best || (w == best && p < *best_end_)) {
            best_end_ = p;
        }
    }
    if (!best_end_) {
        return std::nullopt;
    }
    return *best_end_ == root ? *root_arrival_ : dist_[*best_end_];
}

std::vector<StateId> CycleSearch::cycle() const {
    if (!best_end_) {
        return {};
    }
    std::vector<StateId> cycle = stem(root_, *best_end_);
    if (*best_end_ != root_) {
        auto back = find_path(product_, *best_end_, root_, true);
        if (back.empty()) {
            throw Error("internal", "no return path inside the accepting component");
        }
        cycle.insert(cycle.end(), back.begin() + 1, back.end() - 1);
    }
    return cycle;
}

std::optional<CycleResult> CycleSearch::longest_cycle(StateId root) {
    auto weight = search(root);
    if (!weight) {
        return std::nullopt;
    }
    return CycleResult{cycle(), *weight};
}

std::optional<Reward> CycleSearch::distance(StateId p) const {
    if (generation_ == 0 || reached_[p] != generation_) {
        return std::nullopt;
    }
    return dist_[p];
}

ProductPlan plan(const WeightedProductAutomaton& product, Reward total_reward,
                 const PlannerOptions& options) {
    if (product.num_states() == 0) {
        throw ValidationError("product automaton has no initial state");
    }
    ProductPlan best;
    CycleSearch inner(product, options);
    std::vector<bool> visited(product.num_states(), false);
    // Outer DFS stack of (state, next successor position).
    std::vector<std::pair<StateId, std::size_t>> stack;
    stack.emplace_back(product.initial(), 0);
    visited[product.initial()] = true;
    while (!stack.empty()) {
        auto& [p, k] = stack.back();
        auto succ = product.successors(p);
        while (k < succ.size() && visited[succ[k].target]) {
            ++k;
        }
        if (k < succ.size()) {
            const StateId next = succ[k].target;
            visited[next] = true;
            stack.emplace_back(next, 0);
            continue;
        }
        const StateId done = p;
        stack.pop_back();
        if (!product.accepting(done)) {
            continue;
        }
        auto weight = inner.search(done);
        if (weight && (!best.found || *weight > best.reward)) {
            best.found = true;
            best.reward = *weight;
            best.lasso.cycle = inner.cycle();
            if (best.reward == total_reward) {
                break;
            }
        }
    }
    // The outer stack is a valid prefix but can be long; use a shortest one.
    best.lasso.prefix.clear();
    if (best.found && best.lasso.cycle.front() != product.initial()) {
        best.lasso.prefix = find_path(product, product.initial(), best.lasso.cycle.front(), false);
        best.lasso.prefix.pop_back();
    }
    return best;
}

} // namespace mvplan
