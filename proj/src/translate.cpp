#include "mvplan/translate.hpp"

#include "mvplan/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace mvplan {

namespace {

// Negation normal form, hash-consed so that subformulas are small integers.
enum class Op { True, False, Lit, And, Or, Next, Until, Release };

struct NnfNode {
    Op op;
    PropId prop = 0;
    bool positive = true;
    int lhs = -1;
    int rhs = -1;
};

class NnfTable {
public:
    const NnfNode& operator[](int id) const { return nodes_[id]; }

    int top() { return make({Op::True}); }
    int bottom() { return make({Op::False}); }
    int literal(PropId p, bool positive) { return make({Op::Lit, p, positive}); }

    int conj(int a, int b) {
        if (is(a, Op::False) || is(b, Op::False)) return bottom();
        if (is(a, Op::True)) return b;
        if (is(b, Op::True) || a == b) return a;
        return make({Op::And, 0, true, std::min(a, b), std::max(a, b)});
    }

    int disj(int a, int b) {
        if (is(a, Op::True) || is(b, Op::True)) return top();
        if (is(a, Op::False)) return b;
        if (is(b, Op::False) || a == b) return a;
        return make({Op::Or, 0, true, std::min(a, b), std::max(a, b)});
    }

    int next(int a) {
        if (is(a, Op::True) || is(a, Op::False)) return a;
        return make({Op::Next, 0, true, a});
    }

    int until(int a, int b) {
        if (is(b, Op::True) || is(b, Op::False)) return b;
        if (is(a, Op::False)) return b;
        return make({Op::Until, 0, true, a, b});
    }

    int release(int a, int b) {
        if (is(b, Op::True) || is(b, Op::False)) return b;
        if (is(a, Op::True)) return b;
        return make({Op::Release, 0, true, a, b});
    }

    int from(const Formula& f, bool negated, const Alphabet& alphabet) {
        using K = Formula::Kind;
        switch (f.kind()) {
        case K::True:
            return negated ? bottom() : top();
        case K::Atom: {
            auto p = alphabet.find(f.name());
            if (!p) {
                throw ValidationError("proposition '" + f.name() +
                                      "' is not declared in the alphabet");
            }
            return literal(*p, !negated);
        }
        case K::Not:
            return from(f.child(), !negated, alphabet);
        case K::And: {
            int a = from(f.left(), negated, alphabet);
            int b = from(f.right(), negated, alphabet);
            return negated ? disj(a, b) : conj(a, b);
        }
        case K::Next:
            return next(from(f.child(), negated, alphabet));
        case K::Until: {
            int a = from(f.left(), negated, alphabet);
            int b = from(f.right(), negated, alphabet);
            return negated ? release(a, b) : until(a, b);
        }
        }
        return top();
    }

    std::vector<int> untils_below(int root) const {
        std::set<int> seen;
        std::vector<int> todo{root};
        std::vector<int> out;
        while (!todo.empty()) {
            int id = todo.back();
            todo.pop_back();
            if (!seen.insert(id).second) {
                continue;
            }
            const auto& n = nodes_[id];
            if (n.op == Op::Until) {
                out.push_back(id);
            }
            if (n.lhs >= 0) todo.push_back(n.lhs);
            if (n.rhs >= 0) todo.push_back(n.rhs);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    bool is(int id, Op op) const { return nodes_[id].op == op; }

    int make(NnfNode n) {
        auto key = std::make_tuple(n.op, n.prop, n.positive, n.lhs, n.rhs);
        auto it = index_.find(key);
        if (it != index_.end()) {
            return it->second;
        }
        int id = static_cast<int>(nodes_.size());
        nodes_.push_back(n);
        index_.emplace(key, id);
        return id;
    }

    std::vector<NnfNode> nodes_;
    std::map<std::tuple<Op, PropId, bool, int, int>, int> index_;
};

// One way of discharging a set of obligations at the current position.
struct Cover {
    Guard guard;
    std::vector<int> next;
    std::vector<int> postponed;

    auto operator<=>(const Cover&) const = default;
};

std::vector<Cover> expand(const NnfTable& table, const std::vector<int>& obligations) {
    struct Branch {
        std::vector<int> todo;
        std::set<int> done;
        std::set<PropId> pos, neg;
        std::set<int> next;
        std::set<int> postponed;
    };
    std::vector<Cover> covers;
    std::vector<Branch> stack;
    stack.push_back(Branch{obligations, {}, {}, {}, {}, {}});
    while (!stack.empty()) {
        Branch b = std::move(stack.back());
        stack.pop_back();
        bool dead = false;
        while (!b.todo.empty() && !dead) {
            int id = b.todo.back();
            b.todo.pop_back();
            if (!b.done.insert(id).second) {
                continue;
            }
            const auto& n = table[id];
            switch (n.op) {
            case Op::True:
                break;
            case Op::False:
                dead = true;
                break;
            case Op::Lit:
                if (n.positive) {
                    dead = b.neg.count(n.prop) > 0;
                    b.pos.insert(n.prop);
                } else {
                    dead = b.pos.count(n.prop) > 0;
                    b.neg.insert(n.prop);
                }
                break;
            case Op::And:
                b.todo.push_back(n.lhs);
                b.todo.push_back(n.rhs);
                break;
            case Op::Or: {
                Branch alt = b;
                alt.todo.push_back(n.rhs);
                stack.push_back(std::move(alt));
                b.todo.push_back(n.lhs);
                break;
            }
            case Op::Next:
                if (table[n.lhs].op != Op::True) {
                    b.next.insert(n.lhs);
                }
                break;
            case Op::Until: {
                // postpone: lhs now, the until again next step
                Branch alt = b;
                alt.todo.push_back(n.lhs);
                alt.next.insert(id);
                alt.postponed.insert(id);
                stack.push_back(std::move(alt));
                b.todo.push_back(n.rhs);
                break;
            }
            case Op::Release: {
                Branch alt = b;
                alt.todo.push_back(n.rhs);
                alt.next.insert(id);
                stack.push_back(std::move(alt));
                b.todo.push_back(n.lhs);
                b.todo.push_back(n.rhs);
                break;
            }
            }
        }
        if (dead) {
            continue;
        }
        Cover c;
        c.guard.pos.assign(b.pos.begin(), b.pos.end());
        c.guard.neg.assign(b.neg.begin(), b.neg.end());
        c.next.assign(b.next.begin(), b.next.end());
        c.postponed.assign(b.postponed.begin(), b.postponed.end());
        covers.push_back(std::move(c));
    }
    std::sort(covers.begin(), covers.end());
    covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
    return covers;
}

} // namespace

GeneralizedBuchiAutomaton ltl_to_gba(const Formula& f, const Alphabet& alphabet,
                                     const TranslationOptions& options) {
    NnfTable table;
    const int root = table.from(f, false, alphabet);
    const std::vector<int> untils = table.untils_below(root);
    if (untils.size() > 64) {
        throw LimitError("formula has more than 64 until subformulas");
    }
    const std::uint64_t all_marks =
        untils.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << untils.size()) - 1;

    // A state is the set of obligations for the current position together
    // with the acceptance marks of the transition that entered it.
    using Key = std::pair<std::vector<int>, std::uint64_t>;
    std::map<Key, StateId> ids;
    std::vector<Key> keys;
    auto intern = [&](Key key) -> StateId {
        auto it = ids.find(key);
        if (it != ids.end()) {
            return it->second;
        }
        if (keys.size() >= options.max_states) {
            throw LimitError("translation of '" + to_string(f) + "' exceeds " +
                             std::to_string(options.max_states) + " states");
        }
        auto id = static_cast<StateId>(keys.size());
        ids.emplace(key, id);
        keys.push_back(std::move(key));
        return id;
    };

    std::vector<int> initial;
    if (table[root].op != Op::True) {
        initial.push_back(root);
    }
    intern(Key{initial, all_marks});

    GeneralizedBuchiAutomaton g;
    g.alphabet = alphabet;
    g.initial = 0;
    std::map<std::vector<int>, std::vector<Cover>> cover_cache;
    for (std::size_t q = 0; q < keys.size(); ++q) {
        const std::vector<int> obligations = keys[q].first;
        auto cached = cover_cache.find(obligations);
        if (cached == cover_cache.end()) {
            cached = cover_cache.emplace(obligations, expand(table, obligations)).first;
        }
        std::vector<Edge> edges;
        for (const auto& c : cached->second) {
            std::uint64_t marks = 0;
            for (std::size_t k = 0; k < untils.size(); ++k) {
                if (!std::binary_search(c.postponed.begin(), c.postponed.end(), untils[k])) {
                    marks |= std::uint64_t{1} << k;
                }
            }
            edges.push_back(Edge{c.guard, intern(Key{c.next, marks})});
        }
        std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
            return std::tie(a.target, a.guard) < std::tie(b.target, b.guard);
        });
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        if (g.out.size() <= q) {
            g.out.resize(q + 1);
        }
        g.out[q] = std::move(edges);
    }
    g.out.resize(keys.size());

    if (untils.empty()) {
        g.acceptance.assign(1, std::vector<bool>(keys.size(), true));
    } else {
        g.acceptance.assign(untils.size(), std::vector<bool>(keys.size(), false));
        for (std::size_t q = 0; q < keys.size(); ++q) {
            for (std::size_t k = 0; k < untils.size(); ++k) {
                g.acceptance[k][q] = (keys[q].second >> k) & 1U;
            }
        }
    }
    return g;
}

GeneralizedBuchiAutomaton ltl_to_gba(const Formula& f, const TranslationOptions& options) {
    std::vector<std::string> names;
    for (const auto& a : f.atoms()) {
        names.push_back(a);
    }
    return ltl_to_gba(f, Alphabet(names), options);
}

} // namespace mvplan
