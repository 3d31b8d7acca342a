#include "mvplan/formula.hpp"

namespace mvplan {

Formula Formula::top() {
    return Formula(std::make_shared<const Node>(Node{Kind::True, {}, {}}));
}

Formula Formula::atom(std::string name) {
    return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), {}}));
}

Formula Formula::negation(Formula f) {
    return Formula(std::make_shared<const Node>(Node{Kind::Not, {}, {std::move(f)}}));
}

Formula Formula::conjunction(Formula a, Formula b) {
    return Formula(
        std::make_shared<const Node>(Node{Kind::And, {}, {std::move(a), std::move(b)}}));
}

Formula Formula::next(Formula f) {
    return Formula(std::make_shared<const Node>(Node{Kind::Next, {}, {std::move(f)}}));
}

Formula Formula::until(Formula a, Formula b) {
    return Formula(
        std::make_shared<const Node>(Node{Kind::Until, {}, {std::move(a), std::move(b)}}));
}

Formula Formula::bottom() { return negation(top()); }

Formula Formula::disjunction(Formula a, Formula b) {
    return negation(conjunction(negation(std::move(a)), negation(std::move(b))));
}

Formula Formula::implication(Formula a, Formula b) {
    return negation(conjunction(std::move(a), negation(std::move(b))));
}

Formula Formula::eventually(Formula f) { return until(top(), std::move(f)); }

Formula Formula::always(Formula f) { return negation(eventually(negation(std::move(f)))); }

std::size_t Formula::size() const {
    std::size_t n = (kind() == Kind::True || kind() == Kind::Atom) ? 0 : 1;
    for (const auto& c : node_->children) {
        n += c.size();
    }
    return n;
}

std::set<std::string> Formula::atoms() const {
    std::set<std::string> out;
    std::vector<const Formula*> todo{this};
    while (!todo.empty()) {
        const Formula* f = todo.back();
        todo.pop_back();
        if (f->kind() == Kind::Atom) {
            out.insert(f->name());
        }
        for (const auto& c : f->node_->children) {
            todo.push_back(&c);
        }
    }
    return out;
}

bool Formula::operator==(const Formula& other) const {
    if (node_ == other.node_) {
        return true;
    }
    if (kind() != other.kind() || name() != other.name() ||
        node_->children.size() != other.node_->children.size()) {
        return false;
    }
    for (std::size_t i = 0; i < node_->children.size(); ++i) {
        if (!(node_->children[i] == other.node_->children[i])) {
            return false;
        }
    }
    return true;
}

std::string to_string(const Formula& f) {
    using K = Formula::Kind;
    switch (f.kind()) {
    case K::True:
        return "true";
    case K::Atom:
        return f.name();
    case K::Not:
        return "!" + to_string(f.child());
    case K::Next:
        return "X " + to_string(f.child());
    case K::And:
        return "(" + to_string(f.left()) + " & " + to_string(f.right()) + ")";
    case K::Until:
        return "(" + to_string(f.left()) + " U " + to_string(f.right()) + ")";
    }
    return {};
}

} // namespace mvplan
