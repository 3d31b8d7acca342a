#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace mvplan {

// Immutable LTL syntax tree over the core grammar
//   phi ::= true | p | !phi | phi & phi | X phi | phi U phi.
// Derived operators are provided as factory helpers that build core trees.
class Formula {
public:
    enum class Kind { True, Atom, Not, And, Next, Until };

    static Formula top();
    static Formula atom(std::string name);
    static Formula negation(Formula f);
    static Formula conjunction(Formula a, Formula b);
    static Formula next(Formula f);
    static Formula until(Formula a, Formula b);

    // Sugar, desugared on construction.
    static Formula bottom();                          // !true
    static Formula disjunction(Formula a, Formula b); // !(!a & !b)
    static Formula implication(Formula a, Formula b); // !(a & !b)
    static Formula eventually(Formula f);             // true U f
    static Formula always(Formula f);                 // !(true U !f)

    Kind kind() const { return node_->kind; }
    const std::string& name() const { return node_->name; }
    const Formula& child() const { return node_->children.at(0); }
    const Formula& left() const { return node_->children.at(0); }
    const Formula& right() const { return node_->children.at(1); }

    // Number of operators (Not, And, Next, Until).
    std::size_t size() const;
    std::set<std::string> atoms() const;

    bool operator==(const Formula& other) const;

private:
    struct Node {
        Kind kind;
        std::string name;
        std::vector<Formula> children;
    };

    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

// Fully parenthesised core-form rendering, re-parseable.
std::string to_string(const Formula& f);

} // namespace mvplan
