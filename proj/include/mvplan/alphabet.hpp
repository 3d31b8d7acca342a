#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mvplan {

using PropId = std::uint32_t;

// Ordered set of atomic proposition names. Ids are dense and follow
// insertion order.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(const std::vector<std::string>& names);

    PropId intern(std::string_view name);
    std::optional<PropId> find(std::string_view name) const;
    PropId at(std::string_view name) const;

    const std::string& name(PropId id) const { return names_.at(id); }
    const std::vector<std::string>& names() const { return names_; }
    std::size_t size() const { return names_.size(); }

    bool operator==(const Alphabet& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, PropId> index_;
};

// A letter of 2^AP: the set of propositions that hold at one position.
class Valuation {
public:
    Valuation() = default;
    explicit Valuation(std::size_t size) : bits_(size, false) {}

    bool contains(PropId p) const { return p < bits_.size() && bits_[p]; }
    void insert(PropId p);
    void erase(PropId p) { if (p < bits_.size()) bits_[p] = false; }
    std::vector<PropId> members() const;
    bool empty() const;

    bool operator==(const Valuation& other) const;

private:
    std::vector<bool> bits_;
};

// Conjunction of literals. A guard matches a valuation when every positive
// literal is present and no negative one is. The empty guard is true.
struct Guard {
    std::vector<PropId> pos;
    std::vector<PropId> neg;

    bool is_true() const { return pos.empty() && neg.empty(); }
    bool matches(const Valuation& v) const;
    bool consistent() const;
    // Sorts and deduplicates both literal lists.
    void normalize();

    auto operator<=>(const Guard&) const = default;
};

// Literal-set union; nullopt when the result is contradictory.
std::optional<Guard> conjoin(const Guard& a, const Guard& b);

// Disjoint cubes covering exactly the valuations matched by `cube` but not by
// `removed`.
std::vector<Guard> subtract(const Guard& cube, const Guard& removed);

std::string to_string(const Guard& g, const Alphabet& alphabet);

} // namespace mvplan
