#include "mvplan/alphabet.hpp"

#include "mvplan/error.hpp"

#include <algorithm>

namespace mvplan {

Alphabet::Alphabet(const std::vector<std::string>& names) {
    for (const auto& n : names) {
        intern(n);
    }
}

PropId Alphabet::intern(std::string_view name) {
    std::string key(name);
    auto it = index_.find(key);
    if (it != index_.end()) {
        return it->second;
    }
    auto id = static_cast<PropId>(names_.size());
    names_.push_back(key);
    index_.emplace(std::move(key), id);
    return id;
}

std::optional<PropId> Alphabet::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

PropId Alphabet::at(std::string_view name) const {
    auto id = find(name);
    if (!id) {
        throw ValidationError("undeclared proposition '" + std::string(name) + "'");
    }
    return *id;
}

void Valuation::insert(PropId p) {
    if (p >= bits_.size()) {
        bits_.resize(p + 1, false);
    }
    bits_[p] = true;
}

std::vector<PropId> Valuation::members() const {
    std::vector<PropId> out;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i]) {
            out.push_back(static_cast<PropId>(i));
        }
    }
    return out;
}

bool Valuation::empty() const {
    return std::none_of(bits_.begin(), bits_.end(), [](bool b) { return b; });
}

bool Valuation::operator==(const Valuation& other) const {
    return members() == other.members();
}

bool Guard::matches(const Valuation& v) const {
    for (auto p : pos) {
        if (!v.contains(p)) {
            return false;
        }
    }
    for (auto p : neg) {
        if (v.contains(p)) {
            return false;
        }
    }
    return true;
}

bool Guard::consistent() const {
    // both lists are sorted after normalize()
    auto a = pos.begin();
    auto b = neg.begin();
    while (a != pos.end() && b != neg.end()) {
        if (*a == *b) {
            return false;
        }
        if (*a < *b) {
            ++a;
        } else {
            ++b;
        }
    }
    return true;
}

void Guard::normalize() {
    std::sort(pos.begin(), pos.end());
    pos.erase(std::unique(pos.begin(), pos.end()), pos.end());
    std::sort(neg.begin(), neg.end());
    neg.erase(std::unique(neg.begin(), neg.end()), neg.end());
}

std::optional<Guard> conjoin(const Guard& a, const Guard& b) {
    Guard g;
    std::set_union(a.pos.begin(), a.pos.end(), b.pos.begin(), b.pos.end(),
                   std::back_inserter(g.pos));
    std::set_union(a.neg.begin(), a.neg.end(), b.neg.begin(), b.neg.end(),
                   std::back_inserter(g.neg));
    if (!g.consistent()) {
        return std::nullopt;
    }
    return g;
}

std::vector<Guard> subtract(const Guard& cube, const Guard& removed) {
    if (!conjoin(cube, removed)) {
        return {cube};
    }
    // Literals of `removed` that `cube` does not already fix.
    std::vector<std::pair<PropId, bool>> open;
    for (auto p : removed.pos) {
        if (!std::binary_search(cube.pos.begin(), cube.pos.end(), p)) {
            open.emplace_back(p, true);
        }
    }
    for (auto p : removed.neg) {
        if (!std::binary_search(cube.neg.begin(), cube.neg.end(), p)) {
            open.emplace_back(p, false);
        }
    }
    std::vector<Guard> out;
    Guard prefix = cube;
    for (auto [p, positive] : open) {
        Guard piece = prefix;
        (positive ? piece.neg : piece.pos).push_back(p);
        piece.normalize();
        out.push_back(std::move(piece));
        (positive ? prefix.pos : prefix.neg).push_back(p);
        prefix.normalize();
    }
    return out;
}

std::string to_string(const Guard& g, const Alphabet& alphabet) {
    if (g.is_true()) {
        return "true";
    }
    std::vector<std::pair<PropId, bool>> lits;
    for (auto p : g.pos) {
        lits.emplace_back(p, true);
    }
    for (auto p : g.neg) {
        lits.emplace_back(p, false);
    }
    std::sort(lits.begin(), lits.end());
    std::string out;
    for (auto [p, positive] : lits) {
        if (!out.empty()) {
            out += ' ';
        }
        if (!positive) {
            out += '!';
        }
        out += alphabet.name(p);
    }
    return out;
}

} // namespace mvplan
