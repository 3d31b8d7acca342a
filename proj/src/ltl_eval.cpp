#include "mvplan/ltl_eval.hpp"

#include "mvplan/error.hpp"

namespace mvplan {

namespace {

class LassoEvaluator {
public:
    LassoEvaluator(const LassoWord& word, const Alphabet& alphabet)
        : word_(word), alphabet_(alphabet), loop_(word.prefix.size()),
          n_(word.prefix.size() + word.cycle.size()) {}

    std::vector<bool> eval(const Formula& f) const {
        using K = Formula::Kind;
        switch (f.kind()) {
        case K::True:
            return std::vector<bool>(n_, true);
        case K::Atom: {
            std::vector<bool> v(n_, false);
            auto p = alphabet_.find(f.name());
            if (p) {
                for (std::size_t i = 0; i < n_; ++i) {
                    v[i] = letter(i).contains(*p);
                }
            }
            return v;
        }
        case K::Not: {
            auto v = eval(f.child());
            v.flip();
            return v;
        }
        case K::And: {
            auto a = eval(f.left());
            auto b = eval(f.right());
            for (std::size_t i = 0; i < n_; ++i) {
                a[i] = a[i] && b[i];
            }
            return a;
        }
        case K::Next: {
            auto a = eval(f.child());
            std::vector<bool> v(n_);
            for (std::size_t i = 0; i < n_; ++i) {
                v[i] = a[succ(i)];
            }
            return v;
        }
        case K::Until: {
            auto a = eval(f.left());
            auto b = eval(f.right());
            std::vector<bool> v(n_, false);
            bool changed = true;
            while (changed) {
                changed = false;
                for (std::size_t k = n_; k-- > 0;) {
                    bool next = b[k] || (a[k] && v[succ(k)]);
                    if (next && !v[k]) {
                        v[k] = true;
                        changed = true;
                    }
                }
            }
            return v;
        }
        }
        return {};
    }

private:
    const Valuation& letter(std::size_t i) const {
        return i < loop_ ? word_.prefix[i] : word_.cycle[i - loop_];
    }
    std::size_t succ(std::size_t i) const { return i + 1 < n_ ? i + 1 : loop_; }

    const LassoWord& word_;
    const Alphabet& alphabet_;
    std::size_t loop_;
    std::size_t n_;
};

} // namespace

bool ltl_eval_lasso(const Formula& f, const LassoWord& word, const Alphabet& alphabet) {
    if (word.cycle.empty()) {
        throw ValidationError("lasso word has an empty cycle");
    }
    return LassoEvaluator(word, alphabet).eval(f)[0];
}

} // namespace mvplan
