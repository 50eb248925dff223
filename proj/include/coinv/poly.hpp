#pragma once
#include <map>

#include "coinv/monomials.hpp"
#include "coinv/rational.hpp"

namespace coinv {

// Sparse polynomial with exact rational coefficients.  Terms are kept in a
// map ordered with the largest monomial first, so begin() is the leading term.
template <class Mono, class Greater>
class Polynomial {
public:
    using Terms = std::map<Mono, Rational, Greater>;

    Polynomial() = default;
    explicit Polynomial(const Mono& m, Rational c = 1) {
        if (c != 0) terms_[m] = std::move(c);
    }

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }

    void add(const Mono& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        for (const auto& [m, c] : o.terms_) add(m, -c);
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    Polynomial& scale(const Rational& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, v] : terms_) v *= c;
        return *this;
    }
    friend Polynomial operator*(const Rational& c, Polynomial p) { return p.scale(c); }

    Rational coefficient(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    const std::pair<const Mono, Rational>& leading_term() const {
        if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
        return *terms_.begin();
    }

    void erase(const Mono& m) { terms_.erase(m); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        auto it = a.terms_.begin(), jt = b.terms_.begin();
        for (; it != a.terms_.end(); ++it, ++jt)
            if (!(it->first == jt->first) || it->second != jt->second) return false;
        return true;
    }

private:
    Terms terms_;
};

using YPoly = Polynomial<YMonomial, YMonoGreater>;
using XPoly = Polynomial<XMonomial, XMonoGreater>;

// pointwise product with a monomial
inline YPoly times_mono(const YPoly& p, const YMonomial& m) {
    YPoly out;
    for (const auto& [mono, c] : p.terms()) out.add(mono.times(m), c);
    return out;
}
inline XPoly times_mono(const XPoly& p, const XMonomial& m) {
    XPoly out;
    for (const auto& [mono, c] : p.terms()) out.add(mono.times(m), c);
    return out;
}

} // namespace coinv
