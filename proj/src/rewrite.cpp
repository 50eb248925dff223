#include "coinv/rewrite.hpp"

#include "coinv/errors.hpp"

namespace coinv {

YPoly y_move(const YMonomial& y, Subset S, int n, int r) {
    check_ground(n);
    if (y.exponent(S) < r) throw std::domain_error("monomial not divisible by the moved power");
    YMonomial base = y.divide_var(S, r);
    YPoly out;
    for (Subset T : subsets_of_size(n, S.size())) {
        if (T == S) continue;
        YMonomial cand = base.times_var(T, r);
        if (is_multichain(cand)) out.add(cand, -1);
    }
    return out;
}

XPoly x_move(const XMonomial& m, Subset S, int n, int r) {
    check_ground(n);
    XMonomial base = m.divide_set_power(S, r);
    XPoly out;
    for (Subset T : subsets_of_size(n, S.size())) {
        if (T == S) continue;
        out.add(base.times_set_power(T, r), -1);
    }
    return out;
}

std::optional<Subset> designated_move(const YMonomial& y, int n, int k, int r, Variant v) {
    check_ground(n);
    check_multichain(y);
    (void)v;
    int big = n - k + 1;
    const auto& fs = y.factors;
    std::optional<Subset> best;
    auto offer = [&](Subset s) {
        if (!best || compare_yvars(s, *best) > 0) best = s;
    };
    // initial-segment power y_[t]^r
    for (const auto& [s, e] : fs)
        if (s == Subset::prefix(s.size()) && s.size() >= big && e >= r) offer(s);
    // gap pattern y_S^r y_T with min(T\S) > max(S): move on S
    // prefix-completion pattern y_S y_T^r with T = S u [l]: move on T
    for (size_t ti = 0; ti < fs.size(); ++ti)
        for (size_t si = ti + 1; si < fs.size(); ++si) {
            Subset S = fs[si].first, T = fs[ti].first;
            if (fs[si].second >= r && S.size() >= big && T.minus(S).min() > S.max()) offer(S);
            if (fs[ti].second >= r && T.size() >= big &&
                T == S.unite(Subset::prefix(T.minus(S).max())))
                offer(T);
        }
    // sandwich pattern y_S1 y_S2^r y_S3 with max(S2\S1) < min(S3\S2): move on S2
    for (size_t i3 = 0; i3 < fs.size(); ++i3)
        for (size_t i2 = i3 + 1; i2 < fs.size(); ++i2)
            for (size_t i1 = i2 + 1; i1 < fs.size(); ++i1) {
                Subset S1 = fs[i1].first, S2 = fs[i2].first, S3 = fs[i3].first;
                if (fs[i2].second >= r && S2.size() >= big &&
                    S2.minus(S1).max() < S3.minus(S2).min())
                    offer(S2);
            }
    return best;
}

YReduction reduce_y(const YMonomial& y, int n, int k, int r, Variant v) {
    check_ground(n);
    check_multichain(y);
    Partition mu = mu_of_y(y);
    YReduction red;
    red.cls = classify_mu(mu, n, k, r, v);
    if (red.cls != Admissibility::admissible) return red;
    YPoly cur(y);
    while (!cur.is_zero()) {
        auto [lead, c] = cur.leading_term();
        if (is_standard_monomial(lead, n, k, r, v)) {
            red.normal_form.add(lead, c);
            cur.erase(lead);
            continue;
        }
        std::optional<Subset> S = designated_move(lead, n, k, r, v);
        if (!S)
            throw certification_error("non-standard admissible term admits no move");
        YPoly rep = y_move(lead, *S, n, r);
        for (const auto& [m2, c2] : rep.terms()) {
            (void)c2;
            if (compare_ymonomials(m2, lead) >= 0)
                throw certification_error("move did not decrease the monomial order");
            if (mu_of_y(m2) != mu)
                throw certification_error("move changed the size multiset");
        }
        red.steps.push_back({lead, c, *S, rep});
        cur.erase(lead);
        cur += c * rep;
    }
    return red;
}

XStratumReduction reduce_x_stratum(const XMonomial& m, int n, int k, int r, Variant v) {
    check_ground(n);
    if (m.n() != n) throw std::invalid_argument("ambient size mismatch");
    YMonomial y0 = multichain_preimage(m);
    Partition mu = mu_of_y(y0);
    XStratumReduction red;
    red.cls = classify_mu(mu, n, k, r, v);
    if (red.cls == Admissibility::non_admissible) return red;
    int big = n - k + 1;
    if (red.cls == Admissibility::semi_admissible) {
        // one move on the largest over-repeated large support
        std::optional<Subset> S;
        for (const auto& [s, e] : y0.factors)
            if (s.size() >= big && s.size() <= n - 1 && e >= r + 1) {
                S = s;
                break; // factors are sorted largest first
            }
        if (!S) throw certification_error("semi-admissible monomial without an over-repeated support");
        XPoly rep = x_move(m, *S, n, r);
        for (const auto& [m2, c2] : rep.terms()) {
            (void)c2;
            if (!dominates_strictly(mu_of_x(m2), mu))
                throw certification_error("semi-admissible move produced a non-dominating term");
        }
        red.steps.push_back({m, 1, *S, rep});
        red.higher_mu = rep;
        return red;
    }
    YPoly work;
    work.add(y0, 1);
    while (!work.is_zero()) {
        auto [ylead, c] = work.leading_term();
        work.erase(ylead);
        if (is_standard_monomial(ylead, n, k, r, v)) {
            red.same_mu.add(transfer_phi(ylead, n), c);
            continue;
        }
        std::optional<Subset> S = designated_move(ylead, n, k, r, v);
        if (!S)
            throw certification_error("non-standard admissible term admits no move");
        XMonomial xm = transfer_phi(ylead, n);
        XPoly rep = x_move(xm, *S, n, r);
        red.steps.push_back({xm, c, *S, rep});
        for (const auto& [m2, c2] : rep.terms()) {
            Partition mu2 = mu_of_x(m2);
            if (mu2 == mu) {
                YMonomial y2 = multichain_preimage(m2);
                if (compare_ymonomials(y2, ylead) >= 0)
                    throw certification_error("move did not decrease the monomial order");
                work.add(y2, c * c2);
            } else {
                if (!dominates_strictly(mu2, mu))
                    throw certification_error("move produced a non-dominating off-stratum term");
                red.higher_mu.add(m2, c * c2);
            }
        }
    }
    return red;
}

XPoly normal_form_x(const XMonomial& m, int n, int k, int r, Variant v) {
    long d = m.degree();
    long depth_bound = d * (d - 1) / 2 + 2; // dominance chains at fixed degree are shorter
    XPoly out;
    auto rec = [&](auto&& self, const XMonomial& mono, const Rational& coeff, long depth) -> void {
        if (depth > depth_bound)
            throw certification_error("stratified reduction exceeded the dominance-chain bound");
        XStratumReduction red = reduce_x_stratum(mono, n, k, r, v);
        out += coeff * red.same_mu;
        for (const auto& [m2, c2] : red.higher_mu.terms()) self(self, m2, coeff * c2, depth + 1);
    };
    rec(rec, m, 1, 0);
    return out;
}

} // namespace coinv
