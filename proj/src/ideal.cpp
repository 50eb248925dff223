#include "coinv/ideal.hpp"

#include <stdexcept>

namespace coinv {

YPoly theta(int n, int r, int m) {
    check_ground(n);
    if (m < 1 || m > n) throw std::invalid_argument("theta index out of range");
    if (r < 1) throw std::invalid_argument("need r >= 1");
    YPoly p;
    for (Subset s : subsets_of_size(n, m)) p.add(YMonomial::var(s, r), 1);
    return p;
}

XPoly elementary_e(int n, int r, int d) {
    check_ground(n);
    if (d < 0 || d > n) throw std::invalid_argument("elementary index out of range");
    XPoly p;
    for (Subset s : subsets_of_size(n, d)) p.add(XMonomial::one(n).times_set_power(s, r), 1);
    return p;
}

XIdealGens x_ideal_generators(int n, int k, int r, Variant v) {
    check_ground(n);
    if (k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
    XIdealGens g;
    g.power_exponent = chain_bound(k, r, v);
    for (int d = n - k + 1; d <= n; ++d) g.elementary.push_back(elementary_e(n, r, d));
    return g;
}

YIdealGens y_ideal_generators(int n, int k, int r, Variant v) {
    check_ground(n);
    if (k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
    YIdealGens g;
    g.n = n;
    g.k = k;
    g.r = r;
    g.variant = v;
    for (std::uint32_t a = 1; a < (1u << n); ++a)
        for (std::uint32_t b = a + 1; b < (1u << n); ++b) {
            Subset A(a), B(b);
            if (!A.comparable(B)) g.incomparable_pairs.push_back({A, B});
        }
    for (int m = n - k + 1; m <= n; ++m) g.thetas.push_back(theta(n, r, m));
    g.multichain_degree = chain_bound(k, r, v);
    return g;
}

namespace {

void multichain_rec(std::uint32_t allowed, bool allow_full, int rem,
                    std::vector<std::pair<Subset, int>>& cur,
                    const std::function<void(const YMonomial&)>& fn) {
    if (rem == 0) {
        fn(YMonomial::from_factors(cur));
        return;
    }
    for (std::uint32_t sub = allowed; sub; sub = (sub - 1) & allowed) {
        if (!allow_full && sub == allowed) continue;
        for (int e = 1; e <= rem; ++e) {
            cur.push_back({Subset(sub), e});
            multichain_rec(sub, false, rem - e, cur, fn);
            cur.pop_back();
        }
    }
}

void multichain_tilde_rec(std::uint32_t allowed, bool allow_full, long rem,
                          std::vector<std::pair<Subset, int>>& cur,
                          const std::function<void(const YMonomial&)>& fn) {
    if (rem == 0) {
        fn(YMonomial::from_factors(cur));
        return;
    }
    for (std::uint32_t sub = allowed; sub; sub = (sub - 1) & allowed) {
        if (!allow_full && sub == allowed) continue;
        int sz = std::popcount(sub);
        for (int e = 1; long(e) * sz <= rem; ++e) {
            cur.push_back({Subset(sub), e});
            multichain_tilde_rec(sub, false, rem - long(e) * sz, cur, fn);
            cur.pop_back();
        }
    }
}

} // namespace

void for_each_multichain_of_degree(int n, int degree,
                                   const std::function<void(const YMonomial&)>& fn) {
    check_ground(n);
    if (degree < 0) return;
    std::vector<std::pair<Subset, int>> cur;
    multichain_rec((1u << n) - 1u, true, degree, cur, fn);
}

void for_each_multichain_of_tilde_degree(int n, long tdeg,
                                         const std::function<void(const YMonomial&)>& fn) {
    check_ground(n);
    if (tdeg < 0) return;
    std::vector<std::pair<Subset, int>> cur;
    multichain_tilde_rec((1u << n) - 1u, true, tdeg, cur, fn);
}

void YIdealGens::for_each_multichain_generator(
    const std::function<void(const YMonomial&)>& fn) const {
    for_each_multichain_of_degree(n, multichain_degree, fn);
}

} // namespace coinv
