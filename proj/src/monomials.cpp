#include "coinv/monomials.hpp"

#include <algorithm>
#include <stdexcept>

#include "coinv/errors.hpp"

namespace coinv {

std::vector<Subset> subsets_of_size(int n, int m) {
    check_ground(n);
    std::vector<Subset> out;
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits)
        if (std::popcount(bits) == m) out.emplace_back(bits);
    std::sort(out.begin(), out.end(), YVarGreater{});
    return out;
}

YMonomial YMonomial::var(Subset S, int e) {
    if (S.empty()) throw std::invalid_argument("variables are indexed by nonempty subsets");
    if (e < 0) throw std::invalid_argument("negative exponent");
    YMonomial y;
    if (e > 0) y.factors.push_back({S, e});
    return y;
}

YMonomial YMonomial::from_factors(std::vector<std::pair<Subset, int>> fs) {
    std::sort(fs.begin(), fs.end(),
              [](const auto& a, const auto& b) { return compare_yvars(a.first, b.first) > 0; });
    YMonomial y;
    for (const auto& [s, e] : fs) {
        if (s.empty()) throw std::invalid_argument("variables are indexed by nonempty subsets");
        if (e < 0) throw std::invalid_argument("negative exponent");
        if (e == 0) continue;
        if (!y.factors.empty() && y.factors.back().first == s)
            y.factors.back().second += e;
        else
            y.factors.push_back({s, e});
    }
    return y;
}

int YMonomial::degree() const {
    int d = 0;
    for (const auto& [s, e] : factors) d += e;
    return d;
}

long YMonomial::tilde_degree() const {
    long d = 0;
    for (const auto& [s, e] : factors) d += long(s.size()) * e;
    return d;
}

int YMonomial::exponent(Subset S) const {
    for (const auto& [s, e] : factors)
        if (s == S) return e;
    return 0;
}

YMonomial YMonomial::times(const YMonomial& o) const {
    std::vector<std::pair<Subset, int>> fs = factors;
    fs.insert(fs.end(), o.factors.begin(), o.factors.end());
    return from_factors(std::move(fs));
}

YMonomial YMonomial::times_var(Subset S, int e) const { return times(var(S, e)); }

YMonomial YMonomial::divide_var(Subset S, int e) const {
    YMonomial out = *this;
    for (auto it = out.factors.begin(); it != out.factors.end(); ++it) {
        if (it->first == S) {
            if (it->second < e) throw std::domain_error("monomial not divisible");
            it->second -= e;
            if (it->second == 0) out.factors.erase(it);
            return out;
        }
    }
    if (e == 0) return out;
    throw std::domain_error("monomial not divisible");
}

bool YMonomial::divisible_by(const YMonomial& o) const {
    for (const auto& [s, e] : o.factors)
        if (exponent(s) < e) return false;
    return true;
}

int compare_ymonomials(const YMonomial& a, const YMonomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db ? 1 : -1;
    // factors are sorted largest variable first; walk both lists
    size_t i = 0, j = 0;
    while (i < a.factors.size() && j < b.factors.size()) {
        int cv = compare_yvars(a.factors[i].first, b.factors[j].first);
        if (cv > 0) return 1;  // a has a positive exponent on a larger variable
        if (cv < 0) return -1;
        if (a.factors[i].second != b.factors[j].second)
            return a.factors[i].second > b.factors[j].second ? 1 : -1;
        ++i, ++j;
    }
    if (i < a.factors.size()) return 1;
    if (j < b.factors.size()) return -1;
    return 0;
}

int XMonomial::degree() const {
    int d = 0;
    for (int e : exps) d += e;
    return d;
}

XMonomial XMonomial::times(const XMonomial& o) const {
    if (exps.size() != o.exps.size()) throw std::invalid_argument("mixed ambient sizes");
    XMonomial out = *this;
    for (size_t i = 0; i < exps.size(); ++i) out.exps[i] += o.exps[i];
    return out;
}

XMonomial XMonomial::divide_set_power(Subset S, int e) const {
    XMonomial out = *this;
    for (int i : S.elements()) {
        if (i > n() || out.exps[i - 1] < e) throw std::domain_error("monomial not divisible");
        out.exps[i - 1] -= e;
    }
    return out;
}

XMonomial XMonomial::times_set_power(Subset S, int e) const {
    XMonomial out = *this;
    for (int i : S.elements()) {
        if (i > n()) throw std::invalid_argument("subset exceeds ambient size");
        out.exps[i - 1] += e;
    }
    return out;
}

int compare_xmonomials(const XMonomial& a, const XMonomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db ? 1 : -1;
    if (a.exps.size() != b.exps.size()) throw std::invalid_argument("mixed ambient sizes");
    for (size_t i = 0; i < a.exps.size(); ++i)
        if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i] ? 1 : -1;
    return 0;
}

bool is_multichain(const YMonomial& y) {
    // sorted largest-first, so nested means each factor contains the next
    for (size_t i = 0; i + 1 < y.factors.size(); ++i)
        if (!y.factors[i + 1].first.subset_of(y.factors[i].first)) return false;
    return true;
}

void check_multichain(const YMonomial& y) {
    if (!is_multichain(y)) throw not_multichain_error("monomial is not a multichain");
}

XMonomial transfer_phi(const YMonomial& y, int n) {
    check_ground(n);
    XMonomial m = XMonomial::one(n);
    for (const auto& [s, e] : y.factors) {
        if (s.max() > n) throw std::invalid_argument("subset exceeds ambient size");
        m = m.times_set_power(s, e);
    }
    return m;
}

YMonomial multichain_preimage(const XMonomial& m) {
    int top = 0;
    for (int e : m.exps) top = std::max(top, e);
    std::vector<std::pair<Subset, int>> fs;
    for (int j = 1; j <= top; ++j) {
        Subset s;
        for (int i = 0; i < m.n(); ++i)
            if (m.exps[i] >= j) s.add(i + 1);
        fs.push_back({s, 1});
    }
    return YMonomial::from_factors(std::move(fs));
}

std::optional<YMonomial> straighten(Subset A, Subset B) {
    if (A.comparable(B)) return std::nullopt;
    YMonomial out = YMonomial::var(A.unite(B));
    Subset meet = A.intersect(B);
    if (!meet.empty()) out = out.times_var(meet);
    return out;
}

YMonomial straighten_to_multichain(const YMonomial& y, int n) {
    return multichain_preimage(transfer_phi(y, n));
}

Partition mu_of_y(const YMonomial& y) {
    Partition mu;
    for (const auto& [s, e] : y.factors) mu.insert(mu.end(), e, s.size());
    std::sort(mu.begin(), mu.end(), std::greater<int>());
    return mu;
}

Partition mu_of_x(const XMonomial& m) { return mu_of_y(multichain_preimage(m)); }

int max_multichain_divisor_length(const YMonomial& y) {
    // longest weighted chain in the containment order on the support
    int nf = int(y.factors.size());
    std::vector<int> best(nf, 0);
    int out = 0;
    // factors are sorted largest variable first, so supersets come earlier
    for (int i = 0; i < nf; ++i) {
        best[i] = y.factors[i].second;
        int extend = 0;
        for (int j = 0; j < i; ++j)
            if (y.factors[i].first.subset_of(y.factors[j].first)) extend = std::max(extend, best[j]);
        best[i] += extend;
        out = std::max(out, best[i]);
    }
    return out;
}

Admissibility classify_mu(const Partition& mu, int n, int k, int r, Variant v) {
    check_partition(mu);
    check_ground(n);
    if (!mu.empty() && mu[0] > n) throw std::invalid_argument("mu has a part exceeding n");
    int bound = chain_bound(k, r, v);
    auto count = [&](int size) { return int(std::count(mu.begin(), mu.end(), size)); };
    if (int(mu.size()) >= bound || count(n) >= r) return Admissibility::non_admissible;
    for (int i = n - k + 1; i <= n - 1; ++i)
        if (count(i) >= r + 1) return Admissibility::semi_admissible;
    return Admissibility::admissible;
}

} // namespace coinv
