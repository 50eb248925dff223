#include "coinv/gs.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "coinv/errors.hpp"
#include "coinv/ideal.hpp"

namespace coinv {

namespace {

std::vector<Subset> prefixes(const Word& g) {
    std::vector<Subset> out;
    Subset cur;
    for (const Letter& l : g.letters) {
        cur.add(l.value);
        out.push_back(cur);
    }
    return out;
}

} // namespace

YMonomial tilde_b(const Word& g) {
    g.validate();
    int len = g.length();
    if (len == 0) return YMonomial::one();
    std::vector<Subset> pref = prefixes(g);
    std::vector<int> desc = descent_set(g);
    std::vector<std::pair<Subset, int>> fs;
    for (int i = 1; i <= len; ++i) {
        int m;
        if (i < len) {
            bool is_desc = std::find(desc.begin(), desc.end(), i) != desc.end();
            m = g.letters[i - 1].color - g.letters[i].color + (is_desc ? g.r : 0);
        } else {
            m = g.letters[len - 1].color;
        }
        if (m > 0) fs.push_back({pref[i - 1], m});
    }
    return YMonomial::from_factors(std::move(fs));
}

XMonomial b_word(const Word& g) {
    g.validate();
    int len = g.length();
    std::vector<int> desc = descent_set(g);
    XMonomial m = XMonomial::one(g.n);
    for (int i = 1; i <= len; ++i) {
        int d = 0;
        for (int j : desc)
            if (j >= i) ++d;
        m.exps[g.letters[i - 1].value - 1] = g.r * d + g.letters[i - 1].color;
    }
    return m;
}

YMonomial tilde_b_gd(const Word& g, const std::vector<int>& d) {
    g.validate();
    if (int(d.size()) != g.length()) throw std::invalid_argument("d must have one entry per letter");
    std::vector<Subset> pref = prefixes(g);
    YMonomial y = tilde_b(g);
    for (size_t i = 0; i < d.size(); ++i) {
        if (d[i] < 0) throw std::invalid_argument("negative entry in d");
        if (d[i] > 0) y = y.times_var(pref[i], g.r * d[i]);
    }
    return y;
}

GD gd_from_multichain(const YMonomial& y, int n, int r) {
    check_ground(n);
    if (r < 1) throw std::invalid_argument("need r >= 1");
    check_multichain(y);
    // ascending chain with exponents
    std::vector<std::pair<Subset, int>> chain(y.factors.rbegin(), y.factors.rend());
    for (const auto& [s, e] : chain)
        if (s.max() > n) throw std::invalid_argument("subset exceeds ambient size");
    int j = int(chain.size());
    bool topfull = j > 0 && chain[j - 1].first == Subset::prefix(n);
    // group colors by backward induction: the exponent of a chain set is
    // congruent mod r to the color drop across its boundary
    std::vector<int> col(j + 1, 0); // col[m] = color of group m+1 elements... col[j] = last group
    if (topfull) {
        col[j - 1] = chain[j - 1].second % r;
        for (int m = j - 2; m >= 0; --m) col[m] = (col[m + 1] + chain[m].second) % r;
    } else {
        col[j] = 0;
        for (int m = j - 1; m >= 0; --m) col[m] = (col[m + 1] + chain[m].second) % r;
    }
    Word g;
    g.n = n;
    g.r = r;
    Subset prev;
    for (int m = 0; m < j; ++m) {
        for (int v : chain[m].first.minus(prev).elements()) g.letters.push_back({v, col[m]});
        prev = chain[m].first;
    }
    if (!topfull)
        for (int v : Subset::prefix(n).minus(prev).elements()) g.letters.push_back({v, col[j]});
    g.validate();
    YMonomial base = tilde_b(g);
    std::vector<int> d(n, 0);
    std::vector<Subset> pref = prefixes(g);
    for (int m = 0; m < j; ++m) {
        int b = base.exponent(chain[m].first);
        int a = chain[m].second;
        if (a < b || (a - b) % r != 0)
            throw certification_error("chain exponents not reachable from the reconstructed word");
        int pos = chain[m].first.size(); // chain sets are prefixes of g
        if (!(pref[pos - 1] == chain[m].first))
            throw certification_error("reconstructed word does not trace the chain");
        d[pos - 1] = (a - b) / r;
    }
    GD out{g, d};
    if (!(tilde_b_gd(out.g, out.d) == y))
        throw certification_error("round trip through (g, d) failed");
    return out;
}

namespace {

// set-partition monomial for a possibly partial word
YMonomial tilde_b_wl(const Word& g, const Partition& lambda) {
    YMonomial y = tilde_b(g);
    std::vector<Subset> pref = prefixes(g);
    for (int part : lambda) y = y.times_var(pref[part - 1], g.r);
    return y;
}

XMonomial b_wl(const Word& g, const Partition& lambda) {
    XMonomial m = b_word(g);
    Partition conj = conjugate(lambda);
    for (size_t jpos = 0; jpos < conj.size(); ++jpos)
        m.exps[g.letters[jpos].value - 1] += g.r * conj[jpos];
    return m;
}

} // namespace

YMonomial tilde_b_osp(const Osp& p, int k) {
    check_osp(p, k);
    return tilde_b_wl(p.word, p.lambda);
}

XMonomial b_osp(const Osp& p, int k) {
    check_osp(p, k);
    return b_wl(p.word, p.lambda);
}

YMonomial tilde_b_face(const Face& f, int k) {
    check_face(f, k);
    YMonomial base = tilde_b_wl(f.word, f.lambda);
    if (f.zero.empty()) return base;
    int deficit = k * f.word.r - base.degree();
    if (deficit < 0) throw std::invalid_argument("face monomial exceeds the top degree");
    std::vector<std::pair<Subset, int>> fs;
    for (const auto& [s, e] : base.factors) fs.push_back({s.unite(f.zero), e});
    if (deficit > 0) fs.push_back({f.zero, deficit});
    return YMonomial::from_factors(std::move(fs));
}

XMonomial b_face(const Face& f, int k) {
    check_face(f, k);
    XMonomial m = b_wl(f.word, f.lambda);
    for (int i : f.zero.elements()) m.exps[i - 1] = k * f.word.r;
    return m;
}

int first_forbidden_condition(const YMonomial& y, int n, int k, int r, Variant v) {
    check_ground(n);
    if (!is_multichain(y)) return 1;
    int big = n - k + 1; // sizes from here up are constrained
    const auto& fs = y.factors; // descending chain: fs[0] is the largest support
    for (const auto& [s, e] : fs)
        if (s == Subset::prefix(s.size()) && s.size() >= big && e >= r) return 2;
    for (const auto& [s, e] : fs)
        if (s.size() >= big && e >= r + 1) return 3;
    for (size_t ti = 0; ti < fs.size(); ++ti)
        for (size_t si = ti + 1; si < fs.size(); ++si) {
            Subset S = fs[si].first, T = fs[ti].first;
            if (fs[si].second >= r && S.size() >= big && T.minus(S).min() > S.max()) return 4;
        }
    for (size_t ti = 0; ti < fs.size(); ++ti)
        for (size_t si = ti + 1; si < fs.size(); ++si) {
            Subset S = fs[si].first, T = fs[ti].first;
            if (fs[ti].second >= r && T.size() >= big &&
                T == S.unite(Subset::prefix(T.minus(S).max())))
                return 5;
        }
    for (size_t i3 = 0; i3 < fs.size(); ++i3)
        for (size_t i2 = i3 + 1; i2 < fs.size(); ++i2)
            for (size_t i1 = i2 + 1; i1 < fs.size(); ++i1) {
                Subset S1 = fs[i1].first, S2 = fs[i2].first, S3 = fs[i3].first;
                if (fs[i2].second >= r && S2.size() >= big &&
                    S2.minus(S1).max() < S3.minus(S2).min())
                    return 6;
            }
    if (y.degree() >= chain_bound(k, r, v)) return 7;
    return 0;
}

bool is_standard_monomial(const YMonomial& y, int n, int k, int r, Variant v) {
    return first_forbidden_condition(y, n, k, r, v) == 0;
}

std::vector<YMonomial> enumerate_basis(int n, int k, int r, Variant v) {
    check_ground(n);
    if (k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
    using MonoSet = std::set<YMonomial, YMonoGreater>;

    // route 1: indexed combinatorial objects
    MonoSet by_object;
    long objects = 0;
    if (v == Variant::S) {
        for_each_osp(n, k, r, [&](const Osp& p) {
            ++objects;
            by_object.insert(tilde_b_osp(p, k));
        });
    } else {
        for_each_face(n, k, r, [&](const Face& f) {
            ++objects;
            by_object.insert(tilde_b_face(f, k));
        });
    }
    if (long(by_object.size()) != objects)
        throw certification_error("indexed monomials are not distinct");

    // route 2: (g, d) monomials below the degree bound
    int bound = chain_bound(k, r, v);
    MonoSet by_gd;
    for_each_word(n, r, [&](const Word& g) {
        YMonomial base = tilde_b(g);
        if (base.degree() >= bound) return;
        int budget = (bound - 1 - base.degree()) / r;
        std::vector<int> d(n, 0);
        auto rec = [&](auto&& self, int pos, int rem) -> void {
            if (pos == n - k) {
                by_gd.insert(tilde_b_gd(g, d));
                return;
            }
            for (int val = 0; val <= rem; ++val) {
                d[pos] = val;
                self(self, pos + 1, rem - val);
            }
            d[pos] = 0;
        };
        rec(rec, 0, budget);
    });

    // route 3: divisor test over all multichains below the bound
    MonoSet by_divisors;
    for (int deg = 0; deg < bound; ++deg)
        for_each_multichain_of_degree(n, deg, [&](const YMonomial& y) {
            if (is_standard_monomial(y, n, k, r, v)) by_divisors.insert(y);
        });

    auto mismatch = [&](const char* a, const char* b) {
        std::ostringstream os;
        os << "standard-monomial routes disagree (" << a << " vs " << b << ") at n=" << n
           << " k=" << k << " r=" << r;
        throw certification_error(os.str());
    };
    if (by_object != by_gd) mismatch("objects", "(g,d)");
    if (by_object != by_divisors) mismatch("objects", "divisor test");

    return {by_object.begin(), by_object.end()};
}

YPoly tilde_b_prime(const GD& gd, int n, int k, int r) {
    check_ground(n);
    gd.g.validate();
    if (gd.g.length() != n) throw std::invalid_argument("needs a word on the full ground set");
    if (int(gd.d.size()) != n) throw std::invalid_argument("d must have one entry per letter");
    std::vector<int> trunc(gd.d);
    for (int i = n - k; i < n; ++i) trunc[i] = 0;
    YPoly out(tilde_b_gd(gd.g, trunc));
    for (int i = n - k + 1; i <= n; ++i) {
        if (gd.d[i - 1] == 0) continue;
        YPoly th = theta(n, r, i);
        for (int rep = 0; rep < gd.d[i - 1]; ++rep) {
            YPoly next;
            for (const auto& [m, c] : out.terms())
                for (const auto& [tm, tc] : th.terms()) {
                    YMonomial prod = m.times(tm);
                    if (is_multichain(prod)) next.add(prod, c * tc);
                }
            out = next;
        }
    }
    return out;
}

} // namespace coinv
