#include "coinv/oracle.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "coinv/errors.hpp"
#include "coinv/linalg.hpp"
#include "coinv/rewrite.hpp"
#include "coinv/words.hpp"

namespace coinv {

namespace {

void check_params(int n, int k, int r) {
    check_ground(n);
    if (k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n");
    if (r < 1) throw std::invalid_argument("need r >= 1");
}

[[noreturn]] void slice_overflow(long degree) {
    std::ostringstream os;
    os << "graded slice at degree " << degree << " exceeds the configured cap";
    throw resource_limit_error(os.str());
}

long long binom(long long a, long long b) {
    if (b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    long long out = 1;
    for (long long i = 1; i <= b; ++i) out = out * (a - b + i) / i;
    return out;
}

// ---- y side: slices of the Stanley-Reisner quotient ----

struct YSlice {
    long space_total = 0; // chain monomials in the slice
    long marked = 0;      // degree >= chain bound, ideal members outright
    std::vector<YMonomial> cols;
    std::map<YMonomial, int, YMonoGreater> index;
};

void for_each_chain_graded(int n, YGrading grading, long degree,
                           const std::function<void(const YMonomial&)>& fn) {
    if (grading == YGrading::Natural)
        for_each_multichain_of_degree(n, (int)degree, fn);
    else
        for_each_multichain_of_tilde_degree(n, degree, fn);
}

YSlice build_y_slice(int n, int k, int r, Variant variant, long degree, YGrading grading,
                     const Caps& caps) {
    YSlice s;
    int bound = chain_bound(k, r, variant);
    for_each_chain_graded(n, grading, degree, [&](const YMonomial& m) {
        if (++s.space_total > caps.max_slice) slice_overflow(degree);
        if (m.degree() >= bound) {
            ++s.marked;
            return;
        }
        s.index.emplace(m, (int)s.cols.size());
        s.cols.push_back(m);
    });
    return s;
}

// Rows spanning the image of the ideal inside the slice: for each theta
// generator, multiples by every chain monomial of the complementary degree.
// Multiples of the chain generators are exactly the marked columns, so rows
// are restricted to the unmarked ones.
SparseEliminator y_ideal_rows(const YSlice& s, int n, int k, int r, long degree, YGrading grading,
                              const Caps& caps) {
    SparseEliminator elim;
    for (int m = n - k + 1; m <= n; ++m) {
        long gdeg = grading == YGrading::Natural ? r : (long)r * m;
        long sub = degree - gdeg;
        if (sub < 0) continue;
        const auto sets = subsets_of_size(n, m);
        long count = 0;
        for_each_chain_graded(n, grading, sub, [&](const YMonomial& u) {
            if (++count > caps.max_slice) slice_overflow(degree);
            SparseRow row;
            for (Subset S : sets) {
                YMonomial prod = u.times_var(S, r);
                if (!is_multichain(prod)) continue;
                auto it = s.index.find(prod);
                if (it == s.index.end()) continue; // marked: already accounted for
                row.push_back({it->second, 1});
            }
            if (!row.empty()) elim.add_row(std::move(row));
        });
    }
    return elim;
}

// ---- x side ----

struct XSlice {
    long long space_total = 0; // all monomials of the degree
    long long marked = 0;      // some exponent >= the power-generator exponent
    std::vector<XMonomial> cols; // the rest
    std::map<std::vector<int>, int> index;
};

// monomials of the given degree with every exponent < limit
void for_each_bounded_monomial(int n, long degree, int limit,
                               const std::function<void(const XMonomial&)>& fn) {
    std::vector<int> exps(n, 0);
    std::function<void(int, long)> rec = [&](int pos, long rest) {
        if (pos == n - 1) {
            if (rest < limit) {
                exps[pos] = (int)rest;
                fn(XMonomial{exps});
                exps[pos] = 0;
            }
            return;
        }
        for (long v = 0; v < limit && v <= rest; ++v) {
            exps[pos] = (int)v;
            rec(pos + 1, rest - v);
        }
        exps[pos] = 0;
    };
    if (limit > 0) rec(0, degree);
}

XSlice build_x_slice(int n, int k, int r, Variant variant, long degree, const Caps& caps) {
    XSlice s;
    s.space_total = binom(degree + n - 1, n - 1);
    int e0 = chain_bound(k, r, variant);
    for_each_bounded_monomial(n, degree, e0, [&](const XMonomial& m) {
        if ((long)s.cols.size() + 1 > caps.max_slice) slice_overflow(degree);
        s.index.emplace(m.exps, (int)s.cols.size());
        s.cols.push_back(m);
    });
    s.marked = s.space_total - (long long)s.cols.size();
    return s;
}

// Multiples of the elementary generators e_d(x^r), d = n-k+1..n, by every
// monomial of the complementary degree.  Terms hitting a power-generator
// multiple (exponent >= e0) reduce against the marked columns and drop out;
// multiplier monomials with such an exponent contribute nothing at all.
SparseEliminator x_ideal_rows(const XSlice& s, int n, int k, int r, Variant variant, long degree,
                              const Caps& caps) {
    SparseEliminator elim;
    int e0 = chain_bound(k, r, variant);
    for (int d = n - k + 1; d <= n; ++d) {
        long sub = degree - (long)r * d;
        if (sub < 0) continue;
        const auto sets = subsets_of_size(n, d);
        long count = 0;
        for_each_bounded_monomial(n, sub, e0, [&](const XMonomial& u) {
            if (++count > caps.max_slice) slice_overflow(degree);
            SparseRow row;
            for (Subset T : sets) {
                XMonomial prod = u.times_set_power(T, r);
                auto it = s.index.find(prod.exps);
                if (it == s.index.end()) continue;
                row.push_back({it->second, 1});
            }
            if (!row.empty()) elim.add_row(std::move(row));
        });
    }
    return elim;
}

} // namespace

long ideal_slice_dimension(int n, int k, int r, Variant variant, Setting setting, long degree,
                           YGrading grading, const Caps& caps) {
    return quotient_slice(n, k, r, variant, setting, degree, grading, caps).ideal_dim;
}

DegreeRow quotient_slice(int n, int k, int r, Variant variant, Setting setting, long degree,
                         YGrading grading, const Caps& caps) {
    check_params(n, k, r);
    if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
    DegreeRow row;
    row.degree = degree;
    if (setting == Setting::Y) {
        YSlice s = build_y_slice(n, k, r, variant, degree, grading, caps);
        auto elim = y_ideal_rows(s, n, k, r, degree, grading, caps);
        row.space_dim = s.space_total;
        row.ideal_dim = s.marked + elim.rank();
        row.quotient_dim = (long)s.cols.size() - elim.rank();
    } else {
        XSlice s = build_x_slice(n, k, r, variant, degree, caps);
        auto elim = x_ideal_rows(s, n, k, r, variant, degree, caps);
        row.space_dim = (long)s.space_total;
        row.ideal_dim = (long)s.marked + elim.rank();
        row.quotient_dim = (long)s.cols.size() - elim.rank();
    }
    return row;
}

HilbertReport hilbert_oracle(int n, int k, int r, Variant variant, Setting setting,
                             YGrading grading, const Caps& caps) {
    check_params(n, k, r);
    HilbertReport rep;
    if (setting == Setting::Y && grading == YGrading::Transferred) {
        // The transferred grading is not a priori gap-free, so the whole
        // provable support is scanned: unmarked chains have natural degree
        // below the bound, hence transferred degree at most n * (bound - 1).
        long top = (long)n * std::max(0, chain_bound(k, r, variant) - 1);
        if (top > caps.max_degree)
            throw resource_limit_error("hilbert_oracle: degree cap exceeded");
        for (long d = 0; d <= top; ++d)
            rep.rows.push_back(quotient_slice(n, k, r, variant, setting, d, grading, caps));
        while (!rep.rows.empty() && rep.rows.back().quotient_dim == 0) rep.rows.pop_back();
    } else {
        // Multiplying into the next degree stays in the ideal, so the first
        // empty quotient slice ends the series.
        for (long d = 0;; ++d) {
            if (d > caps.max_degree)
                throw resource_limit_error("hilbert_oracle: degree cap exceeded");
            DegreeRow row = quotient_slice(n, k, r, variant, setting, d, grading, caps);
            if (row.quotient_dim == 0) break;
            rep.rows.push_back(row);
        }
    }
    for (const auto& row : rep.rows) rep.total += row.quotient_dim;
    return rep;
}

std::vector<long> hilbert_combinatorial(int n, int k, int r, Variant variant) {
    check_params(n, k, r);
    std::vector<long> hist;
    auto bump = [&](long d) {
        if ((long)hist.size() <= d) hist.resize(d + 1, 0);
        ++hist[d];
    };
    if (variant == Variant::S) {
        for_each_osp(n, k, r, [&](const Osp& p) { bump(comaj_osp(p, k)); });
    } else {
        for_each_face(n, k, r, [&](const Face& f) { bump(comaj_face(f, k)); });
    }
    return hist;
}

// ---- leading-term witnesses ----

namespace {

// Largest size-m variable R with lo subset of R subset of hi, together with
// the ideal element cof * y_lo_extra... helper producing the projected
// theta-multiple sum_{R} base * y_R^r restricted to lo <= R <= hi.
YPoly theta_between(const YMonomial& base, int n, int r, int m, Subset lo, Subset hi) {
    YPoly out;
    for (Subset R : subsets_of_size(n, m)) {
        if (!lo.subset_of(R) || !R.subset_of(hi)) continue;
        out.add(base.times_var(R, r), 1);
    }
    return out;
}

} // namespace

YPoly leading_witness(const YMonomial& m, int n, int k, int r, Variant variant) {
    check_params(n, k, r);
    int cond = first_forbidden_condition(m, n, k, r, variant);
    if (cond == 0) throw std::invalid_argument("monomial is standard, no witness exists");
    int big = n - k + 1;
    Subset full = Subset::prefix(n);
    const auto& fs = m.factors;
    YPoly w;
    switch (cond) {
    case 1: // divisible by an incomparable product: the monomial itself
    case 7: // divisible by a chain generator: the monomial itself
        w = YPoly(m);
        break;
    case 3: // y_S^{r+1}: y_S * theta_{|S|} collapses to the single term
        w = YPoly(m);
        break;
    case 2: {
        Subset P;
        for (const auto& [s, e] : fs)
            if (s == Subset::prefix(s.size()) && s.size() >= big && e >= r) P = s;
        w = times_mono(theta(n, r, P.size()), m.divide_var(P, r));
        break;
    }
    case 4: {
        for (size_t ti = 0; ti < fs.size() && w.is_zero(); ++ti)
            for (size_t si = ti + 1; si < fs.size() && w.is_zero(); ++si) {
                Subset S = fs[si].first, T = fs[ti].first;
                if (fs[si].second >= r && S.size() >= big && T.minus(S).min() > S.max())
                    w = theta_between(m.divide_var(S, r), n, r, S.size(), Subset{0}, T);
            }
        break;
    }
    case 5: {
        for (size_t ti = 0; ti < fs.size() && w.is_zero(); ++ti)
            for (size_t si = ti + 1; si < fs.size() && w.is_zero(); ++si) {
                Subset S = fs[si].first, T = fs[ti].first;
                if (fs[ti].second >= r && T.size() >= big &&
                    T == S.unite(Subset::prefix(T.minus(S).max())))
                    w = theta_between(m.divide_var(T, r), n, r, T.size(), S, full);
            }
        break;
    }
    case 6: {
        for (size_t i3 = 0; i3 < fs.size() && w.is_zero(); ++i3)
            for (size_t i2 = i3 + 1; i2 < fs.size() && w.is_zero(); ++i2)
                for (size_t i1 = i2 + 1; i1 < fs.size() && w.is_zero(); ++i1) {
                    Subset S1 = fs[i1].first, S2 = fs[i2].first, S3 = fs[i3].first;
                    if (fs[i2].second >= r && S2.size() >= big &&
                        S2.minus(S1).max() < S3.minus(S2).min())
                        w = theta_between(m.divide_var(S2, r), n, r, S2.size(), S1, S3);
                }
        break;
    }
    default:
        throw certification_error("unknown forbidden condition");
    }
    if (w.is_zero() || !(w.leading_term().first == m) || w.leading_term().second != 1)
        throw certification_error("leading witness construction failed to reproduce the monomial");
    return w;
}

// ---- basis certification ----

namespace {

void sweep_witnesses(int n, int k, int r, Variant variant, const Caps& caps,
                     BasisCertification& cert) {
    int big = n - k + 1;
    int bound = chain_bound(k, r, variant);
    std::vector<YMonomial> patterns;
    auto push = [&](YMonomial m) {
        if ((long)patterns.size() + 1 > caps.max_slice)
            throw resource_limit_error("witness sweep exceeds the slice cap");
        patterns.push_back(std::move(m));
    };
    std::vector<Subset> all;
    for (int sz = 1; sz <= n; ++sz)
        for (Subset S : subsets_of_size(n, sz)) all.push_back(S);
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j)
            if (!all[i].comparable(all[j]))
                push(YMonomial::var(all[i]).times_var(all[j]));
    for (int sz = big; sz <= n; ++sz) push(YMonomial::var(Subset::prefix(sz), r));
    for (Subset S : all)
        if (S.size() >= big) push(YMonomial::var(S, r + 1));
    for (Subset S : all)
        for (Subset T : all) {
            if (!S.proper_subset_of(T)) continue;
            if (S.size() >= big && T.minus(S).min() > S.max())
                push(YMonomial::var(S, r).times_var(T));
            if (T.size() >= big && T == S.unite(Subset::prefix(T.minus(S).max())))
                push(YMonomial::var(S).times_var(T, r));
            if (T.size() >= big)
                for (Subset U : all)
                    if (T.proper_subset_of(U) && T.minus(S).max() < U.minus(T).min())
                        push(YMonomial::var(S).times_var(T, r).times_var(U));
        }
    if (bound >= 1)
        for_each_multichain_of_degree(n, bound, [&](const YMonomial& m) { push(m); });

    // witnesses below the bound additionally get a span check against the
    // per-degree ideal rows
    std::map<long, YSlice> slices;
    std::map<long, SparseEliminator> elims;
    for (const YMonomial& pat : patterns) {
        try {
            YPoly w = leading_witness(pat, n, k, r, variant);
            long deg = pat.degree();
            if (deg < bound) {
                if (!slices.count(deg)) {
                    slices.emplace(deg,
                                   build_y_slice(n, k, r, variant, deg, YGrading::Natural, caps));
                    elims.emplace(deg, y_ideal_rows(slices.at(deg), n, k, r, deg,
                                                    YGrading::Natural, caps));
                }
                const auto& slice = slices.at(deg);
                SparseRow row;
                for (const auto& [mono, c] : w.terms()) {
                    auto it = slice.index.find(mono);
                    if (it != slice.index.end()) row.push_back({it->second, c});
                }
                if (!elims.at(deg).in_span(std::move(row)))
                    throw certification_error("witness is not in the ideal span");
            }
            ++cert.witnesses_checked;
        } catch (const std::exception& e) {
            cert.failures.push_back("witness failure: " + std::string(e.what()));
            if (cert.failures.size() > 20) return;
        }
    }
}

} // namespace

BasisCertification certify_standard_basis(int n, int k, int r, Variant variant, const Caps& caps) {
    check_params(n, k, r);
    BasisCertification cert;
    std::vector<YMonomial> basis;
    try {
        basis = enumerate_basis(n, k, r, variant);
    } catch (const std::exception& e) {
        cert.failures.push_back(e.what());
        return cert;
    }
    cert.basis_size = (long)basis.size();

    int bound = chain_bound(k, r, variant);
    std::map<long, std::vector<YMonomial>> by_deg;
    for (const auto& b : basis) by_deg[b.degree()].push_back(b);
    for (long d = 0; d < bound; ++d) {
        YSlice slice = build_y_slice(n, k, r, variant, d, YGrading::Natural, caps);
        SparseEliminator elim = y_ideal_rows(slice, n, k, r, d, YGrading::Natural, caps);
        DegreeRow row{d, slice.space_total, slice.marked + elim.rank(),
                      (long)slice.cols.size() - elim.rank()};
        cert.by_degree.push_back(row);
        const auto& here = by_deg[d];
        if ((long)here.size() != row.quotient_dim) {
            std::ostringstream os;
            os << "degree " << d << ": basis has " << here.size() << " monomials, quotient has "
               << row.quotient_dim;
            cert.failures.push_back(os.str());
            continue;
        }
        for (const auto& b : here) {
            auto it = slice.index.find(b);
            if (it == slice.index.end() || !elim.add_row({{it->second, 1}})) {
                cert.failures.push_back("basis monomial dependent modulo the ideal at degree " +
                                        std::to_string(d));
                break;
            }
        }
    }

    sweep_witnesses(n, k, r, variant, caps, cert);
    cert.passed = cert.failures.empty();
    return cert;
}

// ---- permutation actions and characters ----

std::vector<Partition> conjugacy_classes(int n) { return partitions_of(n); }

std::vector<int> class_representative(int n, const Partition& cycle_type) {
    check_partition(cycle_type);
    if (weight(cycle_type) != n)
        throw std::invalid_argument("cycle type must be a partition of n");
    std::vector<int> sigma(n + 1);
    int start = 1;
    for (int c : cycle_type) {
        for (int i = 0; i < c - 1; ++i) sigma[start + i] = start + i + 1;
        sigma[start + c - 1] = start;
        start += c;
    }
    return sigma;
}

XMonomial permute_x(const XMonomial& m, const std::vector<int>& sigma) {
    std::vector<int> out(m.exps.size(), 0);
    for (size_t i = 0; i < m.exps.size(); ++i) out[sigma[i + 1] - 1] = m.exps[i];
    return XMonomial{std::move(out)};
}

YMonomial permute_y(const YMonomial& m, const std::vector<int>& sigma) {
    std::vector<std::pair<Subset, int>> fs;
    for (const auto& [S, e] : m.factors) {
        Subset img{0};
        for (int i : S.elements()) img.add(sigma[i]);
        fs.push_back({img, e});
    }
    return YMonomial::from_factors(std::move(fs));
}

std::map<long, long long> graded_character(int n, int k, Variant variant, Setting setting,
                                           const Partition& cycle_type) {
    check_params(n, k, 1);
    auto sigma = class_representative(n, cycle_type);
    auto basis = enumerate_basis(n, k, 1, variant);
    std::map<long, Rational> acc;
    for (const auto& b : basis) acc[b.tilde_degree()]; // fixed key set across classes
    for (const auto& b : basis) {
        if (setting == Setting::Y) {
            YReduction red = reduce_y(permute_y(b, sigma), n, k, 1, variant);
            acc[b.tilde_degree()] += red.normal_form.coefficient(b);
        } else {
            XMonomial xb = transfer_phi(b, n);
            XPoly nf = normal_form_x(permute_x(xb, sigma), n, k, 1, variant);
            acc[b.tilde_degree()] += nf.coefficient(xb);
        }
    }
    std::map<long, long long> out;
    for (const auto& [d, v] : acc) out[d] = to_long(v);
    return out;
}

StratumReport filtration_stratum_report(int n, int k, Variant variant, Setting setting,
                                        const Partition& mu) {
    check_params(n, k, 1);
    StratumReport rep;
    rep.mu = mu;
    rep.cls = classify_mu(mu, n, k, 1, variant);
    std::vector<YMonomial> stratum;
    for (const auto& b : enumerate_basis(n, k, 1, variant))
        if (mu_of_y(b) == mu) stratum.push_back(b);
    rep.dimension = (long)stratum.size();
    for (const auto& cls : conjugacy_classes(n)) {
        auto sigma = class_representative(n, cls);
        Rational tr = 0;
        for (const auto& b : stratum) {
            if (setting == Setting::Y) {
                YReduction red = reduce_y(permute_y(b, sigma), n, k, 1, variant);
                tr += red.normal_form.coefficient(b);
            } else {
                XMonomial xb = transfer_phi(b, n);
                auto red = reduce_x_stratum(permute_x(xb, sigma), n, k, 1, variant);
                tr += red.same_mu.coefficient(xb);
            }
        }
        rep.traces[cls] = to_long(tr);
    }
    return rep;
}

} // namespace coinv
