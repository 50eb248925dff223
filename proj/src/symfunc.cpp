#include "coinv/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

#include "coinv/errors.hpp"

namespace coinv {

void check_composition(const Composition& a) {
    for (int p : a)
        if (p <= 0) throw std::invalid_argument("composition parts must be positive");
}

int comp_weight(const Composition& a) {
    int s = 0;
    for (int p : a) s += p;
    return s;
}

std::vector<int> comp_descents(const Composition& a) {
    std::vector<int> d;
    int s = 0;
    for (size_t i = 0; i + 1 < a.size(); ++i) {
        s += a[i];
        d.push_back(s);
    }
    return d;
}

long maj_comp(const Composition& a) {
    long m = 0;
    for (int d : comp_descents(a)) m += d;
    return m;
}

bool refines(const Composition& beta, const Composition& alpha) {
    if (comp_weight(beta) != comp_weight(alpha)) return false;
    auto db = comp_descents(beta);
    auto da = comp_descents(alpha);
    return std::includes(db.begin(), db.end(), da.begin(), da.end());
}

std::vector<Composition> compositions_of(int n) {
    if (n < 0) throw std::invalid_argument("compositions_of: negative weight");
    std::vector<Composition> out;
    Composition cur;
    std::function<void(int)> rec = [&](int rest) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = 1; p <= rest; ++p) {
            cur.push_back(p);
            rec(rest - p);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

QPoly qp_trim(QPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

QPoly qp_add(const QPoly& a, const QPoly& b) {
    QPoly out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return qp_trim(std::move(out));
}

QPoly qp_mul(const QPoly& a, const QPoly& b) {
    if (a.empty() || b.empty()) return {};
    QPoly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return qp_trim(std::move(out));
}

QPoly qp_shift(const QPoly& a, int s) {
    if (a.empty()) return {};
    QPoly out(a.size() + s, 0);
    for (size_t i = 0; i < a.size(); ++i) out[i + s] = a[i];
    return out;
}

long long qp_eval_at_one(const QPoly& a) {
    long long s = 0;
    for (long long c : a) s += c;
    return s;
}

QPoly q_binomial(int a, int b) {
    if (b < 0 || b > a) return {};
    // Pascal triangle with the q-weighted recurrence
    // [a,b] = [a-1,b-1] + q^b [a-1,b].
    std::vector<QPoly> row = {QPoly{1}};
    for (int i = 1; i <= a; ++i) {
        std::vector<QPoly> next(std::min(i, b) + 1);
        for (int j = 0; j < (int)next.size(); ++j) {
            QPoly v;
            if (j == 0)
                v = QPoly{1};
            else {
                if (j - 1 < (int)row.size()) v = row[j - 1];
                if (j < (int)row.size()) v = qp_add(v, qp_shift(row[j], j));
            }
            next[j] = std::move(v);
        }
        row = std::move(next);
    }
    return b < (int)row.size() ? row[b] : QPoly{};
}

QPoly q_factorial(int m) {
    QPoly out{1};
    for (int i = 1; i <= m; ++i) {
        QPoly bracket(i, 1); // 1 + q + ... + q^{i-1}
        out = qp_mul(out, bracket);
    }
    return out;
}

namespace {

// All partitions nu containing mu with nu/mu a horizontal strip of size m.
void horizontal_strips(const Partition& mu, int m, const std::function<void(const Partition&)>& fn) {
    size_t rows = mu.size() + 1;
    Partition nu(rows, 0);
    std::function<void(size_t, int)> rec = [&](size_t i, int rest) {
        if (i == rows) {
            if (rest == 0) {
                Partition out = nu;
                while (!out.empty() && out.back() == 0) out.pop_back();
                fn(out);
            }
            return;
        }
        int lo = i < mu.size() ? mu[i] : 0;
        int hi = i == 0 ? lo + rest : std::min(nu[i - 1], lo + rest);
        // nu_i may not exceed nu_{i-1} and the strip may not place two cells
        // in one column, i.e. nu_i <= mu_{i-1}; for i = 0 there is no bound.
        if (i > 0 && i - 1 < mu.size()) hi = std::min(hi, mu[i - 1]);
        for (int v = lo; v <= hi; ++v) {
            nu[i] = v;
            rec(i + 1, rest - (v - lo));
            nu[i] = 0;
        }
    };
    rec(0, m);
}

} // namespace

SchurVector h_to_schur(const Composition& alpha) {
    check_composition(alpha);
    SchurVector cur = {{Partition{}, 1}};
    for (int part : alpha) {
        SchurVector next;
        for (const auto& [mu, c] : cur)
            horizontal_strips(mu, part, [&](const Partition& nu) { next[nu] += c; });
        cur = std::move(next);
    }
    return cur;
}

long long kostka(const Partition& lambda, const Composition& content) {
    auto hv = h_to_schur(content);
    auto it = hv.find(lambda);
    return it == hv.end() ? 0 : it->second;
}

SchurVector ribbon_to_schur(const Composition& alpha) {
    check_composition(alpha);
    auto desc = comp_descents(alpha);
    int n = comp_weight(alpha);
    SchurVector out;
    // coarsenings of alpha = subsets of D(alpha)
    for (unsigned mask = 0; mask < (1u << desc.size()); ++mask) {
        Composition beta;
        int prev = 0;
        for (size_t i = 0; i < desc.size(); ++i)
            if (mask & (1u << i)) {
                beta.push_back(desc[i] - prev);
                prev = desc[i];
            }
        beta.push_back(n - prev);
        long long sign = ((desc.size() + 1 - beta.size()) % 2 == 0) ? 1 : -1;
        for (const auto& [lam, c] : h_to_schur(beta)) {
            out[lam] += sign * c;
            if (out[lam] == 0) out.erase(lam);
        }
    }
    return out;
}

long long schur_dim(const Partition& lambda) {
    check_partition(lambda);
    int n = weight(lambda);
    return kostka(lambda, Composition(n, 1));
}

namespace {

long long mn_worker(const Partition& lambda, const Partition& mu, size_t idx,
                    std::map<std::pair<Partition, size_t>, long long>& memo) {
    if (idx == mu.size()) return lambda.empty() ? 1 : 0;
    auto key = std::make_pair(lambda, idx);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int len = mu[idx];
    int m = (int)lambda.size();
    std::vector<int> beta(m);
    for (int i = 0; i < m; ++i) beta[i] = lambda[i] + (m - 1 - i);
    long long total = 0;
    for (int i = 0; i < m; ++i) {
        int target = beta[i] - len;
        if (target < 0) continue;
        bool clash = false;
        int height = 0;
        for (int j = 0; j < m; ++j) {
            if (j == i) continue;
            if (beta[j] == target) clash = true;
            if (beta[j] > target && beta[j] < beta[i]) ++height;
        }
        if (clash) continue;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.begin(), nb.end(), std::greater<>());
        Partition next(m);
        for (int j = 0; j < m; ++j) next[j] = nb[j] - (m - 1 - j);
        while (!next.empty() && next.back() == 0) next.pop_back();
        long long sub = mn_worker(next, mu, idx + 1, memo);
        total += (height % 2 == 0 ? 1 : -1) * sub;
    }
    memo.emplace(key, total);
    return total;
}

} // namespace

long long mn_character(const Partition& lambda, const Partition& mu) {
    check_partition(lambda);
    check_partition(mu);
    if (weight(lambda) != weight(mu))
        throw std::invalid_argument("mn_character: shape and cycle type must have equal size");
    std::map<std::pair<Partition, size_t>, long long> memo;
    return mn_worker(lambda, mu, 0, memo);
}

MultigradedFrobenius multigraded_frobenius_S(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("multigraded_frobenius_S: bad arguments");
    MultigradedFrobenius f;
    f.n = n;
    f.k = k;
    for (const auto& alpha : compositions_of(n)) {
        int l = (int)alpha.size();
        if (l > k) continue;
        std::vector<int> base(n, 0); // exponents of t_1..t_n
        for (int d : comp_descents(alpha)) base[d - 1] += 1;
        // extra factors: monomials t_1^{j_1}..t_{n-k}^{j_{n-k}} with sum <= k - l
        std::function<void(int, int, std::vector<int>&)> rec = [&](int pos, int rest,
                                                                   std::vector<int>& e) {
            if (pos == n - k) {
                f.terms[e][alpha] += 1;
                return;
            }
            for (int j = 0; j <= rest; ++j) {
                e[pos] += j;
                rec(pos + 1, rest - j, e);
                e[pos] -= j;
            }
        };
        std::vector<int> e = base;
        if (n - k <= 0)
            f.terms[e][alpha] += 1;
        else
            rec(0, k - l, e);
    }
    return f;
}

QSchur specialize_t_to_q(const MultigradedFrobenius& f) {
    QSchur out;
    for (const auto& [exps, ribbons] : f.terms) {
        int qpow = 0;
        for (size_t i = 0; i < exps.size(); ++i) qpow += (int)(i + 1) * exps[i];
        for (const auto& [alpha, c] : ribbons) {
            for (const auto& [lam, sc] : ribbon_to_schur(alpha)) {
                QPoly& p = out[lam];
                if ((int)p.size() <= qpow) p.resize(qpow + 1, 0);
                p[qpow] += c * sc;
            }
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        it->second = qp_trim(std::move(it->second));
        it = it->second.empty() ? out.erase(it) : std::next(it);
    }
    return out;
}

QSchur frobenius_q_formula_S(int n, int k) {
    QSchur out;
    for (const auto& alpha : compositions_of(n)) {
        int l = (int)alpha.size();
        if (l > k) continue;
        QPoly coeff = qp_shift(q_binomial(n - l, k - l), (int)maj_comp(alpha));
        for (const auto& [lam, sc] : ribbon_to_schur(alpha)) {
            QPoly scaled = coeff;
            for (auto& c : scaled) c *= sc;
            out[lam] = qp_add(out[lam], scaled);
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        it->second = qp_trim(std::move(it->second));
        it = it->second.empty() ? out.erase(it) : std::next(it);
    }
    return out;
}

QSchur frobenius_from_characters(const std::map<long, std::map<Partition, long long>>& traces,
                                 int n) {
    if (n <= 0) throw std::invalid_argument("frobenius_from_characters: n must be positive");
    long long nfact = 1;
    for (int i = 2; i <= n; ++i) nfact *= i;
    auto classes = partitions_of(n);
    std::map<Partition, long long> class_size;
    for (const auto& mu : classes) {
        long long z = 1;
        std::map<int, int> mult;
        for (int p : mu) mult[p] += 1;
        for (const auto& [p, m] : mult) {
            for (int i = 0; i < m; ++i) z *= p;
            for (int i = 2; i <= m; ++i) z *= i;
        }
        class_size[mu] = nfact / z;
    }
    auto shapes = partitions_of(n);
    QSchur out;
    for (const auto& [deg, by_class] : traces) {
        for (const auto& mu : classes)
            if (!by_class.count(mu))
                throw std::invalid_argument("frobenius_from_characters: missing cycle type trace");
        for (const auto& lam : shapes) {
            long long sum = 0;
            for (const auto& mu : classes)
                sum += class_size.at(mu) * mn_character(lam, mu) * by_class.at(mu);
            if (sum % nfact != 0)
                throw certification_error("character decomposition is not integral");
            long long m = sum / nfact;
            if (m < 0) throw certification_error("character decomposition has a negative multiplicity");
            if (m != 0) {
                QPoly& p = out[lam];
                if ((long)p.size() <= deg) p.resize(deg + 1, 0);
                p[deg] = m;
            }
        }
    }
    return out;
}

} // namespace coinv
