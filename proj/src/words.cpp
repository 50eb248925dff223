#include "coinv/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace coinv {

Subset Word::support() const {
    Subset s;
    for (const Letter& l : letters) s.add(l.value);
    return s;
}

long Word::color_sum() const {
    long c = 0;
    for (const Letter& l : letters) c += l.color;
    return c;
}

void Word::validate() const {
    check_ground(n);
    if (r < 1) throw std::invalid_argument("need at least one color");
    Subset seen;
    for (const Letter& l : letters) {
        if (l.value < 1 || l.value > n) throw std::invalid_argument("letter value out of range");
        if (l.color < 0 || l.color >= r) throw std::invalid_argument("letter color out of range");
        if (seen.contains(l.value)) throw std::invalid_argument("repeated letter value");
        seen.add(l.value);
    }
}

Word make_word(int n, int r, std::vector<Letter> letters) {
    Word w{n, r, std::move(letters)};
    w.validate();
    return w;
}

std::vector<int> descent_set(const Word& w) {
    std::vector<int> out;
    for (int i = 0; i + 1 < w.length(); ++i)
        if (compare_letters(w.letters[i], w.letters[i + 1]) > 0) out.push_back(i + 1);
    return out;
}

int des(const Word& w) { return int(descent_set(w).size()); }

long maj(const Word& w) {
    long s = 0;
    for (int i : descent_set(w)) s += i;
    return w.color_sum() + long(w.r) * s;
}

// ---- ordered set partitions -------------------------------------------

bool osp_valid(const Osp& p, int k) {
    const Word& g = p.word;
    if (k < 1 || k > g.n) return false;
    if (g.length() != g.n) return false; // must use every value
    if (!is_partition(p.lambda)) return false;
    int d = des(g);
    if (d >= k) return false;
    if (int(p.lambda.size()) > k - d - 1) return false;
    if (!p.lambda.empty() && p.lambda[0] > g.n - k) return false;
    return true;
}

void check_osp(const Osp& p, int k) {
    p.word.validate();
    if (!osp_valid(p, k)) throw std::invalid_argument("not a valid k-block ordered set partition");
}

bool face_valid(const Face& f, int k) {
    const Word& g = f.word;
    int n = g.n;
    if (k < 0 || k > n) return false;
    int z = f.zero.size();
    if (z > n - k) return false;
    if (g.support().bits != Subset::prefix(n).minus(f.zero).bits) return false;
    if (k == 0) return z == n && f.lambda.empty();
    if (!is_partition(f.lambda)) return false;
    int d = des(g);
    if (d >= k) return false;
    if (int(f.lambda.size()) > k - d - 1) return false;
    if (!f.lambda.empty() && f.lambda[0] > n - z - k) return false;
    return true;
}

void check_face(const Face& f, int k) {
    f.word.validate();
    if (!face_valid(f, k)) throw std::invalid_argument("not a valid dimension-k face");
}

long comaj_osp(const Osp& p, int k) {
    check_osp(p, k);
    return maj(p.word) + long(p.word.r) * weight(p.lambda);
}

long comaj_face(const Face& f, int k) {
    check_face(f, k);
    return long(k) * f.word.r * f.zero.size() + maj(f.word) + long(f.word.r) * weight(f.lambda);
}

namespace {

// Star flags for the ascents of the word of a k-block partition: ascent j is
// starred when the two adjacent letters share a block.  The reversed padded
// lambda lists, for each unstarred ascent in word order, how many starred
// ascents precede it.
std::vector<bool> star_flags(const Word& g, const Partition& lambda, int k) {
    std::vector<int> asc;
    std::vector<int> desc = descent_set(g);
    for (int i = 1; i < g.length(); ++i)
        if (std::find(desc.begin(), desc.end(), i) == desc.end()) asc.push_back(i);
    int m = k - int(desc.size()) - 1; // unstarred ascents
    std::vector<int> rev(m, 0);
    for (size_t i = 0; i < lambda.size(); ++i) rev[m - 1 - int(i)] = lambda[i];
    std::vector<bool> starred(asc.size(), false);
    int stars = 0, u = 0;
    for (size_t j = 0; j < asc.size(); ++j) {
        if (u < m && rev[u] == stars) {
            ++u; // unstarred
        } else {
            starred[j] = true;
            ++stars;
        }
    }
    if (stars != g.length() - k || u != m)
        throw std::invalid_argument("lambda does not describe a starring of the ascents");
    return starred;
}

std::vector<std::vector<Letter>> blocks_of(const Word& g, const Partition& lambda, int k) {
    std::vector<int> asc;
    std::vector<int> desc = descent_set(g);
    for (int i = 1; i < g.length(); ++i)
        if (std::find(desc.begin(), desc.end(), i) == desc.end()) asc.push_back(i);
    std::vector<bool> starred = star_flags(g, lambda, k);
    std::vector<bool> joined(g.length() + 1, false); // positions i with i,i+1 in one block
    for (size_t j = 0; j < asc.size(); ++j)
        if (starred[j]) joined[asc[j]] = true;
    std::vector<std::vector<Letter>> blocks;
    for (int i = 0; i < g.length(); ++i) {
        if (i == 0 || !joined[i]) blocks.emplace_back();
        blocks.back().push_back(g.letters[i]);
    }
    return blocks;
}

} // namespace

std::vector<std::vector<Letter>> osp_blocks(const Osp& p, int k) {
    check_osp(p, k);
    return blocks_of(p.word, p.lambda, k);
}

Osp osp_from_blocks(int n, int r, const std::vector<std::vector<Letter>>& blocks) {
    int k = int(blocks.size());
    std::vector<Letter> letters;
    std::vector<bool> joined; // joined[i]: positions i,i+1 share a block (1-based i)
    for (const auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("empty block");
        std::vector<Letter> sorted = b;
        std::sort(sorted.begin(), sorted.end(),
                  [](const Letter& a, const Letter& c) { return compare_letters(a, c) < 0; });
        for (size_t i = 0; i < sorted.size(); ++i) {
            if (!letters.empty()) joined.push_back(i > 0);
            letters.push_back(sorted[i]);
        }
    }
    Word g = make_word(n, r, letters);
    if (g.length() != n) throw std::invalid_argument("blocks must partition the full ground set");
    // lambda part for each unstarred ascent: number of starred ascents before it
    std::vector<int> desc = descent_set(g);
    Partition lambda;
    int stars = 0;
    for (int i = 1; i < n; ++i) {
        bool is_desc = std::find(desc.begin(), desc.end(), i) != desc.end();
        if (joined[i - 1]) {
            if (is_desc) throw std::invalid_argument("block not increasing"); // unreachable after sort
            ++stars;
        } else if (!is_desc) {
            lambda.push_back(stars);
        }
    }
    std::sort(lambda.begin(), lambda.end(), std::greater<int>());
    while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
    Osp p{g, lambda};
    check_osp(p, k);
    return p;
}

long hrs_maj(const Osp& p, int k) {
    check_osp(p, k);
    if (p.word.r != 1) throw std::domain_error("statistic defined for the uncolored case only");
    auto blocks = osp_blocks(p, k);
    int n = p.word.n;
    std::vector<int> ends; // last position of each block
    int pos = 0;
    for (const auto& b : blocks) {
        pos += int(b.size());
        ends.push_back(pos);
    }
    std::vector<int> desc = descent_set(p.word);
    long total = 0;
    for (int i = 1; i < n; ++i) {
        if (std::find(desc.begin(), desc.end(), i) != desc.end()) continue; // ascents only
        long w = 0;
        for (int e : ends)
            if (e <= i) ++w;
        total += w;
    }
    return total;
}

// ---- enumeration ------------------------------------------------------

void for_each_word_on(int n, int r, Subset support, const std::function<void(const Word&)>& fn) {
    check_ground(n);
    if (r < 1) throw std::invalid_argument("need at least one color");
    std::vector<int> values = support.elements(); // sorted ascending = lex-first permutation
    int len = int(values.size());
    do {
        std::vector<int> colors(len, 0);
        for (;;) {
            Word w;
            w.n = n;
            w.r = r;
            w.letters.reserve(len);
            for (int i = 0; i < len; ++i) w.letters.push_back({values[i], colors[i]});
            fn(w);
            int i = len - 1;
            while (i >= 0 && colors[i] == r - 1) colors[i--] = 0;
            if (i < 0) break;
            ++colors[i];
        }
    } while (std::next_permutation(values.begin(), values.end()));
}

void for_each_word(int n, int r, const std::function<void(const Word&)>& fn) {
    for_each_word_on(n, r, Subset::prefix(n), fn);
}

namespace {

// lambda values admissible for a word with given descent count, in
// lexicographic order as sequences
std::vector<Partition> lambda_choices(int max_parts, int max_part) {
    std::vector<Partition> out = partitions_in_box(max_parts, max_part);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

void for_each_osp(int n, int k, int r, const std::function<void(const Osp&)>& fn) {
    check_ground(n);
    if (k < 1 || k > n) return;
    for_each_word(n, r, [&](const Word& g) {
        int d = des(g);
        if (d >= k) return;
        for (const Partition& lam : lambda_choices(k - d - 1, n - k)) fn(Osp{g, lam});
    });
}

void for_each_face(int n, int k, int r, const std::function<void(const Face&)>& fn) {
    check_ground(n);
    if (k < 0 || k > n) return;
    if (k == 0) {
        Word empty;
        empty.n = n;
        empty.r = r;
        fn(Face{Subset::prefix(n), empty, {}});
        return;
    }
    // zero blocks in lexicographic order of their sorted element lists
    std::vector<std::vector<int>> zeros;
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        Subset z(bits);
        if (z.size() <= n - k) zeros.push_back(z.elements());
    }
    std::sort(zeros.begin(), zeros.end());
    for (const auto& elems : zeros) {
        Subset z;
        for (int e : elems) z.add(e);
        Subset rest = Subset::prefix(n).minus(z);
        for_each_word_on(n, r, rest, [&](const Word& g) {
            int d = des(g);
            if (d >= k) return;
            for (const Partition& lam : lambda_choices(k - d - 1, n - z.size() - k))
                fn(Face{z, g, lam});
        });
    }
}

std::vector<Word> enumerate_words(int n, int r) {
    std::vector<Word> out;
    for_each_word(n, r, [&](const Word& w) { out.push_back(w); });
    return out;
}

std::vector<Osp> enumerate_osps(int n, int k, int r) {
    std::vector<Osp> out;
    for_each_osp(n, k, r, [&](const Osp& p) { out.push_back(p); });
    return out;
}

std::vector<Face> enumerate_faces(int n, int k, int r) {
    std::vector<Face> out;
    for_each_face(n, k, r, [&](const Face& f) { out.push_back(f); });
    return out;
}

long stirling2(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::vector<std::vector<long>> s(n + 1, std::vector<long>(k + 1, 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= std::min(i, k); ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
    return s[n][k];
}

namespace {
long power(long base, int exp) {
    long out = 1;
    while (exp-- > 0) out *= base;
    return out;
}
long factorial(int k) {
    long out = 1;
    for (int i = 2; i <= k; ++i) out *= i;
    return out;
}
long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}
} // namespace

long count_osps(int n, int k, int r) { return power(r, n) * factorial(k) * stirling2(n, k); }

long count_faces(int n, int k, int r) {
    long total = 0;
    for (int z = 0; z <= n - k; ++z)
        total += binomial(n, z) * power(r, n - z) * factorial(k) * stirling2(n - z, k);
    return total;
}

} // namespace coinv
