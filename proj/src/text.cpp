#include "coinv/text.hpp"

#include <algorithm>
#include <sstream>

#include "coinv/errors.hpp"

namespace coinv {

std::string to_string(const Letter& l) {
    return std::to_string(l.value) + "^" + std::to_string(l.color);
}

std::string to_string(const Word& w) {
    std::string out;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i) out += " ";
        out += to_string(w.letters[i]);
    }
    return out;
}

std::string to_string(const Osp& p) {
    return "(" + to_string(p.word) + "; " + partition_to_string(p.lambda) + ")";
}

std::string to_string(const Subset& s) {
    std::string out = "{";
    auto elems = s.elements();
    for (size_t i = 0; i < elems.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(elems[i]);
    }
    return out + "}";
}

std::string to_string(const Face& f) {
    return "(" + to_string(f.zero) + "; " + to_string(f.word) + "; " +
           partition_to_string(f.lambda) + ")";
}

std::string blocks_to_string(const std::vector<std::vector<Letter>>& blocks) {
    std::string out;
    for (size_t b = 0; b < blocks.size(); ++b) {
        if (b) out += "|";
        out += "{";
        for (size_t i = 0; i < blocks[b].size(); ++i) {
            if (i) out += ",";
            out += to_string(blocks[b][i]);
        }
        out += "}";
    }
    return out;
}

std::string to_string(const YMonomial& y) {
    if (y.is_one()) return "1";
    std::string out;
    for (size_t i = 0; i < y.factors.size(); ++i) {
        if (i) out += "*";
        const auto& [s, e] = y.factors[i];
        out += "y";
        out += to_string(s);
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::string to_string(const XMonomial& m) {
    std::vector<std::pair<int, int>> fs; // (variable index, exponent)
    for (int i = 0; i < m.n(); ++i)
        if (m.exps[i] > 0) fs.push_back({i + 1, m.exps[i]});
    if (fs.empty()) return "1";
    std::stable_sort(fs.begin(), fs.end(),
                     [](const auto& a, const auto& b) { return a.second > b.second; });
    std::string out;
    for (size_t i = 0; i < fs.size(); ++i) {
        if (i) out += "*";
        out += "x" + std::to_string(fs[i].first);
        if (fs[i].second != 1) out += "^" + std::to_string(fs[i].second);
    }
    return out;
}

namespace {

template <class P>
std::string poly_to_string(const P& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational a = abs(c);
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (a != 1) out += to_string(a) + "*";
        out += to_string(m);
    }
    return out;
}

} // namespace

std::string to_string(const YPoly& p) { return poly_to_string(p); }
std::string to_string(const XPoly& p) { return poly_to_string(p); }

// ---- parsing ----------------------------------------------------------

namespace {

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

int parse_int(const std::string& s) {
    std::string t = strip(s);
    if (t.empty()) throw parse_error("expected an integer");
    size_t pos = 0;
    int v;
    try {
        v = std::stoi(t, &pos);
    } catch (const std::exception&) {
        throw parse_error("expected an integer, got '" + t + "'");
    }
    if (pos != t.size()) throw parse_error("trailing characters after integer in '" + t + "'");
    return v;
}

} // namespace

Letter parse_letter(const std::string& text) {
    std::string t = strip(text);
    size_t caret = t.find('^');
    if (caret == std::string::npos) return {parse_int(t), 0};
    return {parse_int(t.substr(0, caret)), parse_int(t.substr(caret + 1))};
}

Word parse_word(const std::string& text, int n, int r) {
    Word w;
    w.n = n;
    w.r = r;
    std::istringstream in(strip(text));
    std::string tok;
    while (in >> tok) w.letters.push_back(parse_letter(tok));
    w.validate();
    return w;
}

Partition parse_partition(const std::string& text) {
    std::string t = strip(text);
    if (!t.empty() && t.front() == '(' && t.back() == ')') t = strip(t.substr(1, t.size() - 2));
    Partition p;
    if (t.empty()) return p;
    for (const std::string& part : split(t, ',')) p.push_back(parse_int(part));
    check_partition(p);
    return p;
}

Osp parse_osp(const std::string& text, int n, int r) {
    std::string t = strip(text);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')')
        throw parse_error("expected (word; lambda)");
    t = t.substr(1, t.size() - 2);
    size_t semi = t.rfind(';');
    if (semi == std::string::npos) throw parse_error("expected (word; lambda)");
    return {parse_word(t.substr(0, semi), n, r), parse_partition(t.substr(semi + 1))};
}

Subset parse_subset(const std::string& text) {
    std::string t = strip(text);
    if (t.size() < 2 || t.front() != '{' || t.back() != '}')
        throw parse_error("expected {elements}");
    t = strip(t.substr(1, t.size() - 2));
    Subset s;
    if (t.empty()) return s;
    for (const std::string& part : split(t, ',')) s.add(parse_int(part));
    return s;
}

Face parse_face(const std::string& text, int n, int r) {
    std::string t = strip(text);
    if (t.size() < 2 || t.front() != '(' || t.back() != ')')
        throw parse_error("expected (zero; word; lambda)");
    t = t.substr(1, t.size() - 2);
    std::vector<std::string> parts = split(t, ';');
    if (parts.size() != 3) throw parse_error("expected (zero; word; lambda)");
    return {parse_subset(parts[0]), parse_word(parts[1], n, r), parse_partition(parts[2])};
}

YMonomial parse_ymonomial(const std::string& text) {
    std::string t = strip(text);
    if (t == "1") return YMonomial::one();
    std::vector<std::pair<Subset, int>> fs;
    for (const std::string& piece : split(t, '*')) {
        std::string f = strip(piece);
        if (f.empty() || f[0] != 'y') throw parse_error("expected y{...} factor in '" + f + "'");
        size_t close = f.find('}');
        if (close == std::string::npos) throw parse_error("unterminated subset in '" + f + "'");
        Subset s = parse_subset(f.substr(1, close));
        int e = 1;
        std::string rest = strip(f.substr(close + 1));
        if (!rest.empty()) {
            if (rest[0] != '^') throw parse_error("expected ^exponent in '" + f + "'");
            e = parse_int(rest.substr(1));
        }
        if (e < 1) throw parse_error("exponents must be positive");
        fs.push_back({s, e});
    }
    return YMonomial::from_factors(std::move(fs));
}

XMonomial parse_xmonomial(const std::string& text, int n) {
    check_ground(n);
    std::string t = strip(text);
    XMonomial m = XMonomial::one(n);
    if (t == "1") return m;
    for (const std::string& piece : split(t, '*')) {
        std::string f = strip(piece);
        if (f.empty() || f[0] != 'x') throw parse_error("expected x<i> factor in '" + f + "'");
        size_t caret = f.find('^');
        int idx = parse_int(caret == std::string::npos ? f.substr(1) : f.substr(1, caret - 1));
        int e = caret == std::string::npos ? 1 : parse_int(f.substr(caret + 1));
        if (idx < 1 || idx > n) throw parse_error("variable index out of range");
        if (e < 1) throw parse_error("exponents must be positive");
        m.exps[idx - 1] += e;
    }
    return m;
}

} // namespace coinv
