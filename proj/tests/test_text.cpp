#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coinv/errors.hpp"
#include "coinv/rewrite.hpp"
#include "coinv/text.hpp"

using namespace coinv;

namespace {

YMonomial Y(std::vector<std::pair<std::vector<int>, int>> fs) {
    std::vector<std::pair<Subset, int>> out;
    for (auto& [elems, e] : fs) {
        Subset s;
        for (int i : elems) s.add(i);
        out.push_back({s, e});
    }
    return YMonomial::from_factors(std::move(out));
}

} // namespace

TEST_CASE("letter and word rendering") {
    CHECK(to_string(Letter{4, 3}) == "4^3");
    CHECK(parse_letter("4^3") == Letter{4, 3});
    CHECK(parse_letter("12^0") == Letter{12, 0});
    Word w = make_word(5, 4, {{3, 3}, {1, 1}, {5, 2}, {2, 2}, {4, 0}});
    CHECK(to_string(w) == "3^3 1^1 5^2 2^2 4^0");
    CHECK(parse_word("3^3 1^1 5^2 2^2 4^0", 5, 4) == w);
    CHECK(parse_word("  3^3   1^1 5^2 2^2 4^0 ", 5, 4) == w);
    // partial words are fine (faces use them); semantic errors are not
    CHECK(parse_word("3^3 1^1", 5, 4).length() == 2);
    CHECK_THROWS_AS(parse_word("1^9 2^0", 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("1^0 1^0", 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(parse_letter("4^"), parse_error);
    CHECK_THROWS_AS(parse_letter("junk"), parse_error);
}

TEST_CASE("partition rendering") {
    CHECK(partition_to_string({3, 2}) == "(3,2)");
    CHECK(partition_to_string({}) == "()");
    CHECK(parse_partition("(3,2)") == Partition{3, 2});
    CHECK(parse_partition("()") == Partition{});
    CHECK(parse_partition("3,2") == Partition{3, 2}); // parens optional
    CHECK_THROWS_AS(parse_partition("(2,3)"), std::invalid_argument); // increasing parts
    CHECK_THROWS_AS(parse_partition("(3,a)"), parse_error);
}

TEST_CASE("set partition and face rendering") {
    Osp p{make_word(5, 4, {{3, 3}, {1, 1}, {5, 2}, {2, 2}, {4, 0}}), {1}};
    CHECK(to_string(p) == "(3^3 1^1 5^2 2^2 4^0; (1))");
    CHECK(parse_osp(to_string(p), 5, 4) == p);

    Face f{Subset::of({1, 4}), make_word(7, 3, {{5, 2}, {2, 1}, {3, 0}, {7, 2}, {6, 0}}), {2}};
    CHECK(to_string(f) == "({1,4}; 5^2 2^1 3^0 7^2 6^0; (2))");
    CHECK(parse_face(to_string(f), 7, 3) == f);
    Face empty{Subset{0}, make_word(2, 1, {{2, 0}, {1, 0}}), {}};
    CHECK(to_string(empty) == "({}; 2^0 1^0; ())");
    CHECK(parse_face(to_string(empty), 2, 1) == empty);
    CHECK_THROWS_AS(parse_face("(oops)", 2, 1), parse_error);

    CHECK(to_string(Subset::of({1, 4})) == "{1,4}");
    CHECK(to_string(Subset{0}) == "{}");
    CHECK(parse_subset("{1,4}") == Subset::of({1, 4}));
    CHECK(parse_subset("{}") == Subset{0});
    CHECK(parse_subset("{4,1}") == Subset::of({1, 4})); // order-insensitive
    CHECK_THROWS_AS(parse_subset("1,4"), parse_error);
}

TEST_CASE("block form round trip") {
    Osp p{make_word(9, 4,
                    {{4, 3}, {2, 2}, {3, 2}, {9, 1}, {6, 1}, {1, 0}, {5, 2}, {7, 2}, {8, 1}}),
          {3, 2}};
    auto blocks = osp_blocks(p, 5);
    CHECK(blocks_to_string(blocks) == "{4^3,2^2,3^2}|{9^1}|{6^1,1^0}|{5^2}|{7^2,8^1}");
    CHECK(osp_from_blocks(9, 4, blocks) == p);
}

TEST_CASE("monomial rendering") {
    YMonomial y = Y({{{4}, 5}, {{1, 3, 4}, 7}, {{1, 2, 3, 4, 6}, 1}});
    CHECK(to_string(y) == "y{1,2,3,4,6}*y{1,3,4}^7*y{4}^5");
    CHECK(parse_ymonomial(to_string(y)) == y);
    CHECK(parse_ymonomial("y{4}^5 * y{1,3,4}^7*y{1,2,3,4,6}") == y); // spaces, any order
    CHECK(to_string(YMonomial::one()) == "1");
    CHECK(parse_ymonomial("1") == YMonomial::one());

    XMonomial x{{4, 18, 14, 19, 2, 5, 2, 1, 9}};
    CHECK(to_string(x) == "x4^19*x2^18*x3^14*x9^9*x6^5*x1^4*x5^2*x7^2*x8");
    CHECK(parse_xmonomial(to_string(x), 9) == x);
    CHECK(to_string(XMonomial::one(3)) == "1");
    CHECK(parse_xmonomial("1", 3) == XMonomial::one(3));
    CHECK(parse_xmonomial("x2*x1^3", 3) == XMonomial{{3, 1, 0}});
    CHECK_THROWS_AS(parse_xmonomial("x4", 3), parse_error);           // index out of range
    CHECK_THROWS_AS(parse_ymonomial("y{}"), std::invalid_argument);   // empty support
    CHECK_THROWS_AS(parse_ymonomial("y{1}^0"), parse_error);          // zero exponent
}

TEST_CASE("polynomial rendering") {
    YPoly p;
    p.add(Y({{{5}, 3}, {{2, 5}, 2}, {{1, 2, 4, 5}, 2}}), -1);
    p.add(Y({{{5}, 3}, {{3, 5}, 2}, {{2, 3, 4, 5}, 2}}), 1);
    CHECK(to_string(p) ==
          "-y{1,2,4,5}^2*y{2,5}^2*y{5}^3 + y{2,3,4,5}^2*y{3,5}^2*y{5}^3");
    CHECK(to_string(YPoly()) == "0");
    XPoly q;
    q.add(XMonomial{{2, 0, 1}}, Rational(1, 2));
    CHECK(to_string(q) == "1/2*x1^2*x3");
}
