#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "coinv/text.hpp"
#include "coinv/words.hpp"

using namespace coinv;

namespace {

Word W(int n, int r, std::vector<Letter> ls) { return make_word(n, r, std::move(ls)); }

// the running 9-letter example at r = 4
Word example9() {
    return W(9, 4, {{4, 3}, {2, 2}, {3, 2}, {9, 1}, {6, 1}, {1, 0}, {5, 2}, {7, 2}, {8, 1}});
}

} // namespace

TEST_CASE("letter order is color-heavy") {
    // higher color means smaller letter; ties break by value
    CHECK(compare_letters({2, 2}, {4, 0}) < 0);
    CHECK(compare_letters({4, 0}, {2, 2}) > 0);
    CHECK(compare_letters({2, 1}, {3, 1}) < 0);
    CHECK(compare_letters({5, 2}, {5, 2}) == 0);
    CHECK(compare_letters({7, 2}, {6, 0}) < 0);
}

TEST_CASE("descents and major index of a colored word") {
    Word w = W(5, 4, {{3, 3}, {1, 1}, {5, 2}, {2, 2}, {4, 0}});
    CHECK(descent_set(w) == std::vector<int>{2, 3});
    CHECK(des(w) == 2);
    CHECK(maj(w) == 28); // (3+1+2+2+0) + 4*(2+3)
}

TEST_CASE("major index of the nine-letter example") {
    Word g = example9();
    CHECK(descent_set(g) == std::vector<int>{4, 6});
    CHECK(g.color_sum() == 14);
    CHECK(maj(g) == 54); // 14 + 4*(4+6)
}

TEST_CASE("word validation") {
    CHECK_THROWS_AS(W(3, 2, {{1, 0}, {1, 1}}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(W(3, 2, {{1, 2}}).validate(), std::invalid_argument); // color out of range
    CHECK_THROWS_AS(W(3, 2, {{4, 0}}).validate(), std::invalid_argument); // value out of range
    CHECK_NOTHROW(W(3, 2, {{2, 1}, {3, 0}}).validate());                  // partial support is fine
}

TEST_CASE("ordered set partitions: validity and comaj") {
    Osp p{example9(), {3, 2}};
    REQUIRE(osp_valid(p, 5));
    // des(g) = 2 < 5, lambda has at most 5-2-1 = 2 parts, each at most 9-5 = 4
    CHECK_FALSE(osp_valid(Osp{example9(), {5}}, 5));          // part too large
    CHECK_FALSE(osp_valid(Osp{example9(), {2, 1, 1}}, 5));    // too many parts
    CHECK_FALSE(osp_valid(p, 2));                             // des(g) too large for k = 2
    CHECK(comaj_osp(p, 5) == 74);                             // 54 + 4*|{3,2}|
}

TEST_CASE("blocks of the ascent-starred model") {
    Osp p{example9(), {3, 2}};
    auto blocks = osp_blocks(p, 5);
    CHECK(blocks_to_string(blocks) == "{4^3,2^2,3^2}|{9^1}|{6^1,1^0}|{5^2}|{7^2,8^1}");
    CHECK(osp_from_blocks(9, 4, blocks) == p);
}

TEST_CASE("block round trip is exhaustive on small parameters") {
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= n; ++k)
            for (int r = 1; r <= 2; ++r)
                for_each_osp(n, k, r, [&](const Osp& p) {
                    CHECK(osp_from_blocks(n, r, osp_blocks(p, k)) == p);
                });
}

TEST_CASE("faces: validity and comaj") {
    // ({1,4} | 5^2 2^1 3^0 | 7^2 | 6^0) with r = 3, k = 3
    Face f{Subset::of({1, 4}), W(7, 3, {{5, 2}, {2, 1}, {3, 0}, {7, 2}, {6, 0}}), {2}};
    REQUIRE(face_valid(f, 3));
    CHECK(maj(f.word) == 14);           // colors 5, descent at 3
    CHECK(comaj_face(f, 3) == 38);      // 3*3*2 + 14 + 3*2
    // support must be the complement of the zero block
    Face bad = f;
    bad.zero = Subset::of({1, 2});
    CHECK_FALSE(face_valid(bad, 3));
    // zero block too large: |Z| <= n - k
    Face big{Subset::of({1, 2, 3, 4, 5}), W(7, 3, {{6, 0}, {7, 0}}), {}};
    CHECK_FALSE(face_valid(big, 3));
}

TEST_CASE("weight sequence model for the one-color major index") {
    // (24|6|1|357) encoded as (2461357, (1,1)); weights (0,1,2,3,3,3,4)
    Word g = W(7, 1, {{2, 0}, {4, 0}, {6, 0}, {1, 0}, {3, 0}, {5, 0}, {7, 0}});
    Osp p{g, {1, 1}};
    REQUIRE(osp_valid(p, 4));
    CHECK(blocks_to_string(osp_blocks(p, 4)) == "{2^0,4^0}|{6^0}|{1^0}|{3^0,5^0,7^0}");
    CHECK(hrs_maj(p, 4) == 10);
    CHECK(comaj_osp(p, 4) == 5);
    // comaj + hrs_maj = (n-k)(k-1) + k(k-1)/2
    CHECK(comaj_osp(p, 4) + hrs_maj(p, 4) == 3 * 3 + 6);
}

TEST_CASE("comaj and the one-color major index are complementary") {
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) {
            long offset = (long)(n - k) * (k - 1) + (long)k * (k - 1) / 2;
            for_each_osp(n, k, 1, [&](const Osp& p) {
                CHECK(comaj_osp(p, k) + hrs_maj(p, k) == offset);
            });
        }
}

TEST_CASE("hrs_maj rejects more than one color") {
    Osp p{W(2, 2, {{1, 0}, {2, 0}}), {}};
    CHECK_THROWS_AS(hrs_maj(p, 1), std::domain_error);
}

TEST_CASE("enumeration counts match the closed formulas") {
    for (int n = 1; n <= 4; ++n)
        for (int r = 1; r <= 2; ++r) {
            long words = 0;
            std::set<std::string> seen;
            for_each_word(n, r, [&](const Word& w) {
                ++words;
                w.validate();
                CHECK(w.support() == Subset::prefix(n));
                seen.insert(to_string(w));
            });
            long expect = 1;
            for (int i = 1; i <= n; ++i) expect *= i * r;
            CHECK(words == expect);
            CHECK((long)seen.size() == words);
            for (int k = 0; k <= n; ++k) {
                long osps = 0;
                for_each_osp(n, k, r, [&](const Osp& p) {
                    ++osps;
                    CHECK(osp_valid(p, k));
                });
                CHECK(osps == count_osps(n, k, r));
                long faces = 0;
                for_each_face(n, k, r, [&](const Face& f) {
                    ++faces;
                    CHECK(face_valid(f, k));
                });
                CHECK(faces == count_faces(n, k, r));
            }
        }
    CHECK(count_osps(4, 2, 1) == 14); // 2! * S(4,2)
    CHECK(count_osps(9, 5, 4) == 262144L * 120 * 6951); // 4^9 * 5! * S(9,5)
}

TEST_CASE("no set partitions with zero blocks, one face with zero blocks") {
    CHECK(count_osps(3, 0, 2) == 0);
    CHECK(count_faces(3, 0, 2) == 1);
    auto faces = enumerate_faces(3, 0, 2);
    REQUIRE(faces.size() == 1);
    CHECK(faces[0].zero == Subset::prefix(3));
    CHECK(faces[0].word.length() == 0);
    CHECK(comaj_face(faces[0], 0) == 0);
}

TEST_CASE("osps inject into faces with empty zero block") {
    for (int k = 1; k <= 3; ++k) {
        long with_empty_zero = 0;
        for_each_face(3, k, 2, [&](const Face& f) {
            if (f.zero.empty()) ++with_empty_zero;
        });
        CHECK(with_empty_zero == count_osps(3, k, 2));
    }
}
