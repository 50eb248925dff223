#pragma once
#include <functional>
#include <vector>

#include "coinv/partition.hpp"
#include "coinv/subset.hpp"

namespace coinv {

// One letter i^c of an r-colored word: value i in [1..n], color c in [0..r-1].
struct Letter {
    int value = 0;
    int color = 0;
    friend bool operator==(const Letter&, const Letter&) = default;
};

// Total order on colored letters:
//   1^(r-1) < 2^(r-1) < ... < n^(r-1) < 1^(r-2) < ... < 1^0 < 2^0 < ... < n^0
// i.e. higher color means smaller, ties broken by value.
// Returns negative / 0 / positive as a < b / a == b / a > b.
inline int compare_letters(const Letter& a, const Letter& b) {
    if (a.color != b.color) return a.color > b.color ? -1 : 1;
    return a.value - b.value;
}

// An r-colored word with distinct values drawn from [1..n].  A word for an
// element of the full group uses every value once; faces use words on a
// proper subset of [1..n].
struct Word {
    int n = 0; // ambient ground-set size
    int r = 1; // number of colors
    std::vector<Letter> letters;

    int length() const { return int(letters.size()); }
    Subset support() const;
    long color_sum() const;
    // throws std::invalid_argument if values repeat / out of range, or a
    // color lies outside [0, r-1]
    void validate() const;
    friend bool operator==(const Word&, const Word&) = default;
};

Word make_word(int n, int r, std::vector<Letter> letters);

// Descent positions {i : w_i > w_{i+1}}, 1-based.
std::vector<int> descent_set(const Word& w);
int des(const Word& w);

// maj(w) = sum of colors + r * (sum of descent positions)
long maj(const Word& w);

// Ordered set partition of [1..n] into k blocks, encoded as (g, lambda):
// g a word using every value, des(g) < k, lambda a partition with at most
// k - des(g) - 1 parts, each part at most n - k.  Each part of lambda records
// how many starred ascents precede one unstarred ascent; block boundaries sit
// at descents and unstarred ascents.
struct Osp {
    Word word;
    Partition lambda;
    friend bool operator==(const Osp&, const Osp&) = default;
};

// Face of dimension k: an ordered set partition of [1..n] whose first block Z
// may be uncolored ("zero block", possibly empty), followed by k colored
// blocks encoded as (word on [1..n] \ Z, lambda).
struct Face {
    Subset zero;
    Word word;
    Partition lambda;
    friend bool operator==(const Face&, const Face&) = default;
};

bool osp_valid(const Osp& p, int k);
void check_osp(const Osp& p, int k);
bool face_valid(const Face& f, int k);
void check_face(const Face& f, int k);

// comaj((g,lambda)) = maj(g) + r|lambda|
long comaj_osp(const Osp& p, int k);
// comaj((Z,g,lambda)) = k r |Z| + maj(g) + r|lambda|
long comaj_face(const Face& f, int k);

// Blocks of the ordered set partition, left to right, each block sorted
// increasingly in the letter order.
std::vector<std::vector<Letter>> osp_blocks(const Osp& p, int k);
Osp osp_from_blocks(int n, int r, const std::vector<std::vector<Letter>>& blocks);

// For r = 1 only: the major index used in the Hilbert-series literature for
// ordered set partitions.  Sum over ascent positions i of w_i, where w_i is
// the number of blocks ending at or before position i.
long hrs_maj(const Osp& p, int k);

// ---- enumeration ------------------------------------------------------
// Words run in lexicographic order of (underlying permutation, color
// vector); set partitions and faces in lexicographic order of
// (zero block as a sorted list, word, lambda).

void for_each_word(int n, int r, const std::function<void(const Word&)>& fn);
// words on a fixed support (used for faces)
void for_each_word_on(int n, int r, Subset support, const std::function<void(const Word&)>& fn);
void for_each_osp(int n, int k, int r, const std::function<void(const Osp&)>& fn);
void for_each_face(int n, int k, int r, const std::function<void(const Face&)>& fn);

std::vector<Word> enumerate_words(int n, int r);
std::vector<Osp> enumerate_osps(int n, int k, int r);
std::vector<Face> enumerate_faces(int n, int k, int r);

// r^n * k! * S(n,k), the number of k-block ordered set partitions
long count_osps(int n, int k, int r);
long count_faces(int n, int k, int r);
long stirling2(int n, int k);

} // namespace coinv
