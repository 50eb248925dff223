#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coinv/gs.hpp"
#include "coinv/ideal.hpp"
#include "coinv/monomials.hpp"
#include "coinv/partition.hpp"
#include "coinv/poly.hpp"

namespace coinv {

enum class Setting { X, Y };

// Grading used on the y side: Natural counts one per variable occurrence,
// Transferred weights each variable by the size of its index set (matching
// degrees on the x side under the transfer map).
enum class YGrading { Natural, Transferred };

struct Caps {
    int max_degree = 40;
    long max_slice = 200000; // monomials materialized per graded slice
};

struct DegreeRow {
    long degree = 0;
    long space_dim = 0;    // dimension of the ambient graded slice
    long ideal_dim = 0;    // rank of the ideal inside the slice
    long quotient_dim = 0; // space_dim - ideal_dim
};

struct HilbertReport {
    std::vector<DegreeRow> rows; // degrees 0 .. top nonzero quotient degree
    long total = 0;              // sum of quotient dimensions
};

// Exact rank of the degree-d slice of the defining ideal, computed by sparse
// Gaussian elimination over the rationals.  On the y side the ambient space
// is the Stanley-Reisner quotient, i.e. the span of chain monomials.
long ideal_slice_dimension(int n, int k, int r, Variant variant, Setting setting, long degree,
                           YGrading grading = YGrading::Natural, const Caps& caps = {});

DegreeRow quotient_slice(int n, int k, int r, Variant variant, Setting setting, long degree,
                         YGrading grading = YGrading::Natural, const Caps& caps = {});

// Full graded dimension table, stopping at the first empty quotient slice.
HilbertReport hilbert_oracle(int n, int k, int r, Variant variant, Setting setting,
                             YGrading grading = YGrading::Transferred, const Caps& caps = {});

// Hilbert series predicted by the statistics: histogram of comaj over ordered
// set partitions (Variant::S) or over the faces of the extended complex
// (Variant::R).  Index = degree.
std::vector<long> hilbert_combinatorial(int n, int k, int r, Variant variant);

struct BasisCertification {
    bool passed = false;
    long basis_size = 0;
    long witnesses_checked = 0;
    std::vector<DegreeRow> by_degree; // natural y-degree slices
    std::vector<std::string> failures;
};

// Certifies that the descent-monomial style basis is a vector-space basis of
// the quotient: per-degree counts match the oracle, basis images are linearly
// independent modulo the ideal, and every forbidden-pattern monomial is the
// leading term of an explicit ideal element.
BasisCertification certify_standard_basis(int n, int k, int r, Variant variant,
                                          const Caps& caps = {});

// For a monomial matching one of the forbidden patterns, returns an explicit
// element of the defining ideal whose leading monomial (graded lex) is the
// input.  Throws certification_error if the construction fails to verify.
YPoly leading_witness(const YMonomial& m, int n, int k, int r, Variant variant);

// ---- permutation actions and characters (r = 1) ----

std::vector<Partition> conjugacy_classes(int n);
// A representative permutation with the given cycle type, built from
// consecutive cycles; entry i is the image of i and entry 0 is unused.
std::vector<int> class_representative(int n, const Partition& cycle_type);

XMonomial permute_x(const XMonomial& m, const std::vector<int>& sigma);
YMonomial permute_y(const YMonomial& m, const std::vector<int>& sigma);

// Graded trace of the representative of the cycle type acting on the
// quotient, computed by rewriting each permuted basis element to normal form.
// Degrees use the x grading, resp. the transferred y grading.
std::map<long, long long> graded_character(int n, int k, Variant variant, Setting setting,
                                           const Partition& cycle_type);

struct StratumReport {
    Partition mu;
    Admissibility cls = Admissibility::admissible;
    long dimension = 0;
    std::map<Partition, long long> traces; // cycle type -> trace on the stratum
};

// Character of the subquotient spanned by basis elements with a fixed
// exponent partition, using the dominance filtration (r = 1).
StratumReport filtration_stratum_report(int n, int k, Variant variant, Setting setting,
                                        const Partition& mu);

} // namespace coinv
