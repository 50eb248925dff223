#pragma once
#include <stdexcept>
#include <string>

namespace coinv {

// Precondition violations (bad colors, malformed partitions, out-of-range
// parameters, ...) throw std::invalid_argument or std::domain_error directly.
// The types below mark conditions callers may want to catch separately.

// A monomial was required to be a multichain (nested supports) but is not.
struct not_multichain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// An internal cross-check failed: two independent routes disagreed, an
// invariant the rewriting relies on broke, or a basis certification failed.
struct certification_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A configured resource cap (degree, slice size, recursion depth) was hit.
struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text input did not match the expected grammar.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace coinv
