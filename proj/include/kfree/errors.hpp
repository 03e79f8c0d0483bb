#ifndef KFREE_ERRORS_HPP
#define KFREE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kfree {

// Malformed or out-of-contract input (bad form literal, zero discriminant
// where forbidden, prime bound too small for disc(F), ...).  CLI exit 2.
struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& w) : std::runtime_error(w) {}
};

// A theorem hypothesis does not hold (k too small for r, k-deficient form).
// CLI exit 3 unless --force.
struct HypothesisError : std::runtime_error {
    explicit HypothesisError(const std::string& w) : std::runtime_error(w) {}
};

// A resource guard tripped (enumeration too large, rho modulus too big).
// CLI exit 4; KFREE_MAX_CELLS raises the guards.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& w) : std::runtime_error(w) {}
};

// Numerical machinery ran out of precision escalations.  Should not occur:
// every accepted result is verified exactly, so this signals only that a
// candidate could be neither confirmed nor refuted.
struct PrecisionError : std::runtime_error {
    explicit PrecisionError(const std::string& w) : std::runtime_error(w) {}
};

} // namespace kfree

#endif
