#ifndef KFREE_STURM_HPP
#define KFREE_STURM_HPP

#include "kfree/poly.hpp"

#include <optional>
#include <vector>

namespace kfree {

// Sturm sequence of a squarefree-ized polynomial (the sequence is built on
// f / gcd(f, f') so repeated roots are counted once).
struct SturmSequence {
    std::vector<ZPoly> seq;

    explicit SturmSequence(const ZPoly& f);

    // Number of sign variations at x (exact rational evaluation).
    int variations_at(const mpq_class& x) const;
    int variations_at_minus_inf() const;
    int variations_at_plus_inf() const;

    // Count of distinct real roots in the half-open interval (a, b], a < b.
    int count_roots(const mpq_class& a, const mpq_class& b) const;
    int count_real_roots() const;
};

// Distinct real roots of f isolated into disjoint intervals (lo, hi] with
// rational endpoints of width <= width.  Exact; roots exactly at a sample
// point are returned as degenerate intervals lo == hi.
struct RootInterval {
    mpq_class lo, hi; // contains exactly one root; lo == hi if root is rational
};
std::vector<RootInterval> isolate_real_roots(const ZPoly& f, const mpq_class& width);

// Exact range test: is f(t) <= bound for every real t in [0, 1]?
bool poly_le_on_unit_interval(const ZPoly& f, const mpz_class& bound);

} // namespace kfree

#endif
