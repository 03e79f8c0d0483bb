#ifndef KFREE_LOCALDENSITY_HPP
#define KFREE_LOCALDENSITY_HPP

#include "kfree/forms.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace kfree {

// Truncated Euler product lambda_{F,k} = prod_p (1 - rho_F(p^k)/p^{2k}).
struct EulerProductResult {
    double value = 0;        // prod over p <= prime_bound
    uint64_t prime_bound = 0;
    double tail_bound = 0;   // certified |lambda - value| control (see lambda())
    std::vector<std::pair<uint64_t, mpz_class>> per_prime; // (p, rho_F(p^k))
};

// |{(i,j) in [0,m)^2 : F(i,j) = 0 mod m}| by plain enumeration (the oracle).
// Guarded at m^2 > max_cells (default 1e8, override KFREE_MAX_CELLS).
mpz_class rho(const BinaryForm& F, const mpz_class& m);

// rho_F(p^k) by the lifting recursion, split by p | gcd(x,y); falls back to
// the naive oracle for p^{2k} <= 1e6.
mpz_class rho_prime_power(const BinaryForm& F, uint64_t p, unsigned k);

// Truncated lambda with certified tail bound.  Requires P >= 2(d+1) and all
// primes dividing disc(F) at most P (signals InvalidInput otherwise).
EulerProductResult lambda(const BinaryForm& F, unsigned k, uint64_t P);

// A prime p with p^k dividing every value of F, if one exists.  Computed
// exactly through the fixed divisor of F (the gcd of the values on the
// (d+1) x (d+1) grid, which every value of F is an integer combination of).
std::optional<mpz_class> is_k_deficient(const BinaryForm& F, unsigned k);

// Exact fixed divisor gcd{F(a,b) : a,b in Z}.
mpz_class fixed_divisor(const BinaryForm& F);

uint64_t max_cells_guard(); // resource guard, honours KFREE_MAX_CELLS

} // namespace kfree

#endif
