#ifndef KFREE_MODPOLY_HPP
#define KFREE_MODPOLY_HPP

#include "kfree/poly.hpp"

#include <cstdint>
#include <vector>

namespace kfree {

// Dense polynomial over Z/p for odd prime p < 2^31, little-endian coeffs.
struct PPoly {
    uint64_t p = 0;
    std::vector<uint64_t> c;

    PPoly() = default;
    PPoly(uint64_t prime, std::vector<uint64_t> coeffs)
        : p(prime), c(std::move(coeffs)) { trim(); }

    void trim();
    bool is_zero() const { return c.empty(); }
    int deg() const { return (int)c.size() - 1; }
    uint64_t eval(uint64_t x) const;
    PPoly derivative() const;
    PPoly monic() const;
};

PPoly reduce_mod_p(const ZPoly& f, uint64_t p);
PPoly mul(const PPoly& a, const PPoly& b);
PPoly sub(const PPoly& a, const PPoly& b);
void divmod(const PPoly& a, const PPoly& b, PPoly& q, PPoly& r);
PPoly gcd(PPoly a, PPoly b); // monic gcd
PPoly powmod(const PPoly& base, const mpz_class& e, const PPoly& mod);

// Monic irreducible factors of a squarefree monic f mod p, with multiplicity
// 1 each; deterministic (fixed-seed splitting).  Requires odd p.
std::vector<PPoly> factor_squarefree_mod_p(const PPoly& f);

// Distinct roots of f mod p, sorted. f need not be squarefree.
std::vector<uint64_t> roots_mod_p(const ZPoly& f, uint64_t p);

// |{ t mod p^k : f(t) = 0 mod p^k }| by Hensel-style recursion; exact.
// If restrict_root >= 0, only t = restrict_root (mod p) are counted.
mpz_class count_roots_mod_prime_power(const ZPoly& f, uint64_t p, unsigned k,
                                      long restrict_root = -1);

} // namespace kfree

#endif
