#ifndef KFREE_PRIMES_HPP
#define KFREE_PRIMES_HPP

#include <gmpxx.h>
#include <cstdint>
#include <vector>

namespace kfree {

// Primes up to n inclusive (simple sieve).
std::vector<uint64_t> primes_up_to(uint64_t n);

// Shared sieve of primes up to 10^6, built once.
const std::vector<uint64_t>& small_primes();

// Deterministic Miller-Rabin for n < 3.317e24 (fixed base set), falls back
// to 64 rounds of probabilistic MR above that (desk scale never gets there).
bool is_prime(const mpz_class& n);

// Full factorization, ascending primes with exponents.  Trial division by
// the small-prime sieve, then Pollard rho + MR on the cofactor.
std::vector<std::pair<mpz_class, int>> factorize(const mpz_class& n);

// Floor k-th root; exact flag set iff r^k == n.  Requires n >= 0.
mpz_class kth_root(const mpz_class& n, unsigned k, bool& exact);

} // namespace kfree

#endif
