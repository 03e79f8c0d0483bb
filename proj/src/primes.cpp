#include "kfree/primes.hpp"

#include <algorithm>
#include <stdexcept>

namespace kfree {

std::vector<uint64_t> primes_up_to(uint64_t n) {
    std::vector<uint64_t> out;
    if (n < 2) return out;
    std::vector<bool> comp(n + 1, false);
    for (uint64_t i = 2; i <= n; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (uint64_t j = i * i; j <= n; j += i) comp[j] = true;
    }
    return out;
}

const std::vector<uint64_t>& small_primes() {
    static const std::vector<uint64_t> table = primes_up_to(1000000);
    return table;
}

static bool miller_rabin_base(const mpz_class& n, const mpz_class& a) {
    // n odd >= 3, 1 < a < n-1
    mpz_class d = n - 1;
    unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
    mpz_class x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
        if (x == 1) return false;
    }
    return false;
}

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    static const long small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (long p : small) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    // The 13-base set is a proven deterministic test below 3.317e24.
    mpz_class limit("3317044064679887385961981");
    if (n < limit) {
        for (long p : small)
            if (!miller_rabin_base(n, mpz_class(p))) return false;
        return true;
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 64) != 0;
}

static mpz_class pollard_rho(const mpz_class& n) {
    // Floyd-cycle rho; n is odd, composite and coprime to the sieve primes.
    for (unsigned long c = 1; c <= 64; ++c) {
        mpz_class x = 2, y = 2, d = 1;
        auto step = [&](mpz_class& v) { v = (v * v + c) % n; };
        for (unsigned long it = 0; it < 100000000ul && d == 1; ++it) {
            step(x);
            step(y);
            step(y);
            mpz_class diff = x - y;
            if (diff < 0) diff = -diff;
            if (diff == 0) break; // cycle without factor, retry with new c
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d > 1 && d < n) return d;
    }
    throw std::runtime_error("pollard_rho: gave up");
}

static void factor_rec(const mpz_class& n, std::vector<mpz_class>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    // perfect powers first: cheap and keeps rho honest
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); ++k) {
            bool exact = false;
            mpz_class r = kth_root(n, k, exact);
            if (exact) {
                std::vector<mpz_class> sub;
                factor_rec(r, sub);
                for (unsigned i = 0; i < k; ++i)
                    out.insert(out.end(), sub.begin(), sub.end());
                return;
            }
        }
    }
    mpz_class d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

std::vector<std::pair<mpz_class, int>> factorize(const mpz_class& n0) {
    std::vector<std::pair<mpz_class, int>> out;
    mpz_class n = abs(n0);
    if (n <= 1) return out;
    for (uint64_t p : small_primes()) {
        if (mpz_class(p) * p > n) break;
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) {
        if (mpz_class(small_primes().back()) * small_primes().back() > n) {
            out.emplace_back(n, 1); // cofactor below sieve-square is prime
        } else {
            std::vector<mpz_class> big;
            factor_rec(n, big);
            std::sort(big.begin(), big.end());
            for (size_t i = 0; i < big.size();) {
                size_t j = i;
                while (j < big.size() && big[j] == big[i]) ++j;
                out.emplace_back(big[i], (int)(j - i));
                i = j;
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

mpz_class kth_root(const mpz_class& n, unsigned k, bool& exact) {
    if (n < 0) throw std::invalid_argument("kth_root of negative");
    mpz_class r;
    int ex = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    exact = ex != 0;
    return r;
}

} // namespace kfree
