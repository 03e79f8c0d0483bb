#include "kfree/localdensity.hpp"

#include "kfree/errors.hpp"
#include "kfree/modpoly.hpp"
#include "kfree/primes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace kfree {

uint64_t max_cells_guard() {
    if (const char* env = std::getenv("KFREE_MAX_CELLS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 100000000ull; // 1e8
}

mpz_class rho(const BinaryForm& F, const mpz_class& m) {
    if (m < 1) throw InvalidInput("rho: modulus must be >= 1");
    if (m == 1) return 1;
    if (m * m > mpz_class((unsigned long)max_cells_guard()))
        throw ResourceError("rho: m^2 exceeds the cell guard (set KFREE_MAX_CELLS)");
    uint64_t mm = mpz_get_ui(m.get_mpz_t());
    int d = F.degree;
    // row polynomial p_j(i) = sum_s c_{d-s} j^{d-s} i^s evaluated over all i
    // by forward differences: d additions per cell, no multiplications.
    std::vector<uint64_t> base(d + 1); // c_{d-s} j^{d-s} mod m, s = 0..d
    uint64_t count = 0;
    for (uint64_t j = 0; j < mm; ++j) {
        // coefficients of the row polynomial
        mpz_class jp = 1;
        for (int s = d; s >= 0; --s) {
            mpz_class t = F.coeffs[d - s] * jp;
            mpz_mod(t.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
            base[s] = mpz_get_ui(t.get_mpz_t());
            jp = (jp * j) % m;
        }
        // initial values p(0..d) then the difference table
        std::vector<uint64_t> val(d + 1);
        for (int i = 0; i <= d; ++i) {
            unsigned __int128 acc = 0;
            for (int s = d; s >= 0; --s) acc = (acc * (uint64_t)i + base[s]) % mm;
            val[i] = (uint64_t)acc;
        }
        std::vector<uint64_t> diff(val);
        for (int l = 1; l <= d; ++l)
            for (int i = d; i >= l; --i)
                diff[i] = (diff[i] + mm - diff[i - 1]) % mm;
        // diff[l] = Delta^l p(0); stream i = 0..m-1
        uint64_t remaining = mm;
        std::vector<uint64_t> D(diff);
        while (remaining--) {
            if (D[0] == 0) ++count;
            for (int l = 0; l < d; ++l) {
                D[l] += D[l + 1];
                if (D[l] >= mm) D[l] -= mm;
            }
        }
    }
    return mpz_class(count);
}

mpz_class rho_prime_power(const BinaryForm& F, uint64_t p, unsigned k) {
    if (k == 0) return 1;
    if (F.is_zero()) throw InvalidInput("rho_prime_power: zero form");
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
    // the naive oracle guards the recursion at small sizes
    if (pk * pk <= 1000000) return rho(F, pk);
    int d = F.degree;
    // (a) pairs with p | gcd(x,y): x = p x', y = p y' and F(px',py') =
    // p^d F(x',y'); for k <= d every one of the p^{2(k-1)} pairs works.
    mpz_class part_a;
    if (k <= (unsigned)d) {
        mpz_ui_pow_ui(part_a.get_mpz_t(), p, 2 * (k - 1));
    } else {
        mpz_class sub = rho_prime_power(F, p, k - d);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), p, 2 * (unsigned)(d - 1));
        part_a = sub * scale;
    }
    // (b) primitive pairs: p does not divide y (roots of f = F(t,1)), or
    // p | y and p does not divide x (roots s = 0 mod p of g = F(1,s)).
    ZPoly f = F.dehomogenize_x();
    ZPoly g = F.dehomogenize_y();
    mpz_class roots_f = count_roots_mod_prime_power(f, p, k);
    mpz_class roots_g0 = count_roots_mod_prime_power(g, p, k, 0);
    mpz_class units;
    mpz_ui_pow_ui(units.get_mpz_t(), p, k - 1);
    units *= (unsigned long)(p - 1);
    return part_a + units * (roots_f + roots_g0);
}

EulerProductResult lambda(const BinaryForm& F, unsigned k, uint64_t P) {
    if (k < 2) throw InvalidInput("lambda: k must be >= 2");
    int d = F.degree;
    if (P < 2 * (uint64_t)(d + 1))
        throw InvalidInput("lambda: prime bound below 2(d+1)");
    mpz_class disc = discriminant(F);
    if (disc == 0) throw InvalidInput("lambda: zero discriminant");
    // every prime factor of disc must be <= P for the tail bound to hold
    {
        mpz_class rem = abs(disc);
        for (uint64_t p : primes_up_to(std::min<uint64_t>(P, 1000000))) {
            if (p > P) break;
            while (rem % (unsigned long)p == 0) rem /= (unsigned long)p;
            if (rem == 1) break;
        }
        if (rem != 1) {
            // a prime factor > min(P, 1e6): for P beyond the sieve, factor it
            bool big_ok = false;
            if (P > 1000000) {
                auto fac = factorize(rem);
                big_ok = true;
                for (const auto& [q, e] : fac)
                    if (q > (unsigned long)P) big_ok = false;
            }
            if (!big_ok)
                throw InvalidInput(
                    "lambda: prime bound too small, disc(F) has a prime factor above it");
        }
    }
    EulerProductResult out;
    out.prime_bound = P;
    double value = 1.0;
    for (uint64_t p : primes_up_to(P)) {
        mpz_class r = rho_prime_power(F, p, k);
        double pk = std::pow((double)p, (double)k);
        double factor = 1.0 - mpz_get_d(r.get_mpz_t()) / (pk * pk);
        if (factor < 0) factor = 0; // rho <= p^{2k} always; guard rounding
        value *= factor;
        out.per_prime.emplace_back(p, r);
    }
    out.value = value;
    // |log tail| <= 2 (d+1) sum_{p > P} 1/p^2 <= 2(d+1)/(P-1): each factor is
    // 1 - x with x = rho/p^{2k} <= (d+1)/p^2 <= 1/2 (P >= 2(d+1)), and
    // -log(1-x) <= 2x there.  Absolute error |lambda - value| <= value * that.
    double t = 2.0 * (d + 1) / (double)(P - 1);
    out.tail_bound = value * t + 1e-14; // plus double accumulation slack
    return out;
}

mpz_class fixed_divisor(const BinaryForm& F) {
    if (F.is_zero()) throw InvalidInput("fixed_divisor: zero form");
    // Every value F(x,y) is an integer combination of the values on the grid
    // 0 <= a,b <= d (double finite differences in the binomial basis), so
    // the grid gcd is exactly gcd{F(a,b)}.
    int d = F.degree;
    mpz_class g = 0;
    for (int a = 0; a <= d && g != 1; ++a)
        for (int b = 0; b <= d && g != 1; ++b) {
            mpz_class v = F.evaluate(a, b);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        }
    return g;
}

std::optional<mpz_class> is_k_deficient(const BinaryForm& F, unsigned k) {
    if (k < 2) throw InvalidInput("is_k_deficient: k must be >= 2");
    mpz_class G = fixed_divisor(F);
    if (G == 0) return std::nullopt; // unreachable for nonzero F
    for (const auto& [p, e] : factorize(G)) {
        if ((unsigned)e >= k) return p;
    }
    return std::nullopt;
}

} // namespace kfree
