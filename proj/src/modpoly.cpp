#include "kfree/modpoly.hpp"

#include <random>
#include <stdexcept>

namespace kfree {

using u64 = uint64_t;
using u128 = unsigned __int128;

static u64 mulmod(u64 a, u64 b, u64 p) { return (u64)((u128)a * b % p); }

static u64 powmod_u64(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

static u64 invmod(u64 a, u64 p) { return powmod_u64(a % p, p - 2, p); }

void PPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

u64 PPoly::eval(u64 x) const {
    u64 acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = (mulmod(acc, x, p) + c[i]) % p;
    return acc;
}

PPoly PPoly::derivative() const {
    if (c.size() <= 1) return PPoly(p, {});
    std::vector<u64> d(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) d[i - 1] = mulmod(c[i], i % p, p);
    return PPoly(p, std::move(d));
}

PPoly PPoly::monic() const {
    if (is_zero()) return *this;
    u64 inv = invmod(c.back(), p);
    std::vector<u64> d(c.size());
    for (size_t i = 0; i < c.size(); ++i) d[i] = mulmod(c[i], inv, p);
    return PPoly(p, std::move(d));
}

PPoly reduce_mod_p(const ZPoly& f, u64 p) {
    std::vector<u64> d(f.c.size());
    mpz_class t;
    for (size_t i = 0; i < f.c.size(); ++i) {
        t = f.c[i] % (long)p; // may be negative
        if (t < 0) t += (long)p;
        d[i] = t.get_ui();
    }
    return PPoly(p, std::move(d));
}

PPoly mul(const PPoly& a, const PPoly& b) {
    if (a.is_zero() || b.is_zero()) return PPoly(a.p, {});
    std::vector<u64> r(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r[i + j] = (r[i + j] + mulmod(a.c[i], b.c[j], a.p)) % a.p;
    }
    return PPoly(a.p, std::move(r));
}

PPoly sub(const PPoly& a, const PPoly& b) {
    std::vector<u64> r(std::max(a.c.size(), b.c.size()), 0);
    u64 p = a.p ? a.p : b.p;
    for (size_t i = 0; i < r.size(); ++i) {
        u64 x = i < a.c.size() ? a.c[i] : 0;
        u64 y = i < b.c.size() ? b.c[i] : 0;
        r[i] = (x + p - y) % p;
    }
    return PPoly(p, std::move(r));
}

void divmod(const PPoly& a, const PPoly& b, PPoly& q, PPoly& r) {
    if (b.is_zero()) throw std::logic_error("PPoly divmod by zero");
    u64 p = a.p;
    std::vector<u64> rr = a.c;
    std::vector<u64> qq(a.deg() >= b.deg() ? a.deg() - b.deg() + 1 : 0, 0);
    u64 inv = invmod(b.c.back(), p);
    for (int i = a.deg(); i >= b.deg(); --i) {
        if ((int)rr.size() <= i || rr[i] == 0) continue;
        u64 f = mulmod(rr[i], inv, p);
        qq[i - b.deg()] = f;
        for (int j = 0; j <= b.deg(); ++j) {
            u64& t = rr[i - b.deg() + j];
            t = (t + p - mulmod(f, b.c[j], p)) % p;
        }
    }
    q = PPoly(p, std::move(qq));
    r = PPoly(p, std::move(rr));
}

PPoly gcd(PPoly a, PPoly b) {
    while (!b.is_zero()) {
        PPoly q, r;
        divmod(a, b, q, r);
        a = b;
        b = r;
    }
    return a.is_zero() ? a : a.monic();
}

PPoly powmod(const PPoly& base, const mpz_class& e0, const PPoly& mod) {
    PPoly result(mod.p, {1});
    PPoly b = base;
    {
        PPoly q, r;
        divmod(b, mod, q, r);
        b = r;
    }
    mpz_class e = e0;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) {
            PPoly q, r;
            divmod(mul(result, b), mod, q, r);
            result = r;
        }
        PPoly q, r;
        divmod(mul(b, b), mod, q, r);
        b = r;
        e >>= 1;
    }
    return result;
}

// Cantor-Zassenhaus equal-degree splitting with a fixed-seed generator so
// factorizations are reproducible run to run.
static void equal_degree_split(const PPoly& f, int d, std::vector<PPoly>& out,
                               std::mt19937_64& rng) {
    if (f.deg() == d) {
        out.push_back(f.monic());
        return;
    }
    u64 p = f.p;
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, d);
    mpz_class e = (q - 1) / 2;
    while (true) {
        std::vector<u64> rc(f.deg());
        for (auto& x : rc) x = rng() % p;
        PPoly r(p, std::move(rc));
        if (r.deg() < 1) continue;
        PPoly g = gcd(f, r);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            equal_degree_split(g, d, out, rng);
            PPoly qq, rr;
            divmod(f, g, qq, rr);
            equal_degree_split(qq, d, out, rng);
            return;
        }
        PPoly h = powmod(r, e, f);
        h.c.resize(std::max<size_t>(h.c.size(), 1), 0);
        if (h.c.empty()) h.c.push_back(0);
        h.c[0] = (h.c[0] + p - 1) % p; // h - 1
        h.trim();
        g = gcd(f, h);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            equal_degree_split(g, d, out, rng);
            PPoly qq, rr;
            divmod(f, g, qq, rr);
            equal_degree_split(qq, d, out, rng);
            return;
        }
    }
}

std::vector<PPoly> factor_squarefree_mod_p(const PPoly& f0) {
    std::vector<PPoly> out;
    PPoly f = f0.monic();
    if (f.deg() < 1) return out;
    u64 p = f.p;
    std::mt19937_64 rng(0x5eed5eed1234ull);
    // distinct-degree: h = x^(p^i) mod f
    PPoly x(p, {0, 1});
    PPoly h = x;
    int i = 0;
    while (f.deg() >= 1) {
        ++i;
        if (f.deg() < 2 * i) {
            out.push_back(f.monic());
            break;
        }
        h = powmod(h, mpz_class((unsigned long)p), f);
        PPoly g = gcd(f, sub(h, x));
        if (g.deg() > 0) {
            equal_degree_split(g, i, out, rng);
            PPoly q, r;
            divmod(f, g, q, r);
            f = q;
            PPoly qq, rr;
            divmod(h, f, qq, rr);
            h = rr;
        }
    }
    return out;
}

std::vector<u64> roots_mod_p(const ZPoly& f, u64 p) {
    std::vector<u64> out;
    PPoly fp = reduce_mod_p(f, p);
    if (fp.is_zero()) {
        for (u64 r = 0; r < p; ++r) out.push_back(r);
        return out;
    }
    if (fp.deg() < 1) return out;
    if (p < 2048) {
        for (u64 r = 0; r < p; ++r)
            if (fp.eval(r) == 0) out.push_back(r);
        return out;
    }
    // gcd with x^p - x isolates the distinct roots
    PPoly x(p, {0, 1});
    PPoly xp = powmod(x, mpz_class((unsigned long)p), fp);
    PPoly lin = gcd(fp, sub(xp, x));
    if (lin.deg() < 1) return out;
    std::mt19937_64 rng(0xab5eedull ^ p);
    std::vector<PPoly> linear;
    if (lin.deg() == 1)
        linear.push_back(lin.monic());
    else
        equal_degree_split(lin.monic(), 1, linear, rng);
    for (const auto& l : linear) {
        // x + c -> root p - c
        out.push_back((p - l.c[0] % p) % p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Count roots of f mod p^k lying above a residue r mod p where f(r) = 0 mod p.
// Writes f(r + p u) = p^v h(u) and recurses on h mod p^(k-v).
static mpz_class count_above(const ZPoly& f, u64 p, unsigned k, u64 r);

static mpz_class count_all(const ZPoly& f, u64 p, unsigned k) {
    if (k == 0) return 1;
    mpz_class total = 0;
    PPoly fp = reduce_mod_p(f, p);
    if (fp.is_zero()) {
        // every residue mod p is a root of f mod p
        for (u64 r = 0; r < p; ++r) total += count_above(f, p, k, r);
        return total;
    }
    for (u64 r : roots_mod_p(f, p)) total += count_above(f, p, k, r);
    return total;
}

static mpz_class count_above(const ZPoly& f, u64 p, unsigned k, u64 r) {
    if (k <= 1) return 1; // r itself, counted mod p
    // Nonsingular root: unique Hensel lift all the way up.
    ZPoly fd = f.derivative();
    mpz_class fdr = fd.eval(mpz_class((unsigned long)r));
    if (fdr % (long)p != 0) return 1;
    // Singular: substitute t = r + p*u, pull out the p-content.
    ZPoly g = compose_linear(f, mpz_class((unsigned long)p), mpz_class((unsigned long)r));
    // v = min(k, v_p(content(g)))
    unsigned v = 0;
    {
        mpz_class cont = g.content();
        mpz_class pz((unsigned long)p);
        while (v < k && cont % pz == 0) {
            cont /= pz;
            ++v;
        }
    }
    mpz_class pk1;
    mpz_ui_pow_ui(pk1.get_mpz_t(), p, k - 1); // u ranges over p^(k-1) residues
    if (v >= k) return pk1;
    mpz_class pv;
    mpz_ui_pow_ui(pv.get_mpz_t(), p, v);
    std::vector<mpz_class> hc(g.c.size());
    for (size_t i = 0; i < g.c.size(); ++i) hc[i] = g.c[i] / pv;
    ZPoly h(std::move(hc));
    // #roots of h mod p^(k-v), each lifting to p^(v-1) values of u mod p^(k-1)
    mpz_class sub = count_all(h, p, k - v);
    mpz_class lift;
    mpz_ui_pow_ui(lift.get_mpz_t(), p, v - 1);
    return sub * lift;
}

mpz_class count_roots_mod_prime_power(const ZPoly& f, u64 p, unsigned k,
                                      long restrict_root) {
    if (k == 0) return 1;
    if (f.is_zero()) {
        mpz_class pk;
        mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
        return restrict_root >= 0 ? pk / (long)p : pk;
    }
    if (restrict_root >= 0) {
        mpz_class fr = f.eval(mpz_class(restrict_root));
        if (fr % (long)p != 0) return 0;
        return count_above(f, p, k, (u64)restrict_root);
    }
    return count_all(f, p, k);
}

} // namespace kfree
