#include "kfree/polyfactor.hpp"

#include "kfree/errors.hpp"
#include "kfree/modpoly.hpp"
#include "kfree/primes.hpp"

#include <algorithm>
#include <stdexcept>

namespace kfree {

namespace {

// --- arithmetic mod m on mpz polynomials (coefficients in [0, m)) ---

std::vector<mpz_class> reduce_mod(const ZPoly& f, const mpz_class& m) {
    std::vector<mpz_class> c(f.c.size());
    for (size_t i = 0; i < c.size(); ++i) {
        mpz_mod(c[i].get_mpz_t(), f.c[i].get_mpz_t(), m.get_mpz_t());
    }
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

ZPoly lift_ppoly(const PPoly& f) {
    std::vector<mpz_class> c(f.c.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = (unsigned long)f.c[i];
    return ZPoly(std::move(c));
}

// Balanced representative in (-m/2, m/2].
ZPoly balanced(const ZPoly& f, const mpz_class& m) {
    std::vector<mpz_class> c(f.c.size());
    mpz_class half = m / 2;
    for (size_t i = 0; i < c.size(); ++i) {
        mpz_mod(c[i].get_mpz_t(), f.c[i].get_mpz_t(), m.get_mpz_t());
        if (c[i] > half) c[i] -= m;
    }
    return ZPoly(std::move(c));
}

// Lift the factorization fbar = prod gbar_i (monic, pairwise coprime mod p)
// of f (p does not divide lc f) to monic factors mod p^e with
// f = lc(f) * prod G_i (mod p^e).  Linear Hensel steps, one peel at a time,
// with the Bezout data kept mod p.
std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<PPoly>& gbar,
                               uint64_t p, unsigned e) {
    mpz_class pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), p, e);
    std::vector<ZPoly> out;
    ZPoly cur = f;
    for (size_t idx = 0; idx < gbar.size(); ++idx) {
        if (idx + 1 == gbar.size()) {
            // last factor: cur = lc(f) * G mod p^e
            mpz_class inv;
            mpz_class lcf = f.lc() % pe;
            if (!mpz_invert(inv.get_mpz_t(), lcf.get_mpz_t(), pe.get_mpz_t()))
                throw std::logic_error("hensel_lift: lc not invertible");
            std::vector<mpz_class> c = reduce_mod(inv * cur, pe);
            out.push_back(ZPoly(std::move(c)));
            break;
        }
        PPoly G0 = gbar[idx];
        PPoly H0(p, {});
        {
            PPoly q, r;
            divmod(reduce_mod_p(cur, p), G0, q, r);
            if (!r.is_zero()) throw std::logic_error("hensel_lift: bad start");
            H0 = q;
        }
        // Bezout S*G0 + T*H0 = 1 mod p via polynomial xgcd over F_p
        PPoly S(p, {}), T(p, {});
        {
            PPoly r0 = G0, r1 = H0;
            PPoly s0(p, {1}), s1(p, {});
            PPoly t0(p, {}), t1(p, {1});
            while (!r1.is_zero()) {
                PPoly q, r;
                divmod(r0, r1, q, r);
                PPoly s2 = sub(s0, mul(q, s1));
                PPoly t2 = sub(t0, mul(q, t1));
                r0 = r1; r1 = r;
                s0 = s1; s1 = s2;
                t0 = t1; t1 = t2;
            }
            if (r0.deg() != 0)
                throw std::logic_error("hensel_lift: factors not coprime");
            uint64_t inv = 1;
            { // normalize to exactly 1
                uint64_t c0 = r0.c[0];
                // modular inverse via Fermat
                uint64_t acc = 1, b = c0 % p, ee = p - 2;
                while (ee) {
                    if (ee & 1) acc = (unsigned __int128)acc * b % p;
                    b = (unsigned __int128)b * b % p;
                    ee >>= 1;
                }
                inv = acc;
            }
            PPoly scale(p, {inv});
            S = mul(s0, scale);
            T = mul(t0, scale);
        }
        // integer lifts: G monic, H with exact leading coefficient lc(cur)
        ZPoly G = lift_ppoly(G0);
        ZPoly H = lift_ppoly(H0);
        {
            std::vector<mpz_class> hc = H.c;
            hc.resize(cur.deg() - G.deg() + 1, 0);
            hc.back() = cur.lc();
            H = ZPoly(std::move(hc));
        }
        mpz_class m = p;
        for (unsigned j = 1; j < e; ++j) {
            mpz_class m_next = m * (long)p;
            // Ebar = (cur - G*H)/m mod p
            ZPoly E = cur - G * H;
            std::vector<mpz_class> eb(E.c.size());
            for (size_t i = 0; i < E.c.size(); ++i) {
                mpz_class t = E.c[i] / m;
                mpz_mod(t.get_mpz_t(), t.get_mpz_t(), mpz_class((unsigned long)p).get_mpz_t());
                eb[i] = t;
            }
            PPoly Ebar = reduce_mod_p(ZPoly(std::move(eb)), p);
            PPoly q1, dg, q2, dh;
            divmod(mul(T, Ebar), G0, q1, dg);
            divmod(mul(S, Ebar), H0, q2, dh);
            G = G + m * lift_ppoly(dg);
            H = H + m * lift_ppoly(dh);
            m = m_next;
        }
        // sanity: cur == G*H mod p^e
        {
            ZPoly chk = balanced(cur - G * H, pe);
            if (!chk.is_zero())
                throw std::logic_error("hensel_lift: lift check failed");
        }
        out.push_back(ZPoly(reduce_mod(G, pe)));
        cur = ZPoly(reduce_mod(H, pe));
        // keep the true leading coefficient for the next peel
        {
            std::vector<mpz_class> cc = cur.c;
            if ((int)cc.size() != H.deg() + 1) cc.resize(H.deg() + 1, 0);
            cc.back() = f.lc() % pe;
            if (cc.back() < 0) cc.back() += pe;
            // top coefficient congruent mod p^e already; replace for stability
            cur = ZPoly(std::move(cc));
        }
    }
    return out;
}

} // namespace

std::vector<ZPoly> factor_squarefree_z(const ZPoly& f0) {
    std::vector<ZPoly> out;
    ZPoly f = f0.primitive_part();
    if (sgn(f.lc()) < 0) f = -f;
    if (f.deg() < 1) return out;
    if (f.deg() == 1) {
        out.push_back(f);
        return out;
    }
    // choose an odd prime keeping f squarefree mod p; among the first few
    // candidates prefer the fewest modular factors
    std::vector<std::pair<uint64_t, std::vector<PPoly>>> cands;
    for (uint64_t p : small_primes()) {
        if (p == 2) continue;
        if (f.lc() % (long)p == 0) continue;
        PPoly fp = reduce_mod_p(f, p);
        if (gcd(fp, fp.derivative()).deg() != 0) continue;
        cands.emplace_back(p, factor_squarefree_mod_p(fp.monic()));
        if (cands.size() >= 4) break;
    }
    if (cands.empty()) throw std::logic_error("factor: no good prime found");
    auto& best = *std::min_element(
        cands.begin(), cands.end(),
        [](const auto& a, const auto& b) { return a.second.size() < b.second.size(); });
    uint64_t p = best.first;
    std::vector<PPoly> modular = best.second;
    if (modular.size() == 1) {
        out.push_back(f);
        return out;
    }

    // Hensel target: modulus above twice the Landau-Mignotte-style bound
    // 2^n * ||f||_2 * |lc| on coefficients of lc * (monic factor product).
    mpz_class norm2 = 0;
    for (const auto& c : f.c) norm2 += c * c;
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), norm2.get_mpz_t());
    mpz_class bound = (s + 1) * abs(f.lc());
    mpz_class two_n;
    mpz_ui_pow_ui(two_n.get_mpz_t(), 2, (unsigned)f.deg() + 1);
    bound *= two_n;
    unsigned e = 1;
    {
        mpz_class pe = p;
        while (pe <= 2 * bound) {
            pe *= (long)p;
            ++e;
        }
    }
    std::sort(modular.begin(), modular.end(),
              [](const PPoly& a, const PPoly& b) {
                  if (a.deg() != b.deg()) return a.deg() < b.deg();
                  return a.c < b.c;
              });
    std::vector<ZPoly> lifted = hensel_lift(f, modular, p, e);
    mpz_class pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), p, e);

    // subset recombination
    std::vector<int> alive(lifted.size());
    for (size_t i = 0; i < alive.size(); ++i) alive[i] = (int)i;
    ZPoly rem = f;
    bool again = true;
    while (again) {
        again = false;
        size_t n = alive.size();
        for (size_t sz = 1; sz <= n / 2 && !again; ++sz) {
            // iterate subsets of `alive` of size sz in lexicographic order
            std::vector<size_t> idx(sz);
            for (size_t i = 0; i < sz; ++i) idx[i] = i;
            while (true) {
                ZPoly prod({rem.lc()});
                for (size_t i : idx) {
                    prod = ZPoly(reduce_mod(prod * lifted[alive[i]], pe));
                }
                ZPoly cand = balanced(prod, pe).primitive_part();
                if (sgn(cand.lc()) < 0) cand = -cand;
                ZPoly quot;
                if (cand.deg() >= 1 && try_exact_div(rem, cand, quot)) {
                    out.push_back(cand);
                    rem = quot.primitive_part();
                    if (sgn(rem.lc()) < 0) rem = -rem;
                    std::vector<int> next;
                    for (size_t i = 0, k = 0; i < n; ++i) {
                        if (k < sz && idx[k] == i) { ++k; continue; }
                        next.push_back(alive[i]);
                    }
                    alive = next;
                    again = true;
                    break;
                }
                // next subset
                int pos = (int)sz - 1;
                while (pos >= 0 && idx[pos] == n - sz + pos) --pos;
                if (pos < 0) break;
                ++idx[pos];
                for (size_t i = pos + 1; i < sz; ++i) idx[i] = idx[i - 1] + 1;
            }
        }
    }
    if (rem.deg() >= 1) out.push_back(rem);
    return out;
}

BinaryForm Factorization::reconstruct(int degree) const {
    std::vector<mpq_class> acc = {mpq_class(unit) * mpq_class(content)};
    for (const auto& G : factors) {
        std::vector<mpq_class> g(G.coeffs.size());
        for (size_t i = 0; i < g.size(); ++i) g[i] = mpq_class(G.coeffs[i]);
        std::vector<mpq_class> next(acc.size() + g.size() - 1);
        for (size_t i = 0; i < acc.size(); ++i)
            for (size_t j = 0; j < g.size(); ++j) next[i + j] += acc[i] * g[j];
        acc = std::move(next);
    }
    std::vector<mpz_class> z(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) z[i] = acc[i].get_num();
    return BinaryForm(degree, std::move(z));
}

Factorization factor_over_Q(const BinaryForm& F) {
    if (F.is_zero()) throw InvalidInput("factor_over_Q: zero form");
    Factorization out;
    mpz_class cont = F.content();
    out.content = cont;
    // y^m factor: leading x-coefficients vanishing
    int m = 0;
    while (F.coeffs[m] == 0) ++m;
    // sign normalization: make the first nonzero coefficient of the primitive
    // cofactor positive and absorb the flip into unit
    out.unit = sgn(F.coeffs[m]) < 0 ? -1 : 1;
    for (int i = 0; i < m; ++i)
        out.factors.push_back(BinaryForm(1, {mpz_class(0), mpz_class(1)})); // y
    ZPoly f = F.dehomogenize_x(); // degree d - m
    f = f.primitive_part();
    if (sgn(f.lc()) < 0) f = -f;
    if (f.deg() >= 1) {
        for (const auto& [g, mult] : squarefree_decomposition(f)) {
            for (const auto& irr : factor_squarefree_z(g)) {
                for (int t = 0; t < mult; ++t)
                    out.factors.push_back(BinaryForm::homogenize(irr, irr.deg()));
            }
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const BinaryForm& a, const BinaryForm& b) {
                  if (a.degree != b.degree) return a.degree < b.degree;
                  return std::lexicographical_compare(
                      a.coeffs.begin(), a.coeffs.end(), b.coeffs.begin(),
                      b.coeffs.end(),
                      [](const mpz_class& x, const mpz_class& y) { return x < y; });
              });
    out.r = 0;
    for (const auto& g : out.factors) out.r = std::max(out.r, g.degree);
    // exact reconstruction check
    if (!(out.reconstruct(F.degree) == F))
        throw std::logic_error("factor_over_Q: reconstruction failed");
    return out;
}

int largest_factor_degree(const BinaryForm& F) { return factor_over_Q(F).r; }

} // namespace kfree
