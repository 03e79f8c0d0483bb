#include "kfree/roots.hpp"

#include "kfree/errors.hpp"
#include "kfree/sturm.hpp"

#include <algorithm>
#include <cmath>

namespace kfree {

CX operator+(const CX& a, const CX& b) { return {a.re + b.re, a.im + b.im}; }
CX operator-(const CX& a, const CX& b) { return {a.re - b.re, a.im - b.im}; }
CX operator*(const CX& a, const CX& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
CX operator/(const CX& a, const CX& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Real norm_cx(const CX& a) { return a.re * a.re + a.im * a.im; }
Real abs_cx(const CX& a) { return sqrt(norm_cx(a)); }

static unsigned bits_to_digits(unsigned bits) {
    return (unsigned)(bits * 0.30103) + 4;
}

static CX eval_horner(const std::vector<CX>& c, const CX& z) {
    CX acc = c.back();
    for (size_t i = c.size() - 1; i-- > 0;) acc = acc * z + c[i];
    return acc;
}

static CertifiedRoots try_roots(const ZPoly& f, unsigned prec_bits,
                                int real_count, bool& ok) {
    PrecisionGuard guard(bits_to_digits(prec_bits));
    int n = f.deg();
    std::vector<CX> c(n + 1), dc(n);
    for (int i = 0; i <= n; ++i) c[i] = CX{Real(f.c[i].get_mpz_t()), Real(0)};
    for (int i = 1; i <= n; ++i) dc[i - 1] = CX{Real(f.c[i].get_mpz_t()) * i, Real(0)};

    // Deterministic start: perturbed circle at the geometric-mean root
    // radius |c0/cn|^(1/n) (clusters sit near it; the Cauchy radius can be
    // far out and stalls the iteration on crowded roots).
    Real R;
    {
        int lo = 0;
        while (f.c[lo] == 0) ++lo; // x^lo divides f: roots at 0 handled too
        Real ratio = abs(Real(f.c[lo].get_mpz_t())) / abs(Real(f.c[n].get_mpz_t()));
        R = pow(ratio, Real(1) / (n - lo));
        if (R == 0) R = 1;
    }
    const Real pi = acos(Real(-1));
    std::vector<CX> z(n);
    for (int i = 0; i < n; ++i) {
        Real ang = (2 * pi * i) / n + Real(37) / 100 + Real(i) / (7 * n + 3);
        Real rad = R * (Real(80) + 15 * Real(i % 3)) / 100;
        z[i] = CX{rad * cos(ang), rad * sin(ang)};
    }

    // Iterate until the corrections hit the target or stagnate at the
    // rounding floor; the inclusion-disc certificate below is what decides
    // acceptance, so a stagnation stop is safe.
    Real eps = ldexp(Real(1), -(int)prec_bits + 6);
    bool converged = false;
    Real prev_worst = 0;
    int stalled = 0;
    for (int iter = 0; iter < 2000 && !converged; ++iter) {
        Real worst = 0;
        for (int i = 0; i < n; ++i) {
            CX pv = eval_horner(c, z[i]);
            CX dv = eval_horner(dc, z[i]);
            if (norm_cx(dv) == 0) { z[i].re += eps; continue; }
            CX w = pv / dv;
            CX s{Real(0), Real(0)};
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                s = s + CX{Real(1), Real(0)} / (z[i] - z[j]);
            }
            CX denom = CX{Real(1), Real(0)} - w * s;
            CX delta = (norm_cx(denom) == 0) ? w : w / denom;
            z[i] = z[i] - delta;
            Real rel = abs_cx(delta) / (abs_cx(z[i]) + 1);
            if (rel > worst) worst = rel;
        }
        if (worst < eps) {
            converged = true;
        } else if (iter >= 2 * n + 8) {
            if (worst >= prev_worst / 2) ++stalled;
            else stalled = 0;
            if (stalled >= 8) converged = true;
        }
        prev_worst = worst;
    }

    CertifiedRoots out;
    out.prec_bits = prec_bits;
    out.real_count = real_count;
    ok = false;
    if (!converged) return out;

    // Inclusion radius: min_j |z - alpha_j| <= n |p(z)/p'(z)|.  Pairwise
    // disjoint discs + n discs + n roots force exactly one root per disc.
    std::vector<Real> rad(n);
    for (int i = 0; i < n; ++i) {
        CX pv = eval_horner(c, z[i]);
        CX dv = eval_horner(dc, z[i]);
        if (norm_cx(dv) == 0) return out;
        rad[i] = 4 * n * abs_cx(pv / dv); // 4x slack for evaluation rounding
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (abs_cx(z[i] - z[j]) <= rad[i] + rad[j]) return out;

    // Real classification: a disc crossing the axis pairs with its conjugate
    // unless it is the disc of a genuinely real root.  Cross-check with the
    // exact Sturm count.
    std::vector<bool> isr(n, false);
    int found_real = 0;
    for (int i = 0; i < n; ++i) {
        if (abs(z[i].im) <= rad[i]) {
            isr[i] = true;
            ++found_real;
        }
    }
    if (found_real != real_count) return out;

    // Canonical order: by real part, then imaginary part.
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (z[a].re != z[b].re) return z[a].re < z[b].re;
        return z[a].im < z[b].im;
    });
    out.roots.resize(n);
    out.radii.resize(n);
    out.is_real.resize(n);
    for (int i = 0; i < n; ++i) {
        out.roots[i] = z[idx[i]];
        out.radii[i] = rad[idx[i]];
        out.is_real[i] = isr[idx[i]];
        if (out.is_real[i]) out.roots[i].im = 0;
    }
    ok = true;
    return out;
}

CertifiedRoots certified_roots(const ZPoly& f, unsigned prec_bits) {
    if (f.deg() < 1) throw InvalidInput("certified_roots: degree < 1");
    {
        ZPoly g = gcd_z(f, f.derivative());
        if (g.deg() > 0)
            throw InvalidInput("certified_roots: polynomial not squarefree");
    }
    int real_count = SturmSequence(f).count_real_roots();
    unsigned bits = std::max(prec_bits, 128u);
    for (int attempt = 0; attempt < 5; ++attempt) {
        bool ok = false;
        CertifiedRoots r = try_roots(f, bits, real_count, ok);
        if (ok) return r;
        bits *= 2;
    }
    throw PrecisionError("certified_roots: certification failed at max precision");
}

bool rationalize(const Real& x, const mpz_class& qmax, const Real& tol,
                 mpq_class& out) {
    // Continued fraction convergents of x until the denominator bound.
    mpz_class p0 = 1, q0 = 0, p1 = 0, q1 = 1; // p0/q0 = 1/0, p1/q1 = 0/1
    Real v = x;
    mpz_class bestp = 0, bestq = 1;
    for (int i = 0; i < 128; ++i) {
        Real fl = floor(v);
        mpz_class a;
        mpfr_get_z(a.get_mpz_t(), fl.backend().data(), MPFR_RNDZ);
        mpz_class p2 = a * p0 + p1, q2 = a * q0 + q1;
        if (q2 > qmax) break;
        bestp = p2;
        bestq = q2;
        Real err = abs(x - Real(p2.get_mpz_t()) / Real(q2.get_mpz_t()));
        if (err < tol) {
            out = mpq_class(p2, q2);
            out.canonicalize();
            return true;
        }
        Real frac = v - fl;
        if (frac == 0) break;
        v = 1 / frac;
        p1 = p0; p0 = p2;
        q1 = q0; q0 = q2;
    }
    Real err = abs(x - Real(bestp.get_mpz_t()) / Real(bestq.get_mpz_t()));
    if (err < tol) {
        out = mpq_class(bestp, bestq);
        out.canonicalize();
        return true;
    }
    return false;
}

} // namespace kfree
