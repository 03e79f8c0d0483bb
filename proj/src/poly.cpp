#include "kfree/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace kfree {

void ZPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

mpz_class ZPoly::eval(const mpz_class& x) const {
    if (c.empty()) return 0;
    mpz_class acc = c.back();
    for (size_t i = c.size() - 1; i-- > 0;) {
        acc *= x;
        acc += c[i];
    }
    return acc;
}

mpq_class ZPoly::eval_q(const mpq_class& x) const {
    if (c.empty()) return 0;
    mpq_class acc = c.back();
    for (size_t i = c.size() - 1; i-- > 0;) {
        acc *= x;
        acc += c[i];
    }
    return acc;
}

int ZPoly::sign_at(const mpq_class& x) const {
    // Sign of q^n * f(p/q) = sum_i c_i p^i q^(n-i), with x = p/q in lowest
    // terms; q > 0 so the sign matches sgn(f(x)).
    if (c.empty()) return 0;
    const mpz_class& p = x.get_num();
    const mpz_class& q = x.get_den();
    mpz_class h = c.back(), qpow = 1;
    for (size_t i = c.size() - 1; i-- > 0;) {
        qpow *= q;
        h *= p;
        h += c[i] * qpow;
    }
    return sgn(h);
}

ZPoly ZPoly::derivative() const {
    if (c.size() <= 1) return ZPoly();
    std::vector<mpz_class> d(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * (long)i;
    return ZPoly(std::move(d));
}

mpz_class ZPoly::content() const {
    mpz_class g = 0;
    for (const auto& x : c) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly ZPoly::primitive_part() const {
    mpz_class g = content();
    if (g == 0 || g == 1) return *this;
    std::vector<mpz_class> d(c.size());
    for (size_t i = 0; i < c.size(); ++i) d[i] = c[i] / g;
    return ZPoly(std::move(d));
}

std::string ZPoly::str() const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        if (!first) os << (c[i] > 0 ? " + " : " - ");
        else if (c[i] < 0) os << "-";
        mpz_class a = abs(c[i]);
        if (a != 1 || i == 0) os << a.get_str();
        if (i >= 1) {
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

bool operator==(const ZPoly& a, const ZPoly& b) { return a.c == b.c; }

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
    std::vector<mpz_class> r(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.c.size()) r[i] += a.c[i];
        if (i < b.c.size()) r[i] += b.c[i];
    }
    return ZPoly(std::move(r));
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) {
    std::vector<mpz_class> r(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.c.size()) r[i] += a.c[i];
        if (i < b.c.size()) r[i] -= b.c[i];
    }
    return ZPoly(std::move(r));
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return ZPoly();
    std::vector<mpz_class> r(a.c.size() + b.c.size() - 1);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    }
    return ZPoly(std::move(r));
}

ZPoly operator*(const mpz_class& s, const ZPoly& a) {
    if (s == 0) return ZPoly();
    std::vector<mpz_class> r(a.c.size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = s * a.c[i];
    return ZPoly(std::move(r));
}

ZPoly operator-(const ZPoly& a) { return mpz_class(-1) * a; }

bool try_exact_div(const ZPoly& a, const ZPoly& b, ZPoly& quot) {
    if (b.is_zero()) return false;
    if (a.is_zero()) { quot = ZPoly(); return true; }
    if (a.deg() < b.deg()) return false;
    std::vector<mpz_class> r = a.c;
    std::vector<mpz_class> q(a.deg() - b.deg() + 1);
    for (int i = a.deg(); i >= b.deg(); --i) {
        mpz_class& top = r[i];
        if (top == 0) continue;
        mpz_class qq, rr;
        mpz_tdiv_qr(qq.get_mpz_t(), rr.get_mpz_t(), top.get_mpz_t(),
                    b.lc().get_mpz_t());
        if (rr != 0) return false;
        q[i - b.deg()] = qq;
        for (int j = 0; j <= b.deg(); ++j) r[i - b.deg() + j] -= qq * b.c[j];
    }
    for (const auto& x : r)
        if (x != 0) return false;
    quot = ZPoly(std::move(q));
    return true;
}

ZPoly exact_div(const ZPoly& a, const ZPoly& b) {
    ZPoly q;
    if (!try_exact_div(a, b, q))
        throw std::logic_error("exact_div: not divisible");
    return q;
}

void pseudo_divmod(const ZPoly& a, const ZPoly& b, ZPoly& q, ZPoly& r) {
    if (b.is_zero()) throw std::logic_error("pseudo_divmod by zero");
    r = a;
    q = ZPoly();
    int db = b.deg();
    if (a.deg() < db) { // lc(b)^0 * a = 0*b + a
        return;
    }
    std::vector<mpz_class> qq(a.deg() - db + 1);
    const mpz_class& d = b.lc();
    int steps = a.deg() - db + 1;
    std::vector<mpz_class> rr = a.c;
    auto rdeg = [&]() {
        int k = (int)rr.size() - 1;
        while (k >= 0 && rr[k] == 0) --k;
        return k;
    };
    for (int s = 0; s < steps; ++s) {
        int dr = rdeg();
        if (dr < db) {
            // multiply remaining r and accumulated q by d for each unused step
            mpz_class dpow;
            mpz_pow_ui(dpow.get_mpz_t(), d.get_mpz_t(), (unsigned)(steps - s));
            for (auto& x : rr) x *= dpow;
            for (auto& x : qq) x *= dpow;
            break;
        }
        for (auto& x : qq) x *= d;
        mpz_class t = rr[dr];
        qq[dr - db] += t;
        for (auto& x : rr) x *= d;
        for (int j = 0; j <= db; ++j) rr[dr - db + j] -= t * b.c[j];
    }
    q = ZPoly(std::move(qq));
    r = ZPoly(std::move(rr));
}

ZPoly gcd_z(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() && b.is_zero()) return ZPoly();
    if (a.is_zero()) return (sgn(b.lc()) < 0) ? -b : b;
    if (b.is_zero()) return (sgn(a.lc()) < 0) ? -a : a;
    mpz_class ca = a.content(), cb = b.content();
    mpz_class cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    ZPoly f = a.primitive_part(), g = b.primitive_part();
    if (f.deg() < g.deg()) std::swap(f, g);
    // Subresultant PRS
    mpz_class h = 1, s = 1;
    while (true) {
        int delta = f.deg() - g.deg();
        ZPoly q, r;
        pseudo_divmod(f, g, q, r);
        if (r.is_zero()) break;
        if (r.deg() == 0) { g = ZPoly({mpz_class(1)}); break; }
        // divisor = s * h^delta
        mpz_class hd;
        mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), (unsigned)delta);
        mpz_class divisor = s * hd;
        std::vector<mpz_class> rc(r.c.size());
        for (size_t i = 0; i < r.c.size(); ++i) rc[i] = r.c[i] / divisor;
        f = g;
        g = ZPoly(std::move(rc));
        s = f.lc();
        // h = s^delta * h^(1-delta)
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = s;
        } else {
            mpz_class sp, hp;
            mpz_pow_ui(sp.get_mpz_t(), s.get_mpz_t(), (unsigned)delta);
            mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), (unsigned)(delta - 1));
            h = sp / hp;
        }
    }
    ZPoly res = g.primitive_part();
    if (sgn(res.lc()) < 0) res = -res;
    return cg * res;
}

mpz_class resultant(const ZPoly& A, const ZPoly& B) {
    // Bareiss fraction-free elimination on the Sylvester matrix.
    if (A.is_zero() || B.is_zero()) return 0;
    int m = A.deg(), n = B.deg();
    if (m == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), A.c[0].get_mpz_t(), (unsigned)n);
        return r;
    }
    if (n == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), B.c[0].get_mpz_t(), (unsigned)m);
        return r;
    }
    int N = m + n;
    std::vector<std::vector<mpz_class>> M(N, std::vector<mpz_class>(N, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) M[i][i + j] = A.c[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) M[n + i][i + j] = B.c[n - j];
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < N - 1; ++k) {
        if (M[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < N; ++i)
                if (M[i][k] != 0) { piv = i; break; }
            if (piv < 0) return 0;
            std::swap(M[k], M[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; ++i) {
            for (int j = k + 1; j < N; ++j) {
                M[i][j] = (M[k][k] * M[i][j] - M[i][k] * M[k][j]) / prev;
            }
            M[i][k] = 0;
        }
        prev = M[k][k];
    }
    return sign > 0 ? M[N - 1][N - 1] : mpz_class(-M[N - 1][N - 1]);
}

std::vector<std::pair<ZPoly, int>> squarefree_decomposition(const ZPoly& f0) {
    std::vector<std::pair<ZPoly, int>> out;
    ZPoly f = f0.primitive_part();
    if (f.deg() <= 0) return out;
    ZPoly fp = f.derivative();
    ZPoly a = gcd_z(f, fp);
    if (a.deg() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    ZPoly b = exact_div(f, a);
    ZPoly c = exact_div(fp, a);
    ZPoly d = c - b.derivative();
    int i = 1;
    while (!(b.deg() == 0)) {
        ZPoly g = gcd_z(b, d);
        if (g.deg() > 0) out.emplace_back(g.primitive_part(), i);
        b = exact_div(b, g);
        c = exact_div(d, g);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

ZPoly compose_linear(const ZPoly& f, const mpz_class& a, const mpz_class& b) {
    // Horner: result = (...((c_n)*(a x + b) + c_{n-1})*(a x + b) + ...)
    ZPoly lin({b, a});
    ZPoly acc;
    for (size_t i = f.c.size(); i-- > 0;) {
        acc = acc * lin;
        acc = acc + ZPoly({f.c[i]});
    }
    return acc;
}

ZPoly reverse_poly(const ZPoly& f) {
    std::vector<mpz_class> r(f.c.rbegin(), f.c.rend());
    return ZPoly(std::move(r));
}

} // namespace kfree
