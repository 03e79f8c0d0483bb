#include "kfree/sturm.hpp"

#include <stdexcept>

namespace kfree {

SturmSequence::SturmSequence(const ZPoly& f0) {
    ZPoly f = f0.primitive_part();
    if (f.deg() >= 1) {
        ZPoly g = gcd_z(f, f.derivative());
        if (g.deg() > 0) f = exact_div(f, g).primitive_part();
    }
    seq.push_back(f);
    if (f.deg() < 1) return;
    seq.push_back(f.derivative().primitive_part());
    while (seq.back().deg() >= 1) {
        ZPoly q, r;
        pseudo_divmod(seq[seq.size() - 2], seq.back(), q, r);
        if (r.is_zero()) break;
        // Sturm wants the negated remainder; the pseudo-division multiplier
        // lc^(delta+1) may be negative, in which case it flips signs itself.
        const ZPoly& b = seq.back();
        int delta = seq[seq.size() - 2].deg() - b.deg();
        bool mult_negative = (sgn(b.lc()) < 0) && ((delta + 1) % 2 == 1);
        ZPoly nr = mult_negative ? r : -r;
        seq.push_back(nr.primitive_part());
    }
}

static int sign_at_inf(const ZPoly& p, bool plus) {
    if (p.is_zero()) return 0;
    int s = sgn(p.lc());
    if (!plus && p.deg() % 2 == 1) s = -s;
    return s;
}

static int count_variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int SturmSequence::variations_at(const mpq_class& x) const {
    std::vector<int> s;
    s.reserve(seq.size());
    for (const auto& p : seq) s.push_back(p.sign_at(x));
    return count_variations(s);
}

int SturmSequence::variations_at_minus_inf() const {
    std::vector<int> s;
    for (const auto& p : seq) s.push_back(sign_at_inf(p, false));
    return count_variations(s);
}

int SturmSequence::variations_at_plus_inf() const {
    std::vector<int> s;
    for (const auto& p : seq) s.push_back(sign_at_inf(p, true));
    return count_variations(s);
}

int SturmSequence::count_roots(const mpq_class& a, const mpq_class& b) const {
    return variations_at(a) - variations_at(b);
}

int SturmSequence::count_real_roots() const {
    return variations_at_minus_inf() - variations_at_plus_inf();
}

// Cauchy bound on |roots|.
static mpq_class root_bound(const ZPoly& f) {
    mpz_class m = 0;
    for (const auto& c : f.c) {
        mpz_class a = abs(c);
        if (a > m) m = a;
    }
    mpq_class b(m, abs(f.lc()));
    return b + 2;
}

std::vector<RootInterval> isolate_real_roots(const ZPoly& f0, const mpq_class& width) {
    std::vector<RootInterval> out;
    ZPoly f = f0.primitive_part();
    if (f.deg() < 1) return out;
    SturmSequence st(f);
    const ZPoly& sf = st.seq[0]; // squarefree part
    mpq_class B = root_bound(sf);
    struct Seg { mpq_class a, b; int n; };
    std::vector<Seg> stack;
    int total = st.count_roots(-B, B);
    if (total == 0) return out;
    stack.push_back({-B, B, total});
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.n == 0) continue;
        if (s.n == 1 && (s.b - s.a) <= width) {
            if (sf.sign_at(s.b) == 0)
                out.push_back({s.b, s.b});
            else
                out.push_back({s.a, s.b});
            continue;
        }
        mpq_class m = (s.a + s.b) / 2;
        if (sf.sign_at(m) == 0 && s.n == 1) {
            out.push_back({m, m});
            continue;
        }
        int left = st.count_roots(s.a, m);
        stack.push_back({s.a, m, left});
        stack.push_back({m, s.b, s.n - left});
    }
    std::sort(out.begin(), out.end(),
              [](const RootInterval& x, const RootInterval& y) { return x.hi < y.hi; });
    return out;
}

bool poly_le_on_unit_interval(const ZPoly& f, const mpz_class& bound) {
    // f(t) <= bound for all t in [0,1]?  Equivalently g = f - bound has no
    // positive value there.  Any positive excursion lives inside a root-free
    // open segment between consecutive distinct roots of g (or an endpoint),
    // so one exact sample per segment decides the question.
    ZPoly g = f - ZPoly({bound});
    if (g.is_zero()) return true;
    mpq_class zero(0), one(1);
    if (g.sign_at(zero) > 0 || g.sign_at(one) > 0) return false;
    if (g.deg() < 1) return true;

    // Isolate distinct roots, refining until every isolating interval is
    // either degenerate (a rational root) or strictly inside (0,1) or
    // strictly outside [0,1], and intervals are strictly separated.  Roots
    // are distinct reals so this terminates.
    mpq_class width(1, 64);
    std::vector<RootInterval> iv;
    for (int attempt = 0; attempt < 64; ++attempt) {
        iv.clear();
        for (const auto& r : isolate_real_roots(g, width)) {
            if (r.hi <= 0 || r.lo >= 1) continue; // entirely outside [0,1)..(
            iv.push_back(r);
        }
        bool ok = true;
        for (size_t i = 0; i < iv.size(); ++i) {
            bool degenerate = iv[i].lo == iv[i].hi;
            if (!degenerate && (iv[i].lo <= 0 || iv[i].hi >= 1)) ok = false;
            if (i + 1 < iv.size() && !(iv[i].hi < iv[i + 1].lo)) ok = false;
        }
        if (ok) break;
        width /= 1024;
    }

    // Sample one interior point of every root-free segment of (0,1).
    mpq_class prev = zero;
    for (const auto& r : iv) {
        mpq_class lo = r.lo < 0 ? zero : (r.lo > 1 ? one : r.lo);
        if (lo > prev) {
            if (g.sign_at((prev + lo) / 2) > 0) return false;
        }
        mpq_class hi = r.hi < 0 ? zero : (r.hi > 1 ? one : r.hi);
        if (hi > prev) prev = hi;
    }
    if (prev < one) {
        if (g.sign_at((prev + one) / 2) > 0) return false;
    }
    return true;
}

} // namespace kfree
