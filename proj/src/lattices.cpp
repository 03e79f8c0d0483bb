#include "kfree/lattices.hpp"

#include "kfree/errors.hpp"

#include <algorithm>
#include <sstream>

namespace kfree {

bool operator==(const Vec2z& a, const Vec2z& b) { return a.x == b.x && a.y == b.y; }

Lattice2 Lattice2::zz() { return {1, 0, 1}; }

bool operator==(const Lattice2& L, const Lattice2& M) {
    return L.a == M.a && L.b == M.b && L.c == M.c;
}

std::string Lattice2::str() const {
    std::ostringstream os;
    os << "[(" << a.get_str() << ",0),(" << b.get_str() << "," << c.get_str() << ")]";
    return os.str();
}

bool Lattice2::contains(const mpz_class& u, const mpz_class& v) const {
    if (v % c != 0) return false;
    mpz_class t = u - (v / c) * b;
    return t % a == 0;
}

Lattice2 Lattice2::from_generators(const std::vector<Vec2z>& gens) {
    // Column-style HNF by extended-gcd elimination of the y row.
    mpz_class g = 0;        // gcd of y components so far
    Vec2z carrier{0, 0};    // vector achieving (.., g)
    std::vector<mpz_class> xs; // x components of y-eliminated vectors
    for (const auto& v : gens) {
        if (v.y == 0) {
            if (v.x != 0) xs.push_back(abs(v.x));
            continue;
        }
        if (g == 0) {
            carrier = v;
            g = abs(v.y);
            if (v.y < 0) { carrier.x = -carrier.x; carrier.y = -carrier.y; }
            continue;
        }
        mpz_class s, t, gg;
        mpz_gcdext(gg.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                   carrier.y.get_mpz_t(), v.y.get_mpz_t());
        Vec2z nc{s * carrier.x + t * v.x, gg};
        // reduce the pair to y = 0 remainder
        mpz_class k1 = carrier.y / gg, k2 = v.y / gg;
        // combination with y component zero: k2*carrier - k1*v
        mpz_class zx = k2 * carrier.x - k1 * v.x;
        if (zx != 0) xs.push_back(abs(zx));
        carrier = nc;
        g = gg;
    }
    if (g == 0 || xs.empty())
        throw InvalidInput("Lattice2: generators not full rank");
    mpz_class a = 0;
    for (const auto& x : xs) mpz_gcd(a.get_mpz_t(), a.get_mpz_t(), x.get_mpz_t());
    Lattice2 L;
    L.a = a;
    L.c = g;
    mpz_mod(L.b.get_mpz_t(), carrier.x.get_mpz_t(), a.get_mpz_t());
    return L;
}

// Smith reduction of an integer 2x2 matrix: U*N*V = diag(s1, s2) with U, V
// unimodular; only V is needed by the solver.
static void snf2(const mpz_class N0[4], mpz_class V[4], mpz_class& s1, mpz_class& s2) {
    mpz_class N[4] = {N0[0], N0[1], N0[2], N0[3]};
    V[0] = 1; V[1] = 0; V[2] = 0; V[3] = 1;
    auto col_swap = [&]() {
        std::swap(N[0], N[1]); std::swap(N[2], N[3]);
        std::swap(V[0], V[1]); std::swap(V[2], V[3]);
    };
    auto col_addmul = [&](int dst, int src, const mpz_class& k) {
        // col_dst += k * col_src
        N[0 + dst] += k * N[0 + src];
        N[2 + dst] += k * N[2 + src];
        V[0 + dst] += k * V[0 + src];
        V[2 + dst] += k * V[2 + src];
    };
    auto row_addmul = [&](int dst, int src, const mpz_class& k) {
        N[2 * dst + 0] += k * N[2 * src + 0];
        N[2 * dst + 1] += k * N[2 * src + 1];
    };
    // clear N[0][1] and N[1][0]
    for (int guard = 0; guard < 256; ++guard) {
        if (N[0] == 0) {
            if (N[1] != 0) col_swap();
            else if (N[2] != 0) { row_addmul(0, 1, mpz_class(1)); continue; }
            else if (N[3] != 0) { col_swap(); continue; }
            else break;
        }
        // reduce N[1] mod N[0]
        if (N[1] != 0) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), N[1].get_mpz_t(), N[0].get_mpz_t());
            col_addmul(1, 0, -q);
            if (N[1] != 0) { col_swap(); continue; }
        }
        if (N[2] != 0) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), N[2].get_mpz_t(), N[0].get_mpz_t());
            row_addmul(1, 0, -q);
            if (N[2] != 0) { std::swap(N[0], N[2]); std::swap(N[1], N[3]); continue; }
        }
        break;
    }
    s1 = N[0];
    s2 = N[3];
}

// HNF basis of {v : N v = 0 (mod q)}, N nonsingular mod nothing in
// particular, q >= 1.
static Lattice2 kernel_mod(const mpz_class N[4], const mpz_class& q) {
    if (q == 1) return Lattice2::zz();
    mpz_class V[4], s1, s2;
    snf2(N, V, s1, s2);
    mpz_class g1, g2;
    mpz_gcd(g1.get_mpz_t(), s1.get_mpz_t(), q.get_mpz_t());
    mpz_gcd(g2.get_mpz_t(), s2.get_mpz_t(), q.get_mpz_t());
    mpz_class m1 = q / g1, m2 = q / g2;
    std::vector<Vec2z> gens = {
        {V[0] * m1, V[2] * m1},
        {V[1] * m2, V[3] * m2},
        {q, mpz_class(0)},
        {mpz_class(0), q},
    };
    return Lattice2::from_generators(gens);
}

Lattice2 lattice_of(const RatMatrix2& A) {
    if (A.det() == 0) throw InvalidInput("lattice_of: singular matrix");
    mpz_class q = 1;
    mpz_lcm(q.get_mpz_t(), A.a1.get_den().get_mpz_t(), A.a2.get_den().get_mpz_t());
    mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), A.a3.get_den().get_mpz_t());
    mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), A.a4.get_den().get_mpz_t());
    const mpq_class* entries[4] = {&A.a1, &A.a2, &A.a3, &A.a4};
    mpz_class Nz[4];
    for (int i = 0; i < 4; ++i) {
        mpq_class t = *entries[i] * mpq_class(q);
        Nz[i] = t.get_num(); // q is the lcm of denominators, so t is integral
    }
    return kernel_mod(Nz, q);
}

Lattice2 intersect(const Lattice2& L1, const Lattice2& L2) {
    // v = B1 x = B2 y; x integral iff adj(B1) B2 y = 0 (mod det B1).
    mpz_class d1 = L1.det();
    // adj(B1) = ((c1, -b1), (0, a1)) for B1 = ((a1, b1), (0, c1)) row-form
    mpz_class C[4] = {
        L1.c * L2.a, L1.c * L2.b - L1.b * L2.c,
        mpz_class(0), L1.a * L2.c};
    Lattice2 Y = kernel_mod(C, d1);
    // intersection generators: B2 * (columns of Y)
    auto mulB2 = [&](const mpz_class& u, const mpz_class& v) -> Vec2z {
        return {L2.a * u + L2.b * v, L2.c * v};
    };
    std::vector<Vec2z> gens = {mulB2(Y.a, 0), mulB2(Y.b, Y.c)};
    return Lattice2::from_generators(gens);
}

Lattice2 congruence_lattice(const mpz_class& theta, const mpz_class& m) {
    if (m < 1 || theta < 0 || theta >= m)
        throw InvalidInput("congruence_lattice: need 0 <= theta < m");
    if (m == 1) return Lattice2::zz();
    Lattice2 L;
    L.a = m;
    L.b = theta;
    L.c = 1;
    return L;
}

Lattice2 group_lattice(const std::vector<RatMatrix2>& elements) {
    Lattice2 L = Lattice2::zz();
    for (const auto& A : elements) {
        if (A.is_integral()) continue; // contributes Z^2
        L = intersect(L, lattice_of(A));
    }
    return L;
}

namespace {

mpz_class norm2(const Vec2z& v) { return v.x * v.x + v.y * v.y; }

Vec2z canonical_sign(const Vec2z& v) {
    if (v.x < 0 || (v.x == 0 && v.y < 0)) return {-v.x, -v.y};
    return v;
}

bool lex_less(const Vec2z& a, const Vec2z& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
}

} // namespace

std::pair<Vec2z, Vec2z> reduced_basis(const Lattice2& L) {
    Vec2z u = L.omega1(), v = L.omega2();
    if (norm2(u) > norm2(v)) std::swap(u, v);
    // Lagrange-Gauss loop
    while (true) {
        // mu = round(<u,v>/<u,u>)
        mpz_class dot = u.x * v.x + u.y * v.y;
        mpz_class nn = norm2(u);
        mpz_class mu, rem;
        mpz_class num = 2 * dot + nn; // round(dot/nn) = floor((2 dot + nn)/(2 nn))
        mpz_fdiv_q(mu.get_mpz_t(), num.get_mpz_t(), mpz_class(2 * nn).get_mpz_t());
        Vec2z w{v.x - mu * u.x, v.y - mu * u.y};
        if (norm2(w) >= nn) {
            v = w;
            break;
        }
        v = u;
        u = w;
    }
    // canonical representative of the reduced pair: enumerate the short
    // candidates and pick deterministically
    mpz_class n1 = norm2(u), n2 = norm2(v);
    std::vector<Vec2z> cands;
    auto push = [&](const Vec2z& w) {
        if (w.x == 0 && w.y == 0) return;
        cands.push_back(canonical_sign(w));
    };
    push(u);
    push(v);
    push({u.x + v.x, u.y + v.y});
    push({u.x - v.x, u.y - v.y});
    std::sort(cands.begin(), cands.end(), [](const Vec2z& a, const Vec2z& b) {
        mpz_class na = norm2(a), nb = norm2(b);
        if (na != nb) return na < nb;
        return lex_less(a, b);
    });
    cands.erase(std::unique(cands.begin(), cands.end(),
                            [](const Vec2z& a, const Vec2z& b) { return a == b; }),
                cands.end());
    Vec2z w1 = cands[0];
    // smallest second vector that is independent and keeps the span
    for (const auto& w : cands) {
        if (w1.x * w.y - w1.y * w.x == 0) continue;
        mpz_class cross = abs(w1.x * w.y - w1.y * w.x);
        if (cross == L.det()) return {w1, w};
    }
    throw std::logic_error("reduced_basis: no independent candidate");
}

std::pair<Vec2z, mpz_class> minimal_vector(const Lattice2& L) {
    auto [u, v] = reduced_basis(L);
    // |w|_inf >= |w|_2 / sqrt(2) and the Euclidean minimum |u| bounds the
    // search: any max-norm minimizer w has |w|_2 <= sqrt(2) |u|_2.
    mpz_class n1 = norm2(u);
    mpz_class det = L.det();
    // coefficient bounds: |s| <= sqrt(2 n1 * n2(v))/det etc.
    auto bound = [&](const Vec2z& w) -> mpz_class {
        mpz_class t = 2 * n1 * norm2(w); // (sqrt(2 n1) * |w|)^2
        mpz_class r;
        mpz_sqrt(r.get_mpz_t(), t.get_mpz_t());
        return r / det + 1;
    };
    mpz_class S = bound(v), T = bound(u);
    Vec2z best{0, 0};
    mpz_class bestM = -1;
    for (mpz_class s = -S; s <= S; ++s) {
        for (mpz_class t = -T; t <= T; ++t) {
            if (s == 0 && t == 0) continue;
            Vec2z w{s * u.x + t * v.x, s * u.y + t * v.y};
            mpz_class M = std::max(abs(w.x), abs(w.y));
            Vec2z cw = canonical_sign(w);
            if (bestM < 0 || M < bestM ||
                (M == bestM && lex_less(cw, canonical_sign(best)))) {
                bestM = M;
                best = cw;
            }
        }
    }
    return {best, bestM};
}

BinaryForm restrict_form(const BinaryForm& F, const Lattice2& L) {
    auto [w1, w2] = reduced_basis(L);
    RatMatrix2 A{mpq_class(w1.x), mpq_class(w2.x), mpq_class(w1.y), mpq_class(w2.y)};
    return transform(F, A);
}

} // namespace kfree
