#include "kfree/automorphisms.hpp"

#include "kfree/errors.hpp"
#include "kfree/primes.hpp"

#include <algorithm>
#include <set>

namespace kfree {

const char* aut_class_name(AutClass c) {
    switch (c) {
        case AutClass::C1: return "C1";
        case AutClass::C2: return "C2";
        case AutClass::C3: return "C3";
        case AutClass::C4: return "C4";
        case AutClass::C6: return "C6";
        case AutClass::D1: return "D1";
        case AutClass::D2: return "D2";
        case AutClass::D3: return "D3";
        case AutClass::D4: return "D4";
        case AutClass::D6: return "D6";
    }
    return "?";
}

AutClass aut_class_from_name(const std::string& s) {
    static const std::pair<const char*, AutClass> table[] = {
        {"C1", AutClass::C1}, {"C2", AutClass::C2}, {"C3", AutClass::C3},
        {"C4", AutClass::C4}, {"C6", AutClass::C6}, {"D1", AutClass::D1},
        {"D2", AutClass::D2}, {"D3", AutClass::D3}, {"D4", AutClass::D4},
        {"D6", AutClass::D6}};
    for (const auto& [n, c] : table)
        if (s == n) return c;
    throw InvalidInput("unknown automorphism class label: " + s);
}

bool AutGroup::contains(const RatMatrix2& A) const {
    for (const auto& B : elements)
        if (A == B) return true;
    return false;
}

bool AutGroup::has_minus_identity() const {
    return contains(RatMatrix2::from_long(-1, 0, 0, -1));
}

namespace {

// Projective points of F = 0 in P^1(C): (alpha_i, 1) plus (1, 0) if y | F.
struct ProjPoint {
    CX a, b;
};

// B with columns lambda*p0, mu*p1 where lambda p0 + mu p1 = p2; maps the
// standard triple (e1, e2, e1+e2) to (p0, p1, p2) projectively.
struct CxMat {
    CX m11, m12, m21, m22;
};

CxMat basis_matrix(const ProjPoint& p0, const ProjPoint& p1, const ProjPoint& p2) {
    // solve [p0 p1] (l, m)^T = p2
    CX det = p0.a * p1.b - p0.b * p1.a;
    CX l = (p2.a * p1.b - p2.b * p1.a) / det;
    CX m = (p0.a * p2.b - p0.b * p2.a) / det;
    return {l * p0.a, m * p1.a, l * p0.b, m * p1.b};
}

CxMat mul(const CxMat& A, const CxMat& B) {
    return {A.m11 * B.m11 + A.m12 * B.m21, A.m11 * B.m12 + A.m12 * B.m22,
            A.m21 * B.m11 + A.m22 * B.m21, A.m21 * B.m12 + A.m22 * B.m22};
}

CxMat inverse(const CxMat& A) {
    CX det = A.m11 * A.m22 - A.m12 * A.m21;
    return {A.m22 / det, CX(0l) - A.m12 / det, CX(0l) - A.m21 / det, A.m11 / det};
}

// exact scalar multiple test: G == t * F for some rational t; returns t
bool proportional(const std::vector<mpq_class>& G, const BinaryForm& F, mpq_class& t) {
    int idx = -1;
    for (int i = 0; i <= F.degree; ++i)
        if (F.coeffs[i] != 0) { idx = i; break; }
    if (idx < 0) return false;
    t = G[idx] / mpq_class(F.coeffs[idx]);
    if (t == 0) return false;
    for (int i = 0; i <= F.degree; ++i)
        if (G[i] != t * mpq_class(F.coeffs[i])) return false;
    return true;
}

// rational c with c^d = v, if any (d odd: unique; d even: positive root,
// caller adds both signs)
bool rational_dth_root(const mpq_class& v, int d, mpq_class& c) {
    if (v == 0) return false;
    mpz_class num = v.get_num(), den = v.get_den();
    int s = sgn(num);
    if (s < 0 && d % 2 == 0) return false;
    bool e1 = false, e2 = false;
    mpz_class rn = kth_root(abs(num), d, e1);
    mpz_class rd = kth_root(den, d, e2);
    if (!e1 || !e2) return false;
    if (s < 0) rn = -rn;
    c = mpq_class(rn, rd);
    c.canonicalize();
    return true;
}

struct SearchParams {
    unsigned prec_bits;
    mpz_class denom_bound;
};

std::vector<RatMatrix2> search_pass(const BinaryForm& F, const SearchParams& sp) {
    RootData rd = root_data(F, sp.prec_bits);
    PrecisionGuard guard((unsigned)(sp.prec_bits * 0.30103) + 4);
    std::vector<ProjPoint> pts;
    for (const auto& z : rd.roots.roots) pts.push_back({z, CX(1l)});
    if (rd.has_y_factor) pts.push_back({CX(1l), CX(0l)});
    int n = (int)pts.size();
    if (n < 3)
        throw InvalidInput("automorphism_group: needs degree >= 3");
    CxMat Bs = basis_matrix(pts[0], pts[1], pts[2]);
    CxMat Bs_inv = inverse(Bs);
    Real eps = ldexp(Real(1), -(int)sp.prec_bits / 3);
    Real rat_tol = ldexp(Real(1), -(int)sp.prec_bits / 2);

    std::set<RatMatrix2> found;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            for (int l = 0; l < n; ++l) {
                if (l == i || l == j) continue;
                CxMat M = mul(basis_matrix(pts[i], pts[j], pts[l]), Bs_inv);
                // normalize by the largest-magnitude entry
                const CX* es[4] = {&M.m11, &M.m12, &M.m21, &M.m22};
                int big = 0;
                Real bn = norm_cx(M.m11);
                for (int k = 1; k < 4; ++k) {
                    Real nk = norm_cx(*es[k]);
                    if (nk > bn) { bn = nk; big = k; }
                }
                if (bn == 0) continue;
                CX inv = CX(1l) / (*es[big]);
                CX e[4];
                for (int k = 0; k < 4; ++k) e[k] = (*es[k]) * inv;
                // must be (close to) real to be rationalizable
                bool realish = true;
                for (int k = 0; k < 4 && realish; ++k)
                    if (abs(e[k].im) > eps) realish = false;
                if (!realish) continue;
                mpq_class r[4];
                bool okr = true;
                for (int k = 0; k < 4 && okr; ++k)
                    okr = rationalize(e[k].re, sp.denom_bound, rat_tol, r[k]);
                if (!okr) continue;
                RatMatrix2 R{r[0], r[1], r[2], r[3]};
                if (R.det() == 0) continue;
                std::vector<mpq_class> FR = transform_q(F, R);
                mpq_class t;
                if (!proportional(FR, F, t)) continue;
                // A = c R with c^d t = 1
                mpq_class cinv = 1 / t; // c^d
                mpq_class c;
                if (!rational_dth_root(cinv, F.degree, c)) continue;
                for (int sgn_pick = 0; sgn_pick < (F.degree % 2 == 0 ? 2 : 1); ++sgn_pick) {
                    mpq_class cc = sgn_pick ? mpq_class(-c) : c;
                    RatMatrix2 A{cc * R.a1, cc * R.a2, cc * R.a3, cc * R.a4};
                    // exact verification: accepted elements are certain
                    std::vector<mpq_class> FA = transform_q(F, A);
                    bool fixes = true;
                    for (int k = 0; k <= F.degree && fixes; ++k)
                        if (FA[k] != F.coeffs[k]) fixes = false;
                    if (fixes) found.insert(A);
                }
            }
        }
    return std::vector<RatMatrix2>(found.begin(), found.end());
}

bool group_sane(const std::vector<RatMatrix2>& els) {
    size_t n = els.size();
    if (n == 0) return false;
    static const int allowed[] = {1, 2, 3, 4, 6, 8, 12};
    if (std::find(std::begin(allowed), std::end(allowed), (int)n) ==
        std::end(allowed))
        return false;
    auto member = [&](const RatMatrix2& A) {
        for (const auto& B : els)
            if (A == B) return true;
        return false;
    };
    if (!member(RatMatrix2::identity())) return false;
    for (const auto& A : els) {
        int o = A.order();
        if (o == 0 || (o != 1 && o != 2 && o != 3 && o != 4 && o != 6))
            return false;
        if (!member(A.inverse())) return false;
        for (const auto& B : els)
            if (!member(A * B)) return false;
    }
    return true;
}

} // namespace

AutGroup automorphism_group(const BinaryForm& F) {
    if (F.degree < 3) throw InvalidInput("automorphism_group: degree must be >= 3");
    if (discriminant(F) == 0)
        throw InvalidInput("automorphism_group: zero discriminant");
    SearchParams sp{128, mpz_class(1000000)};
    for (int attempt = 0; attempt < 4; ++attempt) {
        std::vector<RatMatrix2> els = search_pass(F, sp);
        if (group_sane(els)) {
            AutGroup G;
            G.elements = std::move(els);
            std::sort(G.elements.begin(), G.elements.end());
            G.label = classify(G);
            return G;
        }
        sp.prec_bits *= 2;
        sp.denom_bound = sp.denom_bound * sp.denom_bound;
    }
    throw PrecisionError("automorphism_group: could not certify the group");
}

AutClass classify(const AutGroup& G) {
    int n = G.order();
    auto has_element_of_order = [&](int o) {
        for (const auto& A : G.elements)
            if (A.order() == o) return true;
        return false;
    };
    switch (n) {
        case 1: return AutClass::C1;
        case 2: return G.has_minus_identity() ? AutClass::C2 : AutClass::D1;
        case 3: return AutClass::C3;
        case 4: return has_element_of_order(4) ? AutClass::C4 : AutClass::D2;
        case 6: return has_element_of_order(6) ? AutClass::C6 : AutClass::D3;
        case 8: return AutClass::D4;
        case 12: return AutClass::D6;
        default:
            throw PrecisionError("classify: inconsistent group order " + std::to_string(n));
    }
}

DihedralData dihedral_subgroup_data(const AutGroup& G) {
    DihedralData out;
    AutClass cl = G.label;
    if (cl != AutClass::D3 && cl != AutClass::D4 && cl != AutClass::D6)
        throw InvalidInput("dihedral_subgroup_data: class is not D3/D4/D6");
    if (cl == AutClass::D3) {
        // order 6, no -I: three involutions and one order-3 subgroup
        for (const auto& A : G.elements)
            if (A.order() == 2) out.involutions.push_back(A);
        for (const auto& A : G.elements)
            if (A.order() == 3) { out.order3 = A; out.has_order3 = true; break; }
        return out;
    }
    // D4 / D6: subgroups of Aut F / {±I}; cosets are {A, -A}
    RatMatrix2 minusI = RatMatrix2::from_long(-1, 0, 0, -1);
    std::vector<RatMatrix2> reps;
    std::set<RatMatrix2> seen;
    for (const auto& A : G.elements) {
        RatMatrix2 nA = minusI * A;
        if (seen.count(A) || seen.count(nA)) continue;
        seen.insert(A);
        reps.push_back(std::min(A, nA)); // canonical coset representative
    }
    for (const auto& A : reps) {
        if (A == RatMatrix2::identity() || A == minusI) continue;
        RatMatrix2 sq = A * A;
        bool q_order2 = (sq == RatMatrix2::identity() || sq == minusI);
        if (q_order2)
            out.involutions.push_back(A);
    }
    std::sort(out.involutions.begin(), out.involutions.end());
    if (cl == AutClass::D6) {
        // quotient order-3 subgroup: A with A^3 = ±I, A^2 != ±I
        std::vector<RatMatrix2> o3;
        for (const auto& A : reps) {
            RatMatrix2 sq = A * A, cu = sq * A;
            bool q2 = (sq == RatMatrix2::identity() || sq == minusI);
            bool q3 = (cu == RatMatrix2::identity() || cu == minusI);
            if (!q2 && q3) o3.push_back(A);
        }
        std::sort(o3.begin(), o3.end());
        if (!o3.empty()) { out.order3 = o3.front(); out.has_order3 = true; }
    }
    // D4: quotient is Klein four -- exactly three order-2 subgroups, no A4.
    if ((cl == AutClass::D4 || cl == AutClass::D6) && out.involutions.size() != 3)
        throw PrecisionError("dihedral_subgroup_data: expected 3 quotient involutions");
    if (cl == AutClass::D6 && !out.has_order3)
        throw PrecisionError("dihedral_subgroup_data: missing order-3 subgroup");
    return out;
}

} // namespace kfree
