#include "kfree/constants.hpp"

#include "kfree/errors.hpp"
#include "kfree/polyfactor.hpp"

#include <cmath>

namespace kfree {

bool k_hypothesis_admits(unsigned k, int r) {
    // k > 7r/18  <=>  18k > 7r
    bool first = 18 * (long)k > 7 * (long)r;
    long ceil_r2 = (r + 1) / 2;
    bool second = (long)k > ceil_r2 - 2;
    return first || second;
}

bool k_special_case(unsigned k, int r, std::string& which) {
    if (k == 2 && r == 6) { which = "(2,6)"; return true; }
    if (k == 3 && r == 8) { which = "(3,8)"; return true; }
    which.clear();
    return false;
}

static ValErr mul_valerr(double av, double ae, double bv, double be) {
    ValErr out;
    out.value = av * bv;
    out.err = std::abs(av) * be + std::abs(bv) * ae + ae * be;
    return out;
}

ValErr c_Fk(const BinaryForm& F, unsigned k, uint64_t P, double tol) {
    EulerProductResult lam = lambda(F, k, P);
    AreaResult ar = area_AF(F, tol);
    return mul_valerr(lam.value, lam.tail_bound, ar.value, ar.abs_error);
}

ValErr c_of_lattice(const BinaryForm& F, unsigned k, const Lattice2& L,
                    uint64_t P, double tol) {
    return c_Fk(restrict_form(F, L), k, P, tol);
}

namespace {

struct Affine {
    // accumulates sum coeff_i * term_i as an interval
    double value = 0, err = 0;
    void add(double coeff, const ValErr& t) {
        value += coeff * t.value;
        err += std::abs(coeff) * t.err;
    }
    ValErr scaled(double s) const { return {s * value, std::abs(s) * err}; }
};

} // namespace

ConstantReport C_Fk(const BinaryForm& F, unsigned k, uint64_t P, double tol,
                    bool force) {
    if (k < 2) throw InvalidInput("C_Fk: k must be >= 2");
    if (F.degree < 3) throw InvalidInput("C_Fk: degree must be >= 3");
    if (discriminant(F) == 0) throw InvalidInput("C_Fk: zero discriminant");

    ConstantReport rep;
    rep.k = k;
    rep.r = largest_factor_degree(F);
    k_special_case(k, rep.r, rep.special_case);
    bool admitted = k_hypothesis_admits(k, rep.r) || !rep.special_case.empty();
    if (!admitted) {
        rep.hypothesis_met = false;
        if (!force)
            throw HypothesisError("C_Fk: k = " + std::to_string(k) +
                                  " too small for r = " + std::to_string(rep.r));
    }
    if (auto p = is_k_deficient(F, k)) {
        rep.hypothesis_met = false;
        if (!force)
            throw HypothesisError("C_Fk: form is k-deficient at p = " + p->get_str());
    }

    AutGroup G = automorphism_group(F);
    rep.label = G.label;
    rep.aut_order = G.order();
    rep.c = c_Fk(F, k, P, tol);

    auto add_term = [&](const std::string& name, const Lattice2& L) -> ValErr {
        ValErr t = c_of_lattice(F, k, L, P, tol);
        rep.lattice_terms.emplace_back(name, t);
        rep.lattice_hnf.emplace_back(name, L.str());
        return t;
    };

    Affine acc;
    switch (G.label) {
        case AutClass::C1:
            acc.add(1, rep.c);
            rep.C = acc.scaled(1);
            break;
        case AutClass::C2:
            acc.add(1, rep.c);
            rep.C = acc.scaled(0.5);
            break;
        case AutClass::C3: {
            ValErr cl = add_term("Lambda", group_lattice(G.elements));
            acc.add(1, rep.c);
            acc.add(-2.0 / 3.0, cl);
            rep.C = acc.scaled(1);
            break;
        }
        case AutClass::C4: {
            ValErr cl = add_term("Lambda", group_lattice(G.elements));
            acc.add(1, rep.c);
            acc.add(-0.5, cl);
            rep.C = acc.scaled(0.5);
            break;
        }
        case AutClass::C6: {
            ValErr cl = add_term("Lambda", group_lattice(G.elements));
            acc.add(1, rep.c);
            acc.add(-2.0 / 3.0, cl);
            rep.C = acc.scaled(0.5);
            break;
        }
        case AutClass::D1: {
            ValErr cl = add_term("Lambda", group_lattice(G.elements));
            acc.add(1, rep.c);
            acc.add(-0.5, cl);
            rep.C = acc.scaled(1);
            break;
        }
        case AutClass::D2: {
            ValErr cl = add_term("Lambda", group_lattice(G.elements));
            acc.add(1, rep.c);
            acc.add(-0.5, cl);
            rep.C = acc.scaled(0.5);
            break;
        }
        case AutClass::D3:
        case AutClass::D4:
        case AutClass::D6: {
            DihedralData dd = dihedral_subgroup_data(G);
            ValErr cl = add_term("Lambda", group_lattice(G.elements));
            std::vector<ValErr> cli;
            for (size_t i = 0; i < dd.involutions.size(); ++i) {
                cli.push_back(add_term("Lambda" + std::to_string(i + 1),
                                       lattice_of(dd.involutions[i])));
            }
            acc.add(1, rep.c);
            for (const auto& t : cli) acc.add(-0.5, t);
            if (G.label == AutClass::D4) {
                acc.add(0.75, cl);
                rep.C = acc.scaled(0.5);
            } else {
                ValErr cl4 = add_term("Lambda4", lattice_of(dd.order3));
                acc.add(-2.0 / 3.0, cl4);
                acc.add(4.0 / 3.0, cl);
                rep.C = acc.scaled(G.label == AutClass::D3 ? 1.0 : 0.5);
            }
            break;
        }
    }
    return rep;
}

} // namespace kfree
