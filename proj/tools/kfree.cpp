// kfree: density constants and exact counts for k-free values of integer
// binary forms.  See README.md for the subcommand reference.

#include "kfree/constants.hpp"
#include "kfree/corpus.hpp"
#include "kfree/counting.hpp"
#include "kfree/errors.hpp"
#include "kfree/polyfactor.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cinttypes>
#include <cstdio>
#include <iostream>

using json = nlohmann::ordered_json;
using namespace kfree;

namespace {

std::string f15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

struct Options {
    std::string form_literal;
    std::string corpus_path;
    unsigned k = 2;
    long long Z = 10000;
    double beta_cap = -1; // default: max(4 E_F, 32)
    uint64_t prime_bound = 0; // default: 1e4 for k=2, 1e3 for k>=3
    double tol = 1e-8;
    std::string format = "json";
    int threads = 1;
    bool force = false;
    bool diagnostics = false;
    long long m = 0;   // rho modulus
    long long p = 0;   // rho prime
    long long theta = -1, mod = 0; // congruence lattice
};

BinaryForm need_form(const Options& o) {
    if (o.form_literal.empty())
        throw InvalidInput("this subcommand needs --form \"d=...; coeffs=[...]\"");
    return parse_form(o.form_literal);
}

double beta_for(const Options& o, const BinaryForm& F) {
    return o.beta_cap > 0 ? o.beta_cap : default_beta_cap(F);
}

uint64_t prime_bound_for(const Options& o) {
    if (o.prime_bound) return o.prime_bound;
    return o.k == 2 ? 10000 : 1000;
}

void emit(const json& j, const Options& o) {
    if (o.format == "json") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    // csv: flatten one level
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::cout << it.key() << "," << (it->is_string() ? it->get<std::string>() : it->dump())
                  << "\n";
    }
}

json valerr_json(const ValErr& v) {
    return json{{"value", f15(v.value)}, {"error", f15(v.err)}};
}

int cmd_factor(const Options& o) {
    BinaryForm F = need_form(o);
    Factorization fac = factor_over_Q(F);
    json j;
    j["form"] = form_literal(F);
    j["unit"] = fac.unit;
    j["content"] = fac.content.get_str();
    json fs = json::array();
    for (const auto& g : fac.factors) {
        json cj = json::array();
        for (const auto& c : g.coeffs) cj.push_back(c.get_str());
        fs.push_back(json{{"degree", g.degree}, {"coeffs", cj}});
    }
    j["factors"] = fs;
    j["r"] = fac.r;
    emit(j, o);
    return 0;
}

int cmd_aut(const Options& o) {
    BinaryForm F = need_form(o);
    AutGroup G = automorphism_group(F);
    json j;
    j["form"] = form_literal(F);
    j["order"] = G.order();
    j["class"] = aut_class_name(G.label);
    json els = json::array();
    for (const auto& A : G.elements)
        els.push_back(json::array(
            {A.a1.get_str(), A.a2.get_str(), A.a3.get_str(), A.a4.get_str()}));
    j["elements"] = els;
    emit(j, o);
    return 0;
}

json lattice_json(const Lattice2& L) {
    json j;
    j["hnf"] = json::array(
        {json::array({L.a.get_str(), "0"}), json::array({L.b.get_str(), L.c.get_str()})});
    j["det"] = L.det().get_str();
    auto [w1, w2] = reduced_basis(L);
    j["reduced_basis"] = json::array({json::array({w1.x.get_str(), w1.y.get_str()}),
                                      json::array({w2.x.get_str(), w2.y.get_str()})});
    auto [mv, M] = minimal_vector(L);
    j["minimal_vector"] = json::array({mv.x.get_str(), mv.y.get_str()});
    j["M"] = M.get_str();
    return j;
}

int cmd_lattice(const Options& o) {
    json j;
    if (o.mod > 0) {
        if (o.theta < 0) throw InvalidInput("lattice: --theta needed with --mod");
        Lattice2 L = congruence_lattice(mpz_class((long)o.theta), mpz_class((long)o.mod));
        j["congruence"] = {{"theta", o.theta}, {"mod", o.mod}};
        j["lattice"] = lattice_json(L);
    } else {
        BinaryForm F = need_form(o);
        AutGroup G = automorphism_group(F);
        j["form"] = form_literal(F);
        j["class"] = aut_class_name(G.label);
        j["Lambda"] = lattice_json(group_lattice(G.elements));
        if (G.label == AutClass::D3 || G.label == AutClass::D4 ||
            G.label == AutClass::D6) {
            DihedralData dd = dihedral_subgroup_data(G);
            for (size_t i = 0; i < dd.involutions.size(); ++i)
                j["Lambda" + std::to_string(i + 1)] =
                    lattice_json(lattice_of(dd.involutions[i]));
            if (dd.has_order3) j["Lambda4"] = lattice_json(lattice_of(dd.order3));
        }
    }
    emit(j, o);
    return 0;
}

int cmd_rho(const Options& o) {
    BinaryForm F = need_form(o);
    json j;
    j["form"] = form_literal(F);
    if (o.m > 0) {
        j["m"] = o.m;
        j["rho"] = rho(F, mpz_class((long)o.m)).get_str();
    } else if (o.p > 0) {
        j["p"] = o.p;
        j["k"] = o.k;
        j["rho"] = rho_prime_power(F, (uint64_t)o.p, o.k).get_str();
    } else {
        throw InvalidInput("rho: need --m or --p");
    }
    emit(j, o);
    return 0;
}

int cmd_lambda(const Options& o) {
    BinaryForm F = need_form(o);
    EulerProductResult r = lambda(F, o.k, prime_bound_for(o));
    if (o.format == "csv") {
        std::cout << "p,rho\n";
        for (const auto& [p, rv] : r.per_prime)
            std::cout << p << "," << rv.get_str() << "\n";
        return 0;
    }
    json j;
    j["form"] = form_literal(F);
    j["k"] = o.k;
    j["prime_bound"] = r.prime_bound;
    j["value"] = f15(r.value);
    j["tail_bound"] = f15(r.tail_bound);
    json pp = json::array();
    for (const auto& [p, rv] : r.per_prime)
        pp.push_back(json::array({p, rv.get_str()}));
    j["per_prime"] = pp;
    emit(j, o);
    return 0;
}

int cmd_area(const Options& o) {
    BinaryForm F = need_form(o);
    AreaResult a = area_AF(F, o.tol);
    json j;
    j["form"] = form_literal(F);
    j["value"] = f15(a.value);
    j["abs_error"] = f15(a.abs_error);
    json sa = json::array();
    for (double t : a.singular_angles) sa.push_back(f15(t));
    j["singular_angles"] = sa;
    emit(j, o);
    return 0;
}

int cmd_constant(const Options& o) {
    BinaryForm F = need_form(o);
    ConstantReport rep = C_Fk(F, o.k, prime_bound_for(o), o.tol, o.force);
    json j;
    j["form"] = form_literal(F);
    j["k"] = o.k;
    j["r"] = rep.r;
    j["class"] = aut_class_name(rep.label);
    j["aut_order"] = rep.aut_order;
    j["hypothesis_met"] = rep.hypothesis_met;
    if (!rep.hypothesis_met) j["banner"] = "hypothesis not met (forced)";
    if (!rep.special_case.empty()) j["special_case"] = rep.special_case;
    j["c_Fk"] = valerr_json(rep.c);
    json lt;
    for (size_t i = 0; i < rep.lattice_terms.size(); ++i) {
        json one = valerr_json(rep.lattice_terms[i].second);
        one["hnf"] = rep.lattice_hnf[i].second;
        lt[rep.lattice_terms[i].first] = one;
    }
    j["lattice_terms"] = lt;
    j["C_Fk"] = valerr_json(rep.C);
    emit(j, o);
    return 0;
}

int cmd_count(const Options& o) {
    BinaryForm F = need_form(o);
    double bc = beta_for(o, F);
    CountReport rep = count_report(F, o.Z, o.k, bc, o.diagnostics, o.threads);
    json j;
    j["form"] = form_literal(F);
    j["Z"] = rep.Z;
    j["k"] = rep.k;
    j["beta_cap"] = f15(rep.beta_cap);
    j["box"] = rep.box;
    j["counts"] = {{"N_F", rep.n_f},
                   {"N_Fk", rep.n_fk},
                   {"R_F", rep.r_f},
                   {"R_Fk", rep.r_fk},
                   {"R_F2", rep.r_f2}};
    j["omitted_region_bound"] = f15(rep.omitted_bound);
    j["r_f2_exponent_beta_d"] = f15(beta_d_exponent(F.degree));
    if (rep.has_diagnostics) {
        j["diagnostics"] = {{"N1", rep.diag.N1}, {"N2", rep.diag.N2},
                            {"N3", rep.diag.N3}, {"N4", rep.diag.N4},
                            {"N5", rep.diag.N5}, {"t1", f15(rep.diag.t1)},
                            {"t2", f15(rep.diag.t2)}, {"t3", f15(rep.diag.t3)}};
    }
    emit(j, o);
    return 0;
}

std::vector<long long> z_ladder(long long Z) {
    std::vector<long long> out;
    for (long long z = std::max<long long>(100, Z / 100); z < Z; z *= 10)
        out.push_back(z);
    out.push_back(Z);
    return out;
}

int cmd_verify(const Options& o) {
    BinaryForm F = need_form(o);
    double bc = beta_for(o, F);
    auto rows = convergence_study(F, o.k, z_ladder(o.Z), bc, prime_bound_for(o),
                                  o.tol, o.threads);
    std::cout << "Z,ratio,C,abs_gap\n";
    for (const auto& r : rows)
        std::cout << r.Z << "," << f15(r.ratio) << "," << f15(r.constant) << ","
                  << f15(r.abs_gap) << "\n";
    return 0;
}

int cmd_report(const Options& o) {
    if (o.corpus_path.empty()) throw InvalidInput("report: need --corpus FILE");
    auto entries = load_corpus(o.corpus_path);
    bool csv = o.format == "csv";
    if (csv) std::cout << "name,d,r,class,aut_order,C,C_err,last_ratio,abs_gap\n";
    json rows = json::array();
    for (const auto& e : entries) {
        ConstantReport rep = C_Fk(e.form, o.k, prime_bound_for(o), o.tol, o.force);
        if (e.expected_class && *e.expected_class != aut_class_name(rep.label))
            throw InvalidInput("corpus entry " + e.name + ": expected class " +
                               *e.expected_class + ", computed " +
                               aut_class_name(rep.label));
        if (e.expected_r && *e.expected_r != rep.r)
            throw InvalidInput("corpus entry " + e.name + ": expected r " +
                               std::to_string(*e.expected_r) + ", computed " +
                               std::to_string(rep.r));
        double bc = beta_for(o, e.form);
        auto conv = convergence_study(e.form, o.k, z_ladder(o.Z), bc,
                                      prime_bound_for(o), o.tol, o.threads);
        const auto& last = conv.back();
        if (csv) {
            std::cout << e.name << "," << e.form.degree << "," << rep.r << ","
                      << aut_class_name(rep.label) << "," << rep.aut_order << ","
                      << f15(rep.C.value) << "," << f15(rep.C.err) << ","
                      << f15(last.ratio) << "," << f15(last.abs_gap) << "\n";
        } else {
            json row;
            row["name"] = e.name;
            row["form"] = form_literal(e.form);
            row["d"] = e.form.degree;
            row["r"] = rep.r;
            row["class"] = aut_class_name(rep.label);
            row["aut_order"] = rep.aut_order;
            row["C_Fk"] = valerr_json(rep.C);
            row["last_Z"] = last.Z;
            row["last_ratio"] = f15(last.ratio);
            row["abs_gap"] = f15(last.abs_gap);
            rows.push_back(row);
        }
    }
    if (!csv) std::cout << rows.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"density constants and exact counts for k-free values of binary forms"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--form", o.form_literal, "form literal, e.g. \"d=3; coeffs=[1,0,0,1]\"");
    app.add_option("--corpus", o.corpus_path, "corpus file (report)");
    app.add_option("--k", o.k, "k-free exponent (>= 2)");
    app.add_option("--Z", o.Z, "count bound");
    app.add_option("--beta-cap", o.beta_cap, "enumeration cap multiplier (default max(4 E_F, 32))");
    app.add_option("--prime-bound", o.prime_bound, "Euler product truncation");
    app.add_option("--tol", o.tol, "area quadrature tolerance");
    app.add_option("--format", o.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--threads", o.threads, "worker threads for enumeration");
    app.add_flag("--force", o.force, "compute past hypothesis violations");
    app.add_flag("--diagnostics", o.diagnostics, "include the N1..N5 decomposition (count)");
    app.add_option("--m", o.m, "modulus (rho)");
    app.add_option("--p", o.p, "prime (rho, with --k)");
    app.add_option("--theta", o.theta, "congruence lattice a = theta b (mod m)");
    app.add_option("--mod", o.mod, "congruence lattice modulus");

    auto* c_factor = app.add_subcommand("factor", "factor F over Q");
    auto* c_aut = app.add_subcommand("aut", "automorphism group and class");
    auto* c_lat = app.add_subcommand("lattice", "fixed-integrality lattices / congruence lattice");
    auto* c_rho = app.add_subcommand("rho", "local solution count rho_F(m)");
    auto* c_lam = app.add_subcommand("lambda", "Euler product lambda_{F,k}");
    auto* c_area = app.add_subcommand("area", "A_F = mu(|F| <= 1)");
    auto* c_con = app.add_subcommand("constant", "the Table-2 constant C_{F,k}");
    auto* c_cnt = app.add_subcommand("count", "exact enumeration counts");
    auto* c_ver = app.add_subcommand("verify", "convergence of R_{F,k}/Z^(2/d) to C_{F,k}");
    auto* c_rep = app.add_subcommand("report", "corpus-wide constants and ratios");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // malformed invocation is a bad-input error
    }

    try {
        if (c_factor->parsed()) return cmd_factor(o);
        if (c_aut->parsed()) return cmd_aut(o);
        if (c_lat->parsed()) return cmd_lattice(o);
        if (c_rho->parsed()) return cmd_rho(o);
        if (c_lam->parsed()) return cmd_lambda(o);
        if (c_area->parsed()) return cmd_area(o);
        if (c_con->parsed()) return cmd_constant(o);
        if (c_cnt->parsed()) return cmd_count(o);
        if (c_ver->parsed()) return cmd_verify(o);
        if (c_rep->parsed()) return cmd_report(o);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const HypothesisError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
