#include <doctest.h>

#include "oracles.hpp"

#include "kfree/constants.hpp"
#include "kfree/errors.hpp"

#include <cmath>

using namespace kfree;
using namespace kfree_test;

TEST_CASE("hypothesis gate") {
    std::string which;
    // admitted pairs
    for (auto [k, r] : std::vector<std::pair<unsigned, int>>{
             {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 7}, {3, 8}})
        CHECK((k_hypothesis_admits(k, r) || k_special_case(k, r, which)));
    CHECK(!k_hypothesis_admits(2, 7));
    // exactly (2,6) and (3,8) carry the special labels
    int specials = 0;
    for (unsigned k = 2; k <= 4; ++k)
        for (int r = 1; r <= 12; ++r)
            if (k_special_case(k, r, which)) {
                ++specials;
                CHECK(((k == 2 && r == 6) || (k == 3 && r == 8)));
            }
    CHECK(specials == 2);
}

TEST_CASE("c_Fk") {
    BinaryForm F = mk(4, {1, 0, 0, 0, 1});
    ValErr c = c_Fk(F, 2, 1000, 1e-8);
    AreaResult a = area_AF(F, 1e-8);
    CHECK(c.value <= a.value + c.err); // lambda in [0, 1]
    CHECK(c.value > 0);
    // k-deficient scaling forces the constant to zero
    CHECK(c_Fk(mk(4, {16, 0, 0, 0, 16}), 2, 1000, 1e-8).value == 0);
    // values self-consistent as P and tol tighten, intervals shrink and nest
    ValErr loose = c_Fk(F, 2, 200, 1e-6);
    ValErr tight = c_Fk(F, 2, 2000, 1e-9);
    CHECK(tight.err < loose.err);
    CHECK(std::abs(tight.value - loose.value) <= loose.err + tight.err);
}

TEST_CASE("c_of_lattice") {
    BinaryForm F = mk(4, {1, 0, 0, 0, 1});
    ValErr direct = c_Fk(F, 2, 1000, 1e-8);
    ValErr viaZZ = c_of_lattice(F, 2, Lattice2::zz(), 1000, 1e-8);
    CHECK(viaZZ.value == doctest::Approx(direct.value).epsilon(1e-12));
    // basis independence: a unimodular re-basis leaves c(L) unchanged
    Lattice2 L{2, 0, 2};
    ValErr a = c_of_lattice(F, 2, L, 1000, 1e-8);
    BinaryForm R = restrict_form(F, L);
    for (int t = 0; t < 3; ++t) {
        BinaryForm R2 = transform(R, random_unimodular());
        ValErr b = c_Fk(R2, 2, 1000, 1e-8);
        CHECK(std::abs(a.value - b.value) <= 2 * (a.err + b.err) + 1e-9);
    }
    // computed on 16x^4+16y^4
    ValErr direct16 = c_Fk(mk(4, {16, 0, 0, 0, 16}), 2, 1000, 1e-8);
    CHECK(a.value == doctest::Approx(direct16.value).epsilon(1e-12));
}

TEST_CASE("table rows with Lambda = Z^2 reduce to rational multiples") {
    // C1: C = c
    auto c1 = C_Fk(mk(3, {1, 0, 0, 2}), 2, 1000, 1e-8);
    CHECK(c1.label == AutClass::C1);
    CHECK(c1.C.value == doctest::Approx(c1.c.value));
    // C2: C = c/2
    auto c2 = C_Fk(mk(4, {1, 1, 0, 0, 2}), 2, 1000, 1e-8);
    CHECK(c2.label == AutClass::C2);
    CHECK(c2.C.value == doctest::Approx(c2.c.value / 2));
    // D1 with Lambda = Z^2 (integral swap): C = c - c/2 = c/2
    auto d1 = C_Fk(mk(3, {1, 0, 0, 1}), 2, 1000, 1e-8);
    CHECK(d1.label == AutClass::D1);
    REQUIRE(d1.lattice_terms.size() == 1);
    CHECK(d1.lattice_terms[0].second.value == doctest::Approx(d1.c.value));
    CHECK(d1.C.value == doctest::Approx(d1.c.value / 2));
    // D4 with everything integral: C = c/8
    auto d4 = C_Fk(mk(4, {1, 0, 0, 0, 1}), 2, 1000, 1e-8);
    CHECK(d4.label == AutClass::D4);
    CHECK(d4.C.value == doctest::Approx(d4.c.value / 8));
    // D3 integral: C = c/6; D6 integral: C = c/12
    auto d3 = C_Fk(mk(3, {0, 1, 1, 0}), 2, 1000, 1e-8);
    CHECK(d3.C.value == doctest::Approx(d3.c.value / 6));
    auto d6 = C_Fk(mk(6, {1, -3, 1, 3, 1, -3, 1}), 2, 2000, 1e-8);
    CHECK(d6.C.value == doctest::Approx(d6.c.value / 12));
    CHECK(d6.special_case == "(2,6)");
}

TEST_CASE("positivity bounds") {
    for (const auto& F : {mk(3, {1, 0, 0, 2}), mk(3, {1, 0, 0, 1}),
                          mk(3, {1, 0, -3, -1}), mk(4, {1, 0, 0, 0, 1}),
                          mk(4, {1, 2, 0, 2, 1}), mk(6, {0, 1, 2, -1, -3, -1, 0})}) {
        auto rep = C_Fk(F, 2, 1000, 1e-8);
        CHECK(rep.C.value > 0);
        CHECK(rep.C.value <= rep.c.value + rep.c.err + rep.C.err);
        CHECK(rep.C.value >= rep.c.value / 12 - rep.c.err - rep.C.err);
    }
}

TEST_CASE("gate errors and force") {
    CHECK_THROWS_AS(C_Fk(mk(7, {1, 0, 0, 0, 0, 0, 0, 2}), 2, 1000, 1e-8),
                    HypothesisError);
    CHECK_THROWS_AS(C_Fk(mk(3, {4, 0, 0, 4}), 2, 1000, 1e-8), HypothesisError);
    auto forced = C_Fk(mk(7, {1, 0, 0, 0, 0, 0, 0, 2}), 2, 1000, 1e-8, true);
    CHECK(!forced.hypothesis_met);
    auto forced2 = C_Fk(mk(3, {4, 0, 0, 4}), 2, 1000, 1e-8, true);
    CHECK(!forced2.hypothesis_met);
    CHECK(forced2.C.value == 0); // lambda vanishes at p = 2
}

TEST_CASE("conjugated dihedral forms compute on genuinely distinct lattices") {
    BinaryForm F = transform(mk(4, {1, 0, 0, 0, 1}), RatMatrix2::from_long(1, 1, 0, 2));
    auto rep = C_Fk(F, 2, 1000, 1e-8);
    CHECK(rep.label == AutClass::D4);
    // with a det-2 conjugation the Lambda_i need not coincide with Lambda
    bool distinct = false;
    std::string lam_hnf;
    for (const auto& [n, h] : rep.lattice_hnf)
        if (n == "Lambda") lam_hnf = h;
    for (const auto& [n, h] : rep.lattice_hnf)
        if (n != "Lambda" && h != lam_hnf) distinct = true;
    CHECK(distinct);
    CHECK(rep.C.value > 0);
}
