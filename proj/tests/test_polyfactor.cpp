#include <doctest.h>

#include "oracles.hpp"

#include "kfree/modpoly.hpp"
#include "kfree/polyfactor.hpp"

#include <set>

using namespace kfree;
using namespace kfree_test;

TEST_CASE("sum of cubes") {
    auto fac = factor_over_Q(mk(3, {1, 0, 0, 1}));
    CHECK(fac.unit == 1);
    CHECK(fac.content == 1);
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0] == mk(1, {1, 1}));
    CHECK(fac.factors[1] == mk(2, {1, -1, 1}));
    CHECK(fac.r == 2);
    CHECK(largest_factor_degree(mk(3, {1, 0, 0, 1})) == 2);
}

TEST_CASE("monomial extraction") {
    auto fac = factor_over_Q(mk(3, {0, 1, 1, 0}));
    REQUIRE(fac.factors.size() == 3);
    CHECK(fac.factors[0] == mk(1, {0, 1})); // y
    CHECK(fac.factors[1] == mk(1, {1, 0})); // x
    CHECK(fac.factors[2] == mk(1, {1, 1})); // x + y
    CHECK(fac.r == 1);
}

// Irreducibility oracle for a monic quartic with constant term 1: try every
// linear factor from the rational-root candidates and every quadratic
// splitting (x^2+ax+b)(x^2+cx+e) by exhausting the divisor pairs (b, e) and
// the coefficient matches.  Complete by Gauss's lemma at this size.
static bool quartic_irreducible_oracle(const ZPoly& f) {
    REQUIRE(f.deg() == 4);
    REQUIRE(f.lc() == 1);
    mpz_class c0 = f.c[0];
    for (long r : {1L, -1L})
        if (c0 % r == 0 && f.eval(r) == 0) return false;
    // quadratic splittings: b*e = c0, a+c = f3, b+e+ac = f2, ae+bc = f1
    for (long b = -8; b <= 8; ++b) {
        if (b == 0 || c0 % b != 0) continue;
        mpz_class e = c0 / b;
        for (long a = -16; a <= 16; ++a) {
            mpz_class c = f.c[3] - a;
            if (mpz_class(b) + e + a * c != f.c[2]) continue;
            if (a * e + c * b != f.c[1]) continue;
            return false;
        }
    }
    return true;
}

TEST_CASE("x^4+y^4 irreducible (coefficient-search oracle agrees)") {
    BinaryForm F = mk(4, {1, 0, 0, 0, 1});
    CHECK(quartic_irreducible_oracle(F.dehomogenize_x()));
    auto fac = factor_over_Q(F);
    CHECK(fac.factors.size() == 1);
    CHECK(fac.r == 4);
}

TEST_CASE("largest factor degree examples") {
    // rational-root oracle: cubic without a rational root is irreducible
    BinaryForm F = mk(3, {1, 0, 0, 2});
    ZPoly f = F.dehomogenize_x();
    bool has_rational_root = false;
    for (long num : {1L, -1L, 2L, -2L}) // divisors of the constant term
        if (f.eval(num) == 0) has_rational_root = true;
    CHECK(!has_rational_root);
    CHECK(largest_factor_degree(F) == 3);
    CHECK(largest_factor_degree(mk(3, {0, 1, 1, 0})) == 1);
}

TEST_CASE("reconstruction, idempotence, degree sums") {
    std::vector<BinaryForm> corpus = {
        mk(3, {1, 0, 0, 2}),  mk(3, {1, 0, 0, 1}),  mk(3, {1, 0, -3, -1}),
        mk(3, {0, 1, 1, 0}),  mk(4, {1, 0, 0, 0, 1}), mk(4, {1, 1, 0, 0, 2}),
        mk(4, {1, 2, 0, 2, 1}), mk(6, {1, -3, 1, 3, 1, -3, 1}),
        mk(6, {0, 1, 2, -1, -3, -1, 0}), mk(6, {2, 4, 2, 0, 0, 0, 0}),
        mk(5, {-6, 0, 3, 0, 0, 12})};
    for (const auto& F : corpus) {
        auto fac = factor_over_Q(F);
        CHECK(fac.reconstruct(F.degree) == F);
        int degsum = 0;
        for (const auto& g : fac.factors) {
            degsum += g.degree;
            // each factor is irreducible: re-factoring returns itself
            auto sub = factor_over_Q(g);
            CHECK(sub.factors.size() == 1);
            CHECK(sub.factors[0] == g);
            CHECK(sub.content == 1);
            CHECK(sub.unit == 1);
        }
        CHECK(degsum == F.degree);
        if (discriminant(F) != 0) {
            for (size_t i = 0; i + 1 < fac.factors.size(); ++i)
                CHECK(!(fac.factors[i] == fac.factors[i + 1]));
        }
    }
}

TEST_CASE("content, unit and repeated factors") {
    // -18 x^4 (x+y)^2 = unit -1, content 18
    BinaryForm F = mk(6, {-18, -36, -18, 0, 0, 0, 0});
    auto fac = factor_over_Q(F);
    CHECK(fac.unit == -1);
    CHECK(fac.content == 18);
    REQUIRE(fac.factors.size() == 6);
    CHECK(fac.reconstruct(6) == F);
}
