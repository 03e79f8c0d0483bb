#include <doctest.h>

#include "oracles.hpp"

#include "kfree/errors.hpp"
#include "kfree/forms.hpp"

#include <cmath>

using namespace kfree;
using namespace kfree_test;

TEST_CASE("evaluate") {
    CHECK(mk(3, {1, 0, 0, 1}).evaluate(1, 1) == 2);
    CHECK(mk(3, {1, 0, 0, 1}).evaluate(2, -1) == 7);
    CHECK(mk(4, {1, 0, 0, 0, 1}).evaluate(3, 2) == 97);
}

TEST_CASE("discriminant") {
    CHECK(discriminant(mk(3, {1, 0, 0, 1})) == -27);
    CHECK(discriminant(mk(3, {0, 1, 1, 0})) != 0); // xy(x+y), distinct lines
    CHECK(discriminant(mk(3, {1, 0, 0, 0})) == 0); // x^3, triple root
}

TEST_CASE("transform matches the spec examples") {
    BinaryForm F3 = mk(3, {1, 0, 0, 1});
    CHECK(transform(F3, RatMatrix2::from_long(0, 1, 1, 0)) == F3);
    BinaryForm C3 = mk(3, {1, 0, -3, -1});
    CHECK(transform(C3, RatMatrix2::from_long(0, 1, -1, -1)) == C3);
    CHECK(transform(mk(4, {1, 0, 0, 0, 1}), RatMatrix2::from_long(1, 1, 0, 1)) ==
          mk(4, {1, 4, 6, 4, 2}));
    CHECK_THROWS_AS(
        transform(F3, RatMatrix2{mpq_class(1, 2), 0, 0, 1}),
        InvalidInput);
}

TEST_CASE("transform composes and is evaluation-consistent") {
    BinaryForm F = mk(4, {1, 1, 0, -1, 1});
    for (int t = 0; t < 5; ++t) {
        RatMatrix2 A = RatMatrix2::from_long(rnd(-3, 3), rnd(-3, 3), rnd(-3, 3), rnd(-3, 3));
        RatMatrix2 B = RatMatrix2::from_long(rnd(-3, 3), rnd(-3, 3), rnd(-3, 3), rnd(-3, 3));
        if (A.det() == 0 || B.det() == 0) { --t; continue; }
        CHECK(transform(transform(F, A), B) == transform(F, A * B));
    }
    RatMatrix2 A = RatMatrix2::from_long(2, 1, 1, 1);
    BinaryForm FA = transform(F, A);
    for (int i = 0; i < 100; ++i) {
        long x = rnd(-50, 50), y = rnd(-50, 50);
        CHECK(FA.evaluate(x, y) == F.evaluate(2 * x + y, x + y));
    }
}

TEST_CASE("|disc| is unimodular-invariant") {
    BinaryForm F = mk(3, {1, 0, 0, 2});
    mpz_class d0 = abs(discriminant(F));
    for (int t = 0; t < 8; ++t) {
        RatMatrix2 U = random_unimodular();
        CHECK(abs(discriminant(transform(F, U))) == d0);
    }
}

TEST_CASE("height") {
    CHECK(height(mk(3, {0, 1, 1, 0})) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    CHECK(height(mk(3, {1, 0, 0, 1})) == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-9));
    // norm homogeneity: H(2F) = 2 H(F) in degree 3
    BinaryForm F = mk(3, {1, 0, 0, 2});
    CHECK(height(mk(3, {2, 0, 0, 4})) == doctest::Approx(2 * height(F)).epsilon(1e-9));
}

TEST_CASE("height is factorization-scaling invariant") {
    // H recomputed from an explicitly rescaled factorization
    // F = [t(x - a1 y)] [(lead/t)(x - a2 y)] [(x - a3 y)] must give the same
    // product of factor norms as height(F)
    BinaryForm F = mk(3, {1, 0, 0, 2});
    double h = height(F);
    RootData rd = root_data(F);
    PrecisionGuard guard(40);
    double lead = std::abs(mpz_get_d(rd.leading.get_mpz_t()));
    for (double t : {3.7, 0.21}) {
        double alt = 1.0;
        for (size_t i = 0; i < rd.roots.roots.size(); ++i) {
            double n = sqrt(1 + norm_cx(rd.roots.roots[i])).convert_to<double>();
            double scale = (i == 0) ? t : (i == 1 ? lead / t : 1.0);
            alt *= std::abs(scale) * n;
        }
        CHECK(alt == doctest::Approx(h).epsilon(1e-9));
    }
}

TEST_CASE("cusp constant") {
    CHECK(cusp_constant(mk(3, {1, 0, 0, 1})) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(cusp_constant(mk(3, {0, 1, 1, 0})) == doctest::Approx(2.0).epsilon(1e-9));
    // (x-y)(x-2y)(2x-y): roots 1, 2, 1/2, min gap 1/2 < 1
    BinaryForm F = mk(3, {2, -7, 7, -2});
    double e = cusp_constant(F);
    CHECK(e > 2 * 2.0); // > 2 max(1,|alpha|)
    CHECK(e == doctest::Approx(8.0).epsilon(1e-9));
}

TEST_CASE("root data reconstructs the form to working precision") {
    for (const auto& F : {mk(3, {1, 0, 0, 2}), mk(3, {0, 1, 1, 0}),
                          mk(4, {1, 1, 0, -1, 1}), mk(6, {1, -3, 1, 3, 1, -3, 1})}) {
        RootData rd = root_data(F);
        PrecisionGuard guard(40);
        // expand lead * prod (x - alpha_i y) (* y) and compare coefficients
        int d = F.degree;
        std::vector<CX> c = {CX(1l)};
        for (const auto& a : rd.roots.roots) {
            std::vector<CX> next(c.size() + 1);
            for (size_t i = 0; i < c.size(); ++i) {
                next[i] = next[i] + c[i]; // times x
                next[i + 1] = next[i + 1] - c[i] * a; // times -alpha y
            }
            c = next;
        }
        if (rd.has_y_factor) c.insert(c.begin(), CX(0l));
        REQUIRE((int)c.size() == d + 1);
        for (int i = 0; i <= d; ++i) {
            Real expect(F.coeffs[i].get_mpz_t());
            Real lead(rd.leading.get_mpz_t());
            Real re = c[i].re * lead, im = c[i].im * lead;
            CHECK(std::abs(re.convert_to<double>() - expect.convert_to<double>()) <
                  1e-20 * (1 + std::abs(expect.convert_to<double>())));
            CHECK(std::abs(im.convert_to<double>()) <
                  1e-20 * (1 + std::abs(expect.convert_to<double>())));
        }
    }
}

TEST_CASE("root certification survives extreme conjugation") {
    // entries ~1e4 crowd the roots to gaps ~1e-8; certification must still
    // hold (escalating precision internally if it needs to)
    BinaryForm F = mk(4, {1, 0, 0, 0, 1});
    RatMatrix2 T{mpq_class(10007), mpq_class(20011), mpq_class(9973), mpq_class(19949)};
    REQUIRE(T.det() != 0);
    BinaryForm FT = transform(F, T);
    RootData rd = root_data(FT);
    CHECK(rd.roots.roots.size() == 4);
    // discs pairwise disjoint was certified; double-check gaps dominate radii
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j) {
            Real gap = abs_cx(rd.roots.roots[i] - rd.roots.roots[j]);
            CHECK(gap > rd.roots.radii[i] + rd.roots.radii[j]);
        }
    CHECK(height(FT) > 0);
}

TEST_CASE("form literal round trip and rejection") {
    BinaryForm F = parse_form("d=3; coeffs=[1,0,0,1]");
    CHECK(F == mk(3, {1, 0, 0, 1}));
    CHECK(parse_form(form_literal(F)) == F);
    CHECK_THROWS_AS(parse_form("d=3; coeffs=[1,0,1]"), InvalidInput);
    CHECK_THROWS_AS(parse_form("d=3; coeffs=[1,0,0,1,5]"), InvalidInput);
    CHECK_THROWS_AS(parse_form("coeffs=[1,1]"), InvalidInput);
    CHECK_THROWS_AS(parse_form("d=2; coeffs=[0,0,0]"), InvalidInput);
}
