#ifndef KFREE_FORMS_HPP
#define KFREE_FORMS_HPP

#include "kfree/poly.hpp"
#include "kfree/roots.hpp"

#include <string>
#include <vector>

namespace kfree {

// Integer binary form F(x,y) = sum_{i=0..d} c_i x^(d-i) y^i.
struct BinaryForm {
    int degree = 0;
    std::vector<mpz_class> coeffs; // c_0..c_d

    BinaryForm() = default;
    BinaryForm(int d, std::vector<mpz_class> c);

    bool is_zero() const;
    mpz_class evaluate(const mpz_class& x, const mpz_class& y) const;
    double evaluate_d(double x, double y) const;

    // F(x, 1) as a univariate polynomial.
    ZPoly dehomogenize_x() const;
    // F(1, y) as a univariate polynomial.
    ZPoly dehomogenize_y() const;
    // Inverse of dehomogenize_x at the given total degree.
    static BinaryForm homogenize(const ZPoly& f, int degree);

    mpz_class content() const;
    std::string str() const; // e.g. "x^3 + y^3"
};

bool operator==(const BinaryForm& a, const BinaryForm& b);

// 2x2 rational matrix (a1 a2; a3 a4), the substitution of the pipeline:
// F_A(x,y) = F(a1 x + a2 y, a3 x + a4 y).
struct RatMatrix2 {
    mpq_class a1, a2, a3, a4;

    static RatMatrix2 identity();
    static RatMatrix2 from_long(long x1, long x2, long x3, long x4);
    mpq_class det() const;
    RatMatrix2 inverse() const;
    bool is_integral() const;
    // Multiplicative order if in {1,...,12}, else 0 (not finite / too big).
    int order() const;
    std::string str() const;
};

RatMatrix2 operator*(const RatMatrix2& A, const RatMatrix2& B);
bool operator==(const RatMatrix2& A, const RatMatrix2& B);
bool operator<(const RatMatrix2& A, const RatMatrix2& B); // lexicographic

// F_A with rational coefficients (always defined).
std::vector<mpq_class> transform_q(const BinaryForm& F, const RatMatrix2& A);
// Integer-typed variant; throws InvalidInput on a non-integral result.
BinaryForm transform(const BinaryForm& F, const RatMatrix2& A);

// Standard binary-form discriminant, computed as
// (-1)^(d(d-1)/2) Res(f, f')/c_0 after a unimodular shift making c_0 != 0.
mpz_class discriminant(const BinaryForm& F);

// Complex factorization data of F: F = a prod (x - alpha_i y), times a*y
// when y | F.  Certified roots at >= prec_bits.
struct RootData {
    mpz_class leading;        // positive in the paper; sign kept here
    bool has_y_factor = false;
    CertifiedRoots roots;     // roots of F(x,1)
};
RootData root_data(const BinaryForm& F, unsigned prec_bits = 128);

// H(F) = prod sqrt(|gamma_i|^2 + |beta_i|^2) over the linear factors, from
// roots certified at >= prec_bits.
double height(const BinaryForm& F, unsigned prec_bits = 128);

// E_F of the cusp lemma: 2 max(1,|alpha_j|) / min(1, min |alpha_i - alpha_j|).
double cusp_constant(const BinaryForm& F, unsigned prec_bits = 128);

// Angles theta in [0, 2pi) with F(cos theta, sin theta) = 0, sorted.  The
// count is certified against the exact Sturm real-root count.
std::vector<double> real_root_angles(const BinaryForm& F);

// CLI literal: "d=3; coeffs=[1,0,0,1]".
BinaryForm parse_form(const std::string& text);
std::string form_literal(const BinaryForm& F);

} // namespace kfree

#endif
