#ifndef KFREE_POLY_HPP
#define KFREE_POLY_HPP

#include <gmpxx.h>
#include <cstdint>
#include <string>
#include <vector>

namespace kfree {

// Dense univariate polynomial over Z, little-endian: c[i] is the
// coefficient of x^i.  The zero polynomial is the empty vector.
struct ZPoly {
    std::vector<mpz_class> c;

    ZPoly() = default;
    explicit ZPoly(std::vector<mpz_class> coeffs) : c(std::move(coeffs)) { trim(); }
    static ZPoly from_int(long v) { return ZPoly({mpz_class(v)}); }

    void trim();
    bool is_zero() const { return c.empty(); }
    int deg() const { return (int)c.size() - 1; } // -1 for the zero polynomial
    const mpz_class& lc() const { return c.back(); }

    mpz_class eval(const mpz_class& x) const;
    mpq_class eval_q(const mpq_class& x) const;
    // Sign of the value at x without building the full product when possible.
    int sign_at(const mpq_class& x) const;

    ZPoly derivative() const;
    mpz_class content() const;            // >= 0, gcd of coefficients
    ZPoly primitive_part() const;         // content removed, sign kept
    std::string str() const;              // human-readable, for diagnostics
};

bool operator==(const ZPoly& a, const ZPoly& b);
ZPoly operator+(const ZPoly& a, const ZPoly& b);
ZPoly operator-(const ZPoly& a, const ZPoly& b);
ZPoly operator*(const ZPoly& a, const ZPoly& b);
ZPoly operator*(const mpz_class& s, const ZPoly& a);
ZPoly operator-(const ZPoly& a);

// Exact division; throws std::logic_error if b does not divide a in Z[x].
ZPoly exact_div(const ZPoly& a, const ZPoly& b);
// True (and quotient) iff b | a in Z[x].
bool try_exact_div(const ZPoly& a, const ZPoly& b, ZPoly& quot);

// Pseudo-division: lc(b)^(deg a - deg b + 1) * a = q*b + r with deg r < deg b.
void pseudo_divmod(const ZPoly& a, const ZPoly& b, ZPoly& q, ZPoly& r);

// Primitive gcd in Z[x] via the subresultant PRS; result is primitive with
// positive leading coefficient (or the integer gcd for constants).
ZPoly gcd_z(const ZPoly& a, const ZPoly& b);

// Resultant Res(a, b), exact.
mpz_class resultant(const ZPoly& a, const ZPoly& b);

// Yun squarefree decomposition of a primitive polynomial: f = prod f_i^i.
// Returns the list (f_i, i) for the nonconstant f_i.
std::vector<std::pair<ZPoly, int>> squarefree_decomposition(const ZPoly& f);

// f(a*x + b) expanded in Z[x].
ZPoly compose_linear(const ZPoly& f, const mpz_class& a, const mpz_class& b);

// Reverse coefficients: x^deg * f(1/x).
ZPoly reverse_poly(const ZPoly& f);

} // namespace kfree

#endif
