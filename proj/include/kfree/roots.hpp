#ifndef KFREE_ROOTS_HPP
#define KFREE_ROOTS_HPP

#include "kfree/poly.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <vector>

namespace kfree {

namespace mp = boost::multiprecision;
using Real = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

// Minimal complex type over the runtime-precision real; std::complex is not
// specified for user-defined scalars.
struct CX {
    Real re, im;
    CX() : re(0), im(0) {}
    CX(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit CX(long v) : re(v), im(0) {}
};

CX operator+(const CX& a, const CX& b);
CX operator-(const CX& a, const CX& b);
CX operator*(const CX& a, const CX& b);
CX operator/(const CX& a, const CX& b);
Real abs_cx(const CX& a);
Real norm_cx(const CX& a); // |a|^2

// RAII guard for boost-mpfr default precision (decimal digits).
struct PrecisionGuard {
    unsigned saved;
    explicit PrecisionGuard(unsigned digits10)
        : saved(Real::default_precision()) {
        Real::default_precision(digits10);
    }
    ~PrecisionGuard() { Real::default_precision(saved); }
};

// All complex roots of a squarefree integer polynomial, simultaneously
// approximated by Aberth-Ehrlich iteration at >= prec_bits of precision.
// Each reported root carries an inclusion radius: a disc certain to contain
// a true root, with all discs pairwise disjoint (so each contains exactly
// one).  Escalates precision internally; throws PrecisionError if the
// certificate cannot be established.
struct CertifiedRoots {
    std::vector<CX> roots;
    std::vector<Real> radii;
    unsigned prec_bits;
    int real_count; // exact count of real roots (Sturm), matched below
    std::vector<bool> is_real;
};

CertifiedRoots certified_roots(const ZPoly& f, unsigned prec_bits = 128);

// Best rational approximation p/q with q <= qmax (continued fractions);
// returns false if the closest convergent misses x by more than tol.
bool rationalize(const Real& x, const mpz_class& qmax, const Real& tol,
                 mpq_class& out);

} // namespace kfree

#endif
