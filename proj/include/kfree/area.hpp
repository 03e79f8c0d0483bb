#ifndef KFREE_AREA_HPP
#define KFREE_AREA_HPP

#include "kfree/forms.hpp"

#include <vector>

namespace kfree {

struct AreaResult {
    double value = 0;
    double abs_error = 0;                // accumulated certified-style bound
    std::vector<double> singular_angles; // zeros of F on the unit circle
};

// A_F = mu({|F| <= 1}) = (1/2) integral |F(cos t, sin t)|^(-2/d) dt.  The
// integrand blows up like |t - t0|^(-2/d) at real root directions; those
// panels are regularized by the substitution t = t0 +- s^(d/(d-2)), after
// which adaptive Gauss-Kronrod applies everywhere.
AreaResult area_AF(const BinaryForm& F, double tol = 1e-8);

// Same but the radial extent capped at R: mu({|F| <= 1} intersect disc(R)).
// Bounded integrand min(|F(cos,sin)|^(-2/d), R^2); used by the Monte-Carlo
// cross-check and the cusp-tail accounting.
AreaResult area_AF_capped(const BinaryForm& F, double R, double tol = 1e-8);

struct Lattice2;

// area_AF(restrict_form(F, L)); equals area_AF(F)/det(L) within tolerances.
AreaResult area_of_lattice_restriction(const BinaryForm& F, const Lattice2& L,
                                       double tol = 1e-8);

} // namespace kfree

#endif
