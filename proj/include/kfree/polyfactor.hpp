#ifndef KFREE_POLYFACTOR_HPP
#define KFREE_POLYFACTOR_HPP

#include "kfree/forms.hpp"

#include <vector>

namespace kfree {

// F = unit * content * prod factors, each factor a primitive irreducible
// binary form whose first nonzero coefficient is positive.  Repeated factors
// appear repeatedly (multiplicity 1 everywhere when disc(F) != 0).  Factors
// are sorted by (degree, coefficient vector).
struct Factorization {
    int unit = 1;
    mpz_class content = 1;
    std::vector<BinaryForm> factors;
    int r = 0; // largest irreducible-factor degree

    BinaryForm reconstruct(int degree) const;
};

Factorization factor_over_Q(const BinaryForm& F);
int largest_factor_degree(const BinaryForm& F);

// Irreducible factors of a squarefree primitive univariate polynomial over Z
// (Zassenhaus: factor mod p, Hensel lift, subset recombination).  Exposed for
// tests; factor_over_Q is the form-level entry point.
std::vector<ZPoly> factor_squarefree_z(const ZPoly& f);

} // namespace kfree

#endif
