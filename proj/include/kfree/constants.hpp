#ifndef KFREE_CONSTANTS_HPP
#define KFREE_CONSTANTS_HPP

#include "kfree/area.hpp"
#include "kfree/automorphisms.hpp"
#include "kfree/lattices.hpp"
#include "kfree/localdensity.hpp"

#include <string>
#include <vector>

namespace kfree {

struct ValErr {
    double value = 0;
    double err = 0;
};

// k > min{7r/18, ceil(r/2) - 2}, exact integer arithmetic.
bool k_hypothesis_admits(unsigned k, int r);
// The two pairs Theorem 1 singles out with weaker error terms.
bool k_special_case(unsigned k, int r, std::string& which);

// c_{F,k} = lambda_{F,k} * A_F with the errors combined multiplicatively.
ValErr c_Fk(const BinaryForm& F, unsigned k, uint64_t P, double tol);

// c(L) = c_{F_{w1,w2}, k} on the reduced basis of L; basis-independent.
ValErr c_of_lattice(const BinaryForm& F, unsigned k, const Lattice2& L,
                    uint64_t P, double tol);

struct ConstantReport {
    unsigned k = 2;
    int r = 0;
    AutClass label = AutClass::C1;
    int aut_order = 1;
    bool hypothesis_met = true;
    std::string special_case;       // "", "(2,6)" or "(3,8)"
    ValErr c;                       // c_{F,k}
    std::vector<std::pair<std::string, ValErr>> lattice_terms;   // Lambda, Lambda1..4
    std::vector<std::pair<std::string, std::string>> lattice_hnf; // rendered bases
    ValErr C;                       // the Table-2 constant C_{F,k}
};

// Assembles C_{F,k} per the automorphism class.  Throws HypothesisError when
// the (k, r) gate fails or the form is k-deficient, unless force is set (the
// report then carries hypothesis_met = false).
ConstantReport C_Fk(const BinaryForm& F, unsigned k, uint64_t P, double tol,
                    bool force = false);

} // namespace kfree

#endif
