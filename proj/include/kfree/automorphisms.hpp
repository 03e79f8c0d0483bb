#ifndef KFREE_AUTOMORPHISMS_HPP
#define KFREE_AUTOMORPHISMS_HPP

#include "kfree/forms.hpp"

#include <string>
#include <vector>

namespace kfree {

enum class AutClass { C1, C2, C3, C4, C6, D1, D2, D3, D4, D6 };

const char* aut_class_name(AutClass c);
AutClass aut_class_from_name(const std::string& s);

// The finite group Aut F in GL_2(Q), with its conjugacy-class label.
// Elements are sorted lexicographically on (a1,a2,a3,a4) and every one has
// been verified exactly: transform(F, A) == F.
struct AutGroup {
    std::vector<RatMatrix2> elements;
    AutClass label = AutClass::C1;

    int order() const { return (int)elements.size(); }
    bool contains(const RatMatrix2& A) const;
    bool has_minus_identity() const;
};

// Exhaustive search over projective root-triple images, floating candidates
// rationalized and then verified exactly.  Precision and the rationalization
// denominator bound escalate together on a failed group sanity check.
AutGroup automorphism_group(const BinaryForm& F);

AutClass classify(const AutGroup& G);

// Distinguished data for the dihedral classes.
//   D3: A1..A3 the three involutions, A4 a generator of the order-3 subgroup.
//   D4: representatives of the three order-2 subgroups of Aut F / {±I}.
//   D6: ditto plus A4, a representative of the order-3 subgroup of the
//       quotient.  Representative = lexicographically minimal matrix of the
//       generating coset.
struct DihedralData {
    std::vector<RatMatrix2> involutions; // A1, A2, A3
    bool has_order3 = false;
    RatMatrix2 order3 = RatMatrix2::identity(); // A4 when present
};
DihedralData dihedral_subgroup_data(const AutGroup& G);

} // namespace kfree

#endif
