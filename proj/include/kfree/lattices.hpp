#ifndef KFREE_LATTICES_HPP
#define KFREE_LATTICES_HPP

#include "kfree/forms.hpp"

#include <array>
#include <vector>

namespace kfree {

struct Vec2z {
    mpz_class x, y;
};
bool operator==(const Vec2z& a, const Vec2z& b);

// Full-rank sublattice of Z^2 in Hermite normal form: column basis
// ((a, 0), (b, c)) with a > 0, c > 0, 0 <= b < a; det = a*c = [Z^2 : L].
struct Lattice2 {
    mpz_class a, b, c;

    static Lattice2 zz();                                    // Z^2 itself
    static Lattice2 from_generators(const std::vector<Vec2z>& gens);
    mpz_class det() const { return a * c; }
    bool contains(const mpz_class& u, const mpz_class& v) const;
    Vec2z omega1() const { return {a, mpz_class(0)}; }
    Vec2z omega2() const { return {b, c}; }
    std::string str() const;
};

bool operator==(const Lattice2& L, const Lattice2& M);

// {v in Z^2 : A v in Z^2} for nonsingular rational A; equals Z^2 iff A is
// integral.  Solved as N v = 0 (mod q) with A = N/q via Smith reduction.
Lattice2 lattice_of(const RatMatrix2& A);

Lattice2 intersect(const Lattice2& L1, const Lattice2& L2);

// {(a,b) : a = theta*b (mod m)}, det m.
Lattice2 congruence_lattice(const mpz_class& theta, const mpz_class& m);

// Intersection of lattice_of over a set of matrices (Z^2 for an empty set).
Lattice2 group_lattice(const std::vector<RatMatrix2>& elements);

// Lagrange-Gauss reduced basis minimizing |w1|^2 + |w2|^2 (successive
// minima), with a deterministic canonical tie-break: candidates compared by
// (norm, sign-normalized entries) lexicographically.
std::pair<Vec2z, Vec2z> reduced_basis(const Lattice2& L);

// Nonzero lattice vector minimizing the max-norm, plus M itself.
std::pair<Vec2z, mpz_class> minimal_vector(const Lattice2& L);

// F restricted to L: transform(F, [w1 w2]) on the reduced basis.
BinaryForm restrict_form(const BinaryForm& F, const Lattice2& L);

} // namespace kfree

#endif
