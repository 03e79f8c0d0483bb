#ifndef KFREE_COUNTING_HPP
#define KFREE_COUNTING_HPP

#include "kfree/automorphisms.hpp"
#include "kfree/constants.hpp"
#include "kfree/forms.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace kfree {

// k-free test, exact.  Trial division by primes up to |n|^(1/2); the
// cofactor left after the sieve is prime.  The mpz variant falls back to a
// full factorization when trial division cannot finish the job.
bool is_kfree(long long n, unsigned k);
bool is_kfree_z(const mpz_class& n, unsigned k);

struct Solution {
    long long x, y, h; // h = F(x,y), 0 < |h| <= Z
};

// All integer pairs with 0 < |F(x,y)| <= Z and max(|x|,|y|) <= Z^(1/d) *
// beta_cap.  Certified per-row interval solving (derivative-recursive
// monotone splitting with exact integer evaluations); rows are partitioned
// across threads and re-assembled in row order, so the stream is identical
// for every thread count.  Emits a warning line to stderr when beta_cap <=
// E_F (the cusp lemma hypothesis).
std::vector<Solution> enumerate_solutions(const BinaryForm& F, long long Z,
                                          double beta_cap, int threads = 1);

long long enumeration_box(const BinaryForm& F, long long Z, double beta_cap);

// The Lemma-2-shaped omitted-region bound Z^(1/d) log Z + Z^(2/d)/beta^(d-2)
// (unnormalized), reported with every capped count.
double omitted_region_bound(int d, long long Z, double beta_cap);
double beta_d_exponent(int d); // 12/19, 3/((d-2) sqrt d + 3), 1/(d-1)

// Point counts.  N_F excludes F = 0 (1 <= |F| <= Z); N_F_beta includes it
// (the paper's N_F(Z, beta)).
long long N_F(const BinaryForm& F, long long Z, double beta_cap, int threads = 1);
long long N_F_beta(const BinaryForm& F, long long Z, double beta);
long long N_Fk(const BinaryForm& F, long long Z, unsigned k, double beta_cap,
               int threads = 1);
// Unit-square dilation count: pairs whose whole square [x,x+1) x [y,y+1)
// satisfies |F| <= Z and the box condition; exact via Sturm range tests.
long long N_tilde(const BinaryForm& F, long long Z, double beta);

long long R_F(const BinaryForm& F, long long Z, double beta_cap, int threads = 1);
long long R_Fk(const BinaryForm& F, long long Z, unsigned k, double beta_cap,
               int threads = 1);

// Solutions grouped by represented value and partitioned into Aut F orbits.
struct OrbitIndex {
    std::map<long long, std::vector<std::pair<long long, long long>>> pairs_by_value;
    std::map<long long, int> orbits_by_value;
    long long r_f2 = 0; // values with >= 2 orbits (not essentially represented)
};
OrbitIndex orbit_analysis(const BinaryForm& F, long long Z, double beta_cap,
                          const AutGroup& G, int threads = 1);

struct SieveDecomposition {
    long long N1 = 0, N2 = 0, N3 = 0, N4 = 0, N5 = 0;
    double t1 = 0, t2 = 0, t3 = 0; // prime thresholds used
};
SieveDecomposition sieve_decomposition(const BinaryForm& F, long long Z,
                                       unsigned k, double beta_cap,
                                       int threads = 1);

struct CountReport {
    long long Z = 0;
    unsigned k = 2;
    double beta_cap = 0;
    long long box = 0;
    long long n_f = 0, n_fk = 0, r_f = 0, r_fk = 0, r_f2 = 0;
    double omitted_bound = 0;
    bool has_diagnostics = false;
    SieveDecomposition diag;
};
CountReport count_report(const BinaryForm& F, long long Z, unsigned k,
                         double beta_cap, bool diagnostics, int threads = 1);

struct ConvergenceRow {
    long long Z;
    long long r_fk;
    double ratio;      // R_Fk / Z^(2/d)
    double constant;   // C_{F,k}
    double abs_gap;
    double error_budget; // lambda tail + area tol + omitted/Z^(2/d)
};
std::vector<ConvergenceRow> convergence_study(const BinaryForm& F, unsigned k,
                                              const std::vector<long long>& Zs,
                                              double beta_cap, uint64_t P,
                                              double tol, int threads = 1);

double default_beta_cap(const BinaryForm& F);

} // namespace kfree

#endif
