#include "kfree/counting.hpp"

#include "kfree/errors.hpp"
#include "kfree/localdensity.hpp"
#include "kfree/primes.hpp"
#include "kfree/sturm.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <thread>
#include <unordered_map>

namespace kfree {

bool is_kfree(long long n, unsigned k) {
    if (n == 0 || k < 2) throw InvalidInput("is_kfree: need n != 0, k >= 2");
    unsigned long long m = n < 0 ? -(unsigned long long)n : (unsigned long long)n;
    if (m == 1) return true;
    for (uint64_t p : small_primes()) {
        if (p * p > m) break;
        if (m % p == 0) {
            unsigned e = 0;
            while (m % p == 0) {
                m /= p;
                ++e;
            }
            if (e >= k) return false;
        }
    }
    // sieve covers p <= 1e6; within long long the remaining cofactor has no
    // factor below its square root, hence is 1 or prime
    return true;
}

bool is_kfree_z(const mpz_class& n, unsigned k) {
    if (n == 0 || k < 2) throw InvalidInput("is_kfree_z: need n != 0, k >= 2");
    if (mpz_fits_slong_p(n.get_mpz_t())) return is_kfree(mpz_get_si(n.get_mpz_t()), k);
    for (const auto& [p, e] : factorize(n))
        if ((unsigned)e >= k) return false;
    return true;
}

double beta_d_exponent(int d) {
    if (d == 3) return 12.0 / 19.0;
    if (d <= 8) return 3.0 / ((d - 2) * std::sqrt((double)d) + 3.0);
    return 1.0 / (d - 1);
}

double omitted_region_bound(int d, long long Z, double beta_cap) {
    double z = (double)Z;
    return std::pow(z, 1.0 / d) * std::log(z) +
           std::pow(z, 2.0 / d) / std::pow(beta_cap, d - 2);
}

double default_beta_cap(const BinaryForm& F) {
    return std::max(4.0 * cusp_constant(F), 32.0);
}

long long enumeration_box(const BinaryForm& F, long long Z, double beta_cap) {
    if (Z < 1) throw InvalidInput("enumeration: Z must be >= 1");
    double b = std::pow((double)Z, 1.0 / F.degree) * beta_cap;
    if (b > 4e17) throw ResourceError("enumeration: box too large");
    return (long long)std::floor(b);
}

namespace {

// ---- certified per-row interval solving -------------------------------
//
// Monotone splitting: the real critical points of the row polynomial are
// bracketed by recursing on derivatives; between brackets the polynomial is
// monotone and exact integer binary search finds the solution range.  All
// arithmetic is exact (int64 under a precomputed bound, else mpz).

template <class T>
T scalar_from_ll(long long v);
template <>
inline long long scalar_from_ll<long long>(long long v) { return v; }
template <>
inline mpz_class scalar_from_ll<mpz_class>(long long v) { return mpz_class((long)v); }

template <class T>
struct RPoly {
    std::vector<T> c; // little-endian

    int deg() const {
        int k = (int)c.size() - 1;
        while (k >= 0 && c[k] == 0) --k;
        return k;
    }
    T eval(long long x) const {
        T acc = 0;
        T xs = scalar_from_ll<T>(x);
        for (size_t i = c.size(); i-- > 0;) acc = acc * xs + c[i];
        return acc;
    }
    int sign_eval(long long x) const {
        T v = eval(x);
        return v > 0 ? 1 : (v < 0 ? -1 : 0);
    }
    RPoly deriv() const {
        RPoly d;
        if (c.size() <= 1) return d;
        d.c.resize(c.size() - 1);
        for (size_t i = 1; i < c.size(); ++i)
            d.c[i - 1] = c[i] * scalar_from_ll<T>((long long)i);
        return d;
    }
    bool is_zero() const { return deg() < 0; }
};

// Bracket starts a: every sign change of g in [lo, hi] happens inside some
// (a, a+1].  Conservative (extra brackets are harmless).
template <class T>
void sign_brackets(const RPoly<T>& g, long long lo, long long hi,
                   std::vector<long long>& out) {
    if (g.deg() <= 0 || lo >= hi) return;
    std::vector<long long> inner;
    sign_brackets(g.deriv(), lo, hi, inner);
    std::vector<long long> edges;
    edges.push_back(lo);
    edges.push_back(hi);
    for (long long a : inner) {
        if (a > lo && a < hi) edges.push_back(a);
        if (a + 1 > lo && a + 1 < hi) edges.push_back(a + 1);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        long long u = edges[i], v = edges[i + 1];
        int su = g.sign_eval(u), sv = g.sign_eval(v);
        if (su == 0) {
            out.push_back(u - 1);
            out.push_back(u);
        }
        if (sv == 0 && v == hi) {
            out.push_back(v - 1);
            out.push_back(v);
        }
        if (su != 0 && sv != 0 && su != sv) {
            long long A = u, B = v;
            while (B - A > 1) {
                long long mid = A + (B - A) / 2;
                if (g.sign_eval(mid) == su) A = mid;
                else B = mid;
            }
            out.push_back(A);
            out.push_back(B); // covers a root landing exactly on B
        }
    }
}

// Solution ranges {x in [lo,hi] : |f(x)| <= Z}, maximal and sorted.
template <class T>
std::vector<std::pair<long long, long long>> row_ranges(const RPoly<T>& f,
                                                        long long Z,
                                                        long long lo,
                                                        long long hi) {
    std::vector<std::pair<long long, long long>> out;
    if (lo > hi) return out;
    int d = f.deg();
    if (d < 0) return out; // identically zero row: only h = 0, excluded
    if (d == 0) {
        T v = f.c[0];
        T zp = scalar_from_ll<T>(Z), zn = scalar_from_ll<T>(-Z);
        if (v <= zp && v >= zn) out.emplace_back(lo, hi);
        return out;
    }
    std::vector<long long> br;
    sign_brackets(f.deriv(), lo, hi, br);
    std::vector<long long> edges;
    edges.push_back(lo);
    edges.push_back(hi);
    for (long long a : br) {
        if (a > lo && a < hi) edges.push_back(a);
        if (a + 1 > lo && a + 1 < hi) edges.push_back(a + 1);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    T zpos = scalar_from_ll<T>(Z);
    T zneg = scalar_from_ll<T>(-Z);
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        long long u = edges[i], v = edges[i + 1];
        T fu = f.eval(u), fv = f.eval(v);
        bool incr = fv >= fu;
        T flo = incr ? fu : fv, fhi = incr ? fv : fu;
        if (flo > zpos || fhi < zneg) continue;
        // first x with f >= -Z (increasing case)
        auto search_first = [&](auto pred) -> long long {
            // smallest x in [u, v] with pred(x); pred monotone true-upward
            long long A = u, B = v;
            if (pred(A)) return A;
            while (B - A > 1) {
                long long mid = A + (B - A) / 2;
                if (pred(mid)) B = mid;
                else A = mid;
            }
            return B;
        };
        auto search_last = [&](auto pred) -> long long {
            // largest x in [u, v] with pred(x); pred monotone true-downward
            long long A = u, B = v;
            if (pred(B)) return B;
            while (B - A > 1) {
                long long mid = A + (B - A) / 2;
                if (pred(mid)) A = mid;
                else B = mid;
            }
            return A;
        };
        long long x0, x1;
        if (incr) {
            x0 = (fu >= zneg) ? u : search_first([&](long long x) { return f.eval(x) >= zneg; });
            x1 = (fv <= zpos) ? v : search_last([&](long long x) { return f.eval(x) <= zpos; });
        } else {
            x0 = (fu <= zpos) ? u : search_first([&](long long x) { return f.eval(x) <= zpos; });
            x1 = (fv >= zneg) ? v : search_last([&](long long x) { return f.eval(x) >= zneg; });
        }
        if (x0 <= x1) {
            if (!out.empty() && out.back().second >= x0 - 1)
                out.back().second = std::max(out.back().second, x1);
            else
                out.emplace_back(x0, x1);
        }
    }
    return out;
}

struct RowContext {
    const BinaryForm* F;
    long long Z;
    long long B;
    mpz_class ll_bound; // int64 path admissible when row bound below this
};

// coefficients of F(x, y0) in x, little-endian: coeff[s] = c_{d-s} y0^{d-s}
void build_row(const BinaryForm& F, long long y0, std::vector<mpz_class>& out) {
    int d = F.degree;
    out.assign(d + 1, 0);
    mpz_class ypow = 1;
    for (int s = d; s >= 0; --s) {
        out[s] = F.coeffs[d - s] * ypow;
        ypow *= (long)y0;
    }
}

template <class Emit>
void solve_row(const RowContext& ctx, long long y0, Emit&& emit) {
    std::vector<mpz_class> rc;
    build_row(*ctx.F, y0, rc);
    mpz_class maxc = 0;
    for (const auto& t : rc) {
        mpz_class a = abs(t);
        if (a > maxc) maxc = a;
    }
    bool use_ll = maxc < ctx.ll_bound;
    auto emit_ranges = [&](const std::vector<std::pair<long long, long long>>& rs,
                           auto&& evalh) {
        for (const auto& [x0, x1] : rs)
            for (long long x = x0; x <= x1; ++x) {
                long long h = evalh(x);
                if (h != 0) emit(x, y0, h);
            }
    };
    if (use_ll) {
        RPoly<long long> f;
        f.c.resize(rc.size());
        for (size_t i = 0; i < rc.size(); ++i) f.c[i] = mpz_get_si(rc[i].get_mpz_t());
        auto rs = row_ranges(f, ctx.Z, -ctx.B, ctx.B);
        emit_ranges(rs, [&](long long x) { return f.eval(x); });
    } else {
        RPoly<mpz_class> f;
        f.c = rc;
        auto rs = row_ranges(f, ctx.Z, -ctx.B, ctx.B);
        emit_ranges(rs, [&](long long x) {
            mpz_class h = f.eval(x);
            return (long long)mpz_get_si(h.get_mpz_t());
        });
    }
}

} // namespace

std::vector<Solution> enumerate_solutions(const BinaryForm& F, long long Z,
                                          double beta_cap, int threads) {
    if (F.degree < 3) throw InvalidInput("enumerate: degree must be >= 3");
    if (discriminant(F) == 0) throw InvalidInput("enumerate: zero discriminant");
    if (Z < 1) throw InvalidInput("enumerate: Z must be >= 1");
    if (Z > (long long)4e17) throw ResourceError("enumerate: Z too large for exact counters");
    double ef = cusp_constant(F);
    if (beta_cap <= ef)
        std::fprintf(stderr,
                     "warning: beta_cap %.3f <= E_F %.3f; the cusp bound hypothesis fails\n",
                     beta_cap, ef);
    RowContext ctx;
    ctx.F = &F;
    ctx.Z = Z;
    ctx.B = enumeration_box(F, Z, beta_cap);
    // int64 Horner is safe when (d+1) * maxcoeff * (B+1)^d stays below 2^62
    // (the derivative chain is covered too once B+1 >= d)
    {
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), (unsigned long)(ctx.B + 1), F.degree);
        mpz_class cap = (mpz_class(1) << 62);
        mpz_class denom = pw * (long)(F.degree + 1) * 4;
        ctx.ll_bound = (ctx.B + 1 >= F.degree) ? mpz_class(cap / denom) : mpz_class(0);
    }
    const uint64_t guard = max_cells_guard();
    std::atomic<uint64_t> emitted{0};
    std::atomic<bool> tripped{false};

    long long rows = 2 * ctx.B + 1;
    int T = std::max(1, threads);
    if ((long long)T > rows) T = (int)rows;
    std::vector<std::vector<Solution>> chunks(T);
    auto work = [&](int t) {
        long long y_begin = -ctx.B + rows * t / T;
        long long y_end = -ctx.B + rows * (t + 1) / T;
        auto& local = chunks[t];
        uint64_t count = 0;
        for (long long y = y_begin; y < y_end && !tripped.load(std::memory_order_relaxed); ++y) {
            solve_row(ctx, y, [&](long long x, long long yy, long long h) {
                local.push_back({x, yy, h});
                ++count;
            });
            if (count > 1000000) {
                if (emitted.fetch_add(count) + count > guard) tripped.store(true);
                count = 0;
            }
        }
        emitted.fetch_add(count);
    };
    if (T == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < T; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    if (tripped.load() || emitted.load() > guard)
        throw ResourceError("enumerate: output exceeds the cell guard (set KFREE_MAX_CELLS)");
    std::vector<Solution> out;
    size_t total = 0;
    for (const auto& c : chunks) total += c.size();
    out.reserve(total);
    for (auto& c : chunks) {
        out.insert(out.end(), c.begin(), c.end());
        c.clear();
        c.shrink_to_fit();
    }
    return out;
}

long long N_F(const BinaryForm& F, long long Z, double beta_cap, int threads) {
    return (long long)enumerate_solutions(F, Z, beta_cap, threads).size();
}

long long N_F_beta(const BinaryForm& F, long long Z, double beta) {
    // the paper's N_F(Z, beta) includes the F = 0 pairs
    long long nonzero = N_F(F, Z, beta);
    long long B = enumeration_box(F, Z, beta);
    long long zeros = 0;
    // F = 0 points, row by row: the |f| <= 0 ranges of the row solver
    for (long long y = -B; y <= B; ++y) {
        std::vector<mpz_class> rc;
        build_row(F, y, rc);
        RPoly<mpz_class> f;
        f.c = rc;
        if (f.is_zero()) {
            zeros += 2 * B + 1;
            continue;
        }
        for (const auto& [x0, x1] : row_ranges(f, 0, -B, B)) zeros += x1 - x0 + 1;
    }
    return nonzero + zeros;
}

long long N_Fk(const BinaryForm& F, long long Z, unsigned k, double beta_cap,
               int threads) {
    auto sols = enumerate_solutions(F, Z, beta_cap, threads);
    std::unordered_map<long long, bool> memo;
    long long n = 0;
    for (const auto& s : sols) {
        long long a = s.h < 0 ? -s.h : s.h;
        auto it = memo.find(a);
        if (it == memo.end()) it = memo.emplace(a, is_kfree(a, k)).first;
        if (it->second) ++n;
    }
    return n;
}

long long N_tilde(const BinaryForm& F, long long Z, double beta) {
    if (F.degree < 3) throw InvalidInput("N_tilde: degree must be >= 3");
    if (discriminant(F) == 0) throw InvalidInput("N_tilde: zero discriminant");
    double B = std::pow((double)Z, 1.0 / F.degree) * beta;
    long long xlo = (long long)std::ceil(-B), xhi = (long long)std::floor(B - 1);
    if (xhi < xlo) return 0;
    double span = (double)(xhi - xlo + 1);
    if (span * span > (double)max_cells_guard())
        throw ResourceError("N_tilde: box exceeds the cell guard");
    mpz_class Zb((long)Z);
    long long count = 0;
    for (long long x = xlo; x <= xhi; ++x) {
        for (long long y = xlo; y <= xhi; ++y) {
            // max over the closed unit square of |F| is attained on the
            // edges (disc != 0 kills interior critical points of |F| except
            // zeros); each edge is an exact Sturm range test.
            ZPoly e[4];
            // bottom F(x+t, y), top F(x+t, y+1)
            {
                std::vector<mpz_class> rc;
                build_row(F, y, rc);
                e[0] = compose_linear(ZPoly(rc), 1, mpz_class((long)x));
                build_row(F, y + 1, rc);
                e[1] = compose_linear(ZPoly(rc), 1, mpz_class((long)x));
            }
            // left F(x, y+t), right F(x+1, y+t)
            {
                // F(x0, y0+t) = sum_i c_i x0^(d-i) (y0+t)^i
                auto col = [&](long long x0) {
                    std::vector<mpz_class> cc(F.degree + 1);
                    mpz_class xp = 1;
                    for (int i = F.degree; i >= 0; --i) {
                        cc[i] = F.coeffs[i] * xp;
                        xp *= (long)x0;
                    }
                    return compose_linear(ZPoly(cc), 1, mpz_class((long)y));
                };
                e[2] = col(x);
                e[3] = col(x + 1);
            }
            bool ok = true;
            for (int i = 0; i < 4 && ok; ++i) {
                if (!poly_le_on_unit_interval(e[i], Zb)) ok = false;
                else if (!poly_le_on_unit_interval(-e[i], Zb)) ok = false;
            }
            if (ok) ++count;
        }
    }
    return count;
}

long long R_F(const BinaryForm& F, long long Z, double beta_cap, int threads) {
    auto sols = enumerate_solutions(F, Z, beta_cap, threads);
    std::unordered_map<long long, char> seen;
    for (const auto& s : sols) seen.emplace(s.h, 1);
    return (long long)seen.size();
}

long long R_Fk(const BinaryForm& F, long long Z, unsigned k, double beta_cap,
               int threads) {
    auto sols = enumerate_solutions(F, Z, beta_cap, threads);
    std::unordered_map<long long, char> seen;
    std::unordered_map<long long, bool> memo;
    long long n = 0;
    for (const auto& s : sols) {
        if (!seen.emplace(s.h, 1).second) continue;
        long long a = s.h < 0 ? -s.h : s.h;
        auto it = memo.find(a);
        if (it == memo.end()) it = memo.emplace(a, is_kfree(a, k)).first;
        if (it->second) ++n;
    }
    return n;
}

OrbitIndex orbit_analysis(const BinaryForm& F, long long Z, double beta_cap,
                          const AutGroup& G, int threads) {
    auto sols = enumerate_solutions(F, Z, beta_cap, threads);
    OrbitIndex idx;
    for (const auto& s : sols) idx.pairs_by_value[s.h].emplace_back(s.x, s.y);
    for (auto& [h, ps] : idx.pairs_by_value) std::sort(ps.begin(), ps.end());
    if (G.order() == 1) {
        for (const auto& [h, ps] : idx.pairs_by_value) {
            idx.orbits_by_value[h] = (int)ps.size();
            if (ps.size() >= 2) ++idx.r_f2;
        }
        return idx;
    }
    for (const auto& [h, ps] : idx.pairs_by_value) {
        std::map<std::pair<long long, long long>, int> pos;
        for (size_t i = 0; i < ps.size(); ++i) pos[ps[i]] = (int)i;
        std::vector<int> parent(ps.size());
        for (size_t i = 0; i < ps.size(); ++i) parent[i] = (int)i;
        std::function<int(int)> find = [&](int a) {
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        for (size_t i = 0; i < ps.size(); ++i) {
            mpq_class x((long)ps[i].first), y((long)ps[i].second);
            for (const auto& A : G.elements) {
                mpq_class u = A.a1 * x + A.a2 * y;
                mpq_class v = A.a3 * x + A.a4 * y;
                if (u.get_den() != 1 || v.get_den() != 1) continue;
                if (!mpz_fits_slong_p(u.get_num().get_mpz_t()) ||
                    !mpz_fits_slong_p(v.get_num().get_mpz_t()))
                    continue;
                auto it = pos.find({mpz_get_si(u.get_num().get_mpz_t()),
                                    mpz_get_si(v.get_num().get_mpz_t())});
                if (it == pos.end()) continue;
                int ra = find((int)i), rb = find(it->second);
                if (ra != rb) parent[ra] = rb;
            }
        }
        int orbits = 0;
        for (size_t i = 0; i < ps.size(); ++i)
            if (find((int)i) == (int)i) ++orbits;
        idx.orbits_by_value[h] = orbits;
        if (orbits >= 2) ++idx.r_f2;
    }
    return idx;
}

SieveDecomposition sieve_decomposition(const BinaryForm& F, long long Z,
                                       unsigned k, double beta_cap,
                                       int threads) {
    auto sols = enumerate_solutions(F, Z, beta_cap, threads);
    SieveDecomposition out;
    int d = F.degree;
    double lz = std::log((double)Z);
    out.t1 = lz / (2 * d);
    out.t2 = std::pow(lz, 9.0);
    out.t3 = std::pow((double)Z, 2.0 / d) / std::pow(lz, 9.0);
    std::vector<uint64_t> small;
    for (uint64_t p : small_primes()) {
        if ((double)p > out.t1) break;
        small.push_back(p);
    }
    std::unordered_map<long long, std::vector<std::pair<long long, int>>> fmemo;
    auto factors_of = [&](long long a)
        -> const std::vector<std::pair<long long, int>>& {
        auto it = fmemo.find(a);
        if (it != fmemo.end()) return it->second;
        std::vector<std::pair<long long, int>> fs;
        for (const auto& [p, e] : factorize(mpz_class((long)a)))
            fs.emplace_back(mpz_get_si(p.get_mpz_t()), e);
        return fmemo.emplace(a, std::move(fs)).first->second;
    };
    for (const auto& s : sols) {
        long long a = s.h < 0 ? -s.h : s.h;
        // N1: no p <= t1 with p^k | h
        bool n1 = true;
        for (uint64_t p : small) {
            long long pk = 1;
            bool over = false;
            for (unsigned i = 0; i < k; ++i) {
                if (pk > Z / (long long)p + 1) { over = true; break; }
                pk *= (long long)p;
            }
            if (!over && a % pk == 0) { n1 = false; break; }
        }
        if (n1) ++out.N1;
        // N2: a prime > t1 divides gcd(x, y)
        long long gx = s.x < 0 ? -s.x : s.x, gy = s.y < 0 ? -s.y : s.y;
        long long g = std::gcd(gx, gy);
        if (g > 1) {
            for (const auto& [p, e] : factors_of(g)) {
                if ((double)p > out.t1) { ++out.N2; break; }
            }
        }
        // N3/N4/N5: p^k | h, p not dividing gcd(x, y), in the three ranges
        bool n3 = false, n4 = false, n5 = false;
        for (const auto& [p, e] : factors_of(a)) {
            if ((unsigned)e < k) continue;
            if (g % p == 0) continue;
            double dp = (double)p;
            if (dp > out.t1 && dp <= out.t2) n3 = true;
            else if (dp > out.t2 && dp <= out.t3) n4 = true;
            else if (dp > out.t3) n5 = true;
        }
        if (n3) ++out.N3;
        if (n4) ++out.N4;
        if (n5) ++out.N5;
    }
    return out;
}

CountReport count_report(const BinaryForm& F, long long Z, unsigned k,
                         double beta_cap, bool diagnostics, int threads) {
    CountReport rep;
    rep.Z = Z;
    rep.k = k;
    rep.beta_cap = beta_cap;
    rep.box = enumeration_box(F, Z, beta_cap);
    rep.omitted_bound = omitted_region_bound(F.degree, Z, beta_cap);
    AutGroup G = automorphism_group(F);
    OrbitIndex idx = orbit_analysis(F, Z, beta_cap, G, threads);
    std::unordered_map<long long, bool> memo;
    auto kfree = [&](long long h) {
        long long a = h < 0 ? -h : h;
        auto it = memo.find(a);
        if (it == memo.end()) it = memo.emplace(a, is_kfree(a, k)).first;
        return it->second;
    };
    for (const auto& [h, ps] : idx.pairs_by_value) {
        rep.n_f += (long long)ps.size();
        ++rep.r_f;
        if (kfree(h)) {
            rep.n_fk += (long long)ps.size();
            ++rep.r_fk;
        }
    }
    rep.r_f2 = idx.r_f2;
    if (diagnostics) {
        rep.has_diagnostics = true;
        rep.diag = sieve_decomposition(F, Z, k, beta_cap, threads);
    }
    return rep;
}

std::vector<ConvergenceRow> convergence_study(const BinaryForm& F, unsigned k,
                                              const std::vector<long long>& Zs,
                                              double beta_cap, uint64_t P,
                                              double tol, int threads) {
    ConstantReport cr = C_Fk(F, k, P, tol);
    std::vector<ConvergenceRow> out;
    for (long long Z : Zs) {
        ConvergenceRow row;
        row.Z = Z;
        row.r_fk = R_Fk(F, Z, k, beta_cap, threads);
        double z2d = std::pow((double)Z, 2.0 / F.degree);
        row.ratio = (double)row.r_fk / z2d;
        row.constant = cr.C.value;
        row.abs_gap = std::abs(row.ratio - row.constant);
        row.error_budget = cr.C.err + omitted_region_bound(F.degree, Z, beta_cap) / z2d;
        out.push_back(row);
    }
    return out;
}

} // namespace kfree
