#ifndef PDD_TRIFORCE_HPP
#define PDD_TRIFORCE_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "pdd/eqfree.hpp"
#include "pdd/gridset.hpp"

namespace pdd {

/// Tripartite system on X = Y = Z = Z/LZ with edges (x, x+a), (y, y+a),
/// (x, x+2a) for a in a 3-AP-free Lambda (mod L): the only triangles are
/// (x, x+a, x+2a), they are pairwise edge-disjoint, there are L|Lambda| of
/// them, and every vertex lies in |Lambda| triangles.
struct TriforceSystem {
    long long L = 0;
    FreeSet lambda;            // 3-AP-free in Z/LZ
    mpq_class k1, k2;          // pattern scaling of the fourth point

    bool edge_xy(long long x, long long y) const;
    bool edge_yz(long long y, long long z) const;
    bool edge_xz(long long x, long long z) const;
    bool triangle(long long x, long long y, long long z) const;

    /// Indicator f(u,v,w) = [ (floor(L u), floor(L v), floor(L w)) triangle ]
    /// on [0,1)^3.
    double f(double u, double v, double w) const;
};

/// Builds the system with a Behrend Lambda (3-AP-free subset of [0, L/2)
/// viewed mod L). Invariants are verified by exhaustive triangle scan when
/// L <= 100. k1, k2 positive rationals with k1 + k2 != 1.
TriforceSystem build_triforce(long long L, const mpq_class& k1, const mpq_class& k2);

struct TriforceScan {
    long long triangles = 0;
    bool edge_disjoint = false;
    bool vertex_degree_ok = false;  // every vertex in exactly |Lambda| triangles
    bool shape_ok = false;          // every triangle is (x, x+a, x+2a)
};

TriforceScan scan_triforce(const TriforceSystem& sys);

/// Exact count of variable assignments making the case's product of
/// triangle indicators equal 1:
///   case 1: f(x0,y0,z0) f(x1,y0,z1) f(x0,y1,z1) f(x2,y2,z2) over 9 variables,
///   case 2: ... f(x1,y2,z2) over 8 variables,
///   case 3: ... f(x1,y1,z2) over 7 variables.
/// Expected L^2|Lambda|^2, L|Lambda|^2, L|Lambda|. Enumeration is exhaustive
/// with zero-branch pruning; throws TooLargeForExhaustive for L > 200.
unsigned long long triforce_beta_count(const TriforceSystem& sys, int which_case);

struct MandacheSample {
    GridSet set;                    // on [G]^2, realizing S in (Z/GZ)^2
    double alpha_S = 0.0;
    double alpha_target = 0.0;      // E f = |Lambda| / L^2
    std::vector<double> beta;       // beta(S,d) for d = 1..G-1 (empty if skipped)
    double beta_target = 0.0;       // |Lambda|^2 / L^7 (the generic case)
};

/// Samples X_g, Y_g, Z_g uniform in [0,1) (xoshiro256++, explicit seed),
/// includes (g,h) with probability f(X_g, Y_h, Z_{g+h}), and measures
/// alpha(S) and the full beta(S,d) profile exhaustively.
MandacheSample sample_mandache_set(const TriforceSystem& sys, long long G_order,
                                   std::uint64_t seed, bool with_beta = true);

} // namespace pdd

#endif
