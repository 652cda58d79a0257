#ifndef PDD_COUNTING_HPP
#define PDD_COUNTING_HPP

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <vector>

#include "pdd/atlas.hpp"
#include "pdd/gridset.hpp"
#include "pdd/pattern.hpp"
#include "pdd/phase.hpp"

namespace pdd {

/// Pattern points in Z^r, r in {1,2}; y is ignored for r = 1.
struct PatternPoint {
    long long x = 0;
    long long y = 0;
};
using Pattern = std::vector<PatternPoint>;

Pattern pattern_1d(const std::array<long long, 4>& pts);

/// |{x : x + d p in A for all p in P}|. Wraparound counts base points in
/// (Z/NZ)^r; boxed counts x in Z^r whose whole translate lands inside [N]^r.
long long count_translates(const GridSet& A, const Pattern& P, long long d, bool wraparound);

struct DifferenceProfile {
    long long N = 0;
    bool wraparound = false;
    double density = 0.0;
    std::vector<std::pair<long long, double>> per_d;  // every admissible nonzero d
    long long max_d = 0;
    double max_value = 0.0;
};

/// Sweep of count_translates over every admissible nonzero d. Ties for the
/// max break toward the smallest |d| (circular distance when wrapping), then
/// the positive representative.
DifferenceProfile difference_profile(const GridSet& A, const Pattern& P, bool wraparound);

/// E_t f(t) f(t+k1 d) f(t+k2 d) f(t+k3 d) for every d in 1..N-1, by direct
/// summation with compensated accumulation.
DifferenceProfile phase_expectation_profile(const PhaseFunction& f,
                                            const FourPointPattern& pattern);

/// Degenerate-terms-only prediction at difference d:
///   alpha^4 (1 + 2 g1 g2 g3 g4 + sum_(I extra) gamma_I cos(2 pi p3_I d^2 / N)).
double predict_phase_expectation(const DegeneracyReport& report,
                                 const std::array<mpq_class, 4>& gammas,
                                 const mpq_class& alpha, long long d, long long N);

/// Max over `trials` random b of |E_t e(2 pi (a t^2 + b t)/N)|; b = 0 is
/// always included. The value never exceeds N^(-1/2) for a != 0 mod N.
double gauss_sum_check(long long N, long long a, long long trials, std::uint64_t seed);

/// Invertible affine map x -> mat x + shift over Q^r.
struct AffineMap {
    int r = 1;
    std::array<std::array<mpq_class, 2>, 2> mat{{{1, 0}, {0, 1}}};
    std::array<mpq_class, 2> shift{0, 0};

    mpq_class det() const;
};

struct AffineImage {
    GridSet set;
    double retained_fraction = 0.0;  // kept integer points / |A|
};

/// Image of A under the map, restricted to the densest target_N-aligned box
/// (the pigeonhole translate) and shifted into [target_N]^r. Non-integer
/// image points are dropped and reported through retained_fraction.
AffineImage apply_affine(const GridSet& A, const AffineMap& map, long long target_N);

} // namespace pdd

#endif
