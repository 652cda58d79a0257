#ifndef PDD_PHASE_HPP
#define PDD_PHASE_HPP

#include <gmpxx.h>

#include <array>
#include <vector>

#include "pdd/pattern.hpp"

namespace pdd {

/// Weighted function on Z/NZ built from quadratic phases:
///   f(t) = alpha (1 + sum_k 2 gamma_k cos(2 pi a_k t^2 / N)).
/// Requires N prime with N > 2 max|a_k| (so the a_k stay distinct and
/// nonzero mod N), alpha <= 1/2 and sum|2 gamma_k| <= 1, which force
/// 0 <= f <= 2 alpha <= 1.
struct PhaseFunction {
    long long N = 0;
    mpq_class alpha;
    struct Term {
        long long a;      // phase coefficient (primitive vector entry)
        mpq_class gamma;  // weight in [-1/8, 1/8]
    };
    std::array<Term, 4> terms;

    /// f sampled at t = 0..N-1.
    std::vector<double> values() const;
    double value(long long t) const;
};

/// Phase function of a pattern, with the pattern's primitive a-vector.
PhaseFunction build_phase_function(const FourPointPattern& pattern, long long N,
                                   const mpq_class& alpha,
                                   const std::array<mpq_class, 4>& gammas);

bool is_prime_ll(long long n);

} // namespace pdd

#endif
