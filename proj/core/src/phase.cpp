#include "pdd/phase.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

namespace pdd {

bool is_prime_ll(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PhaseFunction build_phase_function(const FourPointPattern& pattern, long long N,
                                   const mpq_class& alpha,
                                   const std::array<mpq_class, 4>& gammas) {
    if (!is_prime_ll(N)) throw std::invalid_argument("phase function needs prime N");
    long long amax = 0;
    for (long long a : pattern.a_prim) amax = std::max(amax, std::abs(a));
    if (N <= 2 * amax)
        throw std::invalid_argument("N too small: need N > 2 max|a_k|");
    if (alpha <= 0 || alpha > mpq_class(1, 2))
        throw std::invalid_argument("alpha must lie in (0, 1/2]");
    mpq_class wsum = 0;
    for (const auto& g : gammas) wsum += 2 * abs(g);
    if (wsum > 1) throw std::invalid_argument("sum |2 gamma_k| must be <= 1");

    PhaseFunction f;
    f.N = N;
    f.alpha = alpha;
    for (int k = 0; k < 4; ++k) f.terms[k] = {pattern.a_prim[k], gammas[k]};
    return f;
}

double PhaseFunction::value(long long t) const {
    const double a = alpha.get_d();
    double v = 1.0;
    long long tsq = (t % N) * (t % N) % N;
    for (const auto& term : terms) {
        long long am = ((term.a % N) + N) % N;
        long long ph = am * tsq % N;
        v += 2 * term.gamma.get_d() *
             std::cos(2.0 * std::numbers::pi * static_cast<double>(ph) / static_cast<double>(N));
    }
    return a * v;
}

std::vector<double> PhaseFunction::values() const {
    std::vector<double> out(static_cast<std::size_t>(N));
    const double a = alpha.get_d();
    std::array<long long, 4> am;
    std::array<double, 4> g2;
    for (int k = 0; k < 4; ++k) {
        am[k] = ((terms[k].a % N) + N) % N;
        g2[k] = 2 * terms[k].gamma.get_d();
    }
    const double twopi_over_n = 2.0 * std::numbers::pi / static_cast<double>(N);
    for (long long t = 0; t < N; ++t) {
        long long tsq = t * t % N;
        double v = 1.0;
        for (int k = 0; k < 4; ++k)
            v += g2[k] * std::cos(twopi_over_n * static_cast<double>(am[k] * tsq % N));
        out[static_cast<std::size_t>(t)] = a * v;
    }
    return out;
}

} // namespace pdd
