#include "pdd/transfer.hpp"
#include "pdd/gmpll.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace pdd {

namespace {

// || q ||_{R/Z} < bound, exactly
bool torus_norm_below(const mpq_class& q, const mpq_class& bound) {
    mpq_class v = q;
    v.canonicalize();
    mpz_class num = v.get_num(), den = v.get_den();
    mpz_class f = num % den;
    if (f < 0) f += den;
    mpq_class frac(f, den);
    frac.canonicalize();
    mpq_class one_minus = 1 - frac;
    mpq_class dist = frac < one_minus ? frac : one_minus;
    return dist < bound;
}

}  // namespace

TransferReport transfer_check_1d(const TransferParams& params, const SplitPrimeData& data,
                                 long long N) {
    if (params.variant != TransferParams::Variant::OneDim)
        throw std::invalid_argument("transfer_check_1d: need 1-D params");
    TransferReport rep;
    const long long a1 = data.a1, a2 = data.a2, a3 = data.a3;
    const mpq_class conclusion_bound = to_mpq(params.theta3, params.L);

    auto member = [&](long long v) {
        return box_member_1d(params.psi * to_mpz(v) * to_mpz(v), params);
    };

    for (long long n = 1; n <= N; ++n) {
        if (!member(n)) {  // w fails already; but count the scanned pairs
            long long amax = std::max({a1, a2, a3});
            rep.pairs_scanned += 2 * (N / std::max<long long>(amax, 1)) + 1;
            continue;
        }
        for (long long d = -N; d <= N; ++d) {
            if (d == 0) continue;
            long long x1 = n + a1 * d, x2 = n + a2 * d, x3 = n + a3 * d;
            if (x1 < 1 || x1 > N || x2 < 1 || x2 > N || x3 < 1 || x3 > N) continue;
            ++rep.pairs_scanned;
            if (!member(x1) || !member(x2) || !member(x3)) continue;
            ++rep.events;
            mpq_class q = to_mpq(params.theta2) * params.psi * to_mpz(n) * to_mpz(d);
            if (!torus_norm_below(q, conclusion_bound)) ++rep.violations;
        }
    }
    return rep;
}

TransferReport transfer_check_2d(const TransferParams& params, const ComplexTriple& triple,
                                 long long N, long long d_max) {
    if (params.variant != TransferParams::Variant::TwoDim)
        throw std::invalid_argument("transfer_check_2d: need 2-D params");
    if (std::abs(triple.im_b_over_a()) <= 1e-9)
        throw std::invalid_argument("transfer_check_2d: (A,B) basis is ill-conditioned");
    if (d_max <= 0) d_max = N;
    TransferReport rep;

    const long long m1 = triple.m1, m2 = triple.m2, m3 = triple.m3, m4 = triple.m4;
    const double psi = params.psi.get_d();
    const mpq_class box_side = to_mpq(1, params.m * params.m * params.L);
    const double bound = box_side.get_d() + 1e-9;

    // membership over the rectangle every quadruple point can visit
    const long long lo1 = 1 - m3 * d_max, hi1 = N + m1 * d_max;
    const long long lo2 = 1 - m4 * d_max, hi2 = N + m2 * d_max;
    const long long w1 = hi1 - lo1 + 1, w2 = hi2 - lo2 + 1;
    std::vector<std::uint8_t> member(static_cast<std::size_t>(w1) * static_cast<std::size_t>(w2));
    for (long long x = lo1; x <= hi1; ++x)
        for (long long y = lo2; y <= hi2; ++y) {
            std::complex<double> s = static_cast<double>(m2) * triple.A * static_cast<double>(x) +
                                     static_cast<double>(m1) * triple.B * static_cast<double>(y);
            std::complex<double> val = psi * s * s / triple.A;
            member[static_cast<std::size_t>(x - lo1) * static_cast<std::size_t>(w2) +
                   static_cast<std::size_t>(y - lo2)] = box_member_2d(triple, val, params);
        }
    auto in_b = [&](long long x, long long y) {
        return member[static_cast<std::size_t>(x - lo1) * static_cast<std::size_t>(w2) +
                      static_cast<std::size_t>(y - lo2)] != 0;
    };

    for (long long n1 = 1; n1 <= N; ++n1)
        for (long long n2 = 1; n2 <= N; ++n2) {
            if (!in_b(n1, n2)) {
                rep.pairs_scanned += 2 * d_max;
                continue;
            }
            for (long long d = -d_max; d <= d_max; ++d) {
                if (d == 0) continue;
                ++rep.pairs_scanned;
                if (!in_b(n1 + m1 * d, n2) || !in_b(n1, n2 + m2 * d) ||
                    !in_b(n1 - m3 * d, n2 - m4 * d))
                    continue;
                ++rep.events;
                const double dd = static_cast<double>(d);
                std::complex<double> lhs =
                    2.0 * static_cast<double>(m1 * m2) *
                        (static_cast<double>(m2) * triple.A * static_cast<double>(n1) +
                         static_cast<double>(m1) * triple.B * static_cast<double>(n2)) *
                        dd * psi +
                    static_cast<double>(m1 * m1 * m2 * m2) * triple.A * dd * dd * psi;
                auto c = ab_coordinates(triple, lhs);
                double worst = 0.0;
                for (double coord : c) {
                    double f = coord - std::floor(coord);
                    worst = std::max(worst, std::min(f, 1.0 - f));
                }
                if (worst >= bound) ++rep.violations;
            }
        }
    return rep;
}

} // namespace pdd
