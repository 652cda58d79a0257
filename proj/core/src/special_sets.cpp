#include "pdd/special_sets.hpp"
#include "pdd/gmpll.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "pdd/modmath.hpp"
#include "pdd/phase.hpp"

namespace pdd {

GridSet blowup_construction(const FreeSet& base, int r, long long N) {
    if (r != 2) throw std::invalid_argument("blowup_construction: only r = 2 is supported");
    if (!is_prime_ll(N)) throw std::invalid_argument("blowup_construction: N must be prime");
    GridSet g(2, N);
    for (long long i = 1; i < N; ++i)
        for (long long s : base.elements)
            g.insert(mod_reduce(i * mod_reduce(s, N), N) + 1, i + 1);
    return g;
}

TransferParams make_transfer_params_1d(const SplitPrimeData& data, long long L,
                                       FreeSet lambda, const mpq_class& psi) {
    TransferParams p;
    p.variant = TransferParams::Variant::OneDim;
    p.L = L;
    p.lambda = std::move(lambda);
    p.psi = psi;
    long long t1 = 0;
    for (long long v : data.p_values) t1 += std::abs(v);
    p.theta1 = t1;
    p.theta2 = 2 * std::abs(data.p_values[0]);
    long long a1 = data.a1, a2 = data.a2, a3 = data.a3;
    long long s = std::abs(a2 * a2 - a3 * a3) + std::abs(a3 * a3 - a1 * a1) +
                  std::abs(a1 * a1 - a2 * a2);
    p.theta3 = (s + t1 * t1 - 1) / (t1 * t1);  // ceil(s / theta1^2), at least 1
    if (p.theta3 < 1) p.theta3 = 1;
    return p;
}

TransferParams make_transfer_params_2d(const ComplexTriple& triple, long long L,
                                       FreeSet lambda, const mpq_class& psi) {
    TransferParams p;
    p.variant = TransferParams::Variant::TwoDim;
    p.L = L;
    p.lambda = std::move(lambda);
    p.psi = psi;
    p.m = triple.m;
    return p;
}

bool box_member_1d(const mpq_class& value, const TransferParams& params) {
    // v = frac(value) lies in [k/(T1 L), k/(T1 L) + 1/(T1^2 L)) iff
    // k = floor(v T1 L) is in Lambda and T1 (num*T1*L - k*den) < den
    const long long T1 = params.theta1, L = params.L;
    mpq_class v = value;
    v.canonicalize();
    mpz_class num = v.get_num(), den = v.get_den();
    mpz_class frac_num = num % den;
    if (frac_num < 0) frac_num += den;
    mpz_class scaled = frac_num * to_mpz(T1) * to_mpz(L);
    mpz_class k = scaled / den;  // floor since both nonnegative
    if (k >= to_mpz(L) || !params.lambda.contains(k.get_si())) return false;
    return to_mpz(T1) * (scaled - k * den) < den;
}

GridSet build_1d_special_set(const SplitPrimeData& data, long long N,
                             const TransferParams& params) {
    if (params.variant != TransferParams::Variant::OneDim)
        throw std::invalid_argument("build_1d_special_set: need 1-D params");
    if (!is_prime_ll(N)) throw std::invalid_argument("build_1d_special_set: N must be prime");
    for (long long k = 2; k <= params.L; ++k)
        if (N % k == 0)
            throw std::invalid_argument("build_1d_special_set: N shares a factor with lcm(1..L)");
    if (std::gcd(N, params.theta2) != 1)
        throw std::invalid_argument("build_1d_special_set: N shares a factor with theta2");
    (void)data;

    GridSet g(1, N);
    for (long long x = 1; x <= N; ++x) {
        mpq_class v = params.psi * to_mpz(x) * to_mpz(x);
        if (box_member_1d(v, params)) g.insert(x);
    }
    return g;
}

std::array<double, 2> ab_coordinates(const ComplexTriple& triple, std::complex<double> v) {
    const double det = triple.A.real() * triple.B.imag() - triple.A.imag() * triple.B.real();
    return {(v.real() * triple.B.imag() - v.imag() * triple.B.real()) / det,
            (triple.A.real() * v.imag() - triple.A.imag() * v.real()) / det};
}

bool box_member_2d(const ComplexTriple& triple, std::complex<double> v,
                   const TransferParams& params) {
    const double mL = static_cast<double>(params.m) * static_cast<double>(params.L);
    auto coords = ab_coordinates(triple, v);
    long long cell[2];
    for (int i = 0; i < 2; ++i) {
        double f = coords[i] - std::floor(coords[i]);
        double scaled = f * mL;
        double c = std::floor(scaled);
        // fractional part within the cell must be below 1/m (box side 1/(m^2 L))
        if (scaled - c >= 1.0 / static_cast<double>(params.m)) return false;
        cell[i] = static_cast<long long>(c);
        if (cell[i] >= params.L * params.m) cell[i] = 0;  // frac rounding at 1.0
    }
    return params.lambda.contains(cell[0]) && params.lambda.contains(cell[1]);
}

GridSet build_2d_nonconvex_set(const ComplexTriple& triple, long long N,
                               const TransferParams& params) {
    if (params.variant != TransferParams::Variant::TwoDim)
        throw std::invalid_argument("build_2d_nonconvex_set: need 2-D params");
    if (std::abs(triple.im_b_over_a()) <= 1e-9)
        throw std::invalid_argument("build_2d_nonconvex_set: (A,B) basis is ill-conditioned");
    if (N < params.L) throw std::invalid_argument("build_2d_nonconvex_set: need N >= L");
    const double psi = params.psi.get_d();
    const double m1 = static_cast<double>(triple.m1), m2 = static_cast<double>(triple.m2);
    GridSet g(2, N);
    for (long long n1 = 1; n1 <= N; ++n1)
        for (long long n2 = 1; n2 <= N; ++n2) {
            std::complex<double> s =
                m2 * triple.A * static_cast<double>(n1) + m1 * triple.B * static_cast<double>(n2);
            std::complex<double> val = psi * s * s / triple.A;
            if (box_member_2d(triple, val, params)) g.insert(n1, n2);
        }
    return g;
}

} // namespace pdd
