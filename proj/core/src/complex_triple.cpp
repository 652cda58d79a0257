#include "pdd/complex_triple.hpp"

#include <cmath>
#include <stdexcept>

#include "pdd/errors.hpp"
#include "pdd/rng.hpp"

namespace pdd {

double ComplexTriple::max_residual() const {
    return std::max({residuals[0], residuals[1], residuals[2]});
}

double ComplexTriple::linear_residual() const {
    return std::abs(static_cast<double>(m2 * m3) * A + static_cast<double>(m1 * m4) * B +
                    static_cast<double>(m1 * m2) * C);
}

double ComplexTriple::im_b_over_a() const { return (B / A).imag(); }

ComplexTriple solve_complex_triple(long long m1, long long m2, long long m3, long long m4) {
    if (m1 < 1 || m2 < 1 || m3 < 1 || m4 < 1)
        throw std::invalid_argument("solve_complex_triple: m_i must be positive");
    ComplexTriple ct;
    ct.m1 = m1; ct.m2 = m2; ct.m3 = m3; ct.m4 = m4;
    ct.m = m2 * m3 + m1 * m4 + m1 * m2;

    const double m12 = static_cast<double>(m1 * m2);
    const double m34 = static_cast<double>(m3 * m4);
    const double m23 = static_cast<double>(m2 * m3);
    const double m14 = static_cast<double>(m1 * m4);
    // R = m1 m2 sqrt(-m3 m4 / m): purely imaginary, principal root
    ct.R = std::complex<double>(0.0, m12 * std::sqrt(m34 / static_cast<double>(ct.m)));
    ct.u = 1.0 - m14 / ct.R;
    ct.v = 1.0 + m23 / ct.R;
    ct.w = 1.0 + m12 * m34 / (ct.R * ct.R);
    ct.t = std::pow(ct.R / (ct.u * ct.v * ct.w), 1.0 / 3.0);
    ct.A = ct.t * ct.u;
    ct.B = ct.t * ct.v;
    ct.C = ct.t * ct.w;

    ct.residuals[0] = std::abs(ct.B * ct.C * (ct.B - ct.C) - m23);
    ct.residuals[1] = std::abs(ct.C * ct.A * (ct.C - ct.A) - m14);
    ct.residuals[2] = std::abs(ct.A * ct.B * (ct.A - ct.B) - m12);
    if (ct.max_residual() > 1e-9)
        throw ResidualTooLarge("complex triple residual " + std::to_string(ct.max_residual()));
    return ct;
}

double verify_alg_id(const ComplexTriple& ct, long long trials, std::uint64_t seed) {
    Xoshiro256 rng(seed);
    const std::complex<double> A = ct.A, B = ct.B;
    const double m1 = static_cast<double>(ct.m1), m2 = static_cast<double>(ct.m2);
    const double m3 = static_cast<double>(ct.m3), m4 = static_cast<double>(ct.m4);
    const double c23 = m2 * m3, c14 = m1 * m4, c12 = m1 * m2;
    const double cm = c23 + c14 + c12;
    auto f = [&](double x, double y) {
        std::complex<double> s = m2 * A * x + m1 * B * y;
        return s * s / A;
    };
    double worst = 0.0;
    for (long long i = 0; i < trials; ++i) {
        double n1 = static_cast<double>(rng.range(-100, 100));
        double n2 = static_cast<double>(rng.range(-100, 100));
        double d = static_cast<double>(rng.range(-100, 100));
        std::complex<double> t1 = c23 * f(n1 + m1 * d, n2);
        std::complex<double> t2 = c14 * f(n1, n2 + m2 * d);
        std::complex<double> t3 = c12 * f(n1 - m3 * d, n2 - m4 * d);
        std::complex<double> t4 = cm * f(n1, n2);
        double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3), std::abs(t4), 1.0});
        double res = std::abs(t1 + t2 + t3 - t4) / scale;
        worst = std::max(worst, res);
    }
    return worst;
}

} // namespace pdd
