#ifndef PDD_COMPLEX_TRIPLE_HPP
#define PDD_COMPLEX_TRIPLE_HPP

#include <complex>
#include <cstdint>

namespace pdd {

/// Solution (A,B,C) of BC(B-C) = m2 m3, CA(C-A) = m1 m4, AB(A-B) = m1 m2
/// with B/A non-real, built from R = m1 m2 sqrt(-m3 m4 / m) and
/// (A,B,C) = t (u,v,w), t^3 = R/(uvw). Principal branches throughout, so the
/// output is deterministic.
struct ComplexTriple {
    long long m1 = 0, m2 = 0, m3 = 0, m4 = 0;
    long long m = 0;  // m2 m3 + m1 m4 + m1 m2
    std::complex<double> A, B, C;
    std::complex<double> R, u, v, w, t;
    double residuals[3] = {0, 0, 0};  // |BC(B-C)-m2m3|, |CA(C-A)-m1m4|, |AB(A-B)-m1m2|

    double max_residual() const;
    double linear_residual() const;   // |m2m3 A + m1m4 B + m1m2 C|
    double im_b_over_a() const;
};

/// Throws ResidualTooLarge if any defining residual exceeds 1e-9.
ComplexTriple solve_complex_triple(long long m1, long long m2, long long m3, long long m4);

/// f(x,y) = (m2 A x + m1 B y)^2 / A. Max over `trials` random integer
/// (n1, n2, d) in [-100, 100] of the weighted-translate identity's residual,
/// normalized by the largest participating term.
double verify_alg_id(const ComplexTriple& triple, long long trials, std::uint64_t seed);

} // namespace pdd

#endif
