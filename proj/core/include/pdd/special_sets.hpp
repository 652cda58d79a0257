#ifndef PDD_SPECIAL_SETS_HPP
#define PDD_SPECIAL_SETS_HPP

#include <gmpxx.h>

#include <complex>
#include <cstdint>

#include "pdd/complex_triple.hpp"
#include "pdd/eqfree.hpp"
#include "pdd/gridset.hpp"
#include "pdd/split_prime.hpp"

namespace pdd {

/// Dilate-stack of a base set S in Z/NZ into (Z/NZ)^2, realized on [N]^2:
/// A = {(i*s mod N, i) : i != 0, s in S}. Every nonzero difference then
/// occurs an equal number of times (each dilate of S appears once).
GridSet blowup_construction(const FreeSet& base, int r, long long N);

/// Parameters of the torus embedding used by the transfer checks and the
/// one-dimensional special construction. psi is rational (q prime in
/// practice) so box membership is exact integer arithmetic; outputs record
/// psi_mode = rational-substitute.
struct TransferParams {
    enum class Variant { OneDim, TwoDim };
    Variant variant = Variant::OneDim;

    // 1-D: intervals [k/(Theta1 L), k/(Theta1 L) + 1/(Theta1^2 L)), k in Lambda
    long long theta1 = 0;
    long long theta2 = 0;  // |2 (a1-a2)(a2-a3)(a3-a1)|
    long long theta3 = 0;

    // 2-D: boxes of side 1/(m^2 L) in the (A,B) coordinate frame
    long long m = 0;

    long long L = 0;
    FreeSet lambda;
    mpq_class psi;
};

/// Theta values dictated by the split-prime data: theta1 = sum |P_j|,
/// theta2 = 2|P_1|, theta3 = ceil(sum |a_j^2 - a_k^2| / theta1^2).
TransferParams make_transfer_params_1d(const SplitPrimeData& data, long long L,
                                       FreeSet lambda, const mpq_class& psi);

TransferParams make_transfer_params_2d(const ComplexTriple& triple, long long L,
                                       FreeSet lambda, const mpq_class& psi);

/// A = {x in [N] : frac(psi x^2) in B}, B the union of Lambda's intervals.
/// Membership decided by exact rational comparison. N must be prime and
/// coprime to lcm(1..L) and to theta2.
GridSet build_1d_special_set(const SplitPrimeData& data, long long N,
                             const TransferParams& params);

/// Exact interval test: frac(psi * v) in [k/(T1 L), k/(T1 L) + 1/(T1^2 L))
/// for some k in Lambda.
bool box_member_1d(const mpq_class& value, const TransferParams& params);

/// A = {(n1,n2) in [N]^2 : psi f(n1,n2) mod (AZ + BZ) in B}, f(x,y) =
/// (m2 A x + m1 B y)^2 / A; membership via the real 2x2 solve in the (A,B)
/// frame. Throws std::invalid_argument when |Im(B/A)| <= 1e-9.
GridSet build_2d_nonconvex_set(const ComplexTriple& triple, long long N,
                               const TransferParams& params);

/// (A,B)-frame coordinates of a complex number.
std::array<double, 2> ab_coordinates(const ComplexTriple& triple, std::complex<double> v);

bool box_member_2d(const ComplexTriple& triple, std::complex<double> v,
                   const TransferParams& params);

} // namespace pdd

#endif
