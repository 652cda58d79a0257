#ifndef PDD_SPLIT_PRIME_HPP
#define PDD_SPLIT_PRIME_HPP

#include <array>
#include <complex>
#include <cstdint>

namespace pdd {

/// Data of a completely split prime for the field generated by a primitive
/// 12th root of unity and a sixth root of 3: p = 1 (mod 12) and
/// 3^((p-1)/6) = 1 (mod p). Carries the mod-p images a1,a2,a3 of
///   z1 = 3^(-1/6) w^5,  z2 = (3^(1/3) w^2 + 3^(5/6) w^5)/2,
///   z3 = (-3^(1/3) w^2 + 3^(5/6) w^5)/2,
/// whose residues under P1 = (X-Y)(Y-Z)(Z-X), P2 = YZ(Y-Z), P3 = ZX(Z-X),
/// P4 = XY(X-Y) are (-1, 3, -1, -1) mod p.
struct SplitPrimeData {
    long long p = 0;
    long long omega12 = 0;  // smallest primitive 12th root of unity mod p
    long long s6 = 0;       // smallest sixth root of 3 mod p
    long long a1 = 0, a2 = 0, a3 = 0;            // in [1, p]
    std::array<long long, 4> residues{};          // P_j(a1,a2,a3) mod p, in [0,p)
    std::array<long long, 4> p_values{};          // exact P_j(a1,a2,a3)
};

bool is_split_prime(long long p);

/// Smallest qualifying prime >= min_p with the smallest roots; residues are
/// verified exactly. Throws SearchExhausted past 10^6 candidates.
SplitPrimeData find_split_prime(long long min_p);

struct SplitDensity {
    long long limit = 0;
    long long primes = 0;
    long long split = 0;
    double density() const { return primes ? static_cast<double>(split) / primes : 0.0; }
};

/// Fraction of primes <= limit meeting the splitting criterion.
SplitDensity split_prime_density(long long limit);

/// Exact integer values P_j(x,y,z) of the four coefficient polynomials.
std::array<long long, 4> coefficient_values(long long x, long long y, long long z);

/// The complex constants z1, z2, z3 (for numeric cross-checks).
std::array<std::complex<double>, 3> z_constants();

} // namespace pdd

#endif
