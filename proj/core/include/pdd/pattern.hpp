#ifndef PDD_PATTERN_HPP
#define PDD_PATTERN_HPP

#include <array>
#include <cstdint>

namespace pdd {

/// A 4-point one-dimensional pattern {0, k1, k2, k3} in the (x,y,z)
/// parametrization: k1 = x, k2 = x+y, k3 = 2x+y+z with x,y,z > 0 (so
/// 0 < k1 < k2 and k1 + k2 < k3; additive patterns k3 = k1+k2 are rejected).
/// Carries the derived quadratic-identity coefficient vector
///   a1 = -y(x+z)(x+y+z), a2 = (x+y)(x+z)(2x+y+z),
///   a3 = -x(2x+y+z)(x+y+z), a4 = xy(x+y),
/// both raw and divided by its content (a_prim, with a2 > 0).
struct FourPointPattern {
    long long x = 0, y = 0, z = 0;
    long long k1 = 0, k2 = 0, k3 = 0;
    std::array<long long, 4> a_raw{};
    std::array<long long, 4> a_prim{};
    long long a_content = 1;

    static FourPointPattern from_xyz(long long x, long long y, long long z);

    /// From a 4-point set; translates so min = 0, sorts, and reflects
    /// (p -> max - p) when k1 + k2 > k3 so the canonical form always has
    /// k1 + k2 < k3. Throws std::invalid_argument for degenerate input or
    /// an additive pattern (k1 + k2 == k3).
    static FourPointPattern from_points(std::array<long long, 4> pts);

    std::array<long long, 4> points() const { return {0, k1, k2, k3}; }
};

} // namespace pdd

#endif
