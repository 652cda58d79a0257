#ifndef PDD_SIGNATURES_HPP
#define PDD_SIGNATURES_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pdd/intpoly.hpp"
#include "pdd/pattern.hpp"

namespace pdd {

/// A tuple (i1,i2,i3,i4), each entry in [-4,4], indexing the coefficient
/// vector with the conventions a0 = 0 and a_{-j} = -a_j.
struct Signature {
    std::array<int, 4> idx{};

    Signature() = default;
    Signature(int i1, int i2, int i3, int i4) : idx{i1, i2, i3, i4} {}

    Signature negated() const { return {-idx[0], -idx[1], -idx[2], -idx[3]}; }
    bool operator==(const Signature& o) const { return idx == o.idx; }
    bool operator!=(const Signature& o) const { return idx != o.idx; }
    bool operator<(const Signature& o) const { return idx < o.idx; }
    std::string str() const;

    /// Dense index in [0, 6561).
    int flat() const {
        return ((idx[0] + 4) * 9 + (idx[1] + 4)) * 81 + (idx[2] + 4) * 9 + (idx[3] + 4);
    }
    static Signature from_flat(int f) {
        return {f / 729 % 9 - 4, f / 81 % 9 - 4, f / 9 % 9 - 4, f % 9 - 4};
    }
    static constexpr int kCount = 6561;
};

enum class SigClass { BothZero, P1ZeroOnly, P2ZeroOnly, NeitherZero };

std::string to_string(SigClass c);

/// Descriptor of the pattern set Q(I) = {(x,y,z) in N^3 : p1 = p2 = 0}.
struct PatternSet {
    enum class Kind { All, Empty, Ray, RayUnion, CurveLocus };
    Kind kind = Kind::Empty;
    std::vector<std::array<long long, 3>> rays;  // Ray / RayUnion base points
    IntPoly locus;                               // CurveLocus

    static PatternSet all() { return {Kind::All, {}, {}}; }
    static PatternSet empty() { return {Kind::Empty, {}, {}}; }
    static PatternSet ray(long long x, long long y, long long z) {
        return {Kind::Ray, {{x, y, z}}, {}};
    }
    static PatternSet curve(IntPoly p) { return {Kind::CurveLocus, {}, std::move(p)}; }
    std::string str() const;
};

struct SigPolys {
    IntPoly p1, p2, p3;  // in (X,Y,Z); p2 is the full TD coefficient
};

struct SignatureRecord {
    Signature signature;
    SigClass cls = SigClass::NeitherZero;
    SigPolys polys;
    PatternSet pattern_set;
};

/// Builds p1^I, p2^I, p3^I for every signature from the symbolic expansion of
///   a_{i1} T^2 + a_{i2}(T + k1 D)^2 + a_{i3}(T + k2 D)^2 + a_{i4}(T + k3 D)^2
/// with k = (X, X+Y, 2X+Y+Z) and the a-formulas substituted, collected by
/// T^2, TD, D^2.
class SignatureEngine {
public:
    SignatureEngine();

    static const std::vector<std::string>& xyz_vars();

    /// a_i as a polynomial in (X,Y,Z), i in [-4,4].
    const IntPoly& a_poly(int i) const { return a_.at(static_cast<std::size_t>(i + 4)); }
    const IntPoly& k_poly(int j) const { return k_.at(static_cast<std::size_t>(j)); }  // j in 0..2

    SigPolys build(const Signature& I) const;
    SigClass classify(const Signature& I) const;

    /// All 6561 records with classes and the table of known pattern sets.
    std::vector<SignatureRecord> census() const;

    /// Expected pattern set per the classification table (All for the three
    /// trivial signatures, loci/rays for the exceptional ones, Empty else).
    static PatternSet known_pattern_set(const Signature& I);

    // Exact point evaluation without polynomial arithmetic: values of
    // a_{-4..4} at (x,y,z), then p_j as short integer combinations.
    using AVals = std::array<__int128, 9>;
    static AVals a_values(long long x, long long y, long long z);
    static __int128 p1_at(const AVals& a, const Signature& I);
    static __int128 p2_at(const AVals& a, long long k1, long long k2, long long k3,
                          const Signature& I);
    static __int128 p3_at(const AVals& a, long long k1, long long k2, long long k3,
                          const Signature& I);

private:
    std::array<IntPoly, 9> a_;  // a_{-4}..a_{4}
    std::array<IntPoly, 3> k_;
};

/// Named locus polynomials of the classification table, over (X,Y,Z).
namespace loci {
const IntPoly& two_x2_xz_yz();   // 2X^2 + XZ - YZ
const IntPoly& x2_yz();          // X^2 - YZ
const IntPoly& x2_xz_y2();       // X^2 + XZ - Y^2
const IntPoly& cubic_one();      // 2X^3 + 4X^2Y + X^2Z + 2XY^2 - Y^2Z - YZ^2
const IntPoly& cubic_two();      // 4X^3 + 4X^2Y + 4X^2Z + 2XYZ + XZ^2 - Y^2Z
}  // namespace loci

} // namespace pdd

#endif
