#ifndef PDD_EQFREE_HPP
#define PDD_EQFREE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pdd {

/// Linear equation c_w w + c_x x + c_y y + c_z z = 0 with zero coefficient
/// sum (so constant quadruples are the trivial solutions), optionally read
/// modulo a prime.
struct EquationSpec {
    std::array<long long, 4> coeffs{};  // (c_w, c_x, c_y, c_z)
    std::optional<long long> modulus;

    static EquationSpec make(std::array<long long, 4> c,
                             std::optional<long long> mod = std::nullopt);
    std::string str() const;
};

/// A subset of {0..L-1} (or of Z/LZ) free of nontrivial solutions to its
/// equation, or of 3-term arithmetic progressions when spec is absent.
struct FreeSet {
    long long L = 0;
    std::vector<long long> elements;          // sorted
    std::optional<EquationSpec> spec;         // nullopt = 3-AP marker
    bool cyclic = false;                      // true: lives in Z/LZ

    bool contains(long long v) const;
};

/// Largest-shell Behrend set: digits in base (2b-1) with digit values < b,
/// most populous sphere ||digits||^2 = const (smallest radius on ties),
/// over all feasible (b, n) with (2b-1)^n <= L. The b = 2 digit cube needs
/// no sphere restriction (x_i + z_i = 2 y_i over {0,1} forces x = z) and is
/// included whole; it dominates at small L and keeps the floor(sqrt(L))
/// size guarantee. Result is verified 3-AP-free.
FreeSet behrend_3apfree(long long L);

/// Variant for a weighted equation K*u = c_a*a + c_b*b + c_c*c (one
/// coefficient alone on its side): digits below b in base K*(b-1)+1 so no
/// carries occur, same sphere selection. With a modulus, the range is first
/// clipped so no wraparound can occur. Throws InfeasibleBase when no digit
/// system fits.
FreeSet behrend_eqfree(long long L, const EquationSpec& spec);

/// T_n = {x in {0..p^n - 1} : every base-p digit of x lies in base_set};
/// size |base_set|^n. base_set must be free of its equation mod p.
FreeSet digit_tensor_set(long long p, const FreeSet& base_set, int n);

/// Exhaustive freeness check. 3-AP sets use the pair-midpoint scan
/// (|set|^2 <= 1e8); 4-variable specs solve for w from each (x,y,z) triple.
/// Throws TooLargeForExhaustive beyond the documented limits.
bool verify_free(const FreeSet& set);

/// Randomized check for sets too large to verify exhaustively: `trials`
/// random quadruples (or triples); returns the number of violations found.
long long sample_violations(const FreeSet& set, long long trials, std::uint64_t seed);

} // namespace pdd

#endif
