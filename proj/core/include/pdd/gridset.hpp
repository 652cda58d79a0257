#ifndef PDD_GRIDSET_HPP
#define PDD_GRIDSET_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "pdd/eqfree.hpp"

namespace pdd {

/// Finite subset of [N]^r, r in {1,2}, 1-indexed, as a dense membership
/// structure. Group constructions on (Z/NZ)^r are realized on [N]^r through
/// residue q <-> coordinate q+1.
class GridSet {
public:
    GridSet() = default;
    GridSet(int r, long long N);

    int r() const { return r_; }
    long long N() const { return N_; }
    std::size_t size() const { return count_; }
    double density() const;

    bool contains(long long x) const;                 // r = 1
    bool contains(long long x, long long y) const;    // r = 2
    void insert(long long x);
    void insert(long long x, long long y);

    /// residue-space access: coords in [0, N)
    bool contains_mod(long long x) const { return contains(x + 1); }
    bool contains_mod(long long x, long long y) const { return contains(x + 1, y + 1); }

    /// sorted member list (x, or x,y pairs flattened row-major)
    std::vector<std::vector<long long>> members() const;

    const std::vector<std::uint8_t>& raw() const { return bits_; }

private:
    std::size_t index(long long x) const;
    std::size_t index(long long x, long long y) const;

    int r_ = 1;
    long long N_ = 0;
    std::size_t count_ = 0;
    std::vector<std::uint8_t> bits_;
};

/// pdd-set v1 file format. Header `pdd-set v1`, then
/// `r=<r> N=<N> kind=gridset|freeset`, then one member per line
/// ("x" or "x y"); gridsets are 1-indexed, freesets live in {0..N-1}.
void save_grid_set(std::ostream& os, const GridSet& g);
void save_free_set(std::ostream& os, const FreeSet& f);
void save_set_file(const std::string& path, const GridSet& g);
void save_set_file(const std::string& path, const FreeSet& f);

using LoadedSet = std::variant<GridSet, FreeSet>;
LoadedSet load_set(std::istream& is);
LoadedSet load_set_file(const std::string& path);

} // namespace pdd

#endif
