#include "pdd/pattern.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace pdd {

FourPointPattern FourPointPattern::from_xyz(long long x, long long y, long long z) {
    if (x <= 0 || y <= 0 || z <= 0)
        throw std::invalid_argument("pattern parameters x,y,z must be positive");
    FourPointPattern p;
    p.x = x; p.y = y; p.z = z;
    p.k1 = x; p.k2 = x + y; p.k3 = 2 * x + y + z;
    p.a_raw = {-y * (x + z) * (x + y + z),
               (x + y) * (x + z) * (2 * x + y + z),
               -x * (2 * x + y + z) * (x + y + z),
               x * y * (x + y)};
    long long g = 0;
    for (long long a : p.a_raw) g = std::gcd(g, a < 0 ? -a : a);
    p.a_content = g == 0 ? 1 : g;
    for (int i = 0; i < 4; ++i) p.a_prim[i] = p.a_raw[i] / p.a_content;
    return p;
}

FourPointPattern FourPointPattern::from_points(std::array<long long, 4> pts) {
    std::sort(pts.begin(), pts.end());
    if (pts[0] == pts[1] || pts[1] == pts[2] || pts[2] == pts[3])
        throw std::invalid_argument("pattern points must be distinct");
    long long k1 = pts[1] - pts[0], k2 = pts[2] - pts[0], k3 = pts[3] - pts[0];
    if (k1 + k2 == k3)
        throw std::invalid_argument("additive pattern (k1 + k2 == k3) has no (x,y,z) form");
    if (k1 + k2 > k3) {
        // reflect: {0,k1,k2,k3} -> {0, k3-k2, k3-k1, k3}
        long long nk1 = k3 - k2, nk2 = k3 - k1;
        k1 = nk1; k2 = nk2;
    }
    return from_xyz(k1, k2 - k1, k3 - k1 - k2);
}

} // namespace pdd
