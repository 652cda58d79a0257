#ifndef PDD_MODMATH_HPP
#define PDD_MODMATH_HPP

#include <stdexcept>

namespace pdd {

inline long long mod_reduce(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

inline long long mod_mul(long long a, long long b, long long m) {
    return static_cast<long long>(static_cast<__int128>(a) * b % m);
}

inline long long mod_pow(long long b, long long e, long long m) {
    __int128 acc = 1, base = mod_reduce(b, m);
    while (e > 0) {
        if (e & 1) acc = acc * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return static_cast<long long>(acc);
}

/// Inverse mod m via extended Euclid; throws if gcd(a, m) != 1.
inline long long mod_inv(long long a, long long m) {
    long long r0 = m, r1 = mod_reduce(a, m), s0 = 0, s1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long tr = r0 - q * r1; r0 = r1; r1 = tr;
        long long ts = s0 - q * s1; s0 = s1; s1 = ts;
    }
    if (r0 != 1) throw std::invalid_argument("mod_inv: not invertible");
    return mod_reduce(s0, m);
}

} // namespace pdd

#endif
