#include "pdd/split_prime.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "pdd/errors.hpp"
#include "pdd/phase.hpp"

namespace pdd {

namespace {

long long mod_pow(long long b, long long e, long long m) {
    __int128 acc = 1, base = ((b % m) + m) % m;
    while (e > 0) {
        if (e & 1) acc = acc * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return static_cast<long long>(acc);
}

long long mod_inv(long long a, long long p) { return mod_pow(a, p - 2, p); }

bool has_order_12(long long r, long long p) {
    return mod_pow(r, 12, p) == 1 && mod_pow(r, 6, p) != 1 && mod_pow(r, 4, p) != 1;
}

}  // namespace

bool is_split_prime(long long p) {
    return p % 12 == 1 && is_prime_ll(p) && mod_pow(3, (p - 1) / 6, p) == 1;
}

std::array<long long, 4> coefficient_values(long long x, long long y, long long z) {
    return {(x - y) * (y - z) * (z - x), y * z * (y - z), z * x * (z - x), x * y * (x - y)};
}

std::array<std::complex<double>, 3> z_constants() {
    using std::pow;
    const std::complex<double> w = std::polar(1.0, std::numbers::pi / 6.0);
    const double r3 = std::pow(3.0, 1.0 / 6.0);
    std::complex<double> w2 = w * w;
    std::complex<double> w5 = w2 * w2 * w;
    std::complex<double> z1 = (1.0 / r3) * w5;
    std::complex<double> z2 = 0.5 * (r3 * r3 * w2 + pow(r3, 5) * w5);
    std::complex<double> z3 = 0.5 * (-(r3 * r3) * w2 + pow(r3, 5) * w5);
    return {z1, z2, z3};
}

SplitPrimeData find_split_prime(long long min_p) {
    if (min_p < 13) throw std::invalid_argument("find_split_prime: min_p must be >= 13");
    long long p = min_p;
    for (long long steps = 0; steps < 1'000'000; ++steps, ++p) {
        if (!is_split_prime(p)) continue;

        SplitPrimeData d;
        d.p = p;
        for (long long r = 2; r < p; ++r)
            if (has_order_12(r, p)) { d.omega12 = r; break; }
        for (long long s = 1; s < p; ++s)
            if (mod_pow(s, 6, p) == 3) { d.s6 = s; break; }
        if (d.omega12 == 0 || d.s6 == 0)
            throw std::logic_error("split prime without the required roots");

        const long long om = d.omega12, s6 = d.s6;
        auto mul = [p](long long a, long long b) {
            return static_cast<long long>(__int128(a) * b % p);
        };
        long long om2 = mul(om, om);
        long long om5 = mul(mul(om2, om2), om);
        long long s2 = mul(s6, s6);                 // 3^(1/3)
        long long s5 = mul(mul(s2, s2), s6);        // 3^(5/6)
        long long inv2 = mod_inv(2, p);
        long long a1 = mul(mod_inv(s6, p), om5);    // 3^(-1/6) w^5
        long long a2 = mul(inv2, (mul(s2, om2) + mul(s5, om5)) % p);
        long long a3 = mul(inv2, ((mul(s5, om5) - mul(s2, om2)) % p + p) % p);
        // representatives in [1, p]
        d.a1 = a1 == 0 ? p : a1;
        d.a2 = a2 == 0 ? p : a2;
        d.a3 = a3 == 0 ? p : a3;

        d.p_values = coefficient_values(d.a1, d.a2, d.a3);
        for (int j = 0; j < 4; ++j)
            d.residues[j] = ((d.p_values[j] % p) + p) % p;
        std::array<long long, 4> want = {p - 1, 3, p - 1, p - 1};
        if (d.residues != want)
            throw std::logic_error("split prime residues are not (-1,3,-1,-1) mod p");
        return d;
    }
    throw SearchExhausted("find_split_prime: no qualifying prime within 10^6 candidates");
}

SplitDensity split_prime_density(long long limit) {
    if (limit < 10'000) throw std::invalid_argument("split_prime_density: limit must be >= 10^4");
    SplitDensity d;
    d.limit = limit;
    std::vector<char> composite(static_cast<std::size_t>(limit) + 1, 0);
    for (long long i = 2; i <= limit; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        ++d.primes;
        if (i % 12 == 1 && mod_pow(3, (i - 1) / 6, i) == 1) ++d.split;
        for (long long j = i * i; j <= limit; j += i) composite[static_cast<std::size_t>(j)] = 1;
    }
    return d;
}

} // namespace pdd
