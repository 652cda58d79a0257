#include "pdd/triforce.hpp"
#include "pdd/gmpll.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "pdd/errors.hpp"
#include "pdd/modmath.hpp"
#include "pdd/rng.hpp"

namespace pdd {

namespace {

std::vector<char> lambda_bits(const FreeSet& lam, long long L, int mult) {
    std::vector<char> bits(static_cast<std::size_t>(L), 0);
    for (long long a : lam.elements)
        bits[static_cast<std::size_t>(mod_reduce(mult * a, L))] = 1;
    return bits;
}

}  // namespace

bool TriforceSystem::edge_xy(long long x, long long y) const {
    return lambda.contains(mod_reduce(y - x, L));
}
bool TriforceSystem::edge_yz(long long y, long long z) const {
    return lambda.contains(mod_reduce(z - y, L));
}
bool TriforceSystem::edge_xz(long long x, long long z) const {
    long long d = mod_reduce(z - x, L);
    for (long long a : lambda.elements)
        if (mod_reduce(2 * a, L) == d) return true;
    return false;
}
bool TriforceSystem::triangle(long long x, long long y, long long z) const {
    return edge_xy(x, y) && edge_yz(y, z) && edge_xz(x, z);
}

double TriforceSystem::f(double u, double v, double w) const {
    auto cell = [this](double t) {
        auto c = static_cast<long long>(std::floor(static_cast<double>(L) * t));
        return std::clamp<long long>(c, 0, L - 1);
    };
    return triangle(cell(u), cell(v), cell(w)) ? 1.0 : 0.0;
}

TriforceSystem build_triforce(long long L, const mpq_class& k1, const mpq_class& k2) {
    if (L < 3) throw std::invalid_argument("build_triforce: L must be >= 3");
    if (k1 <= 0 || k2 <= 0 || k1 + k2 == 1)
        throw std::invalid_argument("build_triforce: need k1,k2 > 0 with k1 + k2 != 1");
    TriforceSystem sys;
    sys.L = L;
    sys.k1 = k1;
    sys.k2 = k2;
    // a 3-AP-free subset of [0, ceil(L/2)) has no mod-L progressions either
    FreeSet lam = behrend_3apfree((L + 1) / 2);
    lam.L = L;
    lam.cyclic = true;
    if (!verify_free(lam))
        throw std::logic_error("build_triforce: lambda not 3-AP-free mod L");
    sys.lambda = std::move(lam);

    if (L <= 100) {
        auto scan = scan_triforce(sys);
        long long nl = static_cast<long long>(sys.lambda.elements.size());
        if (scan.triangles != L * nl || !scan.edge_disjoint || !scan.vertex_degree_ok ||
            !scan.shape_ok)
            throw std::logic_error("build_triforce: invariant scan failed");
    }
    return sys;
}

TriforceScan scan_triforce(const TriforceSystem& sys) {
    const long long L = sys.L;
    TriforceScan r;
    r.shape_ok = true;
    std::vector<int> xy(static_cast<std::size_t>(L * L), 0), yz = xy, xz = xy;
    std::vector<long long> degx(static_cast<std::size_t>(L), 0), degy = degx, degz = degx;
    for (long long x = 0; x < L; ++x)
        for (long long y = 0; y < L; ++y) {
            if (!sys.edge_xy(x, y)) continue;
            for (long long z = 0; z < L; ++z) {
                if (!sys.triangle(x, y, z)) continue;
                ++r.triangles;
                ++xy[static_cast<std::size_t>(x * L + y)];
                ++yz[static_cast<std::size_t>(y * L + z)];
                ++xz[static_cast<std::size_t>(x * L + z)];
                ++degx[static_cast<std::size_t>(x)];
                ++degy[static_cast<std::size_t>(y)];
                ++degz[static_cast<std::size_t>(z)];
                long long a = mod_reduce(y - x, L);
                if (!(sys.lambda.contains(a) && mod_reduce(z - y, L) == a)) r.shape_ok = false;
            }
        }
    r.edge_disjoint = true;
    for (long long i = 0; i < L * L; ++i)
        if (xy[static_cast<std::size_t>(i)] > 1 || yz[static_cast<std::size_t>(i)] > 1 ||
            xz[static_cast<std::size_t>(i)] > 1)
            r.edge_disjoint = false;
    r.vertex_degree_ok = true;
    const long long nl = static_cast<long long>(sys.lambda.elements.size());
    for (long long v = 0; v < L; ++v)
        if (degx[static_cast<std::size_t>(v)] != nl || degy[static_cast<std::size_t>(v)] != nl ||
            degz[static_cast<std::size_t>(v)] != nl)
            r.vertex_degree_ok = false;
    return r;
}

unsigned long long triforce_beta_count(const TriforceSystem& sys, int which_case) {
    if (which_case < 1 || which_case > 3)
        throw std::invalid_argument("triforce_beta_count: case must be 1, 2 or 3");
    const long long L = sys.L;
    if (L > 200) throw TooLargeForExhaustive("triforce_beta_count: L too large");

    // membership tables for O(1) edge tests in the hot loops
    auto lam = lambda_bits(sys.lambda, L, 1);
    auto lam2 = lambda_bits(sys.lambda, L, 2);
    auto T = [&](long long x, long long y, long long z) {
        return lam[static_cast<std::size_t>(mod_reduce(y - x, L))] &&
               lam[static_cast<std::size_t>(mod_reduce(z - y, L))] &&
               lam2[static_cast<std::size_t>(mod_reduce(z - x, L))];
    };

    unsigned long long cnt = 0;
    for (long long x0 = 0; x0 < L; ++x0)
        for (long long y0 = 0; y0 < L; ++y0) {
            if (!lam[static_cast<std::size_t>(mod_reduce(y0 - x0, L))]) continue;
            for (long long z0 = 0; z0 < L; ++z0) {
                if (!T(x0, y0, z0)) continue;
                for (long long x1 = 0; x1 < L; ++x1)
                    for (long long z1 = 0; z1 < L; ++z1) {
                        if (!T(x1, y0, z1)) continue;
                        for (long long y1 = 0; y1 < L; ++y1) {
                            if (!T(x0, y1, z1)) continue;
                            switch (which_case) {
                                case 1:
                                    for (long long x2 = 0; x2 < L; ++x2)
                                        for (long long y2 = 0; y2 < L; ++y2) {
                                            if (!lam[static_cast<std::size_t>(
                                                    mod_reduce(y2 - x2, L))])
                                                continue;
                                            for (long long z2 = 0; z2 < L; ++z2)
                                                if (T(x2, y2, z2)) ++cnt;
                                        }
                                    break;
                                case 2:
                                    for (long long y2 = 0; y2 < L; ++y2)
                                        for (long long z2 = 0; z2 < L; ++z2)
                                            if (T(x1, y2, z2)) ++cnt;
                                    break;
                                case 3:
                                    for (long long z2 = 0; z2 < L; ++z2)
                                        if (T(x1, y1, z2)) ++cnt;
                                    break;
                            }
                        }
                    }
            }
        }
    return cnt;
}

MandacheSample sample_mandache_set(const TriforceSystem& sys, long long G_order,
                                   std::uint64_t seed, bool with_beta) {
    if (G_order < 10) throw std::invalid_argument("sample_mandache_set: G_order must be >= 10");
    // |G| must be coprime to the nonzero cleared elements of
    // {k1 - 1, k2 - 1, k1 + k2 - 1} and to the k denominators
    auto check_coprime = [&](const mpq_class& r) {
        mpq_class c = r;
        c.canonicalize();
        mpz_class num = abs(c.get_num());
        if (num != 0 && mpz_class(gcd(num, to_mpz(G_order))) != 1)
            throw std::invalid_argument("G_order shares a factor with M(k1,k2)");
    };
    check_coprime(sys.k1 - 1);
    check_coprime(sys.k2 - 1);
    check_coprime(sys.k1 + sys.k2 - 1);

    auto scaled = [&](const mpq_class& k) {
        mpq_class c = k;
        c.canonicalize();
        long long num = mpz_class(c.get_num() % to_mpz(G_order)).get_si();
        long long den = mpz_class(c.get_den() % to_mpz(G_order)).get_si();
        return mod_mul(mod_reduce(num, G_order), mod_inv(den, G_order), G_order);
    };
    const long long G = G_order;
    const long long k1m = scaled(sys.k1), k2m = scaled(sys.k2);

    Xoshiro256 rng(seed);
    const auto n = static_cast<std::size_t>(G);
    std::vector<double> X(n), Y(n), Z(n);
    for (auto& v : X) v = rng.uniform();
    for (auto& v : Y) v = rng.uniform();
    for (auto& v : Z) v = rng.uniform();

    MandacheSample out;
    out.set = GridSet(2, G);
    std::vector<std::uint8_t> S(n * n, 0);
    for (long long g = 0; g < G; ++g)
        for (long long h = 0; h < G; ++h) {
            double F = sys.f(X[static_cast<std::size_t>(g)], Y[static_cast<std::size_t>(h)],
                             Z[static_cast<std::size_t>((g + h) % G)]);
            double W = rng.uniform();
            if (W < F) {
                S[static_cast<std::size_t>(g * G + h)] = 1;
                out.set.insert(g + 1, h + 1);
            }
        }
    out.alpha_S = static_cast<double>(out.set.size()) / (static_cast<double>(G) * G);
    const double nl = static_cast<double>(sys.lambda.elements.size());
    const double L = static_cast<double>(sys.L);
    out.alpha_target = nl / (L * L);
    out.beta_target = (sys.k1 == 1 && sys.k2 == 1) ? nl / std::pow(L, 6)
                                                   : nl * nl / std::pow(L, 7);

    if (with_beta) {
        out.beta.assign(static_cast<std::size_t>(G - 1), 0.0);
        for (long long d = 1; d < G; ++d) {
            unsigned long long c = 0;
            const long long dk1 = mod_mul(k1m, d, G), dk2 = mod_mul(k2m, d, G);
            for (long long g = 0; g < G; ++g) {
                const long long gd = (g + d) % G, gk = (g + dk1) % G;
                const std::uint8_t* row = &S[static_cast<std::size_t>(g * G)];
                const std::uint8_t* rowd = &S[static_cast<std::size_t>(gd * G)];
                const std::uint8_t* rowk = &S[static_cast<std::size_t>(gk * G)];
                for (long long h = 0; h < G; ++h) {
                    if (!row[h]) continue;
                    if (rowd[h] && row[(h + d) % G] && rowk[(h + dk2) % G]) ++c;
                }
            }
            out.beta[static_cast<std::size_t>(d - 1)] =
                static_cast<double>(c) / (static_cast<double>(G) * G);
        }
    }
    return out;
}

} // namespace pdd
