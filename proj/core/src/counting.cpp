#include "pdd/counting.hpp"
#include "pdd/gmpll.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <stdexcept>

#include "pdd/modmath.hpp"
#include "pdd/parallel.hpp"
#include "pdd/rng.hpp"

namespace pdd {

Pattern pattern_1d(const std::array<long long, 4>& pts) {
    Pattern p;
    for (long long v : pts) p.push_back({v, 0});
    return p;
}

namespace {

long long count_wrap(const GridSet& A, const Pattern& P, long long d) {
    const long long N = A.N();
    long long cnt = 0;
    if (A.r() == 1) {
        for (long long x = 0; x < N; ++x) {
            bool all = true;
            for (const auto& p : P)
                if (!A.contains_mod(mod_reduce(x + d * p.x, N))) { all = false; break; }
            cnt += all;
        }
    } else {
        for (long long x = 0; x < N; ++x)
            for (long long y = 0; y < N; ++y) {
                bool all = true;
                for (const auto& p : P)
                    if (!A.contains_mod(mod_reduce(x + d * p.x, N), mod_reduce(y + d * p.y, N))) {
                        all = false;
                        break;
                    }
                cnt += all;
            }
    }
    return cnt;
}

long long count_boxed(const GridSet& A, const Pattern& P, long long d) {
    const long long N = A.N();
    // per-coordinate window of base points (anywhere in Z^r) whose whole
    // translate stays inside [N]
    long long lo[2], hi[2];
    for (int c = 0; c < 2; ++c) {
        long long off = c == 0 ? d * P[0].x : d * P[0].y;
        lo[c] = 1 - off;
        hi[c] = N - off;
    }
    for (const auto& p : P) {
        long long off[2] = {d * p.x, d * p.y};
        for (int c = 0; c < A.r(); ++c) {
            lo[c] = std::max(lo[c], 1 - off[c]);
            hi[c] = std::min(hi[c], N - off[c]);
        }
    }
    long long cnt = 0;
    if (A.r() == 1) {
        for (long long x = lo[0]; x <= hi[0]; ++x) {
            bool all = true;
            for (const auto& p : P)
                if (!A.contains(x + d * p.x)) { all = false; break; }
            cnt += all;
        }
    } else {
        for (long long x = lo[0]; x <= hi[0]; ++x)
            for (long long y = lo[1]; y <= hi[1]; ++y) {
                bool all = true;
                for (const auto& p : P)
                    if (!A.contains(x + d * p.x, y + d * p.y)) { all = false; break; }
                cnt += all;
            }
    }
    return cnt;
}

}  // namespace

long long count_translates(const GridSet& A, const Pattern& P, long long d, bool wraparound) {
    if (d == 0) throw std::invalid_argument("count_translates: d must be nonzero");
    if (P.empty()) throw std::invalid_argument("count_translates: pattern must be nonempty");
    return wraparound ? count_wrap(A, P, d) : count_boxed(A, P, d);
}

DifferenceProfile difference_profile(const GridSet& A, const Pattern& P, bool wraparound) {
    if (P.empty()) throw std::invalid_argument("difference_profile: pattern must be nonempty");
    const long long N = A.N();
    DifferenceProfile prof;
    prof.N = N;
    prof.wraparound = wraparound;
    prof.density = A.density();

    std::vector<long long> ds;
    if (wraparound) {
        for (long long d = 1; d < N; ++d) ds.push_back(d);
    } else {
        long long sx_min = P[0].x, sx_max = P[0].x, sy_min = P[0].y, sy_max = P[0].y;
        for (const auto& p : P) {
            sx_min = std::min(sx_min, p.x); sx_max = std::max(sx_max, p.x);
            sy_min = std::min(sy_min, p.y); sy_max = std::max(sy_max, p.y);
        }
        long long spread = std::max(sx_max - sx_min, A.r() == 2 ? sy_max - sy_min : 0);
        if (spread == 0)
            throw std::invalid_argument("difference_profile: pattern has zero spread");
        long long dmax = (N - 1) / spread;
        for (long long d = 1; d <= dmax; ++d) { ds.push_back(d); ds.push_back(-d); }
    }

    std::vector<double> vals(ds.size());
    parallel_for(ds.size(), [&](std::size_t i) {
        vals[i] = static_cast<double>(count_translates(A, P, ds[i], wraparound));
    });

    prof.per_d.reserve(ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i) prof.per_d.push_back({ds[i], vals[i]});
    std::sort(prof.per_d.begin(), prof.per_d.end());

    // tie-break: smallest |d| (circular when wrapping), then the positive side
    auto rank = [&](long long d) {
        long long a = wraparound ? std::min(d, N - d) : std::llabs(d);
        int side = wraparound ? (d <= N - d ? 0 : 1) : (d > 0 ? 0 : 1);
        return std::pair<long long, int>(a, side);
    };
    bool first = true;
    for (const auto& [d, v] : prof.per_d) {
        if (first || v > prof.max_value ||
            (v == prof.max_value && rank(d) < rank(prof.max_d))) {
            prof.max_value = v;
            prof.max_d = d;
            first = false;
        }
    }
    return prof;
}

DifferenceProfile phase_expectation_profile(const PhaseFunction& f,
                                            const FourPointPattern& pattern) {
    const long long N = f.N;
    std::vector<double> table = f.values();
    DifferenceProfile prof;
    prof.N = N;
    prof.wraparound = true;
    prof.density = f.alpha.get_d();

    std::vector<double> vals(static_cast<std::size_t>(N - 1));
    const long long k1 = pattern.k1, k2 = pattern.k2, k3 = pattern.k3;
    parallel_for(vals.size(), [&](std::size_t i) {
        const long long d = static_cast<long long>(i) + 1;
        const long long o1 = k1 * d % N, o2 = k2 * d % N, o3 = k3 * d % N;
        double sum = 0.0, comp = 0.0;  // Kahan
        for (long long t = 0; t < N; ++t) {
            long long t1 = t + o1; if (t1 >= N) t1 -= N;
            long long t2 = t + o2; if (t2 >= N) t2 -= N;
            long long t3 = t + o3; if (t3 >= N) t3 -= N;
            double term = table[static_cast<std::size_t>(t)] *
                          table[static_cast<std::size_t>(t1)] *
                          table[static_cast<std::size_t>(t2)] *
                          table[static_cast<std::size_t>(t3)];
            double yk = term - comp;
            double tk = sum + yk;
            comp = (tk - sum) - yk;
            sum = tk;
        }
        vals[i] = sum / static_cast<double>(N);
    });

    prof.per_d.reserve(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i)
        prof.per_d.push_back({static_cast<long long>(i) + 1, vals[i]});
    auto rank = [&](long long d) { return std::min(d, N - d); };
    bool first = true;
    for (const auto& [d, v] : prof.per_d) {
        if (first || v > prof.max_value ||
            (v == prof.max_value && rank(d) < rank(prof.max_d))) {
            prof.max_value = v;
            prof.max_d = d;
            first = false;
        }
    }
    return prof;
}

double predict_phase_expectation(const DegeneracyReport& report,
                                 const std::array<mpq_class, 4>& gammas,
                                 const mpq_class& alpha, long long d, long long N) {
    mpq_class main = 1 + 2 * gammas[0] * gammas[1] * gammas[2] * gammas[3];
    double acc = main.get_d();
    const long long dm = mod_reduce(d, N);
    for (const auto& I : report.extra) {
        double g = gamma_product(gammas, I).get_d();
        long long phase = mod_reduce(mod_reduce(report.p3_values.at(I), N) * dm % N * dm, N);
        acc += g * std::cos(2.0 * std::numbers::pi * static_cast<double>(phase) /
                            static_cast<double>(N));
    }
    double a = alpha.get_d();
    return a * a * a * a * acc;
}

double gauss_sum_check(long long N, long long a, long long trials, std::uint64_t seed) {
    if (mod_reduce(a, N) == 0)
        throw std::invalid_argument("gauss_sum_check: a must be nonzero mod N");
    Xoshiro256 rng(seed);
    double worst = 0.0;
    const double w = 2.0 * std::numbers::pi / static_cast<double>(N);
    for (long long trial = 0; trial <= trials; ++trial) {
        long long b = trial == 0 ? 0 : static_cast<long long>(rng.below(static_cast<std::uint64_t>(N)));
        std::complex<double> s{0.0, 0.0};
        for (long long t = 0; t < N; ++t) {
            long long ph = (mod_reduce(a, N) * (t * t % N) + b * t) % N;
            s += std::polar(1.0, w * static_cast<double>(ph));
        }
        worst = std::max(worst, std::abs(s) / static_cast<double>(N));
    }
    return worst;
}

mpq_class AffineMap::det() const {
    if (r == 1) return mat[0][0];
    return mat[0][0] * mat[1][1] - mat[0][1] * mat[1][0];
}

AffineImage apply_affine(const GridSet& A, const AffineMap& map, long long target_N) {
    if (map.r != A.r()) throw std::invalid_argument("apply_affine: dimension mismatch");
    if (map.det() == 0) throw std::invalid_argument("apply_affine: map must be invertible");
    if (target_N < 1) throw std::invalid_argument("apply_affine: target_N must be >= 1");

    struct Key {
        long long bx, by;
        bool operator<(const Key& o) const { return std::tie(bx, by) < std::tie(o.bx, o.by); }
    };
    std::map<Key, std::vector<std::array<long long, 2>>> boxes;

    for (const auto& mpt : A.members()) {
        mpq_class ix = map.mat[0][0] * to_mpz(mpt[0]) + map.shift[0];
        mpq_class iy = 0;
        if (A.r() == 2) {
            ix += map.mat[0][1] * to_mpz(mpt[1]);
            iy = map.mat[1][0] * to_mpz(mpt[0]) + map.mat[1][1] * to_mpz(mpt[1]) + map.shift[1];
        }
        ix.canonicalize(); iy.canonicalize();
        if (ix.get_den() != 1 || iy.get_den() != 1) continue;  // non-integer image
        long long x = mpz_class(ix.get_num()).get_si();
        long long y = mpz_class(iy.get_num()).get_si();
        auto floordiv = [](long long v, long long n) {
            long long q = v / n;
            if (v % n != 0 && ((v % n < 0) != (n < 0))) --q;
            return q;
        };
        Key k{floordiv(x - 1, target_N), A.r() == 2 ? floordiv(y - 1, target_N) : 0};
        boxes[k].push_back({x, y});
    }

    AffineImage out;
    out.set = GridSet(A.r(), target_N);
    if (boxes.empty()) {
        out.retained_fraction = 0.0;
        return out;
    }
    const std::vector<std::array<long long, 2>>* best = nullptr;
    Key best_key{0, 0};
    for (const auto& [k, v] : boxes)
        if (!best || v.size() > best->size()) { best = &v; best_key = k; }
    for (const auto& pt : *best) {
        long long x = pt[0] - best_key.bx * target_N;
        long long y = pt[1] - best_key.by * target_N;
        if (A.r() == 1) out.set.insert(x);
        else out.set.insert(x, y);
    }
    out.retained_fraction =
        A.size() ? static_cast<double>(best->size()) / static_cast<double>(A.size()) : 0.0;
    return out;
}

} // namespace pdd
