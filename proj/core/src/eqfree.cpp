#include "pdd/eqfree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "pdd/errors.hpp"
#include "pdd/rng.hpp"

namespace pdd {

namespace {

// shells of the digit cube {0..b-1}^n in base `base`; returns the most
// populous sphere ||digits||^2 = R, smallest R on ties
std::vector<long long> best_sphere_shell(long long b, int n, long long base) {
    std::map<long long, std::vector<long long>> shells;
    std::vector<long long> digits(static_cast<std::size_t>(n), 0);
    for (;;) {
        long long r = 0, val = 0;
        for (int i = n - 1; i >= 0; --i) {
            r += digits[i] * digits[i];
            val = val * base + digits[i];
        }
        shells[r].push_back(val);
        int pos = 0;
        while (pos < n && ++digits[pos] == b) digits[pos++] = 0;
        if (pos == n) break;
    }
    const std::vector<long long>* best = nullptr;
    for (const auto& [r, v] : shells)
        if (!best || v.size() > best->size()) best = &v;
    return *best;
}

// does c . v = 0 over digits {0..b-1} admit only constant v?
bool forces_equal_digits(const std::array<long long, 4>& c, long long b) {
    std::array<long long, 4> v{};
    for (;;) {
        long long s = 0;
        for (int i = 0; i < 4; ++i) s += c[i] * v[i];
        if (s == 0 && !(v[0] == v[1] && v[1] == v[2] && v[2] == v[3])) return false;
        int pos = 0;
        while (pos < 4 && ++v[pos] == b) v[pos++] = 0;
        if (pos == 4) return true;
    }
}

// all values < range whose base-`base` digits are 0 or 1, ascending
std::vector<long long> digit01_range(long long base, long long range) {
    std::vector<long long> out;
    for (unsigned long long m = 0;; ++m) {
        __int128 v = 0, pw = 1;
        for (unsigned long long t = m; t; t >>= 1, pw *= base)
            if (t & 1) v += pw;
        if (v >= range) break;
        out.push_back(static_cast<long long>(v));
    }
    return out;
}

// midpoint candidates y with 2y = s (mod L)
inline int mod_halves(long long s, long long L, long long out[2]) {
    s = ((s % L) + L) % L;
    if (L % 2 == 1) {
        out[0] = (s % 2 == 0) ? s / 2 : (s + L) / 2;
        return 1;
    }
    if (s % 2 != 0) return 0;
    out[0] = s / 2;
    out[1] = s / 2 + L / 2;
    return 2;
}

}  // namespace

EquationSpec EquationSpec::make(std::array<long long, 4> c, std::optional<long long> mod) {
    if (c[0] + c[1] + c[2] + c[3] != 0)
        throw std::invalid_argument("equation coefficients must sum to zero");
    if (mod && *mod < 2) throw std::invalid_argument("modulus must be >= 2");
    EquationSpec s;
    s.coeffs = c;
    s.modulus = mod;
    return s;
}

std::string EquationSpec::str() const {
    std::ostringstream os;
    os << coeffs[0] << "w";
    const char* names[3] = {"x", "y", "z"};
    for (int i = 1; i < 4; ++i)
        os << (coeffs[i] < 0 ? " - " : " + ") << std::abs(coeffs[i]) << names[i - 1];
    os << " = 0";
    if (modulus) os << " (mod " << *modulus << ")";
    return os.str();
}

bool FreeSet::contains(long long v) const {
    return std::binary_search(elements.begin(), elements.end(), v);
}

FreeSet behrend_3apfree(long long L) {
    if (L < 1) throw std::invalid_argument("behrend_3apfree: L must be >= 1");
    // b = 2 digit cube: base-3 numbers with digits in {0,1}, whole range
    // (x_i + z_i = 2 y_i over {0,1} already forces x = z, no sphere needed)
    std::vector<long long> best = digit01_range(3, L);

    for (long long b = 3; 2 * b - 1 <= L; ++b) {
        long long base = 2 * b - 1;
        long long size = base;
        for (int n = 1; size <= L; ++n) {
            double vectors = 1;
            for (int i = 0; i < n; ++i) vectors *= static_cast<double>(b);
            if (vectors > 4e6) break;
            auto shell = best_sphere_shell(b, n, base);
            if (shell.size() > best.size()) best = std::move(shell);
            if (size > L / base) break;
            size *= base;
        }
    }

    FreeSet fs;
    fs.L = L;
    std::sort(best.begin(), best.end());
    fs.elements = std::move(best);
    if (!verify_free(fs)) throw std::logic_error("behrend_3apfree: construction not 3-AP-free");
    return fs;
}

FreeSet behrend_eqfree(long long L, const EquationSpec& spec) {
    if (L < 1) throw std::invalid_argument("behrend_eqfree: L must be >= 1");
    long long pos_sum = 0, neg_sum = 0;
    int n_pos = 0, n_neg = 0;
    for (long long c : spec.coeffs) {
        if (c > 0) { pos_sum += c; ++n_pos; }
        if (c < 0) { neg_sum -= c; ++n_neg; }
    }
    if (pos_sum != neg_sum || (n_pos != 1 && n_neg != 1) || n_pos + n_neg != 4)
        throw std::invalid_argument(
            "behrend_eqfree: need one coefficient alone on its side, all nonzero");
    const long long K = pos_sum;

    long long range = L;
    if (spec.modulus) {
        // keep |c . v| < p so a solution mod p forces the integer equation
        long long p = *spec.modulus;
        range = std::min(range, (p - 1) / K + 1);
    }
    if (K + 1 > range)
        throw InfeasibleBase("behrend_eqfree: no digit base fits range " +
                             std::to_string(range));

    std::vector<long long> best;
    if (forces_equal_digits(spec.coeffs, 2))
        best = digit01_range(K + 1, range);
    for (long long b = 2;; ++b) {
        long long base = K * (b - 1) + 1;
        if (base > range) break;
        long long size = base;
        for (int n = 1; size <= range; ++n) {
            double vectors = 1;
            for (int i = 0; i < n; ++i) vectors *= static_cast<double>(b);
            if (vectors > 4e6) break;
            auto shell = best_sphere_shell(b, n, base);
            if (shell.size() > best.size()) best = std::move(shell);
            if (size > range / base) break;
            size *= base;
        }
    }
    if (best.empty()) best = {0};

    FreeSet fs;
    fs.L = L;
    std::sort(best.begin(), best.end());
    fs.elements = std::move(best);
    fs.spec = spec;
    double quad = static_cast<double>(fs.elements.size());
    quad = quad * quad * quad * quad;
    if (quad <= 1e8 || L <= 300) {
        if (!verify_free(fs))
            throw std::logic_error("behrend_eqfree: construction has a nontrivial solution");
    } else if (sample_violations(fs, 100000, 0x5eedULL) != 0) {
        throw std::logic_error("behrend_eqfree: sampled violation");
    }
    return fs;
}

FreeSet digit_tensor_set(long long p, const FreeSet& base_set, int n) {
    if (n < 1) throw std::invalid_argument("digit_tensor_set: n must be >= 1");
    if (!base_set.elements.empty() &&
        (base_set.elements.front() < 0 || base_set.elements.back() >= p))
        throw std::invalid_argument("digit_tensor_set: base set not inside [0, p)");
    double sz = 1;
    for (int i = 0; i < n; ++i) sz *= static_cast<double>(base_set.elements.size());
    if (sz > 5e7) throw TooLargeForExhaustive("digit_tensor_set: |base|^n too large");

    std::vector<long long> cur = {0};
    long long pw = 1;
    for (int i = 0; i < n; ++i) {
        std::vector<long long> next;
        next.reserve(cur.size() * base_set.elements.size());
        for (long long d : base_set.elements)
            for (long long v : cur) next.push_back(v + d * pw);
        cur = std::move(next);
        pw *= p;
    }
    std::sort(cur.begin(), cur.end());

    FreeSet fs;
    fs.L = pw;
    fs.elements = std::move(cur);
    if (base_set.spec) {
        EquationSpec s = *base_set.spec;  // now an integer equation
        s.modulus.reset();
        fs.spec = s;
    }
    return fs;
}

namespace {

bool verify_threeap(const FreeSet& set) {
    const auto& e = set.elements;
    double pairs = static_cast<double>(e.size()) * static_cast<double>(e.size());
    if (pairs > 1e8) throw TooLargeForExhaustive("verify_free: 3-AP set too large");
    if (!set.cyclic) {
        if (set.L <= 20'000'000) {
            std::vector<char> member(static_cast<std::size_t>(std::max<long long>(set.L, 1)), 0);
            for (long long v : e) member[static_cast<std::size_t>(v)] = 1;
            for (std::size_t i = 0; i < e.size(); ++i)
                for (std::size_t j = i + 1; j < e.size(); ++j) {
                    long long s = e[i] + e[j];
                    if (s % 2 == 0 && member[static_cast<std::size_t>(s / 2)]) return false;
                }
        } else {
            for (std::size_t i = 0; i < e.size(); ++i)
                for (std::size_t j = i + 1; j < e.size(); ++j) {
                    long long s = e[i] + e[j];
                    if (s % 2 == 0 && set.contains(s / 2)) return false;
                }
        }
        return true;
    }
    const long long L = set.L;
    std::vector<char> member(static_cast<std::size_t>(L), 0);
    for (long long v : e) member[static_cast<std::size_t>(((v % L) + L) % L)] = 1;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i; j < e.size(); ++j) {
            long long ys[2];
            int k = mod_halves(e[i] + e[j], L, ys);
            for (int t = 0; t < k; ++t) {
                if (!member[static_cast<std::size_t>(ys[t])]) continue;
                bool trivial = (e[i] == e[j] && ys[t] == e[i] % L);
                if (!trivial) return false;
            }
        }
    return true;
}

bool verify_equation(const FreeSet& set) {
    const auto& e = set.elements;
    double quad = static_cast<double>(e.size());
    quad = quad * quad * quad * quad;
    if (quad > 1e8) throw TooLargeForExhaustive("verify_free: equation set too large");
    const auto& c = set.spec->coeffs;
    if (!set.spec->modulus) {
        for (long long x : e)
            for (long long y : e)
                for (long long z : e) {
                    long long rhs = -(c[1] * x + c[2] * y + c[3] * z);
                    if (rhs % c[0] != 0) continue;
                    long long w = rhs / c[0];
                    if (!set.contains(w)) continue;
                    if (!(w == x && x == y && y == z)) return false;
                }
        return true;
    }
    const long long p = *set.spec->modulus;
    for (long long x : e)
        for (long long y : e)
            for (long long z : e) {
                long long rhs = (-(c[1] * x + c[2] * y + c[3] * z)) % p;
                for (long long w : e) {
                    if (((c[0] * w - rhs) % p + p) % p != 0) continue;
                    if (!(w == x && x == y && y == z)) return false;
                }
            }
    return true;
}

}  // namespace

bool verify_free(const FreeSet& set) {
    if (set.elements.size() <= 1) return true;
    if (!set.spec) return verify_threeap(set);
    return verify_equation(set);
}

long long sample_violations(const FreeSet& set, long long trials, std::uint64_t seed) {
    if (set.elements.empty()) return 0;
    Xoshiro256 rng(seed);
    const auto& e = set.elements;
    long long bad = 0;
    for (long long t = 0; t < trials; ++t) {
        if (!set.spec) {
            long long x = e[rng.below(e.size())];
            long long z = e[rng.below(e.size())];
            if (x == z) continue;
            if (set.cyclic) {
                long long ys[2];
                int k = mod_halves(x + z, set.L, ys);
                for (int i = 0; i < k; ++i)
                    if (set.contains(ys[i])) ++bad;
            } else if ((x + z) % 2 == 0 && set.contains((x + z) / 2)) {
                ++bad;
            }
        } else {
            const auto& c = set.spec->coeffs;
            long long x = e[rng.below(e.size())];
            long long y = e[rng.below(e.size())];
            long long z = e[rng.below(e.size())];
            long long rhs = -(c[1] * x + c[2] * y + c[3] * z);
            if (set.spec->modulus) {
                long long p = *set.spec->modulus;
                for (long long w : e)
                    if (((c[0] * w - rhs) % p + p) % p == 0 && !(w == x && x == y && y == z))
                        ++bad;
            } else if (rhs % c[0] == 0) {
                long long w = rhs / c[0];
                if (set.contains(w) && !(w == x && x == y && y == z)) ++bad;
            }
        }
    }
    return bad;
}

} // namespace pdd
