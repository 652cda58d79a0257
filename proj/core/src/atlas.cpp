#include "pdd/atlas.hpp"

#include <algorithm>
#include <stdexcept>

#include "pdd/errors.hpp"
#include "pdd/parallel.hpp"

namespace pdd {

namespace {

using I128 = __int128;

I128 locus5(long long x, long long y, long long z) { return 2 * I128(x) * x + I128(x) * z - I128(y) * z; }
I128 locus6(long long x, long long y, long long z) { return I128(x) * x - I128(y) * z; }
I128 locus7(long long x, long long y, long long z) { return I128(x) * x + I128(x) * z - I128(y) * y; }
I128 cubic1(long long x, long long y, long long z) {
    return 2 * I128(x) * x * x + 4 * I128(x) * x * y + I128(x) * x * z + 2 * I128(x) * y * y -
           I128(y) * y * z - I128(y) * z * z;
}
I128 cubic2(long long x, long long y, long long z) {
    return 4 * I128(x) * x * x + 4 * I128(x) * x * y + 4 * I128(x) * x * z + 2 * I128(x) * y * z +
           I128(x) * z * z - I128(y) * y * z;
}

bool on_ray(long long x, long long y, long long z, long long rx, long long ry, long long rz) {
    if (x % rx != 0) return false;
    long long l = x / rx;
    return l > 0 && y == l * ry && z == l * rz;
}

std::vector<Signature> sorted_sigs(std::vector<Signature> v) {
    std::sort(v.begin(), v.end());
    return v;
}

const std::vector<Signature>& s_trivial() {
    static const std::vector<Signature> s = sorted_sigs(
        {{0, 0, 0, 0}, {1, 2, 3, 4}, {-1, -2, -3, -4}});
    return s;
}

mpq_class q(long num, long den) { return mpq_class(num, den); }

}  // namespace

std::string to_string(DegCase c) {
    switch (c) {
        case DegCase::Ray111: return "ray(1,1,1)";
        case DegCase::Ray132: return "ray(1,3,2)";
        case DegCase::Ray144: return "ray(1,4,4)";
        case DegCase::Ray211: return "ray(2,1,1)";
        case DegCase::CurveTwoX2XzYz: return "curve 2x^2+xz-yz=0";
        case DegCase::CurveX2Yz: return "curve x^2-yz=0";
        case DegCase::CurveX2XzY2: return "curve x^2+xz-y^2=0";
        case DegCase::CubicOne: return "curve 2x^3+4x^2y+x^2z+2xy^2-y^2z-yz^2=0";
        case DegCase::CubicTwo: return "curve 4x^3+4x^2y+4x^2z+2xyz+xz^2-y^2z=0";
        case DegCase::SOnly: return "S-only";
    }
    return "?";
}

const std::vector<Signature>& expected_extra(DegCase c) {
    static const std::map<DegCase, std::vector<Signature>> table = [] {
        auto pm = [](std::initializer_list<Signature> base) {
            std::vector<Signature> v;
            for (const auto& s : base) {
                v.push_back(s);
                v.push_back(s.negated());
            }
            return sorted_sigs(v);
        };
        std::map<DegCase, std::vector<Signature>> t;
        t[DegCase::Ray111] = pm({{1, -3, 1, 0}, {1, 0, -3, 1}, {3, -3, -1, 1}});
        t[DegCase::Ray132] = pm({{0, 3, 2, 3}});
        t[DegCase::Ray144] = pm({{3, 0, -1, 3}});
        t[DegCase::Ray211] = pm({{4, 0, 1, 4}});
        t[DegCase::CurveTwoX2XzYz] = pm({{1, 2, 1, 4}, {3, 2, 1, 4}, {3, 2, 3, 4}});
        t[DegCase::CurveX2Yz] = pm({{3, -3, -1, 1}});
        t[DegCase::CurveX2XzY2] = pm({{2, 3, -2, -3}});
        t[DegCase::CubicOne] = pm({{2, 1, -2, -1}});
        t[DegCase::CubicTwo] = pm({{3, -1, 1, -3}});
        t[DegCase::SOnly] = {};
        return t;
    }();
    return table.at(c);
}

DegCase match_case(long long x, long long y, long long z) {
    if (on_ray(x, y, z, 1, 1, 1)) return DegCase::Ray111;
    if (on_ray(x, y, z, 1, 3, 2)) return DegCase::Ray132;
    if (on_ray(x, y, z, 1, 4, 4)) return DegCase::Ray144;
    if (on_ray(x, y, z, 2, 1, 1)) return DegCase::Ray211;
    if (locus5(x, y, z) == 0) return DegCase::CurveTwoX2XzYz;
    if (locus6(x, y, z) == 0) return DegCase::CurveX2Yz;
    if (locus7(x, y, z) == 0) return DegCase::CurveX2XzY2;
    if (cubic1(x, y, z) == 0) return DegCase::CubicOne;
    if (cubic2(x, y, z) == 0) return DegCase::CubicTwo;
    return DegCase::SOnly;
}

DegeneracyReport degeneracy_set(const FourPointPattern& pattern) {
    DegeneracyReport rep;
    rep.pattern = pattern;
    const long long x = pattern.x, y = pattern.y, z = pattern.z;
    auto a = SignatureEngine::a_values(x, y, z);
    const long long k1 = pattern.k1, k2 = pattern.k2, k3 = pattern.k3;

    for (int f = 0; f < Signature::kCount; ++f) {
        Signature I = Signature::from_flat(f);
        if (SignatureEngine::p1_at(a, I) != 0) continue;
        if (SignatureEngine::p2_at(a, k1, k2, k3, I) != 0) continue;
        I128 p3 = SignatureEngine::p3_at(a, k1, k2, k3, I) / pattern.a_content;
        rep.p3_values[I] = static_cast<long long>(p3);
        bool in_s = std::find(s_trivial().begin(), s_trivial().end(), I) != s_trivial().end();
        if (!in_s) rep.extra.push_back(I);
    }
    std::sort(rep.extra.begin(), rep.extra.end());
    rep.label = match_case(x, y, z);
    rep.matches_table = rep.extra == expected_extra(rep.label);
    return rep;
}

mpq_class gamma_product(const std::array<mpq_class, 4>& gamma, const Signature& I) {
    mpq_class v = 1;
    for (int j = 0; j < 4; ++j) {
        int i = I.idx[j];
        if (i == 0) continue;
        v *= gamma[static_cast<std::size_t>(std::abs(i) - 1)];
    }
    return v;
}

GammaChoice choose_gammas(const DegeneracyReport& report) {
    GammaChoice gc;
    const mpq_class eighth = q(1, 8), tiny = q(-1, 512);
    switch (report.label) {
        case DegCase::Ray111:
        case DegCase::CurveX2Yz:
        case DegCase::CubicOne:
        case DegCase::CubicTwo:
            gc.gamma = {tiny, eighth, eighth, eighth};
            break;
        case DegCase::Ray132:
        case DegCase::Ray144:
        case DegCase::CurveX2XzY2:
            gc.gamma = {eighth, eighth, tiny, eighth};
            break;
        case DegCase::Ray211:
            gc.gamma = {eighth, eighth, eighth, tiny};
            break;
        case DegCase::CurveTwoX2XzYz:
            gc.gamma = {eighth, -eighth, eighth, eighth};
            gc.refined = true;
            break;
        case DegCase::SOnly:
            gc.gamma = {eighth, eighth, eighth, -eighth};
            break;
    }

    if (gc.refined) {
        // every surviving term has p3 = 0; the exact sum collapses to
        // 1 + 2 (g1+g3)^2 g2 g4
        for (const auto& I : report.extra)
            if (report.p3_values.at(I) != 0)
                throw BoundNotMet("fifth-case refinement needs p3 = 0 at " + I.str());
        mpq_class s = gc.gamma[0] + gc.gamma[2];
        gc.certified_bound = 1 + 2 * s * s * gc.gamma[1] * gc.gamma[3];
    } else {
        mpq_class bound = 1 + 2 * gc.gamma[0] * gc.gamma[1] * gc.gamma[2] * gc.gamma[3];
        for (const auto& I : report.extra) bound += abs(gamma_product(gc.gamma, I));
        gc.certified_bound = bound;
    }
    if (gc.certified_bound >= 1)
        throw BoundNotMet("gamma bound not strictly below 1 for case " +
                          to_string(report.label));
    return gc;
}

AtlasSummary atlas_sweep(long long bound) {
    if (bound < 5) throw std::invalid_argument("atlas bound must be >= 5");
    AtlasSummary sum;
    sum.bound = bound;
    sum.triples = bound * bound * bound;

    const auto n = static_cast<std::size_t>(bound);
    struct Slot {
        long long mismatches = 0;
        std::map<DegCase, long long> counts;
        std::vector<std::array<long long, 3>> bad;
    };
    std::vector<Slot> slots(n);

    parallel_for(n, [&](std::size_t xi) {
        Slot& slot = slots[xi];
        const long long x = static_cast<long long>(xi) + 1;
        for (long long y = 1; y <= bound; ++y) {
            for (long long z = 1; z <= bound; ++z) {
                auto a = SignatureEngine::a_values(x, y, z);
                const long long k1 = x, k2 = x + y, k3 = 2 * x + y + z;
                DegCase label = match_case(x, y, z);
                ++slot.counts[label];
                const auto& expect = expected_extra(label);
                // walk all signatures; compare the vanishing set against the table
                std::size_t hits = 0;
                bool bad = false;
                for (int f = 0; f < Signature::kCount && !bad; ++f) {
                    Signature I = Signature::from_flat(f);
                    if (SignatureEngine::p1_at(a, I) != 0) continue;
                    if (SignatureEngine::p2_at(a, k1, k2, k3, I) != 0) continue;
                    bool in_s = std::find(s_trivial().begin(), s_trivial().end(), I) !=
                                s_trivial().end();
                    if (in_s) continue;
                    if (std::find(expect.begin(), expect.end(), I) == expect.end())
                        bad = true;
                    else
                        ++hits;
                    // fifth case: surviving terms must also have p3 = 0
                    if (!bad && label == DegCase::CurveTwoX2XzYz &&
                        SignatureEngine::p3_at(a, k1, k2, k3, I) != 0)
                        bad = true;
                }
                if (!bad && hits != expect.size()) bad = true;
                if (bad) {
                    ++slot.mismatches;
                    if (slot.bad.size() < 16) slot.bad.push_back({x, y, z});
                }
            }
        }
    });

    for (const auto& s : slots) {
        sum.mismatches += s.mismatches;
        for (const auto& [c, k] : s.counts) sum.case_counts[c] += k;
        for (const auto& p : s.bad)
            if (sum.mismatch_points.size() < 16) sum.mismatch_points.push_back(p);
    }
    return sum;
}

} // namespace pdd
