#include <doctest.h>

#include <algorithm>

#include "pdd/claims.hpp"
#include "pdd/errors.hpp"
#include "pdd/pattern.hpp"
#include "pdd/rng.hpp"
#include "pdd/signatures.hpp"

using namespace pdd;

namespace {

const SignatureEngine& engine() {
    static const SignatureEngine eng;
    return eng;
}

// independent oracle: fit c1 t^2 + c2 t d + c3 d^2 through numeric samples of
// the four-square expansion and cross-check against the symbolic polynomials
void check_coefficient_fit(const Signature& I, long long x, long long y, long long z) {
    auto pat = FourPointPattern::from_xyz(x, y, z);
    auto q = [&](long long t, long long d) -> __int128 {
        __int128 acc = 0;
        const long long ks[4] = {0, pat.k1, pat.k2, pat.k3};
        for (int j = 0; j < 4; ++j) {
            int idx = I.idx[j];
            long long aj = idx == 0 ? 0
                                    : (idx > 0 ? pat.a_raw[idx - 1] : -pat.a_raw[-idx - 1]);
            __int128 lin = t + static_cast<__int128>(ks[j]) * d;
            acc += static_cast<__int128>(aj) * lin * lin;
        }
        return acc;
    };
    __int128 c1 = q(1, 0);
    __int128 c3 = q(0, 1);
    __int128 c2 = q(1, 1) - c1 - c3;

    auto a = SignatureEngine::a_values(x, y, z);
    CHECK(SignatureEngine::p1_at(a, I) == c1);
    CHECK(SignatureEngine::p2_at(a, pat.k1, pat.k2, pat.k3, I) == c2);
    CHECK(SignatureEngine::p3_at(a, pat.k1, pat.k2, pat.k3, I) == c3);

    Xoshiro256 rng(0xabcdef ^ I.flat());
    for (int s = 0; s < 50; ++s) {
        long long t = rng.range(-40, 40), d = rng.range(-40, 40);
        __int128 want = c1 * t * t + c2 * t * d + c3 * d * d;
        CHECK(q(t, d) == want);
    }
}

}  // namespace

TEST_CASE("pattern parametrization and coefficient vectors") {
    auto p = FourPointPattern::from_xyz(1, 1, 2);
    CHECK(p.k1 == 1);
    CHECK(p.k2 == 2);
    CHECK(p.k3 == 5);
    CHECK(p.a_raw == std::array<long long, 4>{-12, 30, -20, 2});
    CHECK(p.a_prim == std::array<long long, 4>{-6, 15, -10, 1});

    auto q = FourPointPattern::from_xyz(1, 1, 1);
    CHECK(q.a_prim == std::array<long long, 4>{-3, 8, -6, 1});

    auto r = FourPointPattern::from_points({0, 1, 2, 5});
    CHECK(r.x == 1);
    CHECK(r.y == 1);
    CHECK(r.z == 2);
    // reflected form of the same pattern
    auto s = FourPointPattern::from_points({0, 3, 4, 5});
    CHECK(s.k1 == 1);
    CHECK(s.k2 == 2);
    CHECK(s.k3 == 5);
    CHECK_THROWS_AS(FourPointPattern::from_points({0, 1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(FourPointPattern::from_points({0, 0, 2, 3}), std::invalid_argument);
}

TEST_CASE("trivial signatures have vanishing polynomials") {
    for (Signature I : {Signature{0, 0, 0, 0}, Signature{1, 2, 3, 4}, Signature{-1, -2, -3, -4}}) {
        auto p = engine().build(I);
        CHECK(p.p1.is_zero());
        CHECK(p.p2.is_zero());
        CHECK(p.p3.is_zero());
    }
}

TEST_CASE("signature (3,-3,-1,1): p1 = 0 and p2 factors through x^2 - yz") {
    auto p = engine().build({3, -3, -1, 1});
    CHECK(p.p1.is_zero());
    CHECK_FALSE(p.p2.is_zero());
    auto q = IntPoly::divide_exact(loci::x2_yz(), p.p2);
    REQUIRE(q.has_value());
    CHECK(q->single_signed());
}

TEST_CASE("census class counts") {
    std::array<std::size_t, 4> counts{};
    for (int f = 0; f < Signature::kCount; ++f)
        ++counts[static_cast<std::size_t>(engine().classify(Signature::from_flat(f)))];
    CHECK(counts[0] == 3);     // BothZero
    CHECK(counts[1] == 262);   // P1ZeroOnly
    CHECK(counts[2] == 24);    // P2ZeroOnly
    CHECK(counts[3] == 6272);  // NeitherZero
}

TEST_CASE("the sign-test set has 122 members including the twelve exceptional") {
    auto i0 = compute_i0(engine());
    CHECK(i0.size() == 122);
    auto has = [&](Signature s) {
        return std::find(i0.begin(), i0.end(), s) != i0.end();
    };
    for (Signature base : {Signature{1, 2, 1, 4}, Signature{1, -3, 1, 0}, Signature{1, 0, -3, 1},
                           Signature{0, 3, 2, 3}, Signature{3, 0, -1, 3}, Signature{4, 0, 1, 4}}) {
        CHECK(has(base));
        CHECK(has(base.negated()));
    }
}

TEST_CASE("negation symmetry of the signature polynomials") {
    Xoshiro256 rng(5);
    for (int iter = 0; iter < 200; ++iter) {
        Signature I = Signature::from_flat(static_cast<int>(rng.below(Signature::kCount)));
        auto p = engine().build(I);
        auto n = engine().build(I.negated());
        CHECK(n.p1 == -p.p1);
        CHECK(n.p2 == -p.p2);
        CHECK(n.p3 == -p.p3);
    }
}

TEST_CASE("numeric evaluation agrees with the coefficient-fit oracle") {
    // all signatures at a few points
    for (auto [x, y, z] : {std::array<long long, 3>{1, 1, 1}, {1, 3, 1}, {2, 5, 7}}) {
        for (int f = 0; f < Signature::kCount; f += 37)
            check_coefficient_fit(Signature::from_flat(f), x, y, z);
    }
    // random signatures across the <= 20 box
    Xoshiro256 rng(17);
    for (int iter = 0; iter < 200; ++iter) {
        Signature I = Signature::from_flat(static_cast<int>(rng.below(Signature::kCount)));
        check_coefficient_fit(I, rng.range(1, 20), rng.range(1, 20), rng.range(1, 20));
    }
}

TEST_CASE("symbolic polynomials match numeric evaluation") {
    Xoshiro256 rng(23);
    for (int iter = 0; iter < 60; ++iter) {
        Signature I = Signature::from_flat(static_cast<int>(rng.below(Signature::kCount)));
        long long x = rng.range(1, 12), y = rng.range(1, 12), z = rng.range(1, 12);
        auto p = engine().build(I);
        std::map<std::string, mpq_class> pt = {
            {"X", mpq_class(static_cast<long>(x))},
            {"Y", mpq_class(static_cast<long>(y))},
            {"Z", mpq_class(static_cast<long>(z))}};
        auto a = SignatureEngine::a_values(x, y, z);
        CHECK(p.p1.eval(pt) ==
              mpq_class(static_cast<long>(static_cast<long long>(SignatureEngine::p1_at(a, I)))));
        CHECK(p.p3.eval(pt) ==
              mpq_class(static_cast<long>(static_cast<long long>(
                  SignatureEngine::p3_at(a, x, x + y, 2 * x + y + z, I)))));
    }
}

TEST_CASE("claim certificates for the locus signatures") {
    auto records = engine().census();
    auto at = [&](Signature s) -> const SignatureRecord& {
        return records[static_cast<std::size_t>(s.flat())];
    };

    auto c1 = certify_a4_a5(at({2, 3, -2, -3}));
    CHECK(c1.route == "locus-divides");
    CHECK(c1.status == Certificate::Status::Verified);
    CHECK(c1.witnesses.front() == loci::x2_xz_y2().str());

    auto c2 = certify_a4_a5(at({3, 2, 3, 4}));  // p2 = 0, locus sits inside p1
    CHECK(c2.route == "locus-divides");
    CHECK(c2.witnesses.front() == loci::two_x2_xz_yz().str());

    CHECK_THROWS_AS(certify_a4_a5(at({0, 0, 0, 0})), std::invalid_argument);
}

TEST_CASE("route tally across every p1-only and p2-only signature") {
    auto records = engine().census();
    long long locus = 0, single = 0, factor_list = 0;
    for (const auto& rec : records) {
        if (rec.cls != SigClass::P1ZeroOnly && rec.cls != SigClass::P2ZeroOnly) continue;
        auto cert = certify_a4_a5(rec);
        if (cert.route == "locus-divides") ++locus;
        else if (cert.route == "single-signed") ++single;
        else ++factor_list;
    }
    CHECK(locus == 12);        // five a4 pairs + the a5 pair
    CHECK(single == 232 + 22); // generic members of both classes
    CHECK(factor_list == 20);
}

TEST_CASE("exceptional pattern sets under substitution and bounded search") {
    auto records = engine().census();
    auto i0 = compute_i0(engine());
    auto at = [&](Signature s) -> const SignatureRecord& {
        return records[static_cast<std::size_t>(s.flat())];
    };

    auto ray = certify_a6_a7(at({0, 3, 2, 3}), i0, 40);
    CHECK(ray.route == "ray-substitution");
    CHECK(ray.status == Certificate::Status::Bounded);
    CHECK(ray.parameters.at("solutions_in_range") == "13");  // l*(1,3,2), 3l <= 40

    auto ray2 = certify_a6_a7(at({4, 0, 1, 4}), i0, 40);
    CHECK(ray2.route == "ray-substitution");
    CHECK(ray2.parameters.at("solutions_in_range") == "20");  // l*(2,1,1), 2l <= 40

    auto curve = certify_a6_a7(at({1, 2, 1, 4}), i0, 40);
    CHECK(curve.route == "gcd-division");
    CHECK(curve.parameters.at("solutions_in_range") == "65");  // curve points in the box

    // a generic NeitherZero signature outside I0
    auto plain = certify_a6_a7(at({4, 4, 4, 4}), i0, 40);
    CHECK(plain.route == "f-single-signed");
    CHECK(plain.status == Certificate::Status::Verified);
}

TEST_CASE("pairwise disjointness of the loci") {
    auto certs = verify_a8(40);
    CHECK(certs.size() == 21);
    long long equal = 0, disjoint = 0;
    for (const auto& c : certs) {
        if (c.route == "equal") ++equal;
        else ++disjoint;
    }
    CHECK(equal == 3);  // the three signatures sharing 2x^2 + xz - yz
    CHECK(disjoint == 18);
    CHECK_THROWS_AS(verify_a8(5), std::invalid_argument);
}

TEST_CASE("bounded curve search") {
    auto rep = curve_search(loci::x2_yz(), 10, {});
    bool found_111 = false;
    for (const auto& p : rep.positive_points)
        if (p.x == 1 && p.y == 1 && p.z == 1) found_111 = true;
    CHECK(found_111);

    for (const auto& c : high_deg_curves()) {
        auto r = curve_search(c, 60, {5, 7});
        CHECK(r.positive_points.empty());
        CHECK(r.rigor == "bounded");
        CHECK(r.local.size() == 2);
        CHECK_FALSE(r.points.empty());  // the trivial projective points show up
    }

    auto nonhom = IntPoly::variable(SignatureEngine::xyz_vars(), "X") +
                  IntPoly::constant(SignatureEngine::xyz_vars(), 1);
    CHECK_THROWS_AS(curve_search(nonhom, 10, {}), std::invalid_argument);
}
