#include <doctest.h>

#include <map>

#include "pdd/gmpll.hpp"
#include "pdd/intpoly.hpp"
#include "pdd/rng.hpp"

using namespace pdd;

namespace {

const std::vector<std::string> XYZ = {"X", "Y", "Z"};
const std::vector<std::string> XYZTD = {"X", "Y", "Z", "T", "D"};

IntPoly var(const std::vector<std::string>& vs, const std::string& n) {
    return IntPoly::variable(vs, n);
}

IntPoly random_poly(const std::vector<std::string>& vs, Xoshiro256& rng, int max_terms = 4,
                    unsigned max_deg = 6, long long cmax = 1'000'000) {
    IntPoly p(vs);
    int nt = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms)));
    for (int t = 0; t < nt; ++t) {
        IntPoly::Exponents e(vs.size(), 0);
        unsigned total = rng.below(max_deg + 1);
        for (unsigned k = 0; k < total; ++k) ++e[rng.below(vs.size())];
        p.add_term(e, to_mpz(rng.range(-cmax, cmax)));
    }
    return p;
}

}  // namespace

TEST_CASE("canonical serialization follows graded-lex order") {
    IntPoly p(XYZ);
    p.add_term({2, 0, 0}, 2);
    p.add_term({1, 0, 1}, 1);
    p.add_term({0, 1, 1}, -1);
    CHECK(p.str() == "2*X^2 + 1*X*Z - 1*Y*Z");
    CHECK(IntPoly::zero(XYZ).str() == "0");
}

TEST_CASE("addition") {
    auto X = var(XYZ, "X"), Y = var(XYZ, "Y");
    CHECK((X + (-X)).is_zero());
    auto s = (X + Y) + Y;
    IntPoly want(XYZ);
    want.add_term({1, 0, 0}, 1);
    want.add_term({0, 1, 0}, 2);
    CHECK(s == want);
    CHECK_THROWS_AS(X + var({"X", "Y"}, "X"), std::invalid_argument);
}

TEST_CASE("multiplication expands the split-prime cross product") {
    auto X = var(XYZ, "X"), Y = var(XYZ, "Y"), Z = var(XYZ, "Z");
    CHECK((X * Y).str() == "1*X*Y");
    // (X-Y)(Y-Z)(Z-X) written out has six terms
    auto p1 = (X - Y) * (Y - Z) * (Z - X);
    IntPoly want(XYZ);
    want.add_term({2, 1, 0}, -1);
    want.add_term({2, 0, 1}, 1);
    want.add_term({1, 2, 0}, 1);
    want.add_term({1, 0, 2}, -1);
    want.add_term({0, 2, 1}, -1);
    want.add_term({0, 1, 2}, 1);
    CHECK(p1 == want);
    CHECK(p1.term_count() == 6);
}

TEST_CASE("substitution collapses the quadratic identity") {
    // numeric coefficient vector of the pattern {0,1,2,5}
    const long long a[4] = {-12, 30, -20, 2};
    const long long k[3] = {1, 2, 5};
    const std::vector<std::string> TD = {"T", "D"};
    auto T = var(TD, "T"), D = var(TD, "D");
    IntPoly quad = IntPoly::zero(TD);
    quad += T * T * to_mpz(a[0]);
    for (int j = 0; j < 3; ++j) {
        auto lin = T + D * to_mpz(k[j]);
        quad += lin * lin * to_mpz(a[j + 1]);
    }
    CHECK(quad.is_zero());  // the defining identity of the coefficient vector

    // a non-cancelling coefficient choice: D -> 0 leaves (sum of weights) T^2
    IntPoly mixed = IntPoly::zero(TD);
    mixed += T * T * to_mpz(a[0]);
    {
        auto lin = T + D * to_mpz(k[0]);
        mixed += lin * lin * to_mpz(a[0]);
    }
    std::map<std::string, IntPoly> collapse = {{"T", T}, {"D", IntPoly::zero(TD)}};
    auto sect = mixed.substitute(collapse);
    IntPoly want = T * T * to_mpz(2 * a[0]);
    CHECK(sect == want);

    CHECK_THROWS_AS(mixed.substitute({{"T", T}}), std::invalid_argument);
}

TEST_CASE("the four-polynomial torus identity vanishes symbolically") {
    // P1 T^2 + P2 (T+XD)^2 + P3 (T+YD)^2 + P4 (T+ZD)^2 = 0
    auto X = var(XYZTD, "X"), Y = var(XYZTD, "Y"), Z = var(XYZTD, "Z");
    auto T = var(XYZTD, "T"), D = var(XYZTD, "D");
    auto P1 = (X - Y) * (Y - Z) * (Z - X);
    auto P2 = Y * Z * (Y - Z);
    auto P3 = Z * X * (Z - X);
    auto P4 = X * Y * (X - Y);
    auto sq = [](const IntPoly& p) { return p * p; };
    auto total = P1 * sq(T) + P2 * sq(T + X * D) + P3 * sq(T + Y * D) + P4 * sq(T + Z * D);
    CHECK(total.is_zero());
}

TEST_CASE("rational evaluation") {
    IntPoly p(XYZ);  // 2X^2 + XZ - YZ
    p.add_term({2, 0, 0}, 2);
    p.add_term({1, 0, 1}, 1);
    p.add_term({0, 1, 1}, -1);
    auto at = [&](const IntPoly& q, long x, long y, long z) {
        return q.eval({{"X", mpq_class(x)}, {"Y", mpq_class(y)}, {"Z", mpq_class(z)}});
    };
    CHECK(at(p, 1, 3, 1) == 0);
    IntPoly q(XYZ);  // X^2 - YZ
    q.add_term({2, 0, 0}, 1);
    q.add_term({0, 1, 1}, -1);
    CHECK(at(q, 2, 1, 4) == 0);
    CHECK(at(q, 1, 1, 2) == -1);
    CHECK_THROWS_AS(p.eval({{"X", mpq_class(1)}}), std::invalid_argument);
}

TEST_CASE("sign census") {
    auto X = var(XYZ, "X"), Y = var(XYZ, "Y");
    auto c = (X + Y).sign_census();
    CHECK(c.n_positive == 2);
    CHECK(c.n_negative == 0);
    CHECK_FALSE(c.zero_poly);
    CHECK((X + Y).single_signed());
    CHECK(IntPoly::zero(XYZ).sign_census().zero_poly);
    CHECK_FALSE(IntPoly::zero(XYZ).single_signed());
    CHECK_FALSE((X - Y).single_signed());
}

TEST_CASE("exact division") {
    auto X = var(XYZ, "X"), Y = var(XYZ, "Y");
    auto q = IntPoly::divide_exact(X + Y, X * X - Y * Y);
    REQUIRE(q.has_value());
    CHECK(*q == X - Y);
    CHECK_FALSE(poly_divides(X, X + Y));
    CHECK_THROWS_AS(IntPoly::divide_exact(IntPoly::zero(XYZ), X), std::invalid_argument);
    // integer-coefficient exactness: 2X does not divide 3X^2
    CHECK_FALSE(poly_divides(X * mpz_class(2), X * X * mpz_class(3)));
    CHECK(poly_divides(X * mpz_class(2), X * X * mpz_class(6)));
}

TEST_CASE("ring and evaluation properties on random polynomials") {
    Xoshiro256 rng(42);
    for (int iter = 0; iter < 1000; ++iter) {
        auto p = random_poly(XYZ, rng);
        auto q = random_poly(XYZ, rng);
        auto r = random_poly(XYZ, rng);
        CHECK((p + q) * r == p * r + q * r);

        std::map<std::string, mpq_class> pt = {
            {"X", to_mpq(rng.range(-9, 9), 1 + static_cast<long long>(rng.below(5)))},
            {"Y", to_mpq(rng.range(-9, 9), 1 + static_cast<long long>(rng.below(5)))},
            {"Z", to_mpq(rng.range(-9, 9), 1 + static_cast<long long>(rng.below(5)))}};
        mpq_class lhs = (p * q).eval(pt);
        mpq_class rhs = p.eval(pt) * q.eval(pt);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("substitute-then-evaluate equals evaluate-then-substitute") {
    Xoshiro256 rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        auto p = random_poly(XYZ, rng, 3, 4, 50);
        // images over (T, D)
        const std::vector<std::string> TD = {"T", "D"};
        std::map<std::string, IntPoly> imgs = {{"X", random_poly(TD, rng, 2, 2, 9)},
                                               {"Y", random_poly(TD, rng, 2, 2, 9)},
                                               {"Z", random_poly(TD, rng, 2, 2, 9)}};
        std::map<std::string, mpq_class> pt = {{"T", to_mpq(rng.range(-5, 5))},
                                               {"D", to_mpq(rng.range(-5, 5))}};
        mpq_class lhs = p.substitute(imgs).eval(pt);
        std::map<std::string, mpq_class> inner;
        for (const auto& [name, img] : imgs) inner[name] = img.eval(pt);
        mpq_class rhs = p.eval(inner);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("division of constructed multiples always succeeds") {
    Xoshiro256 rng(99);
    for (int iter = 0; iter < 300; ++iter) {
        auto d = random_poly(XYZ, rng, 3, 3, 20);
        if (d.is_zero()) continue;
        auto q = random_poly(XYZ, rng, 3, 3, 20);
        auto p = d * q;
        auto got = IntPoly::divide_exact(d, p);
        REQUIRE(got.has_value());
        CHECK(d * *got == p);
    }
}
