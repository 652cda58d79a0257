#include <doctest.h>

#include <cmath>

#include "pdd/eqfree.hpp"
#include "pdd/errors.hpp"

using namespace pdd;

TEST_CASE("small progression-free sets") {
    CHECK(behrend_3apfree(1).elements == std::vector<long long>{0});
    CHECK(behrend_3apfree(2).elements == std::vector<long long>{0, 1});
    CHECK(behrend_3apfree(5).elements == std::vector<long long>{0, 1, 3, 4});
}

TEST_CASE("progression-free construction verifies and meets the size floor") {
    for (long long L : {4LL, 7LL, 9LL, 26LL, 100LL, 257LL, 1000LL, 10000LL}) {
        auto fs = behrend_3apfree(L);
        CHECK(verify_free(fs));
        CHECK(fs.elements.size() >=
              static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(L)))));
        CHECK(fs.elements.back() < L);
    }
    CHECK(behrend_3apfree(10000).elements.size() == 512);
}

TEST_CASE("affine images of progression-free sets stay progression-free") {
    auto fs = behrend_3apfree(200);
    for (auto [a, b] : {std::pair<long long, long long>{2, 5}, {3, 1}, {7, 0}}) {
        FreeSet img;
        img.L = a * 200 + b + 1;
        for (long long v : fs.elements) img.elements.push_back(a * v + b);
        CHECK(verify_free(img));
    }
}

TEST_CASE("weighted-equation Behrend variant") {
    EquationSpec spec = EquationSpec::make({-3, 1, 1, 1});  // x + y + z = 3w
    auto fs = behrend_eqfree(50, spec);
    CHECK_FALSE(fs.elements.empty());
    CHECK(verify_free(fs));  // exhaustive at this size

    auto fs100 = behrend_eqfree(100, spec);
    CHECK(verify_free(fs100));
    CHECK(fs100.elements.size() >= fs.elements.size());

    CHECK_THROWS_AS(EquationSpec::make({-3, 1, 1, 2}), std::invalid_argument);
    // two coefficients on each side: not the supported shape
    CHECK_THROWS_AS(behrend_eqfree(50, EquationSpec::make({-2, -2, 3, 1})),
                    std::invalid_argument);
}

TEST_CASE("mod-p base set for the split-prime equation") {
    EquationSpec spec = EquationSpec::make({-1, 3, -1, -1}, 61);
    auto fs = behrend_eqfree(61, spec);
    CHECK(fs.elements == std::vector<long long>{0, 1, 4, 5, 16, 17, 20});
    CHECK(verify_free(fs));
}

TEST_CASE("digit tensor construction") {
    FreeSet base;
    base.L = 7;
    base.cyclic = true;
    base.elements = {0, 1, 3};
    REQUIRE(verify_free(base));  // 3-AP-free mod 7

    auto t1 = digit_tensor_set(7, base, 1);
    CHECK(t1.elements == base.elements);

    auto t2 = digit_tensor_set(7, base, 2);
    CHECK(t2.elements == std::vector<long long>{0, 1, 3, 7, 8, 10, 21, 22, 24});
    CHECK(t2.L == 49);
    CHECK_FALSE(t2.cyclic);
    CHECK(verify_free(t2));  // 3-AP-free over the integers

    // the 61-adic tensor square avoids the integer equation
    EquationSpec spec = EquationSpec::make({-1, 3, -1, -1}, 61);
    auto s = behrend_eqfree(61, spec);
    auto tens = digit_tensor_set(61, s, 2);
    CHECK(tens.elements.size() == s.elements.size() * s.elements.size());
    REQUIRE(tens.spec.has_value());
    CHECK_FALSE(tens.spec->modulus.has_value());
    CHECK(verify_free(tens));
}

TEST_CASE("freeness oracle") {
    FreeSet a;
    a.L = 10;
    a.elements = {0, 1, 3};
    CHECK(verify_free(a));
    FreeSet b;
    b.L = 10;
    b.elements = {0, 1, 2};
    CHECK_FALSE(verify_free(b));
    CHECK(sample_violations(b, 5000, 1) > 0);

    FreeSet big;
    big.L = 2'000'000'000;
    for (long long i = 0; i < 20000; ++i) big.elements.push_back(3 * i * i);
    CHECK_THROWS_AS(verify_free(big), TooLargeForExhaustive);
}

TEST_CASE("cyclic freeness includes wraparound progressions") {
    FreeSet c;
    c.L = 7;
    c.cyclic = true;
    c.elements = {0, 1, 3};
    CHECK(verify_free(c));
    // {0,1,2} has 1 as a midpoint
    FreeSet d;
    d.L = 7;
    d.cyclic = true;
    d.elements = {0, 1, 2};
    CHECK_FALSE(verify_free(d));
    // {0,1,4} is progression-free over the integers but 1 + 1 = 2*4 (mod 6)
    FreeSet e;
    e.L = 6;
    e.elements = {0, 1, 4};
    CHECK(verify_free(e));
    e.cyclic = true;
    CHECK_FALSE(verify_free(e));
}
