#include <doctest.h>

#include <cmath>
#include <set>

#include "pdd/atlas.hpp"
#include "pdd/counting.hpp"
#include "pdd/eqfree.hpp"
#include "pdd/rng.hpp"
#include "pdd/special_sets.hpp"

using namespace pdd;

namespace {

GridSet full_line(long long N) {
    GridSet g(1, N);
    for (long long x = 1; x <= N; ++x) g.insert(x);
    return g;
}

}  // namespace

TEST_CASE("translate counting basics") {
    auto A = full_line(10);
    Pattern P = pattern_1d({0, 1, 2, 5});
    CHECK(count_translates(A, P, 1, false) == 5);  // x = 1..5
    CHECK(count_translates(A, P, 1, true) == 10);
    CHECK(count_translates(GridSet(1, 10), P, 1, false) == 0);
    CHECK_THROWS_AS(count_translates(A, P, 0, false), std::invalid_argument);
    CHECK_THROWS_AS(count_translates(A, Pattern{}, 1, false), std::invalid_argument);
}

TEST_CASE("profile of the full interval peaks at d = 1") {
    auto A = full_line(12);
    Pattern P = pattern_1d({0, 1, 2, 5});
    auto prof = difference_profile(A, P, false);
    CHECK(prof.max_d == 1);  // +-1 tie broken toward the positive side
    CHECK(prof.max_value == 7.0);
    // entries cover +-d up to the spread bound
    std::set<long long> ds;
    for (auto& [d, v] : prof.per_d) ds.insert(d);
    CHECK(ds.count(-1) == 1);
    CHECK(ds.count(2) == 1);
    CHECK(ds.count(0) == 0);
}

TEST_CASE("reflection symmetry of boxed counts") {
    Xoshiro256 rng(3);
    GridSet A(1, 40);
    for (long long x = 1; x <= 40; ++x)
        if (rng.uniform() < 0.5) A.insert(x);
    Pattern P = pattern_1d({0, 2, 3, 7});
    Pattern Pr;
    for (const auto& p : P) Pr.push_back({-p.x, 0});
    for (long long d = 1; d <= 5; ++d)
        CHECK(count_translates(A, P, d, false) == count_translates(A, Pr, -d, false));
}

TEST_CASE("blow-up sets have a flat wraparound profile") {
    const long long N = 31;
    FreeSet base = behrend_3apfree(16);
    base.L = N;
    base.cyclic = true;
    auto A = blowup_construction(base, 2, N);
    Pattern P = {{0, 0}, {1, 0}, {2, 0}};
    auto prof = difference_profile(A, P, true);
    for (const auto& [d, v] : prof.per_d) CHECK(v == prof.max_value);
    CHECK(prof.max_value == 0.0);  // the base avoids the pattern outright

    // a base full of progressions still yields a flat (now positive) profile:
    // each dilate of the base appears once, so d-counts do not depend on d
    FreeSet dense;
    dense.L = N;
    dense.cyclic = true;
    for (long long v = 0; v < 10; ++v) dense.elements.push_back(v);
    auto B = blowup_construction(dense, 2, N);
    auto prof2 = difference_profile(B, P, true);
    CHECK(prof2.max_value > 0.0);
    for (const auto& [d, v] : prof2.per_d) CHECK(v == prof2.max_value);
}

TEST_CASE("phase expectation profile: zero weights give the constant alpha^4") {
    auto pat = FourPointPattern::from_xyz(1, 1, 2);
    std::array<mpq_class, 4> zero = {0, 0, 0, 0};
    auto f = build_phase_function(pat, 101, mpq_class(3, 10), zero);
    auto prof = phase_expectation_profile(f, pat);
    const double a4 = std::pow(0.3, 4);
    for (const auto& [d, v] : prof.per_d) CHECK(v == doctest::Approx(a4).epsilon(1e-10));
}

TEST_CASE("measured profile tracks the degenerate-term prediction") {
    const long long N = 499;
    const mpq_class alpha(3, 10);
    for (auto [x, y, z] : {std::array<long long, 3>{1, 1, 2}, {1, 1, 1}, {1, 3, 1}}) {
        auto pat = FourPointPattern::from_xyz(x, y, z);
        auto rep = degeneracy_set(pat);
        auto gc = choose_gammas(rep);
        auto f = build_phase_function(pat, N, alpha, gc.gamma);
        auto prof = phase_expectation_profile(f, pat);
        double tol = 10.0 / std::sqrt(static_cast<double>(N));
        for (const auto& [d, v] : prof.per_d) {
            double pred = predict_phase_expectation(rep, gc.gamma, alpha, d, N);
            CHECK(std::abs(v - pred) <= tol);
        }
    }
}

TEST_CASE("fifth-case prediction is constant in d") {
    auto pat = FourPointPattern::from_xyz(1, 3, 1);
    auto rep = degeneracy_set(pat);
    auto gc = choose_gammas(rep);
    const mpq_class alpha(3, 10);
    mpq_class s = gc.gamma[0] + gc.gamma[2];
    mpq_class bound = 1 + 2 * s * s * gc.gamma[1] * gc.gamma[3];
    double want = std::pow(0.3, 4) * bound.get_d();
    for (long long d : {1LL, 2LL, 17LL, 101LL})
        CHECK(predict_phase_expectation(rep, gc.gamma, alpha, d, 499) ==
              doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("complete quadratic sums have modulus exactly N^(-1/2)") {
    double m = gauss_sum_check(101, 1, 0, 1);
    CHECK(m == doctest::Approx(1.0 / std::sqrt(101.0)).epsilon(1e-10));
    CHECK(gauss_sum_check(2003, 5, 20, 7) <= 1.0 / std::sqrt(2003.0) + 1e-12);
    CHECK_THROWS_AS(gauss_sum_check(101, 0, 5, 1), std::invalid_argument);
    CHECK_THROWS_AS(gauss_sum_check(101, 202, 5, 1), std::invalid_argument);
}

TEST_CASE("affine maps: identity, swap, shear") {
    Xoshiro256 rng(11);
    GridSet A(2, 20);
    for (long long x = 1; x <= 20; ++x)
        for (long long y = 1; y <= 20; ++y)
            if (rng.uniform() < 0.4) A.insert(x, y);

    AffineMap id;
    id.r = 2;
    auto img = apply_affine(A, id, 20);
    CHECK(img.retained_fraction == doctest::Approx(1.0));
    CHECK(img.set.members() == A.members());

    AffineMap swap;
    swap.r = 2;
    swap.mat = {{{0, 1}, {1, 0}}};
    auto sw = apply_affine(A, swap, 20);
    CHECK(sw.retained_fraction == doctest::Approx(1.0));
    Pattern P = {{0, 0}, {1, 0}, {0, 2}};
    Pattern Psw = {{0, 0}, {0, 1}, {2, 0}};
    for (long long d = 1; d <= 4; ++d)
        CHECK(count_translates(A, P, d, false) == count_translates(sw.set, Psw, d, false));

    AffineMap shear;  // (x, y) -> (x + y, y)
    shear.r = 2;
    shear.mat = {{{1, 1}, {0, 1}}};
    auto sh = apply_affine(A, shear, 40);
    CHECK(sh.retained_fraction == doctest::Approx(1.0));
    Pattern Psh = {{0, 0}, {1, 0}, {2, 2}};
    for (long long d = 1; d <= 4; ++d)
        CHECK(count_translates(A, P, d, false) == count_translates(sh.set, Psh, d, false));

    AffineMap sing;
    sing.r = 2;
    sing.mat = {{{1, 1}, {1, 1}}};
    CHECK_THROWS_AS(apply_affine(A, sing, 20), std::invalid_argument);
}
