#include <doctest.h>

#include <cmath>
#include <complex>

#include "pdd/complex_triple.hpp"
#include "pdd/gmpll.hpp"
#include "pdd/counting.hpp"
#include "pdd/errors.hpp"
#include "pdd/phase.hpp"
#include "pdd/special_sets.hpp"
#include "pdd/split_prime.hpp"
#include "pdd/triforce.hpp"

using namespace pdd;

TEST_CASE("phase functions carry the primitive coefficient vector") {
    auto p = FourPointPattern::from_xyz(1, 1, 2);
    std::array<mpq_class, 4> g = {mpq_class(1, 8), mpq_class(1, 8), mpq_class(1, 8),
                                  mpq_class(-1, 8)};
    auto f = build_phase_function(p, 499, mpq_class(3, 10), g);
    CHECK(f.terms[0].a == -6);
    CHECK(f.terms[1].a == 15);
    CHECK(f.terms[2].a == -10);
    CHECK(f.terms[3].a == 1);

    auto q = FourPointPattern::from_xyz(1, 1, 1);
    auto f2 = build_phase_function(q, 499, mpq_class(3, 10), g);
    CHECK(f2.terms[0].a == -3);
    CHECK(f2.terms[1].a == 8);
    CHECK(f2.terms[2].a == -6);
    CHECK(f2.terms[3].a == 1);

    CHECK_THROWS_AS(build_phase_function(p, 500, mpq_class(3, 10), g), std::invalid_argument);
    CHECK_THROWS_AS(build_phase_function(p, 29, mpq_class(3, 10), g), std::invalid_argument);
    CHECK_THROWS_AS(build_phase_function(p, 499, mpq_class(2, 3), g), std::invalid_argument);
}

TEST_CASE("phase function range and mean") {
    auto p = FourPointPattern::from_xyz(1, 1, 2);
    std::array<mpq_class, 4> zero = {0, 0, 0, 0};
    auto f0 = build_phase_function(p, 101, mpq_class(3, 10), zero);
    for (double v : f0.values()) CHECK(v == doctest::Approx(0.3).epsilon(1e-12));

    std::array<mpq_class, 4> g = {mpq_class(1, 8), mpq_class(1, 8), mpq_class(1, 8),
                                  mpq_class(-1, 8)};
    for (long long N : {101LL, 499LL}) {
        auto f = build_phase_function(p, N, mpq_class(1, 2), g);
        auto vals = f.values();
        double mean = 0;
        for (double v : vals) {
            CHECK(v >= -1e-12);
            CHECK(v <= 1.0 + 1e-12);
            mean += v;
        }
        mean /= static_cast<double>(N);
        double bound = 4.0 * 0.125 / std::sqrt(static_cast<double>(N));
        CHECK(std::abs(mean - 0.5) <= bound + 1e-12);
    }
}

TEST_CASE("blow-up of a dilate-closed base") {
    FreeSet base;
    base.L = 5;
    base.elements = {1};
    auto g = blowup_construction(base, 2, 5);
    CHECK(g.size() == 4);
    for (long long i = 1; i <= 4; ++i) CHECK(g.contains(i + 1, i + 1));

    FreeSet empty;
    empty.L = 5;
    CHECK(blowup_construction(empty, 2, 5).size() == 0);
    CHECK_THROWS_AS(blowup_construction(base, 2, 6), std::invalid_argument);
}

TEST_CASE("triforce systems") {
    auto sys = build_triforce(7, 2, 2);
    CHECK(sys.lambda.elements == std::vector<long long>{0, 1, 3});
    auto scan = scan_triforce(sys);
    CHECK(scan.triangles == 21);
    CHECK(scan.edge_disjoint);
    CHECK(scan.vertex_degree_ok);
    CHECK(scan.shape_ok);

    auto sys13 = build_triforce(13, 2, 3);
    auto scan13 = scan_triforce(sys13);
    CHECK(scan13.triangles ==
          13 * static_cast<long long>(sys13.lambda.elements.size()));
    CHECK(scan13.edge_disjoint);

    CHECK_THROWS_AS(build_triforce(7, mpq_class(1, 2), mpq_class(1, 2)),
                    std::invalid_argument);
}

TEST_CASE("triforce configuration counts at L = 7") {
    auto sys = build_triforce(7, 2, 2);
    CHECK(triforce_beta_count(sys, 1) == 441);  // L^2 |Lambda|^2
    CHECK(triforce_beta_count(sys, 2) == 63);   // L |Lambda|^2
    CHECK(triforce_beta_count(sys, 3) == 21);   // L |Lambda|
    CHECK_THROWS_AS(triforce_beta_count(sys, 4), std::invalid_argument);
}

TEST_CASE("degenerate samplers: constant one and constant zero") {
    TriforceSystem ones;
    ones.L = 1;
    ones.lambda.L = 1;
    ones.lambda.cyclic = true;
    ones.lambda.elements = {0};
    ones.k1 = 2;
    ones.k2 = 2;
    auto full = sample_mandache_set(ones, 20, 1, false);
    CHECK(full.alpha_S == doctest::Approx(1.0));

    TriforceSystem zeros = ones;
    zeros.lambda.elements = {};
    auto empty = sample_mandache_set(zeros, 20, 1, false);
    CHECK(empty.alpha_S == doctest::Approx(0.0));
}

TEST_CASE("sampled sets concentrate and reproduce by seed") {
    auto sys = build_triforce(7, 2, 2);
    auto s1 = sample_mandache_set(sys, 101, 7, true);
    auto s2 = sample_mandache_set(sys, 101, 7, true);
    CHECK(s1.set.members() == s2.set.members());

    int good_alpha = 0, good_beta = 0;
    const double tol = std::pow(101.0, -1.0 / 3.0);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto s = sample_mandache_set(sys, 101, seed, true);
        if (std::abs(s.alpha_S - s.alpha_target) <= tol) ++good_alpha;
        double worst = 0;
        for (double b : s.beta) worst = std::max(worst, std::abs(b - s.beta_target));
        if (worst <= tol) ++good_beta;
    }
    CHECK(good_alpha >= 4);
    CHECK(good_beta >= 4);

    CHECK_THROWS_AS(sample_mandache_set(sys, 102, 1, false), std::invalid_argument);
}

TEST_CASE("complex triple for the unit weights") {
    auto ct = solve_complex_triple(1, 1, 1, 1);
    const double r3 = std::sqrt(3.0);
    CHECK(std::abs(ct.u - std::complex<double>(1.0, r3)) < 1e-12);
    CHECK(std::abs(ct.v - std::complex<double>(1.0, -r3)) < 1e-12);
    CHECK(std::abs(ct.w - std::complex<double>(-2.0, 0.0)) < 1e-12);
    CHECK(ct.max_residual() < 1e-12);
    CHECK(ct.linear_residual() < 1e-12);
    CHECK(std::abs(ct.im_b_over_a()) > 1e-9);
}

TEST_CASE("weighted-translate identity holds numerically") {
    for (auto [m1, m2, m3, m4] : {std::array<long long, 4>{1, 1, 1, 1}, {2, 3, 1, 5}}) {
        auto ct = solve_complex_triple(m1, m2, m3, m4);
        CHECK(verify_alg_id(ct, 1000, 99) < 1e-9);
    }
    // d = 0 makes all four terms coincide
    auto ct = solve_complex_triple(2, 3, 1, 5);
    auto f = [&](double x, double y) {
        std::complex<double> s = 3.0 * ct.A * x + 2.0 * ct.B * y;
        return s * s / ct.A;
    };
    std::complex<double> lhs = 3.0 * f(5, 7) + 10.0 * f(5, 7) + 6.0 * f(5, 7);
    std::complex<double> rhs = 19.0 * f(5, 7);
    CHECK(std::abs(lhs - rhs) < 1e-9);
}

TEST_CASE("split prime data is frozen by determinism") {
    CHECK_FALSE(is_split_prime(13));
    CHECK_FALSE(is_split_prime(37));
    CHECK(is_split_prime(61));
    CHECK(is_split_prime(73));

    auto d = find_split_prime(13);
    CHECK(d.p == 61);
    CHECK(d.omega12 == 21);
    CHECK(d.s6 == 2);
    CHECK(d.a1 == 45);
    CHECK(d.a2 == 4);
    CHECK(d.a3 == 9);
    CHECK(d.p_values == std::array<long long, 4>{7380, -180, -14580, 7380});
    CHECK(d.residues == std::array<long long, 4>{60, 3, 60, 60});
}

TEST_CASE("the complex constants satisfy the four coefficient relations") {
    auto z = z_constants();
    auto P1 = (z[0] - z[1]) * (z[1] - z[2]) * (z[2] - z[0]);
    auto P2 = z[1] * z[2] * (z[1] - z[2]);
    auto P3 = z[2] * z[0] * (z[2] - z[0]);
    auto P4 = z[0] * z[1] * (z[0] - z[1]);
    CHECK(std::abs(P1 - std::complex<double>(-1, 0)) < 1e-12);
    CHECK(std::abs(P2 - std::complex<double>(3, 0)) < 1e-12);
    CHECK(std::abs(P3 - std::complex<double>(-1, 0)) < 1e-12);
    CHECK(std::abs(P4 - std::complex<double>(-1, 0)) < 1e-12);
}

TEST_CASE("split prime density counts are exact") {
    auto d = split_prime_density(10000);
    CHECK(d.primes == 1229);
    CHECK(d.split == 95);
}

TEST_CASE("one-dimensional special set membership is exact") {
    auto sp = find_split_prime(13);
    FreeSet lam;
    lam.L = 5;
    lam.elements = {0};
    auto params = make_transfer_params_1d(sp, 5, lam, mpq_class(0));
    CHECK(params.theta1 == 29520);
    CHECK(params.theta2 == 14760);
    CHECK(params.theta3 == 1);
    auto g = build_1d_special_set(sp, 97, params);
    CHECK(g.size() == 97);  // psi = 0 puts every x in the k = 0 interval

    // exact endpoint behavior: value k/(T1 L) is in, value + width is out
    mpq_class left = mpq_class(0, 1);
    CHECK(box_member_1d(left, params));
    mpq_class width = mpq_class(1) / (to_mpq(params.theta1) * to_mpq(params.theta1) *
                                      to_mpq(params.L));
    CHECK_FALSE(box_member_1d(width, params));
}

TEST_CASE("two-dimensional nonconvex set construction") {
    auto ct = solve_complex_triple(1, 1, 1, 1);
    FreeSet lam;
    lam.L = 4;
    lam.elements = {0, 1};
    auto params = make_transfer_params_2d(ct, 4, lam, mpq_class(0));
    auto g = build_2d_nonconvex_set(ct, 30, params);
    CHECK(g.size() == 30 * 30);  // psi = 0: everything lands in the (0,0) box

    FreeSet none;
    none.L = 4;
    auto p2 = make_transfer_params_2d(ct, 4, none, mpq_class(377, 1021));
    CHECK(build_2d_nonconvex_set(ct, 30, p2).size() == 0);
}
