#include <doctest.h>

#include "pdd/atlas.hpp"
#include "pdd/errors.hpp"

using namespace pdd;

TEST_CASE("degeneracy sets of the worked patterns") {
    auto rep = degeneracy_set(FourPointPattern::from_xyz(1, 1, 2));
    CHECK(rep.label == DegCase::SOnly);
    CHECK(rep.extra.empty());
    CHECK(rep.p3_values.size() == 3);  // S survives everywhere
    CHECK(rep.matches_table);

    auto rep111 = degeneracy_set(FourPointPattern::from_xyz(1, 1, 1));
    CHECK(rep111.label == DegCase::Ray111);
    CHECK(rep111.extra.size() == 6);
    CHECK(rep111.matches_table);
    // primitive-scaled d^2 coefficients of the surviving terms: +-6, +-24, +-30
    std::vector<long long> p3s;
    for (const auto& I : rep111.extra) p3s.push_back(rep111.p3_values.at(I));
    std::sort(p3s.begin(), p3s.end());
    CHECK(p3s == std::vector<long long>{-30, -24, -6, 6, 24, 30});

    auto rep131 = degeneracy_set(FourPointPattern::from_xyz(1, 3, 1));
    CHECK(rep131.label == DegCase::CurveTwoX2XzYz);
    CHECK(rep131.extra.size() == 6);
    CHECK(rep131.matches_table);
    for (const auto& I : rep131.extra) CHECK(rep131.p3_values.at(I) == 0);
}

TEST_CASE("case matching prefers rays over the curves through them") {
    CHECK(match_case(1, 1, 1) == DegCase::Ray111);     // lies on x^2 - yz too
    CHECK(match_case(2, 2, 2) == DegCase::Ray111);
    CHECK(match_case(2, 6, 4) == DegCase::Ray132);
    CHECK(match_case(3, 12, 12) == DegCase::Ray144);
    CHECK(match_case(4, 2, 2) == DegCase::Ray211);
    CHECK(match_case(1, 3, 1) == DegCase::CurveTwoX2XzYz);
    CHECK(match_case(2, 4, 1) == DegCase::CurveX2Yz);  // 4 = 4*1, off the diagonal ray
    CHECK(match_case(1, 1, 2) == DegCase::SOnly);
}

TEST_CASE("degeneracy sets are dilation invariant") {
    for (auto [x, y, z] : {std::array<long long, 3>{1, 1, 1}, {1, 3, 2}, {1, 3, 1}, {1, 1, 2}}) {
        auto base = degeneracy_set(FourPointPattern::from_xyz(x, y, z));
        for (long long l = 2; l <= 5; ++l) {
            auto scaled = degeneracy_set(FourPointPattern::from_xyz(l * x, l * y, l * z));
            CHECK(scaled.extra == base.extra);
            CHECK(scaled.label == base.label);
        }
    }
}

TEST_CASE("gamma table with certified bounds") {
    auto gc111 = choose_gammas(degeneracy_set(FourPointPattern::from_xyz(1, 1, 1)));
    CHECK(gc111.gamma == std::array<mpq_class, 4>{mpq_class(-1, 512), mpq_class(1, 8),
                                                  mpq_class(1, 8), mpq_class(1, 8)});
    // 1 + 2 g1 g2 g3 g4 + 4 g1^2 |g3| + 2 g1^2 g3^2, exactly
    mpq_class g1(-1, 512), g3(1, 8);
    mpq_class want = 1 + 2 * g1 * mpq_class(1, 8) * mpq_class(1, 8) * mpq_class(1, 8) +
                     4 * g1 * g1 * mpq_class(1, 8) + 2 * g1 * g1 * g3 * g3;
    CHECK(gc111.certified_bound == want);
    CHECK(gc111.certified_bound < 1);
    CHECK_FALSE(gc111.refined);

    auto gc131 = choose_gammas(degeneracy_set(FourPointPattern::from_xyz(1, 3, 1)));
    CHECK(gc131.refined);
    CHECK(gc131.gamma[1] == mpq_class(-1, 8));
    CHECK(gc131.certified_bound == mpq_class(511, 512));  // 1 + 2 (1/4)^2 (-1/64)

    auto gc112 = choose_gammas(degeneracy_set(FourPointPattern::from_xyz(1, 1, 2)));
    CHECK(gc112.gamma == std::array<mpq_class, 4>{mpq_class(1, 8), mpq_class(1, 8),
                                                  mpq_class(1, 8), mpq_class(-1, 8)});
    CHECK(gc112.certified_bound == mpq_class(2047, 2048));

    for (auto [x, y, z] : {std::array<long long, 3>{1, 3, 2}, {1, 4, 4}, {2, 1, 1}, {2, 2, 1}}) {
        auto gc = choose_gammas(degeneracy_set(FourPointPattern::from_xyz(x, y, z)));
        CHECK(gc.certified_bound < 1);
        for (const auto& g : gc.gamma) CHECK(abs(g) <= mpq_class(1, 8));
    }
}

TEST_CASE("atlas sweep at a small bound has no mismatches") {
    auto s = atlas_sweep(12);
    CHECK(s.mismatches == 0);
    CHECK(s.triples == 12 * 12 * 12);
    CHECK(s.case_counts.at(DegCase::Ray111) == 12);
    CHECK(s.case_counts.at(DegCase::Ray132) == 4);
    CHECK(s.case_counts.at(DegCase::Ray144) == 3);
    CHECK(s.case_counts.at(DegCase::Ray211) == 6);
    CHECK_THROWS_AS(atlas_sweep(2), std::invalid_argument);
}
