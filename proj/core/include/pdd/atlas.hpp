#ifndef PDD_ATLAS_HPP
#define PDD_ATLAS_HPP

#include <gmpxx.h>

#include <array>
#include <map>
#include <string>
#include <vector>

#include "pdd/pattern.hpp"
#include "pdd/signatures.hpp"

namespace pdd {

/// The ten cases of the degeneracy classification. Rays are matched before
/// curves: (1,1,1) lies on X^2 - YZ but belongs to the ray case.
enum class DegCase {
    Ray111 = 1,
    Ray132,
    Ray144,
    Ray211,
    CurveTwoX2XzYz,   // 2x^2 + xz - yz = 0
    CurveX2Yz,        // x^2 - yz = 0, off the (1,1,1) ray
    CurveX2XzY2,      // x^2 + xz - y^2 = 0
    CubicOne,
    CubicTwo,
    SOnly,            // no degeneracies beyond S
};

std::string to_string(DegCase c);

/// Extra degenerate signatures expected for a case (beyond S), sorted.
const std::vector<Signature>& expected_extra(DegCase c);

/// Case label determined from (x,y,z) alone (ray tests first, then loci).
DegCase match_case(long long x, long long y, long long z);

struct DegeneracyReport {
    FourPointPattern pattern;
    DegCase label = DegCase::SOnly;
    std::vector<Signature> extra;                 // degenerate beyond S, sorted
    std::map<Signature, long long> p3_values;     // p3/a_content at (x,y,z), extra + S
    bool matches_table = false;                   // extra == expected_extra(label)
};

/// Evaluates p1, p2 at the pattern's (x,y,z) for all 6561 signatures and
/// reports every vanishing one, the matched case label, and primitive-scaled
/// p3 values (the d^2 phase coefficients of the surviving terms).
DegeneracyReport degeneracy_set(const FourPointPattern& pattern);

struct GammaChoice {
    std::array<mpq_class, 4> gamma;
    /// The certified quantity: 1 + 2 g1 g2 g3 g4 + sum |gamma_I| over the
    /// extra signatures, or 1 + 2 (g1+g3)^2 g2 g4 in the refined fifth case.
    mpq_class certified_bound;
    bool refined = false;
};

/// The proof's case table of gamma parameters, with the strict inequality
/// certified in exact rational arithmetic. Throws BoundNotMet if the
/// certified quantity reaches 1.
GammaChoice choose_gammas(const DegeneracyReport& report);

/// gamma_I = prod_j gamma_{|i_j|} with gamma_0 = 1.
mpq_class gamma_product(const std::array<mpq_class, 4>& gamma, const Signature& I);

struct AtlasSummary {
    long long bound = 0;
    long long triples = 0;
    long long mismatches = 0;
    std::map<DegCase, long long> case_counts;
    std::vector<std::array<long long, 3>> mismatch_points;
};

/// Sweeps all 1 <= x,y,z <= bound, checking the computed degeneracy set and
/// the fifth case's p3 = 0 statement against the case table.
AtlasSummary atlas_sweep(long long bound);

} // namespace pdd

#endif
