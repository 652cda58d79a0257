#ifndef PDD_CLAIMS_HPP
#define PDD_CLAIMS_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "pdd/intpoly.hpp"
#include "pdd/signatures.hpp"

namespace pdd {

/// One verification certificate, serialized per claim into the JSON bundle
/// as {claim_id, status, witnesses, parameters, timing}.
struct Certificate {
    std::string claim_id;
    enum class Status { Verified, Bounded, Failed };
    Status status = Status::Failed;
    std::string route;   // which certificate mechanism fired
    std::vector<std::string> witnesses;
    std::map<std::string, std::string> parameters;
    double seconds = 0.0;

    bool ok() const { return status != Status::Failed; }
};

std::string to_string(Certificate::Status s);

/// Census-level summary: class counts and the sign-test set I0.
struct CensusSummary {
    std::array<std::size_t, 4> class_counts{};  // indexed by SigClass
    std::vector<Signature> both_zero;
    std::vector<Signature> i0;
};

/// Signatures whose five test polynomials
///   f1 = (2X+Y+Z)^4 p1, f2 = (2X+Y+Z)^4 (p2/2),
///   f3 = (X+Y)f1 - f2, f4 = (2X+Y+Z)f1 - f2, f5 = X f1 - f2
/// have no member that is nonzero with all coefficients of one sign. Only
/// such signatures can have a nonempty pattern set among the NeitherZero
/// class; there are exactly 122 of them.
std::vector<Signature> compute_i0(const SignatureEngine& eng);

CensusSummary census_summary(const SignatureEngine& eng);

/// Certificate that Q(I) matches the table entry for a P1ZeroOnly or
/// P2ZeroOnly signature: either the listed locus divides the nonzero p with
/// a single-signed cofactor, or (2X+Y+Z)^2 p is single-signed, or every
/// sign-mixed factor of p lies in the known factor list. Throws
/// UnverifiableSignature when none applies.
Certificate certify_a4_a5(const SignatureRecord& rec);

/// Certificate for a NeitherZero signature: a nonzero single-signed f_i for
/// non-I0 members (Empty), exact ray substitution or exact division by the
/// gcd factor for the twelve exceptional I0 members, and bounded search over
/// 1 <= x,y,z <= bound confirming no solutions outside the stated set.
/// Throws ExtraSolutionFound if the search contradicts the table.
Certificate certify_a6_a7(const SignatureRecord& rec,
                          const std::vector<Signature>& i0, long long bound);

/// Pairwise disjointness of the distinct locus polynomials over
/// 1 <= x,y,z <= bound. Throws CommonZeroFound on a violation.
std::vector<Certificate> verify_a8(long long bound);

/// The six curves of the high-degree lemma, over (X,Y,Z).
const std::array<IntPoly, 6>& high_deg_curves();

struct ProjectivePoint {
    long long x, y, z;
};

struct CurveSearchReport {
    IntPoly curve;
    long long height = 0;
    std::vector<ProjectivePoint> points;            // all projective zeros found
    std::vector<ProjectivePoint> positive_points;   // the ones with x,y,z > 0
    struct LocalCheck {
        long long p;
        bool has_nonzero_point;  // nontrivial point with all coordinates != 0 mod p
    };
    std::vector<LocalCheck> local;
    std::string rigor = "bounded";
};

/// Enumerates projective rational points (x:y:z), coprime coordinates of
/// absolute value <= height (first nonzero coordinate positive), on a
/// homogeneous curve; reports positive-coordinate solutions and, per prime,
/// whether nontrivial all-nonzero points exist mod p.
CurveSearchReport curve_search(const IntPoly& curve, long long height,
                               const std::vector<long long>& primes);

} // namespace pdd

#endif
