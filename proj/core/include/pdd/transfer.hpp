#ifndef PDD_TRANSFER_HPP
#define PDD_TRANSFER_HPP

#include "pdd/complex_triple.hpp"
#include "pdd/special_sets.hpp"
#include "pdd/split_prime.hpp"

namespace pdd {

struct TransferReport {
    long long pairs_scanned = 0;   // (n,d) or (n1,n2,d) tuples visited
    long long events = 0;          // tuples with all four values inside B
    long long violations = 0;      // events breaking the small-norm conclusion
};

/// Scans every (n, d) with n, n+a1 d, n+a2 d, n+a3 d in [N]. For tuples
/// whose four values psi (.)^2 all fall in B (exact rational membership),
/// checks || theta2 psi n d ||_{R/Z} < theta3 / L exactly. Returns zero
/// violations whenever the lemma's preconditions hold.
TransferReport transfer_check_1d(const TransferParams& params, const SplitPrimeData& data,
                                 long long N);

/// Scans (n1, n2) in [N]^2 and 0 < |d| <= d_max over the four points
/// (n1,n2), (n1+m1 d, n2), (n1, n2+m2 d), (n1-m3 d, n2-m4 d); membership in
/// B via the (A,B) frame. Violations are conclusion failures beyond a 1e-9
/// margin. d_max = 0 means d_max = N.
TransferReport transfer_check_2d(const TransferParams& params, const ComplexTriple& triple,
                                 long long N, long long d_max = 0);

} // namespace pdd

#endif
