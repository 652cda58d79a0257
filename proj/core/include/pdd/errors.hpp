#ifndef PDD_ERRORS_HPP
#define PDD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pdd {

// Build-stopping defects: a paper claim failed to certify. These are never
// caught internally; reaching one means the artifact disagrees with the paper.
struct UnverifiableSignature : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ExtraSolutionFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BoundNotMet : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CommonZeroFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Recoverable signals.
struct TooLargeForExhaustive : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InfeasibleBase : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ResidualTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SearchExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace pdd

#endif
