#ifndef PDD_ACCEPTANCE_HPP
#define PDD_ACCEPTANCE_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace pdd {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct AcceptanceOptions {
    bool full = true;  // false: reduced parameters for fast iteration, advisory only
};

/// Runs the acceptance criteria, printing one PASS/FAIL line per criterion
/// to `log` as results arrive. Criterion failures are reported, not thrown.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts, std::ostream& log);

std::string acceptance_json(const std::vector<CriterionResult>& results);

} // namespace pdd

#endif
