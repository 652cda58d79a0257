#ifndef PDD_REPORT_HPP
#define PDD_REPORT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pdd/atlas.hpp"
#include "pdd/claims.hpp"
#include "pdd/counting.hpp"
#include "pdd/phase.hpp"
#include "pdd/split_prime.hpp"
#include "pdd/transfer.hpp"

namespace pdd {

/// FNV-1a 64-bit digest, printed as 16 hex chars. Used for output
/// fingerprints in run manifests.
std::uint64_t fnv1a64(const std::string& bytes);
std::string digest_hex(const std::string& bytes);

/// Digest of a JSON report with volatile fields removed: any object key
/// named "timing" or "seconds" is dropped before hashing, so reruns with
/// identical inputs produce identical digests.
std::string json_digest(const std::string& json_text);

// JSON writers (two-space indent, keys sorted by nlohmann's object order).
std::string census_json(const CensusSummary& s);
std::string certificates_json(const std::vector<Certificate>& certs);
std::string atlas_json(const AtlasSummary& s);
std::string curve_report_json(const CurveSearchReport& r);
std::string profile_json(const DifferenceProfile& p, const std::string& semantics);
std::string profile_csv(const DifferenceProfile& p);
std::string phase_function_json(const PhaseFunction& f);
std::string split_prime_json(const SplitPrimeData& d);
std::string split_density_json(const SplitDensity& d);
std::string transfer_report_json(const TransferReport& r, const std::string& variant);
std::string gamma_choice_json(const DegeneracyReport& rep, const GammaChoice& gc);

struct RunManifest {
    std::string command;
    std::map<std::string, std::string> parameters;
    std::uint64_t seed = 0;
    std::string tool_version;
    std::map<std::string, double> timings;                // per phase, seconds
    std::vector<std::pair<std::string, std::string>> outputs;  // path, digest

    std::string to_json() const;
};

} // namespace pdd

#endif
