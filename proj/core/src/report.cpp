#include "pdd/report.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace pdd {

using nlohmann::json;

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string digest_hex(const std::string& bytes) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return buf;
}

namespace {

void strip_volatile(json& j) {
    if (j.is_object()) {
        j.erase("timing");
        j.erase("seconds");
        for (auto& [k, v] : j.items()) strip_volatile(v);
    } else if (j.is_array()) {
        for (auto& v : j) strip_volatile(v);
    }
}

json sig_json(const Signature& s) { return json::array({s.idx[0], s.idx[1], s.idx[2], s.idx[3]}); }

json cert_json(const Certificate& c) {
    json j;
    j["claim_id"] = c.claim_id;
    j["status"] = to_string(c.status);
    j["route"] = c.route;
    j["witnesses"] = c.witnesses;
    j["parameters"] = c.parameters;
    j["timing"] = c.seconds;
    return j;
}

}  // namespace

std::string json_digest(const std::string& json_text) {
    json j = json::parse(json_text);
    strip_volatile(j);
    return digest_hex(j.dump());
}

std::string census_json(const CensusSummary& s) {
    json j;
    j["classes"] = {{"BothZero", s.class_counts[0]},
                    {"P1ZeroOnly", s.class_counts[1]},
                    {"P2ZeroOnly", s.class_counts[2]},
                    {"NeitherZero", s.class_counts[3]}};
    j["both_zero"] = json::array();
    for (const auto& sig : s.both_zero) j["both_zero"].push_back(sig_json(sig));
    j["i0_count"] = s.i0.size();
    j["i0"] = json::array();
    for (const auto& sig : s.i0) j["i0"].push_back(sig_json(sig));
    return j.dump(2);
}

std::string certificates_json(const std::vector<Certificate>& certs) {
    json j = json::array();
    for (const auto& c : certs) j.push_back(cert_json(c));
    return j.dump(2);
}

std::string atlas_json(const AtlasSummary& s) {
    json j;
    j["bound"] = s.bound;
    j["triples"] = s.triples;
    j["mismatches"] = s.mismatches;
    json cases = json::object();
    for (const auto& [c, n] : s.case_counts) cases[to_string(c)] = n;
    j["cases"] = cases;
    json bad = json::array();
    for (const auto& p : s.mismatch_points) bad.push_back({p[0], p[1], p[2]});
    j["mismatch_points"] = bad;
    return j.dump(2);
}

std::string curve_report_json(const CurveSearchReport& r) {
    json j;
    j["curve"] = r.curve.str();
    j["height"] = r.height;
    j["rigor"] = r.rigor;
    json pts = json::array();
    for (const auto& p : r.points) pts.push_back({p.x, p.y, p.z});
    j["points"] = pts;
    json pos = json::array();
    for (const auto& p : r.positive_points) pos.push_back({p.x, p.y, p.z});
    j["positive_points"] = pos;
    json loc = json::array();
    for (const auto& l : r.local)
        loc.push_back({{"p", l.p}, {"has_nonzero_point", l.has_nonzero_point}});
    j["local_solubility"] = loc;
    return j.dump(2);
}

std::string profile_json(const DifferenceProfile& p, const std::string& semantics) {
    json j;
    j["N"] = p.N;
    j["alpha"] = p.density;
    j["semantics"] = semantics;
    j["max_d"] = p.max_d;
    j["max_value"] = p.max_value;
    j["entries"] = p.per_d.size();
    return j.dump(2);
}

std::string profile_csv(const DifferenceProfile& p) {
    std::ostringstream os;
    os << "d,value\n";
    os.precision(17);
    for (const auto& [d, v] : p.per_d) os << d << "," << v << "\n";
    return os.str();
}

std::string phase_function_json(const PhaseFunction& f) {
    json j;
    j["N"] = f.N;
    j["alpha"] = f.alpha.get_str();
    json terms = json::array();
    for (const auto& t : f.terms) {
        mpq_class g = t.gamma;
        g.canonicalize();
        terms.push_back({{"a", t.a},
                         {"gamma_num", mpz_class(g.get_num()).get_si()},
                         {"gamma_den", mpz_class(g.get_den()).get_si()}});
    }
    j["terms"] = terms;
    return j.dump(2);
}

std::string split_prime_json(const SplitPrimeData& d) {
    json j;
    j["p"] = d.p;
    j["omega12"] = d.omega12;
    j["s6"] = d.s6;
    j["a"] = {d.a1, d.a2, d.a3};
    j["P_values"] = {d.p_values[0], d.p_values[1], d.p_values[2], d.p_values[3]};
    j["residues"] = {d.residues[0], d.residues[1], d.residues[2], d.residues[3]};
    return j.dump(2);
}

std::string split_density_json(const SplitDensity& d) {
    json j;
    j["limit"] = d.limit;
    j["primes"] = d.primes;
    j["split"] = d.split;
    j["density"] = d.density();
    return j.dump(2);
}

std::string transfer_report_json(const TransferReport& r, const std::string& variant) {
    json j;
    j["variant"] = variant;
    j["pairs_scanned"] = r.pairs_scanned;
    j["events"] = r.events;
    j["violations"] = r.violations;
    j["psi_mode"] = "rational-substitute";
    return j.dump(2);
}

std::string gamma_choice_json(const DegeneracyReport& rep, const GammaChoice& gc) {
    json j;
    j["case"] = to_string(rep.label);
    json extra = json::array();
    for (const auto& s : rep.extra) extra.push_back(sig_json(s));
    j["extra_signatures"] = extra;
    json g = json::array();
    for (const auto& v : gc.gamma) {
        mpq_class q = v;
        q.canonicalize();
        g.push_back(q.get_str());
    }
    j["gamma"] = g;
    mpq_class b = gc.certified_bound;
    b.canonicalize();
    j["certified_bound"] = b.get_str();
    j["certified_bound_double"] = b.get_d();
    j["refined"] = gc.refined;
    return j.dump(2);
}

std::string RunManifest::to_json() const {
    json j;
    j["command"] = command;
    j["parameters"] = parameters;
    j["seed"] = seed;
    j["tool_version"] = tool_version;
    j["timings"] = timings;
    json outs = json::array();
    for (const auto& [path, dg] : outputs) outs.push_back({{"path", path}, {"digest", dg}});
    j["outputs"] = outs;
    j["digest_policy"] = "fnv1a64 over canonical JSON with timing fields removed; raw bytes otherwise";
    return j.dump(2);
}

} // namespace pdd
