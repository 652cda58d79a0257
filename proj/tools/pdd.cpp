// pdd: batch front door for the census, atlas, constructions, counting
// profiles and the acceptance suite. Every command writes a RunManifest;
// identical (command, parameters, seed, version) reproduce identical output
// digests.
#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "pdd/acceptance.hpp"
#include "pdd/atlas.hpp"
#include "pdd/claims.hpp"
#include "pdd/counting.hpp"
#include "pdd/eqfree.hpp"
#include "pdd/errors.hpp"
#include "pdd/gmpll.hpp"
#include "pdd/gridset.hpp"
#include "pdd/report.hpp"
#include "pdd/special_sets.hpp"
#include "pdd/split_prime.hpp"
#include "pdd/transfer.hpp"
#include "pdd/triforce.hpp"

namespace {

constexpr const char* kVersion = "pdd 0.1.0";

using Clock = std::chrono::steady_clock;

struct OutputSink {
    std::optional<std::string> dir;
    std::string format = "json";
    pdd::RunManifest manifest;
    Clock::time_point started = Clock::now();

    void emit(const std::string& name, const std::string& content, bool is_json) {
        std::string digest = is_json ? pdd::json_digest(content) : pdd::digest_hex(content);
        if (dir) {
            std::filesystem::create_directories(*dir);
            std::string path = *dir + "/" + name;
            std::ofstream os(path);
            if (!os) throw std::runtime_error("cannot write " + path);
            os << content;
            if (content.empty() || content.back() != '\n') os << "\n";
            manifest.outputs.push_back({path, digest});
        } else {
            std::cout << "== " << name << " ==\n" << content << "\n";
            manifest.outputs.push_back({name, digest});
        }
    }

    void finish(const std::string& command) {
        manifest.command = command;
        manifest.tool_version = kVersion;
        manifest.timings["total"] = std::chrono::duration<double>(Clock::now() - started).count();
        std::string j = manifest.to_json();
        if (dir) {
            std::ofstream os(*dir + "/manifest.json");
            os << j << "\n";
        } else {
            std::cout << "== manifest ==\n" << j << "\n";
        }
    }
};

pdd::FourPointPattern parse_line_pattern(const std::string& s) {
    std::string body = s;
    bool xyz = false;
    if (body.rfind("xyz:", 0) == 0) {
        xyz = true;
        body = body.substr(4);
    }
    std::vector<long long> vals;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) vals.push_back(std::stoll(tok));
    if (xyz) {
        if (vals.size() != 3)
            throw CLI::ValidationError("--pattern", "xyz form needs three integers");
        return pdd::FourPointPattern::from_xyz(vals[0], vals[1], vals[2]);
    }
    if (vals.size() != 4)
        throw CLI::ValidationError("--pattern", "point form needs four integers");
    return pdd::FourPointPattern::from_points({vals[0], vals[1], vals[2], vals[3]});
}

// "0,1,2,5" (1-D) or "0,0;1,0;0,1;2,2" (2-D)
pdd::Pattern parse_points(const std::string& s, int& r) {
    pdd::Pattern out;
    if (s.find(';') == std::string::npos) {
        r = 1;
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) out.push_back({std::stoll(tok), 0});
        return out;
    }
    r = 2;
    std::stringstream ss(s);
    std::string pt;
    while (std::getline(ss, pt, ';')) {
        auto comma = pt.find(',');
        if (comma == std::string::npos)
            throw CLI::ValidationError("--pattern", "2-D points need x,y pairs");
        out.push_back({std::stoll(pt.substr(0, comma)), std::stoll(pt.substr(comma + 1))});
    }
    return out;
}

mpq_class parse_rational(const std::string& s) {
    mpq_class q(s);
    q.canonicalize();
    return q;
}

std::array<mpq_class, 4> parse_gammas(const std::string& s) {
    std::array<mpq_class, 4> g;
    std::stringstream ss(s);
    std::string tok;
    int i = 0;
    while (std::getline(ss, tok, ',') && i < 4) g[i++] = parse_rational(tok);
    if (i != 4) throw CLI::ValidationError("--gammas", "need four rationals");
    return g;
}

std::vector<long long> parse_ll_list(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoll(tok));
    return out;
}

std::string pattern_echo(const pdd::FourPointPattern& p) {
    std::ostringstream os;
    os << "pattern {0," << p.k1 << "," << p.k2 << "," << p.k3 << "} = xyz(" << p.x << ","
       << p.y << "," << p.z << ")";
    return os.str();
}

pdd::GridSet load_grid(const std::string& path) {
    auto loaded = pdd::load_set_file(path);
    if (auto* g = std::get_if<pdd::GridSet>(&loaded)) return *g;
    // realize a free set on [L] for counting purposes
    auto& f = std::get<pdd::FreeSet>(loaded);
    pdd::GridSet g(1, f.L);
    for (long long v : f.elements) g.insert(v + 1);
    return g;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"popular-difference constructions and counting oracles"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough();  // global flags (--out, --format, --seed) after subcommands

    std::optional<std::string> out_dir;
    std::string format = "json";
    std::uint64_t seed = 0;
    app.add_option("--out", out_dir, "output directory (default: print to stdout)");
    app.add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", seed, "seed for randomized phases (recorded in the manifest)");

    // census
    auto* census = app.add_subcommand("census", "classify all 6561 signatures and certify the claims");
    long long census_bound = 40;
    census->add_option("--bound", census_bound, "bounded-search box for the pattern sets");

    // atlas
    auto* atlas = app.add_subcommand("atlas", "degeneracy atlas over 1 <= x,y,z <= bound");
    long long atlas_bound = 40;
    atlas->add_option("--bound", atlas_bound, "sweep bound")->required();

    // curves
    auto* curves = app.add_subcommand("curves", "bounded-height search on the six curves");
    long long height = 200;
    std::string primes_arg = "5,7,11,13";
    curves->add_option("--height", height, "projective height bound");
    curves->add_option("--primes", primes_arg, "local solubility primes, comma separated");

    // construct
    auto* construct = app.add_subcommand("construct", "build the extremal objects");
    construct->require_subcommand(1);
    auto* c_behrend = construct->add_subcommand("behrend", "progression-free set");
    long long behrend_L = 10000;
    c_behrend->add_option("--L", behrend_L, "universe size")->required();
    auto* c_tensor = construct->add_subcommand("tensor", "base-p digit tensor set");
    long long tensor_p = 61;
    int tensor_n = 2;
    std::string tensor_eq = "-1,3,-1,-1";
    c_tensor->add_option("--p", tensor_p, "prime base")->required();
    c_tensor->add_option("--n", tensor_n, "digits");
    c_tensor->add_option("--eq", tensor_eq, "equation coefficients c_w,c_x,c_y,c_z (mod p)");
    auto* c_blowup = construct->add_subcommand("blowup", "dilate-stacked set on [N]^2");
    long long blow_N = 101;
    c_blowup->add_option("--N", blow_N, "prime side length")->required();
    auto* c_triforce = construct->add_subcommand("triforce", "tripartite system");
    long long tri_L = 7;
    std::string tri_k1 = "2", tri_k2 = "2";
    c_triforce->add_option("--L", tri_L)->required();
    c_triforce->add_option("--k1", tri_k1);
    c_triforce->add_option("--k2", tri_k2);
    auto* c_non2d = construct->add_subcommand("nonconvex2d", "quadratic-form level set on [N]^2");
    std::string non2d_m = "1,1,1,1";
    long long non2d_L = 8, non2d_N = 200;
    std::string non2d_psi = "377/1021";
    c_non2d->add_option("--m", non2d_m, "m1,m2,m3,m4");
    c_non2d->add_option("--L", non2d_L);
    c_non2d->add_option("--N", non2d_N)->required();
    c_non2d->add_option("--psi", non2d_psi, "rational psi");
    auto* c_spec1d = construct->add_subcommand("special1d", "split-prime quadratic set on [N]");
    long long spec1d_minp = 13, spec1d_L = 9, spec1d_N = 4999;
    std::string spec1d_psi = "123457/1000003";
    c_spec1d->add_option("--min-p", spec1d_minp);
    c_spec1d->add_option("--L", spec1d_L);
    c_spec1d->add_option("--N", spec1d_N)->required();
    c_spec1d->add_option("--psi", spec1d_psi, "rational psi");
    auto* c_phase = construct->add_subcommand("phase", "quadratic phase function");
    std::string phase_pattern = "0,1,2,5";
    long long phase_N = 2003;
    std::string phase_alpha = "3/10", phase_gammas;
    c_phase->add_option("--pattern", phase_pattern)->required();
    c_phase->add_option("--N", phase_N)->required();
    c_phase->add_option("--alpha", phase_alpha);
    c_phase->add_option("--gammas", phase_gammas, "four rationals; default from the case table");

    // count
    auto* count = app.add_subcommand("count", "count translates of d*P inside a set");
    std::string count_set, count_pattern;
    long long count_d = 1;
    bool count_wrap = false;
    count->add_option("--set", count_set, "pdd-set file")->required();
    count->add_option("--pattern", count_pattern)->required();
    count->add_option("--d", count_d)->required();
    count->add_flag("--wrap", count_wrap, "wraparound (group) semantics");

    // profile
    auto* profile = app.add_subcommand("profile", "difference profile of a set");
    std::string prof_set, prof_pattern;
    bool prof_wrap = false;
    profile->add_option("--set", prof_set)->required();
    profile->add_option("--pattern", prof_pattern)->required();
    profile->add_flag("--wrap", prof_wrap);

    // phase
    auto* phase = app.add_subcommand("phase", "expectation profile of a phase function");
    std::string ph_pattern = "0,1,2,5";
    long long ph_N = 2003;
    std::string ph_alpha = "3/10", ph_gammas;
    phase->add_option("--pattern", ph_pattern)->required();
    phase->add_option("--N", ph_N)->required();
    phase->add_option("--alpha", ph_alpha);
    phase->add_option("--gammas", ph_gammas);

    // transfer
    auto* transfer = app.add_subcommand("transfer", "exhaustive transfer-lemma checks");
    std::string tr_mode = "1d";
    long long tr_N = 200, tr_L = 0;
    std::string tr_psi = "123457/1000003";
    transfer->add_option("--mode", tr_mode)->check(CLI::IsMember({"1d", "2d"}));
    transfer->add_option("--N", tr_N);
    transfer->add_option("--L", tr_L, "0 = default per mode");
    transfer->add_option("--psi", tr_psi);

    // primes
    auto* primes = app.add_subcommand("primes", "split primes: density and first datum");
    long long primes_limit = 1000000, primes_minp = 13;
    primes->add_option("--limit", primes_limit);
    primes->add_option("--min-p", primes_minp);

    // accept
    auto* accept = app.add_subcommand("accept", "run the acceptance criteria");
    std::string accept_profile = "full";
    accept->add_option("--profile", accept_profile)->check(CLI::IsMember({"quick", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    OutputSink sink;
    sink.dir = out_dir;
    sink.format = format;
    sink.manifest.seed = seed;
    int exit_code = 0;

    try {
        if (*census) {
            sink.manifest.parameters["bound"] = std::to_string(census_bound);
            pdd::SignatureEngine eng;
            auto summary = pdd::census_summary(eng);
            sink.emit("census.json", pdd::census_json(summary), true);
            auto records = eng.census();
            std::vector<pdd::Certificate> certs;
            for (const auto& rec : records) {
                if (rec.cls == pdd::SigClass::P1ZeroOnly || rec.cls == pdd::SigClass::P2ZeroOnly)
                    certs.push_back(pdd::certify_a4_a5(rec));
                else if (rec.cls == pdd::SigClass::NeitherZero)
                    certs.push_back(pdd::certify_a6_a7(rec, summary.i0, census_bound));
            }
            for (auto& c : pdd::verify_a8(census_bound)) certs.push_back(c);
            sink.emit("certificates.json", pdd::certificates_json(certs), true);
            std::cout << "both-zero=" << summary.class_counts[0] << " |I0|=" << summary.i0.size()
                      << " certificates=" << certs.size() << "\n";
            sink.finish("census");
        } else if (*atlas) {
            sink.manifest.parameters["bound"] = std::to_string(atlas_bound);
            auto s = pdd::atlas_sweep(atlas_bound);
            sink.emit("atlas.json", pdd::atlas_json(s), true);
            std::cout << "triples=" << s.triples << " mismatches=" << s.mismatches << "\n";
            if (s.mismatches != 0) exit_code = 1;
            sink.finish("atlas");
        } else if (*curves) {
            sink.manifest.parameters["height"] = std::to_string(height);
            sink.manifest.parameters["primes"] = primes_arg;
            auto ps = parse_ll_list(primes_arg);
            long long positive = 0;
            int idx = 0;
            for (const auto& c : pdd::high_deg_curves()) {
                auto rep = pdd::curve_search(c, height, ps);
                positive += static_cast<long long>(rep.positive_points.size());
                sink.emit("curve" + std::to_string(idx++) + ".json",
                          pdd::curve_report_json(rep), true);
            }
            std::cout << "positive points across all six curves: " << positive << "\n";
            if (positive != 0) exit_code = 1;
            sink.finish("curves");
        } else if (*count) {
            sink.manifest.parameters = {{"set", count_set},
                                        {"pattern", count_pattern},
                                        {"d", std::to_string(count_d)},
                                        {"wrap", count_wrap ? "1" : "0"}};
            auto A = load_grid(count_set);
            int r = 0;
            auto P = parse_points(count_pattern, r);
            if (r != A.r()) throw std::invalid_argument("pattern dimension != set dimension");
            long long c = pdd::count_translates(A, P, count_d, count_wrap);
            std::cout << c << "\n";
            nlohmann::json j = {{"count", c},
                                {"d", count_d},
                                {"semantics", count_wrap ? "wraparound" : "boxed"}};
            sink.emit("count.json", j.dump(2), true);
            sink.finish("count");
        } else if (*profile) {
            sink.manifest.parameters = {{"set", prof_set},
                                        {"pattern", prof_pattern},
                                        {"wrap", prof_wrap ? "1" : "0"}};
            auto A = load_grid(prof_set);
            int r = 0;
            auto P = parse_points(prof_pattern, r);
            if (r != A.r()) throw std::invalid_argument("pattern dimension != set dimension");
            auto prof = pdd::difference_profile(A, P, prof_wrap);
            sink.emit("profile.csv", pdd::profile_csv(prof), false);
            sink.emit("profile.json",
                      pdd::profile_json(prof, prof_wrap ? "wraparound" : "boxed"), true);
            std::cout << "max_d=" << prof.max_d << " max_value=" << prof.max_value << "\n";
            sink.finish("profile");
        } else if (*phase) {
            auto pat = parse_line_pattern(ph_pattern);
            std::cout << pattern_echo(pat) << "\n";
            auto rep = pdd::degeneracy_set(pat);
            std::array<mpq_class, 4> g;
            if (ph_gammas.empty()) g = pdd::choose_gammas(rep).gamma;
            else g = parse_gammas(ph_gammas);
            mpq_class alpha = parse_rational(ph_alpha);
            sink.manifest.parameters = {{"pattern", ph_pattern},
                                        {"N", std::to_string(ph_N)},
                                        {"alpha", alpha.get_str()}};
            auto f = pdd::build_phase_function(pat, ph_N, alpha, g);
            auto prof = pdd::phase_expectation_profile(f, pat);
            std::ostringstream csv;
            csv << "d,measured,predicted\n";
            csv.precision(17);
            double max_dev = 0;
            for (const auto& [d, v] : prof.per_d) {
                double pred = pdd::predict_phase_expectation(rep, g, alpha, d, ph_N);
                max_dev = std::max(max_dev, std::abs(v - pred));
                csv << d << "," << v << "," << pred << "\n";
            }
            sink.emit("phase_profile.csv", csv.str(), false);
            nlohmann::json j = {{"N", ph_N},
                                {"alpha", alpha.get_d()},
                                {"case", pdd::to_string(rep.label)},
                                {"max_d", prof.max_d},
                                {"max_value", prof.max_value},
                                {"max_deviation_from_prediction", max_dev},
                                {"alpha4", std::pow(alpha.get_d(), 4)}};
            sink.emit("phase_summary.json", j.dump(2), true);
            std::cout << "max_d=" << prof.max_d << " max=" << prof.max_value
                      << " max|measured-predicted|=" << max_dev << "\n";
            sink.finish("phase");
        } else if (*transfer) {
            sink.manifest.parameters = {{"mode", tr_mode},
                                        {"N", std::to_string(tr_N)},
                                        {"psi", tr_psi}};
            pdd::TransferReport rep;
            if (tr_mode == "1d") {
                auto sp = pdd::find_split_prime(13);
                long long L = tr_L > 0 ? tr_L : sp.p;
                auto es = pdd::EquationSpec::make({-1, 3, -1, -1}, sp.p);
                auto base = pdd::behrend_eqfree(sp.p, es);
                auto lam = pdd::digit_tensor_set(sp.p, base, 1);
                lam.L = L;
                auto params = pdd::make_transfer_params_1d(sp, L, lam, parse_rational(tr_psi));
                rep = pdd::transfer_check_1d(params, sp, tr_N);
            } else {
                auto ct = pdd::solve_complex_triple(1, 1, 1, 1);
                long long L = tr_L > 0 ? tr_L : 8;
                auto es = pdd::EquationSpec::make({-3, 1, 1, 1});
                auto lam = pdd::behrend_eqfree(L, es);
                auto params = pdd::make_transfer_params_2d(ct, L, lam, parse_rational(tr_psi));
                rep = pdd::transfer_check_2d(params, ct, tr_N, std::min<long long>(tr_N, 60));
            }
            sink.emit("transfer.json", pdd::transfer_report_json(rep, tr_mode), true);
            std::cout << "events=" << rep.events << " violations=" << rep.violations << "\n";
            if (rep.violations != 0) exit_code = 1;
            sink.finish("transfer");
        } else if (*primes) {
            sink.manifest.parameters = {{"limit", std::to_string(primes_limit)},
                                        {"min_p", std::to_string(primes_minp)}};
            auto d = pdd::split_prime_density(primes_limit);
            auto sp = pdd::find_split_prime(primes_minp);
            sink.emit("split_density.json", pdd::split_density_json(d), true);
            sink.emit("split_prime.json", pdd::split_prime_json(sp), true);
            std::cout << "density=" << d.density() << " first=" << sp.p << "\n";
            sink.finish("primes");
        } else if (*accept) {
            sink.manifest.parameters["profile"] = accept_profile;
            pdd::AcceptanceOptions opts;
            opts.full = accept_profile == "full";
            auto results = pdd::run_acceptance(opts, std::cout);
            sink.emit("acceptance.json", pdd::acceptance_json(results), true);
            int failed = 0;
            for (const auto& r : results) failed += r.pass ? 0 : 1;
            std::cout << results.size() - failed << "/" << results.size()
                      << " criteria passed\n";
            if (failed) exit_code = 1;
            sink.finish("accept");
        } else if (*construct) {
            if (*c_behrend) {
                sink.manifest.parameters["L"] = std::to_string(behrend_L);
                auto fs = pdd::behrend_3apfree(behrend_L);
                std::ostringstream os;
                pdd::save_free_set(os, fs);
                sink.emit("behrend.pdd-set", os.str(), false);
                std::cout << "size=" << fs.elements.size() << "\n";
                sink.finish("construct behrend");
            } else if (*c_tensor) {
                sink.manifest.parameters = {{"p", std::to_string(tensor_p)},
                                            {"n", std::to_string(tensor_n)},
                                            {"eq", tensor_eq}};
                auto cs = parse_ll_list(tensor_eq);
                if (cs.size() != 4) throw std::invalid_argument("--eq needs four coefficients");
                auto es = pdd::EquationSpec::make({cs[0], cs[1], cs[2], cs[3]}, tensor_p);
                auto base = pdd::behrend_eqfree(tensor_p, es);
                auto fs = pdd::digit_tensor_set(tensor_p, base, tensor_n);
                std::ostringstream os;
                pdd::save_free_set(os, fs);
                sink.emit("tensor.pdd-set", os.str(), false);
                std::cout << "base=" << base.elements.size() << " size=" << fs.elements.size()
                          << "\n";
                sink.finish("construct tensor");
            } else if (*c_blowup) {
                sink.manifest.parameters["N"] = std::to_string(blow_N);
                auto base = pdd::behrend_3apfree((blow_N + 1) / 2);
                base.L = blow_N;
                base.cyclic = true;
                auto g = pdd::blowup_construction(base, 2, blow_N);
                std::ostringstream os;
                pdd::save_grid_set(os, g);
                sink.emit("blowup.pdd-set", os.str(), false);
                std::cout << "size=" << g.size() << "\n";
                sink.finish("construct blowup");
            } else if (*c_triforce) {
                sink.manifest.parameters = {{"L", std::to_string(tri_L)},
                                            {"k1", tri_k1},
                                            {"k2", tri_k2}};
                auto sys = pdd::build_triforce(tri_L, parse_rational(tri_k1),
                                               parse_rational(tri_k2));
                auto scan = pdd::scan_triforce(sys);
                std::ostringstream os;
                pdd::save_free_set(os, sys.lambda);
                sink.emit("triforce_lambda.pdd-set", os.str(), false);
                nlohmann::json j = {{"L", sys.L},
                                    {"lambda_size", sys.lambda.elements.size()},
                                    {"triangles", scan.triangles},
                                    {"edge_disjoint", scan.edge_disjoint},
                                    {"vertex_degree_ok", scan.vertex_degree_ok}};
                sink.emit("triforce.json", j.dump(2), true);
                std::cout << "triangles=" << scan.triangles << "\n";
                sink.finish("construct triforce");
            } else if (*c_non2d) {
                sink.manifest.parameters = {{"m", non2d_m},
                                            {"L", std::to_string(non2d_L)},
                                            {"N", std::to_string(non2d_N)},
                                            {"psi", non2d_psi}};
                auto ms = parse_ll_list(non2d_m);
                if (ms.size() != 4) throw std::invalid_argument("--m needs four integers");
                auto ct = pdd::solve_complex_triple(ms[0], ms[1], ms[2], ms[3]);
                auto es = pdd::EquationSpec::make(
                    {-(ms[1] * ms[2] + ms[0] * ms[3] + ms[0] * ms[1]), ms[1] * ms[2],
                     ms[0] * ms[3], ms[0] * ms[1]});
                auto lam = pdd::behrend_eqfree(non2d_L, es);
                auto params = pdd::make_transfer_params_2d(ct, non2d_L, lam,
                                                           parse_rational(non2d_psi));
                auto g = pdd::build_2d_nonconvex_set(ct, non2d_N, params);
                std::ostringstream os;
                pdd::save_grid_set(os, g);
                sink.emit("nonconvex2d.pdd-set", os.str(), false);
                std::cout << "size=" << g.size() << " density=" << g.density() << "\n";
                sink.finish("construct nonconvex2d");
            } else if (*c_spec1d) {
                sink.manifest.parameters = {{"min_p", std::to_string(spec1d_minp)},
                                            {"L", std::to_string(spec1d_L)},
                                            {"N", std::to_string(spec1d_N)},
                                            {"psi", spec1d_psi}};
                auto sp = pdd::find_split_prime(spec1d_minp);
                auto es = pdd::EquationSpec::make({-1, 3, -1, -1}, sp.p);
                auto base = pdd::behrend_eqfree(sp.p, es);
                pdd::FreeSet lam;
                lam.L = spec1d_L;
                for (long long v : base.elements)
                    if (v < spec1d_L) lam.elements.push_back(v);
                lam.spec = base.spec;
                auto params = pdd::make_transfer_params_1d(sp, spec1d_L, lam,
                                                           parse_rational(spec1d_psi));
                auto g = pdd::build_1d_special_set(sp, spec1d_N, params);
                std::ostringstream os;
                pdd::save_grid_set(os, g);
                sink.emit("special1d.pdd-set", os.str(), false);
                std::cout << "p=" << sp.p << " size=" << g.size() << "\n";
                sink.finish("construct special1d");
            } else if (*c_phase) {
                auto pat = parse_line_pattern(phase_pattern);
                std::cout << pattern_echo(pat) << "\n";
                std::array<mpq_class, 4> g;
                if (phase_gammas.empty())
                    g = pdd::choose_gammas(pdd::degeneracy_set(pat)).gamma;
                else
                    g = parse_gammas(phase_gammas);
                auto f = pdd::build_phase_function(pat, phase_N, parse_rational(phase_alpha), g);
                sink.manifest.parameters = {{"pattern", phase_pattern},
                                            {"N", std::to_string(phase_N)},
                                            {"alpha", phase_alpha}};
                sink.emit("phase.json", pdd::phase_function_json(f), true);
                sink.finish("construct phase");
            }
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal defect: " << e.what() << "\n";
        return 3;
    }
    return exit_code;
}
