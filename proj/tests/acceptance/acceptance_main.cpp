// Acceptance gate: runs every criterion at its stated parameters and prints
// one PASS/FAIL line each. Exit code 0 iff all criteria pass.
#include <cstring>
#include <fstream>
#include <iostream>

#include "pdd/acceptance.hpp"

int main(int argc, char** argv) {
    pdd::AcceptanceOptions opts;
    std::string out_json;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) opts.full = false;
        else if (std::strcmp(argv[i], "--json") == 0 && i + 1 < argc) out_json = argv[++i];
        else {
            std::cerr << "usage: acceptance [--quick] [--json FILE]\n";
            return 2;
        }
    }

    std::cout << "acceptance profile: " << (opts.full ? "full" : "quick") << "\n";
    auto results = pdd::run_acceptance(opts, std::cout);

    int failed = 0;
    for (const auto& r : results) failed += r.pass ? 0 : 1;
    std::cout << results.size() - failed << "/" << results.size() << " criteria passed\n";
    if (failed) {
        std::cout << "failing criteria:";
        for (const auto& r : results)
            if (!r.pass) std::cout << " " << r.id;
        std::cout << "\n(criteria 5, 6 and 9 encode targets that are not attainable at the"
                     " pinned desk-scale parameters; see README \"Known-red criteria\")\n";
    }
    if (!out_json.empty()) {
        std::ofstream os(out_json);
        os << pdd::acceptance_json(results) << "\n";
    }
    return failed ? 1 : 0;
}
