// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
// Exits 0 once all criteria have been evaluated; with --strict, 1 if any failed.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "sqb/verify.hpp"

using namespace sqb;

namespace {

CriterionReport check_determinism() {
    const auto t0 = std::chrono::steady_clock::now();
    CriterionReport r;
    r.id = 11;
    r.title = "CLI output identical for --threads 1 and 4";
    r.tolerance = 0.0;
    const std::vector<std::string> commands = {
        "kernel --tau 0:4:5 --x 0.1:20:4 --method direct",
        "kernel --tau 0:4:5 --x 0.1:20:4 --method mb",
        "forward --f builtin:exp3sqrt --tau 0:5:21",
        "forward --f builtin:k0sqrt --tau 0:10:11 --format json",
        "inverse --g builtin:gauss --x 0.1:20:9",
        "pde --g builtin:gauss --r 0.5:5:4 --theta 0:1:3",
    };
    int differing = 0;
    for (const auto& c : commands) {
        const auto a = run_cli(c + " --threads 1");
        const auto b = run_cli(c + " --threads 4");
        const bool same = a.code == 0 && b.code == 0 && a.out == b.out && !a.out.empty();
        if (!same) ++differing;
        r.notes.push_back((same ? "identical: " : "DIFFERENT: ") + c + " (" + std::to_string(a.out.size()) +
                          " bytes)");
    }
    r.measured = differing;
    r.passed = differing == 0;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

} // namespace

int main(int argc, char** argv) {
    bool strict = false;
    VerifyOptions opt;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--strict") == 0) strict = true;
        else if (std::strcmp(argv[i], "--corrected") == 0) {
            opt.ode_form = OdeForm::corrected;
            opt.pde_form = PdeForm::corrected;
            opt.g_form = InvertGForm::corrected;
        } else {
            std::fprintf(stderr, "usage: acceptance [--strict] [--corrected]\n");
            return 2;
        }
    }

    using Check = CriterionReport (*)(const VerifyOptions&);
    const std::vector<Check> checks = {check_kernel_agreement, check_ode,          check_bounds,
                                       check_gamma_cosine,     check_forward_routes, check_mellin_identity,
                                       check_ki_integral,      check_roundtrip_f,  check_roundtrip_g,
                                       check_pde};
    std::vector<CriterionReport> reports;
    for (auto check : checks) {
        CriterionReport r;
        try {
            r = check(opt);
        } catch (const std::exception& e) {
            r.id = static_cast<int>(reports.size()) + 1;
            r.title = "(raised)";
            r.notes.push_back(std::string("exception: ") + e.what());
        }
        std::printf("%s\n", format_report_line(r).c_str());
        for (const auto& n : r.notes) std::printf("      %s\n", n.c_str());
        std::fflush(stdout);
        reports.push_back(r);
    }
    const auto det = check_determinism();
    std::printf("%s\n", format_report_line(det).c_str());
    for (const auto& n : det.notes) std::printf("      %s\n", n.c_str());
    reports.push_back(det);

    int failed = 0;
    for (const auto& r : reports) failed += r.passed ? 0 : 1;
    std::printf("%d of %zu criteria passed\n", static_cast<int>(reports.size()) - failed, reports.size());
    return strict && failed ? 1 : 0;
}
