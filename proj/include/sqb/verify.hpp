#pragma once

// Verification suites: each criterion computes a measured quantity, compares it
// with a pinned tolerance and carries diagnostic notes.

#include <string>
#include <vector>

#include "sqb/kernel.hpp"
#include "sqb/pde.hpp"
#include "sqb/quad.hpp"
#include "sqb/transform.hpp"

namespace sqb {

struct CriterionReport {
    int id = 0;
    std::string title;
    bool passed = false;
    double measured = 0.0;
    double tolerance = 0.0;
    double seconds = 0.0;
    std::vector<std::string> notes;
};

struct VerifyOptions {
    OdeForm ode_form = OdeForm::printed;
    PdeForm pde_form = PdeForm::printed;
    InvertGForm g_form = InvertGForm::printed;
    int threads = 1;
    double regularization = 10.0; // Gaussian width for the F round trip
};

/// lemma1, lemma2, bounds, theorem1, theorem3, roundtrip-f, roundtrip-g, pde.
const std::vector<std::string>& suite_names();
/// DomainError for an unknown suite name.
std::vector<CriterionReport> run_suite(const std::string& suite, const VerifyOptions& opt = {});

CriterionReport check_kernel_agreement(const VerifyOptions& opt);   // 1
CriterionReport check_ode(const VerifyOptions& opt);                // 2
CriterionReport check_bounds(const VerifyOptions& opt);             // 3
CriterionReport check_gamma_cosine(const VerifyOptions& opt);       // 4
CriterionReport check_forward_routes(const VerifyOptions& opt);     // 5
CriterionReport check_mellin_identity(const VerifyOptions& opt);    // 6
CriterionReport check_ki_integral(const VerifyOptions& opt);        // 7
CriterionReport check_roundtrip_f(const VerifyOptions& opt);        // 8
CriterionReport check_roundtrip_g(const VerifyOptions& opt);        // 9
CriterionReport check_pde(const VerifyOptions& opt);                // 10

/// "PASS  3  title  measured=... tol=... (1.2 s)".
std::string format_report_line(const CriterionReport& r);

} // namespace sqb
