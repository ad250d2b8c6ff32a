#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jacksep/rational.hpp"

namespace jacksep {

struct case_failure {
    std::string case_id;
    std::string expected;
    std::string actual;
};

struct case_skip {
    std::string case_id;
    std::string reason;
};

// Outcome of one verification suite. cases_run counts the comparisons that
// actually executed (passed plus failed); skipped cases are listed
// separately with the reason (typically a coupling value where a closed form
// is degenerate).
struct suite_report {
    std::string suite;
    long cases_run = 0;
    long cases_passed = 0;
    std::vector<case_failure> failures;
    std::vector<case_skip> skipped;
    long wall_time_ms = 0;

    bool ok() const { return failures.empty(); }
};

struct verify_options {
    // Couplings each suite sweeps.
    std::vector<rational> g_panel;
    // Couplings for the constant-term pairing, which is defined only at
    // positive integers. When the user supplies a custom panel, the CLI
    // replaces this with its positive-integer members.
    std::vector<long> orthogonality_g = {1, 2};
    // Caps the suite's primary size parameter (partition size, table size,
    // weight). Unset means the full default scale.
    std::optional<long> max_size;
};

// Default panel {1/3, 2/5, 1, 3/2, 7/3} at full scale.
verify_options default_verify_options();

// The suite names accepted by run_suite, in canonical order.
const std::vector<std::string>& suite_names();

// Runs one named suite. Throws std::invalid_argument for an unknown name.
suite_report run_suite(const std::string& name, const verify_options& opts);

suite_report run_separated_suite(const verify_options& opts);
suite_report run_watson_suite(const verify_options& opts);
suite_report run_a1_suite(const verify_options& opts);
suite_report run_cmn_suite(const verify_options& opts);
suite_report run_recurrences_suite(const verify_options& opts);
// The three-variable suite bundles the factorization, representation and
// specialization subsections.
suite_report run_sov_a2_suite(const verify_options& opts);
suite_report run_sov_a2_factorization(const verify_options& opts);
suite_report run_sov_a2_representations(const verify_options& opts);
suite_report run_sov_a2_specializations(const verify_options& opts);
suite_report run_oracle_suite(const verify_options& opts);
suite_report run_orthogonality_suite(const verify_options& opts);
suite_report run_conjecture_rect_suite(const verify_options& opts);

}  // namespace jacksep
