#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eulertop/bigfloat.hpp"

namespace eulertop {

// One suite entry. `work` counts elementary checks actually performed
// (comparisons, exact divisions, orbit steps), so reports stay byte-stable
// across machines: no wall-clock numbers appear anywhere.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    long work = 0;
};

// Trial counts default to the full suite sizes; unit tests dial them down.
struct VerifyOptions {
    std::uint64_t seed = 7;
    mpfr_prec_t precision = MpReal::kDefaultPrecision;

    int conservation_trials = 100;
    int conservation_steps = 20;
    int oracle_trials = 100;
    int reduction_orbits = 50;
    int reduction_steps = 5;
    int variety_orbit_samples = 10;
    int substitution_trials = 20;
    int axisym_random_pairs = 5;
    long p3_search_bound = 10000;

    // Degree-6 correlation: exact symbolic division by default; the
    // randomized alternative restricts every entry to a random rational
    // line and checks univariate divisibility instead. The method is
    // selected here, never by a timer, so reports are reproducible.
    bool g5_randomized = false;
    int g5_lines = 30;

    int search_grid = 21;
    double search_box_lo = -5.0;
    double search_box_hi = 5.0;
};

CriterionResult verify_invariant_conservation(const VerifyOptions& opt);   // 1
CriterionResult verify_oracle_equivalence(const VerifyOptions& opt);       // 2
CriterionResult verify_biquadratic_reduction(const VerifyOptions& opt);    // 3
CriterionResult verify_two_step_relation(const VerifyOptions& opt);        // 4
CriterionResult verify_gamma3_factorization(const VerifyOptions& opt);     // 5
CriterionResult verify_higher_correlations(const VerifyOptions& opt);      // 6
CriterionResult verify_period3_collapse(const VerifyOptions& opt);         // 7
CriterionResult verify_period3_orbits(const VerifyOptions& opt);           // 8
CriterionResult verify_condition_form_consistency(const VerifyOptions& opt);  // 9
CriterionResult verify_period24_exclusion(const VerifyOptions& opt);       // 10
CriterionResult verify_axisym_quantization(const VerifyOptions& opt);      // 11
CriterionResult verify_singular_factorization(const VerifyOptions& opt);   // 12

// All twelve, in order. Runners never throw: an escaped exception turns
// into a failed result carrying the message.
std::vector<CriterionResult> verify_all(const VerifyOptions& opt);

}  // namespace eulertop
