#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "eulertop/bigfloat.hpp"
#include "eulertop/euler_map.hpp"

namespace eulertop {

struct SearchRegion {
    std::array<std::array<double, 2>, 3> box{{{-5.0, 5.0}, {-5.0, 5.0}, {-5.0, 5.0}}};
    int grid_resolution = 21;
    int newton_max_iters = 60;
    mpfr_prec_t precision = MpReal::kDefaultPrecision;
    // Wide separation between the convergence and classification scales
    // keeps converged roots from straddling a class boundary.
    double convergence_tol = 1e-30;
    double classification_tol = 1e-25;
    double dedup_radius = 1e-12;

    static SearchRegion cube(double lo, double hi, int resolution);
    void validate() const;
};

enum class Classification { fixed_axis, singular_set, on_v3, genuine };
const char* classification_name(Classification c);

struct CandidateReport {
    BodyState<MpReal> state;
    long period = 0;
    MpReal residual;
    Classification classification = Classification::genuine;
    MpReal distance_to_singular;  // |singular quartic| at the candidate's xi point
    bool reverified = false;      // residual re-checked at doubled precision
};

struct SearchReport {
    long period = 0;
    std::vector<CandidateReport> candidates;  // deduplicated, sorted by state
    long starts = 0;
    long converged = 0;
    long dropped = 0;                // non-convergent or stalled starts
    long near_singular_starts = 0;  // grid points within 1e-6 of the singular quartic
    std::uint64_t seed = 0;         // recorded for the report; the grid is deterministic
};

// max over coordinates of |X^(n)_i - x_i|. Propagates SingularPoint when
// the orbit hits the denominator zero set.
MpReal period_residual(const TopConfig& cfg, const BodyState<MpReal>& s, long n);
MpReal period_residual(const TopConfig& cfg, const BodyState<BigComplex>& s, long n);
MpReal period_residual(const TopConfig& cfg, const BodyState<Rational>& s, long n,
                       mpfr_prec_t precision = MpReal::kDefaultPrecision);

// Multi-start damped Newton on F(x) = X^(n)(x) - x over the region's grid.
// Converged roots are deduplicated, classified (fixed_axis before
// singular_set before on_v3 before genuine) and re-verified at doubled
// precision. Starts are independent and run in parallel; the merge is by
// grid index, so the report is reproducible.
SearchReport newton_periodic_search(const TopConfig& cfg, long n, const SearchRegion& region,
                                    std::uint64_t seed);

}  // namespace eulertop
