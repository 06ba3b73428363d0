#pragma once

#include <vector>

#include "specsim/pmf.hpp"

namespace specsim {

// Right-continuous non-decreasing step function on [0, covered_mass),
// encoding the spectrum of sorted self-information levels. Level k covers
// [breakpoints[k-1], breakpoints[k]) with value values[k]; counts[k] is the
// number of support symbols merged into that level (exact 1 per symbol when
// built from a Pmf, a binomial coefficient for weight-class sources).
struct Spectrum {
    std::vector<double> breakpoints;  // strictly increasing, last = covered_mass
    std::vector<double> values;       // non-decreasing
    std::vector<double> counts;

    double covered_mass() const { return breakpoints.empty() ? 0.0 : breakpoints.back(); }
    bool full_coverage(double tol = 1e-9) const;
    std::size_t levels() const { return values.size(); }
    double support_points() const;

    // c(delta) for delta in [0, covered_mass); right-continuous.
    double eval(double delta) const;
};

// Piecewise-constant (not necessarily monotone) function on [0, domain_length),
// the carrier of a spectrum difference. Segment k covers
// [breakpoints[k-1], breakpoints[k]).
struct StepDiff {
    std::vector<double> breakpoints;  // strictly increasing, last = domain_length
    std::vector<double> values;

    double domain_length() const { return breakpoints.empty() ? 0.0 : breakpoints.back(); }
    double inf() const;
    // Lebesgue measure of { delta : value(delta) < threshold }, strict.
    double sublevel_measure(double threshold) const;
};

// Sorted spectrum of a pmf (Fig.-1 style): probability descending, ties by
// label ascending. Zero-probability symbols are excluded.
Spectrum build_spectrum(const Pmf& p);

// Exact Lebesgue measure of { delta in [0,1) : sx(delta) - sy(delta) < gamma }.
// Requires full coverage on both sides.
double deficiency_measure(const Spectrum& sx, const Spectrum& sy, double gamma);

// Truncation-tolerant variant: the undetermined region past the shorter
// coverage is counted both ways.
struct MeasureBounds {
    double lower;
    double upper;
    bool exact(double tol = 1e-12) const { return upper - lower <= tol; }
};
MeasureBounds deficiency_measure_bounds(const Spectrum& sx, const Spectrum& sy, double gamma);

// delta -> sx(delta + eps) - sy(delta) on [0, 1 - eps); full coverage required.
StepDiff shifted_gap(const Spectrum& sx, const Spectrum& sy, double eps);

}  // namespace specsim
