#include "specsim/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace specsim {

bool Spectrum::full_coverage(double tol) const {
    return !breakpoints.empty() && std::fabs(covered_mass() - 1.0) <= tol;
}

double Spectrum::support_points() const {
    double sum = 0.0;
    for (double c : counts) sum += c;
    return sum;
}

double Spectrum::eval(double delta) const {
    if (delta < 0.0)
        throw PreconditionError("spectrum eval: negative delta");
    if (breakpoints.empty() || delta >= covered_mass())
        throw PreconditionError("spectrum eval: delta past covered mass (truncated spectrum)");
    auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), delta);
    return values[static_cast<std::size_t>(it - breakpoints.begin())];
}

namespace {

// eval with slack at the right edge; interior sweeps may land a rounding
// error past the last breakpoint.
double eval_clamped(const Spectrum& s, double delta) {
    if (delta >= s.covered_mass()) {
        if (delta - s.covered_mass() > 1e-9)
            throw PreconditionError("spectrum eval: delta past covered mass");
        return s.values.back();
    }
    return s.eval(delta);
}

}  // namespace

double StepDiff::inf() const {
    double m = std::numeric_limits<double>::infinity();
    for (double v : values) m = std::min(m, v);
    return m;
}

double StepDiff::sublevel_measure(double threshold) const {
    double measure = 0.0, prev = 0.0;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (values[k] < threshold) measure += breakpoints[k] - prev;
        prev = breakpoints[k];
    }
    return measure;
}

Spectrum build_spectrum(const Pmf& p) {
    p.validate();
    std::vector<std::size_t> order;
    order.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p.probs[i] > 0.0) order.push_back(i);
    if (order.empty())
        throw PreconditionError("build_spectrum: all-zero pmf");
    // Probability descending; equal probabilities ordered by label so the
    // list is deterministic across runs (value-irrelevant for c).
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (p.probs[a] != p.probs[b]) return p.probs[a] > p.probs[b];
        return p.labels[a] < p.labels[b];
    });

    Spectrum s;
    s.breakpoints.reserve(order.size());
    s.values.reserve(order.size());
    s.counts.assign(order.size(), 1.0);
    double sum = 0.0, comp = 0.0;
    for (std::size_t i : order) {
        double y = p.probs[i] - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        s.breakpoints.push_back(sum);
        s.values.push_back(-std::log(p.probs[i]));
    }
    if (p.tail_mass == 0.0 && std::fabs(sum - 1.0) <= 1e-12)
        s.breakpoints.back() = 1.0;
    return s;
}

namespace {

// Merge-sweep over the common domain [0, L); calls f(length, vx - vy) per
// elementary interval.
template <typename F>
void sweep_difference(const Spectrum& sx, const Spectrum& sy, double L, F&& f) {
    std::size_t ix = 0, iy = 0;
    double pos = 0.0;
    while (pos < L) {
        double cut = L;
        if (ix < sx.breakpoints.size()) cut = std::min(cut, sx.breakpoints[ix]);
        if (iy < sy.breakpoints.size()) cut = std::min(cut, sy.breakpoints[iy]);
        if (cut > pos) f(cut - pos, sx.values[std::min(ix, sx.levels() - 1)] -
                                        sy.values[std::min(iy, sy.levels() - 1)]);
        pos = cut;
        while (ix < sx.breakpoints.size() && sx.breakpoints[ix] <= pos) ++ix;
        while (iy < sy.breakpoints.size() && sy.breakpoints[iy] <= pos) ++iy;
    }
}

}  // namespace

double deficiency_measure(const Spectrum& sx, const Spectrum& sy, double gamma) {
    if (!sx.full_coverage() || !sy.full_coverage())
        throw PreconditionError(
            "deficiency_measure: full coverage required; use deficiency_measure_bounds");
    double L = std::min(sx.covered_mass(), sy.covered_mass());
    double measure = 0.0;
    sweep_difference(sx, sy, L, [&](double len, double diff) {
        if (diff < gamma) measure += len;
    });
    return std::min(measure, 1.0);
}

MeasureBounds deficiency_measure_bounds(const Spectrum& sx, const Spectrum& sy, double gamma) {
    double L = std::min(sx.covered_mass(), sy.covered_mass());
    double measure = 0.0;
    sweep_difference(sx, sy, L, [&](double len, double diff) {
        if (diff < gamma) measure += len;
    });
    double undetermined = std::max(0.0, 1.0 - L);
    return {measure, std::min(measure + undetermined, 1.0)};
}

StepDiff shifted_gap(const Spectrum& sx, const Spectrum& sy, double eps) {
    if (!(eps > 0.0) || !(eps < 1.0))
        throw PreconditionError("shifted_gap: eps must lie in (0, 1)");
    if (!sx.full_coverage() || !sy.full_coverage())
        throw PreconditionError("shifted_gap: full coverage required");
    const double L = 1.0 - eps;

    std::vector<double> cuts;
    cuts.reserve(sx.levels() + sy.levels() + 1);
    for (double b : sy.breakpoints)
        if (b > 0.0 && b < L) cuts.push_back(b);
    for (double b : sx.breakpoints) {
        double c = b - eps;
        if (c > 0.0 && c < L) cuts.push_back(c);
    }
    cuts.push_back(L);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    StepDiff d;
    d.breakpoints.reserve(cuts.size());
    d.values.reserve(cuts.size());
    double prev = 0.0;
    for (double c : cuts) {
        d.breakpoints.push_back(c);
        d.values.push_back(eval_clamped(sx, prev + eps) - eval_clamped(sy, prev));
        prev = c;
    }
    return d;
}

}  // namespace specsim
