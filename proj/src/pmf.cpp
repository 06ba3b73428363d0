#include "specsim/pmf.hpp"

#include <cmath>
#include <unordered_map>
#include <unordered_set>

namespace specsim {

Pmf::Pmf(std::vector<std::string> labels_, std::vector<double> probs_, double tail_mass_)
    : labels(std::move(labels_)), probs(std::move(probs_)), tail_mass(tail_mass_) {
    validate();
}

double Pmf::total_mass() const {
    // Kahan summation; product sources push individual masses below 1e-300.
    double sum = 0.0, comp = 0.0;
    for (double p : probs) {
        double y = p - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum + tail_mass;
}

void Pmf::validate() const {
    if (labels.size() != probs.size())
        throw PreconditionError("pmf: labels and probs differ in length");
    if (tail_mass < 0.0)
        throw PreconditionError("pmf: negative tail_mass");
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (!(probs[i] >= 0.0) || !std::isfinite(probs[i]))
            throw PreconditionError("pmf: invalid probability for label '" + labels[i] + "'");
    }
    std::unordered_set<std::string> seen;
    for (const auto& l : labels) {
        if (!seen.insert(l).second)
            throw PreconditionError("pmf: duplicate label '" + l + "'");
    }
    double m = total_mass();
    if (std::fabs(m - 1.0) > 1e-12)
        throw PreconditionError("pmf: total mass " + std::to_string(m) + " not 1");
}

Pmf Pmf::uniform(std::size_t m, const std::string& prefix) {
    if (m < 1) throw PreconditionError("uniform pmf needs at least one symbol");
    std::vector<std::string> labels(m);
    std::vector<double> probs(m, 1.0 / static_cast<double>(m));
    for (std::size_t i = 0; i < m; ++i) labels[i] = prefix + std::to_string(i);
    return Pmf(std::move(labels), std::move(probs));
}

Pmf Pmf::point_mass(const std::string& label) {
    return Pmf({label}, {1.0});
}

double variational_distance(const Pmf& p, const Pmf& q) {
    p.validate();
    q.validate();
    if (p.tail_mass != 0.0 || q.tail_mass != 0.0)
        throw PreconditionError("variational_distance: undefined under nonzero tail_mass");
    std::unordered_map<std::string, double> diff;
    diff.reserve(p.size() + q.size());
    for (std::size_t i = 0; i < p.size(); ++i) diff[p.labels[i]] += p.probs[i];
    for (std::size_t i = 0; i < q.size(); ++i) diff[q.labels[i]] -= q.probs[i];
    double sum = 0.0, comp = 0.0;
    for (const auto& [label, d] : diff) {
        double y = std::fabs(d) - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

double spectrum_cdf(const Pmf& p, double c) {
    p.validate();
    if (p.tail_mass != 0.0)
        throw PreconditionError("spectrum_cdf: undefined under nonzero tail_mass");
    double sum = 0.0, comp = 0.0;
    for (double prob : p.probs) {
        if (prob <= 0.0) continue;
        if (-std::log(prob) < c) {
            double y = prob - comp;
            double t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
    }
    return sum;
}

}  // namespace specsim
