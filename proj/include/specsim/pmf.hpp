#pragma once

#include <string>
#include <vector>

#include "specsim/errors.hpp"

namespace specsim {

// Finite labeled probability mass function. A truncated countable source
// records the unlisted mass in tail_mass.
struct Pmf {
    std::vector<std::string> labels;
    std::vector<double> probs;
    double tail_mass = 0.0;

    Pmf() = default;
    Pmf(std::vector<std::string> labels, std::vector<double> probs, double tail_mass = 0.0);

    std::size_t size() const { return labels.size(); }
    double total_mass() const;

    // Throws PreconditionError unless probs are non-negative, labels are
    // distinct and the total mass is 1 within 1e-12.
    void validate() const;

    static Pmf uniform(std::size_t m, const std::string& prefix = "s");
    static Pmf point_mass(const std::string& label);
};

// Sum |p - q| over the union of supports, in [0, 2]. Both pmfs must have
// tail_mass = 0; the distance is undefined under truncation.
double variational_distance(const Pmf& p, const Pmf& q);

// Pr{ log 1/p(X) < c }, evaluated in the log domain.
double spectrum_cdf(const Pmf& p, double c);

}  // namespace specsim
