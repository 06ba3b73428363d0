#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "specsim/pmf.hpp"
#include "specsim/spectrum.hpp"

namespace specsim {

// Total deterministic map from a coin alphabet to a target alphabet. When
// produced by the interval construction, meta records the parameters and the
// proof indices for introspection.
struct DeterministicMap {
    std::vector<std::string> domain_labels;
    std::vector<std::string> codomain_labels;
    std::unordered_map<std::string, std::string> assignment;

    struct Meta {
        double eps = 0.0;
        double gamma = 0.0;
        std::size_t i1 = 0;  // coin symbols kept (1-based count)
        std::size_t i2 = 0;  // target symbols kept
        std::size_t j2 = 0;  // sorted target index receiving the i1-th coin symbol
    };
    std::optional<Meta> meta;

    const std::string& apply(const std::string& x) const;
    static DeterministicMap identity(const std::vector<std::string>& labels);
    static DeterministicMap constant(const std::vector<std::string>& domain,
                                     const std::string& target);
};

// Interval-alignment construction: sorts both pmfs, truncates each at the
// smallest head whose tail mass drops strictly below eps, and aligns the coin
// partition onto the target partition. Requires exp(-gamma) <= eps.
DeterministicMap build_mapping(const Pmf& coin, const Pmf& target, double eps, double gamma);

// q(y) = sum of p(x) over the preimage of y. Labels outside the map domain
// with positive mass are an error.
Pmf pushforward(const DeterministicMap& map, const Pmf& p);

struct Prop1Report {
    double d = 0.0;           // achieved variational distance
    double bound = 0.0;       // 9*eps + 10*deficiency
    double deficiency = 0.0;  // mu of the sub-level set at gamma
    double eps = 0.0;
    double gamma = 0.0;
    std::size_t i1 = 0, i2 = 0, j2 = 0;
    bool pass = false;        // d <= bound + 1e-9
};
Prop1Report check_prop1_bound(const Pmf& coin, const Pmf& target, double eps, double gamma);

// Distribution of a real-valued functional, e.g. the self-information of a
// source symbol.
struct RealRvDist {
    std::vector<double> values;
    std::vector<double> probs;

    static RealRvDist from_pmf_self_information(const Pmf& p);
    static RealRvDist point(double v);
    void validate() const;
};

// Exact-to-1e-9 Levy distance between two finite real distributions,
// computed by bisection over the sandwich feasibility predicate.
double levy_distance(const RealRvDist& u, const RealRvDist& v);

// Joint pmf over pairs of sorted symbols with cached marginals.
struct JointPmf {
    std::vector<std::string> x_labels;  // sorted spectrum order
    std::vector<std::string> y_labels;
    std::vector<std::vector<double>> joint;  // joint[i][j]
    Pmf marginal_x() const;
    Pmf marginal_y() const;
};

// Coupling of x and y through a uniform variable and its eps-cyclic shift:
// joint(i, j) is the overlap of the shifted i-th x-interval with the j-th
// y-interval. Marginals reproduce the inputs exactly.
JointPmf shifted_coupling(const Pmf& x, const Pmf& y, double eps);

// Pr_joint{ log 1/P_X(X) - log 1/P_Y(Y) < threshold } under a coupling built
// by shifted_coupling.
double joint_log_ratio_cdf(const JointPmf& j, const Pmf& x, const Pmf& y, double threshold);

}  // namespace specsim
