#pragma once

#include <map>
#include <string>
#include <vector>

#include "specsim/spectrum.hpp"

namespace specsim {

// Binary entropy in nats, with 0 log 0 = 0.
double binary_entropy(double p);

// One record per Hamming-weight class of {0,1}^n: all sequences in a class
// share the same probability, so exchangeable product sources need only n+1
// records instead of 2^n symbols.
struct WeightClass {
    int weight;
    double log_prob_per_seq;
    double log_count;  // log C(n, k)
    double mass;       // exp(log_count + log_prob_per_seq)
};

std::vector<WeightClass> bernoulli_weight_classes(double p, int n);
std::vector<WeightClass> mixture_weight_classes(double p1, double p2, double alpha, int n);

// Spectrum of an exchangeable weight-class source; at most n+1 levels,
// sorted by value with weight-ascending tie-break.
Spectrum weight_class_spectrum(const std::vector<WeightClass>& classes);

// Spectrum of the n-fold power of Bernoulli(p). p in {0,1} yields a
// point-mass spectrum and sets *degenerate when provided.
Spectrum bernoulli_power_spectrum(double p, int n, bool* degenerate = nullptr);

// Spectrum of the two-component Bernoulli-power mixture with weight alpha on
// the p1 component.
Spectrum mixture_spectrum(double p1, double p2, double alpha, int n);

// Constant spectrum log(m) of the uniform distribution over m symbols.
Spectrum uniform_spectrum(long long m);

struct ExampleParams {
    int example = 1;
    int n = 0;
    double p1 = 0.0, p2 = 0.0;
    double q1 = 0.0, q2 = 0.0;
    double alpha = 0.0, beta = 0.0, theta = 0.0;
    long long x_size = 4;  // example 4 coin alphabet size
    double eps = 0.3, gamma = 1.21;  // example 3 case-1 construction parameters
};

struct ConditionReport {
    int example = 0;
    int n = 0;
    std::string verdict;
    double quantity = 0.0;   // the evaluated condition quantity
    double threshold = 0.0;  // the case-analysis threshold it is compared to
    double margin = 0.0;     // quantity - threshold, signed toward the verdict
    std::map<std::string, double> extras;
};

// Finite-n reproduction of the four worked cases; the verdict reports the
// trend at n, never an asymptotic claim.
ConditionReport example_suite(const ExampleParams& params);

}  // namespace specsim
