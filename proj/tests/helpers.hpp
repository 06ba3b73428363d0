#pragma once

// Shared seeded generators for property tests and the acceptance suite.

#include <random>
#include <string>
#include <vector>

#include "specsim/mapping.hpp"
#include "specsim/pmf.hpp"

namespace testutil {

// Random pmf with full support over `size` symbols. Probabilities are dyadic
// (multiples of 2^-20), so sums, pushforwards and distances are exact in
// double arithmetic and "exact inequality" checks are meaningful.
inline specsim::Pmf random_pmf(std::mt19937_64& rng, std::size_t size,
                               const std::string& prefix = "s") {
    constexpr long long kGrain = 1ll << 20;
    std::exponential_distribution<double> ex(1.0);
    std::vector<double> w(size);
    double sum = 0.0;
    for (auto& v : w) {
        v = ex(rng) + 1e-6;
        sum += v;
    }
    std::vector<long long> units(size, 1);
    long long used = static_cast<long long>(size);
    for (std::size_t i = 0; i + 1 < size; ++i) {
        long long u = static_cast<long long>(w[i] / sum * (kGrain - size));
        units[i] += u;
        used += u;
    }
    units[size - 1] += kGrain - used;
    specsim::Pmf p;
    for (std::size_t i = 0; i < size; ++i) {
        p.labels.push_back(prefix + std::to_string(i));
        p.probs.push_back(static_cast<double>(units[i]) / static_cast<double>(kGrain));
    }
    return p;
}

inline std::size_t random_size(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    std::uniform_int_distribution<std::size_t> d(lo, hi);
    return d(rng);
}

// Arbitrary total map from p's labels onto a fresh codomain.
inline specsim::DeterministicMap random_map(std::mt19937_64& rng, const specsim::Pmf& p,
                                            std::size_t codomain_size) {
    specsim::DeterministicMap m;
    m.domain_labels = p.labels;
    for (std::size_t j = 0; j < codomain_size; ++j) m.codomain_labels.push_back("t" + std::to_string(j));
    std::uniform_int_distribution<std::size_t> pick(0, codomain_size - 1);
    for (const auto& l : p.labels) m.assignment[l] = m.codomain_labels[pick(rng)];
    return m;
}

}  // namespace testutil
