#pragma once

#include <cstdint>
#include <utility>

#include "specsim/mapping.hpp"
#include "specsim/pmf.hpp"
#include "specsim/spectrum.hpp"

namespace specsim {

// Reproducible configuration for the brute-force and Monte-Carlo oracles.
// rng_algorithm identifies the generator in emitted reports.
struct OracleConfig {
    int grid_size = 1'000'000;
    long long mc_samples = 1'000'000;
    std::uint64_t rng_seed = 0;
    long long max_enum_maps = 20'000'000;
    static constexpr const char* rng_algorithm = "mt19937_64";
};

// Midpoint Riemann estimate of mu{ delta in [0, 1-shift) :
// sx(delta+shift) - sy(delta) < gamma }; within 2*(breakpoint count)/G of
// the exact value. Cell midpoints avoid landing on breakpoints.
double grid_measure(const Spectrum& sx, const Spectrum& sy, double gamma, double shift, int G);

// Exhaustive minimum of d(target, pushforward(phi, coin)) over all total
// maps from the coin support to the target support. Refuses above cap.
std::pair<DeterministicMap, double> brute_force_optimal_map(const Pmf& coin, const Pmf& target,
                                                            long long cap);

// Variational distance between target and the empirical distribution of
// phi(X) over seeded i.i.d. draws.
double mc_empirical_distance(const Pmf& coin, const DeterministicMap& map, const Pmf& target,
                             long long samples, std::uint64_t seed);

}  // namespace specsim
