#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "specsim/oracle.hpp"
#include "specsim/spectrum.hpp"

using namespace specsim;

namespace {

Pmf fig1_pmf() {
    return Pmf({"z1", "z2", "z3", "z4", "z5"}, {0.025, 0.075, 0.2, 0.3, 0.4});
}

}  // namespace

TEST_CASE("grid oracle is exact on constant-gap spectra") {
    Spectrum u4 = build_spectrum(Pmf::uniform(4));
    Spectrum u2 = build_spectrum(Pmf::uniform(2));
    for (int G : {10, 1000, 12345}) {
        CHECK(grid_measure(u4, u2, 0.5, 0.0, G) == 0.0);
        CHECK(grid_measure(u4, u2, 0.8, 0.0, G) == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(grid_measure(u4, u2, 0.5, 0.0, 5), PreconditionError);
    CHECK_THROWS_AS(grid_measure(u4, u2, 0.5, 1.0, 100), PreconditionError);
}

TEST_CASE("grid oracle reproduces the hand-computed measure") {
    Spectrum fig1 = build_spectrum(fig1_pmf());
    Spectrum u2 = build_spectrum(Pmf::uniform(2));
    CHECK(grid_measure(fig1, u2, 0.0, 0.0, 1000000) == 0.0);
    CHECK(grid_measure(fig1, u2, 0.3, 0.0, 1000000) == doctest::Approx(0.4).epsilon(1e-5));
    CHECK(grid_measure(fig1, u2, 0.6, 0.0, 1000000) == doctest::Approx(0.7).epsilon(1e-5));
}

TEST_CASE("grid oracle tracks the exact shifted sub-level measure") {
    std::mt19937_64 rng(67);
    std::uniform_real_distribution<double> gd(-2.0, 2.0);
    const int G = 200000;
    for (int t = 0; t < 15; ++t) {
        Spectrum sx = build_spectrum(testutil::random_pmf(rng, testutil::random_size(rng, 2, 8)));
        Spectrum sy =
            build_spectrum(testutil::random_pmf(rng, testutil::random_size(rng, 2, 8), "y"));
        double eps = 0.25, gamma = gd(rng);
        double exact = shifted_gap(sx, sy, eps).sublevel_measure(gamma);
        double m = static_cast<double>(sx.levels() + sy.levels());
        CHECK(std::fabs(grid_measure(sx, sy, gamma, eps, G) - exact) <= 2.0 * m / G);
    }
}

TEST_CASE("exhaustive map search on hand-checked pairs") {
    auto [m1, d1] = brute_force_optimal_map(Pmf::uniform(4), Pmf::uniform(2), 1000);
    CHECK(d1 == 0.0);
    auto [m2, d2] = brute_force_optimal_map(Pmf::point_mass("a"), Pmf::uniform(2), 1000);
    CHECK(d2 == doctest::Approx(1.0).epsilon(1e-12));  // point pushforward vs (0.5, 0.5)
    Pmf p = fig1_pmf();
    auto [m3, d3] = brute_force_optimal_map(p, p, 10000);
    CHECK(d3 == 0.0);
}

TEST_CASE("enumeration refuses past the cap") {
    CHECK_THROWS_AS(brute_force_optimal_map(Pmf::uniform(10), Pmf::uniform(8), 1000),
                    PreconditionError);
}

TEST_CASE("oracle minimum sandwiches the constructed map") {
    std::mt19937_64 rng(71);
    const double eps_choices[] = {0.05, 0.1, 0.3};
    std::uniform_real_distribution<double> u(0.0, 2.0);
    for (int t = 0; t < 40; ++t) {
        Pmf coin = testutil::random_pmf(rng, testutil::random_size(rng, 1, 6));
        Pmf target = testutil::random_pmf(rng, testutil::random_size(rng, 1, 4), "y");
        double eps = eps_choices[t % 3];
        double gamma = -std::log(eps) + u(rng);
        Prop1Report r = check_prop1_bound(coin, target, eps, gamma);
        auto [m, dstar] = brute_force_optimal_map(coin, target, 1 << 20);
        CHECK(dstar <= r.d + 1e-12);
        CHECK(r.d <= r.bound + 1e-9);
    }
}

TEST_CASE("empirical pushforward distance concentrates") {
    Pmf coin = Pmf::uniform(4);
    Pmf target = Pmf::uniform(2, "u");
    DeterministicMap m = build_mapping(coin, target, 0.3, 1.21);
    // analytic distance is 0 here; 10^6 draws keep the empirical one tiny
    double d = mc_empirical_distance(coin, m, target, 1000000, 12345);
    CHECK(d <= 0.01);

    // deliberately skewed map with analytic d = 0.5
    DeterministicMap skew;
    skew.domain_labels = coin.labels;
    skew.codomain_labels = target.labels;
    skew.assignment = {{"s0", "u0"}, {"s1", "u0"}, {"s2", "u0"}, {"s3", "u1"}};
    double analytic = variational_distance(target, pushforward(skew, coin));
    double emp = mc_empirical_distance(coin, skew, target, 1000000, 999);
    CHECK(std::fabs(emp - analytic) <= 0.02);

    CHECK_THROWS_AS(mc_empirical_distance(coin, m, target, 0, 1), PreconditionError);
}

TEST_CASE("monte-carlo runs are reproducible per seed") {
    Pmf coin = fig1_pmf();
    Pmf target = Pmf::uniform(2);
    DeterministicMap m = build_mapping(coin, target, 0.3, 1.21);
    double a = mc_empirical_distance(coin, m, target, 100000, 42);
    double b = mc_empirical_distance(coin, m, target, 100000, 42);
    double c = mc_empirical_distance(coin, m, target, 100000, 43);
    CHECK(a == b);
    CHECK(a != c);  // different seed, different draw
}
