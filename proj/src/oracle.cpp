#include "specsim/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace specsim {

double grid_measure(const Spectrum& sx, const Spectrum& sy, double gamma, double shift, int G) {
    if (G < 10) throw PreconditionError("grid_measure: grid size must be >= 10");
    if (!(shift >= 0.0) || !(shift < 1.0))
        throw PreconditionError("grid_measure: shift must lie in [0, 1)");
    if (!sx.full_coverage() || !sy.full_coverage())
        throw PreconditionError("grid_measure: full coverage required");
    const double L = 1.0 - shift;
    const double cell = L / G;
    long long count = 0;
    for (int i = 0; i < G; ++i) {
        double d = (i + 0.5) * cell;
        double vx = sx.eval(std::min(d + shift, std::nextafter(1.0, 0.0)));
        if (vx - sy.eval(d) < gamma) ++count;
    }
    return count * cell;
}

std::pair<DeterministicMap, double> brute_force_optimal_map(const Pmf& coin, const Pmf& target,
                                                            long long cap) {
    coin.validate();
    target.validate();
    if (coin.tail_mass != 0.0 || target.tail_mass != 0.0)
        throw PreconditionError("brute_force_optimal_map: full coverage required");

    std::vector<std::string> dom;
    for (std::size_t i = 0; i < coin.size(); ++i)
        if (coin.probs[i] > 0.0) dom.push_back(coin.labels[i]);
    std::vector<std::string> cod;
    for (std::size_t i = 0; i < target.size(); ++i)
        if (target.probs[i] > 0.0) cod.push_back(target.labels[i]);
    if (cod.empty()) throw PreconditionError("brute_force_optimal_map: empty target support");

    double total = std::pow(static_cast<double>(cod.size()), static_cast<double>(dom.size()));
    if (total > static_cast<double>(cap))
        throw PreconditionError("brute_force_optimal_map: " + std::to_string(total) +
                                " maps exceed the enumeration cap");

    std::vector<std::size_t> choice(dom.size(), 0);
    std::vector<std::size_t> best_choice = choice;
    double best_d = std::numeric_limits<double>::infinity();
    std::vector<double> pushed(cod.size());

    bool done = false;
    while (!done) {
        std::fill(pushed.begin(), pushed.end(), 0.0);
        for (std::size_t i = 0, k = 0; i < coin.size(); ++i) {
            if (coin.probs[i] <= 0.0) continue;
            pushed[choice[k++]] += coin.probs[i];
        }
        double d = 0.0;
        for (std::size_t j = 0, k = 0; j < target.size(); ++j) {
            if (target.probs[j] <= 0.0) continue;  // off-support labels receive no mass
            d += std::fabs(target.probs[j] - pushed[k++]);
        }
        if (d < best_d) {
            best_d = d;
            best_choice = choice;
        }
        // odometer increment
        std::size_t pos = 0;
        for (;; ++pos) {
            if (pos == choice.size()) {
                done = true;
                break;
            }
            if (++choice[pos] < cod.size()) break;
            choice[pos] = 0;
        }
    }

    DeterministicMap m;
    m.domain_labels = coin.labels;
    m.codomain_labels = target.labels;
    for (std::size_t k = 0; k < dom.size(); ++k) m.assignment[dom[k]] = cod[best_choice[k]];
    for (const auto& l : coin.labels)
        if (!m.assignment.count(l)) m.assignment[l] = cod[0];
    return {std::move(m), best_d};
}

double mc_empirical_distance(const Pmf& coin, const DeterministicMap& map, const Pmf& target,
                             long long samples, std::uint64_t seed) {
    if (samples < 1) throw PreconditionError("mc_empirical_distance: samples must be >= 1");
    coin.validate();
    target.validate();

    std::vector<double> cum(coin.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < coin.size(); ++i) {
        sum += coin.probs[i];
        cum[i] = sum;
    }
    std::unordered_map<std::string, std::size_t> out_idx;
    for (std::size_t j = 0; j < map.codomain_labels.size(); ++j)
        out_idx[map.codomain_labels[j]] = j;
    std::vector<std::size_t> image(coin.size());
    for (std::size_t i = 0; i < coin.size(); ++i) image[i] = out_idx.at(map.apply(coin.labels[i]));

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<long long> hits(map.codomain_labels.size(), 0);
    for (long long s = 0; s < samples; ++s) {
        double u = unif(rng) * sum;
        auto it = std::lower_bound(cum.begin(), cum.end(), u);
        std::size_t i = std::min(static_cast<std::size_t>(it - cum.begin()), coin.size() - 1);
        ++hits[image[i]];
    }

    Pmf empirical;
    empirical.labels = map.codomain_labels;
    empirical.probs.resize(hits.size());
    for (std::size_t j = 0; j < hits.size(); ++j)
        empirical.probs[j] = static_cast<double>(hits[j]) / static_cast<double>(samples);
    // Empirical frequencies are exact rationals; no mass-renormalization step.
    double d = 0.0;
    std::unordered_map<std::string, double> t;
    for (std::size_t j = 0; j < target.size(); ++j) t[target.labels[j]] += target.probs[j];
    std::unordered_map<std::string, double> e;
    for (std::size_t j = 0; j < empirical.size(); ++j) e[empirical.labels[j]] += empirical.probs[j];
    for (const auto& [l, p] : t) d += std::fabs(p - (e.count(l) ? e.at(l) : 0.0));
    for (const auto& [l, p] : e)
        if (!t.count(l)) d += std::fabs(p);
    return d;
}

}  // namespace specsim
