#include "specsim/channel.hpp"

#include <unordered_set>

namespace specsim {

void Channel::validate() const {
    if (input_labels.size() != rows.size())
        throw AlphabetError("channel: one row per input symbol required");
    std::unordered_set<std::string> seen;
    for (const auto& l : input_labels)
        if (!seen.insert(l).second) throw AlphabetError("channel: duplicate input label '" + l + "'");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        try {
            rows[i].validate();
        } catch (const Error& e) {
            throw AlphabetError("channel row '" + input_labels[i] + "': " + e.what());
        }
        if (rows[i].tail_mass != 0.0)
            throw AlphabetError("channel row '" + input_labels[i] + "': nonzero tail_mass");
    }
}

std::size_t Channel::input_index(const std::string& x) const {
    for (std::size_t i = 0; i < input_labels.size(); ++i)
        if (input_labels[i] == x) return i;
    throw AlphabetError("channel: unknown input symbol '" + x + "'");
}

const Pmf& Channel::row(const std::string& x) const { return rows[input_index(x)]; }

CoinCoupling independent_coupling(const std::vector<std::string>& input_labels, const Pmf& coin) {
    CoinCoupling c;
    c.input_labels = input_labels;
    c.output_labels = coin.labels;
    c.rows.assign(input_labels.size(), coin);
    return c;
}

const DeterministicMap& ChannelMap::map_for(const std::string& x) const {
    for (std::size_t i = 0; i < input_labels.size(); ++i)
        if (input_labels[i] == x) return maps[i];
    throw AlphabetError("channel map: no map for input '" + x + "'");
}

namespace {

// Rows aggregated deterministically in input-label order with the input pmf
// supplying the weights; zero-mass inputs are skipped.
template <typename F>
double weighted_over_inputs(const Pmf& input, const Channel& chan, const CoinCoupling& coupling,
                            F&& per_row) {
    input.validate();
    chan.validate();
    coupling.validate();
    if (input.tail_mass != 0.0)
        throw PreconditionError("channel expectation: input pmf has nonzero tail_mass");
    double sum = 0.0;
    for (std::size_t i = 0; i < input.size(); ++i) {
        if (input.probs[i] == 0.0) continue;
        const std::string& x = input.labels[i];
        sum += input.probs[i] * per_row(x, coupling.row(x), chan.row(x));
    }
    return sum;
}

}  // namespace

std::map<std::string, PerInputSpectra> per_input_spectra(const Channel& chan,
                                                         const CoinCoupling& coupling) {
    chan.validate();
    coupling.validate();
    std::map<std::string, PerInputSpectra> out;
    for (const auto& x : chan.input_labels)
        out[x] = PerInputSpectra{build_spectrum(coupling.row(x)), build_spectrum(chan.row(x))};
    return out;
}

double expected_deficiency(const Pmf& input, const Channel& chan, const CoinCoupling& coupling,
                           double gamma) {
    return weighted_over_inputs(input, chan, coupling,
                                [&](const std::string&, const Pmf& z, const Pmf& w) {
                                    return deficiency_measure(build_spectrum(z), build_spectrum(w),
                                                              gamma);
                                });
}

double expected_shifted_deficiency(const Pmf& input, const Channel& chan,
                                   const CoinCoupling& coupling, double eps, double gamma) {
    if (!(gamma > 0.0))
        throw PreconditionError("expected_shifted_deficiency: gamma must be positive");
    return weighted_over_inputs(
        input, chan, coupling, [&](const std::string&, const Pmf& z, const Pmf& w) {
            return shifted_gap(build_spectrum(z), build_spectrum(w), eps).sublevel_measure(-gamma);
        });
}

ChannelMap build_channel_map(const Pmf& input, const Channel& chan, const CoinCoupling& coupling,
                             double eps, double gamma) {
    input.validate();
    chan.validate();
    coupling.validate();
    ChannelMap cm;
    for (std::size_t i = 0; i < input.size(); ++i) {
        if (input.probs[i] == 0.0) continue;
        const std::string& x = input.labels[i];
        try {
            cm.input_labels.push_back(x);
            cm.maps.push_back(build_mapping(coupling.row(x), chan.row(x), eps, gamma));
        } catch (const Error& e) {
            throw PreconditionError("channel map, input '" + x + "': " + e.what());
        }
    }
    return cm;
}

double joint_distance(const Pmf& input, const Channel& chan, const CoinCoupling& coupling,
                      const ChannelMap& cm) {
    return weighted_over_inputs(input, chan, coupling,
                                [&](const std::string& x, const Pmf& z, const Pmf& w) {
                                    return variational_distance(w, pushforward(cm.map_for(x), z));
                                });
}

}  // namespace specsim
