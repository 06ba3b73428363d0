#pragma once

#include <map>
#include <string>
#include <vector>

#include "specsim/mapping.hpp"
#include "specsim/pmf.hpp"
#include "specsim/spectrum.hpp"

namespace specsim {

// Finite conditional pmf table: one row W(.|x) per input symbol.
struct Channel {
    std::vector<std::string> input_labels;
    std::vector<std::string> output_labels;
    std::vector<Pmf> rows;  // rows[i] is the pmf over output_labels given input i

    void validate() const;
    const Pmf& row(const std::string& x) const;
    std::size_t input_index(const std::string& x) const;
};

// Coupling P(z|x): same table shape over a coin alphabet. An input-independent
// coin is the special case of identical rows.
using CoinCoupling = Channel;

CoinCoupling independent_coupling(const std::vector<std::string>& input_labels, const Pmf& coin);

// One deterministic coin->output map per input symbol.
struct ChannelMap {
    std::vector<std::string> input_labels;
    std::vector<DeterministicMap> maps;  // aligned with input_labels
    const DeterministicMap& map_for(const std::string& x) const;
};

struct PerInputSpectra {
    Spectrum coin;     // spectrum of P(z|x)
    Spectrum channel;  // spectrum of W(.|x)
};

// build_spectrum applied row-wise, keyed by input label.
std::map<std::string, PerInputSpectra> per_input_spectra(const Channel& chan,
                                                         const CoinCoupling& coupling);

// E_x[ mu{ delta : c^{z|x}(delta) - c^w(delta, x) < gamma } ].
double expected_deficiency(const Pmf& input, const Channel& chan, const CoinCoupling& coupling,
                           double gamma);

// E_x[ mu{ delta in [0,1-eps) : c^{z|x}(delta+eps) - c^w(delta, x) < -gamma } ].
double expected_shifted_deficiency(const Pmf& input, const Channel& chan,
                                   const CoinCoupling& coupling, double eps, double gamma);

// Row-wise interval construction over the inputs with positive mass.
ChannelMap build_channel_map(const Pmf& input, const Channel& chan, const CoinCoupling& coupling,
                             double eps, double gamma);

// d(XY, X phi(X,Z)) = sum_x P(x) * d( W(.|x), pushforward(phi^x, P(z|x)) ).
double joint_distance(const Pmf& input, const Channel& chan, const CoinCoupling& coupling,
                      const ChannelMap& cm);

}  // namespace specsim
