#pragma once

#include <iosfwd>
#include <string>

#include "specsim/channel.hpp"
#include "specsim/mapping.hpp"
#include "specsim/pmf.hpp"
#include "specsim/spectrum.hpp"

namespace specsim::io {

// Pmf files: CSV with columns label,prob (optional "label,prob" header,
// '#' comment lines may carry "tail_mass=<v>"), or a JSON document
// {"labels": [...], "probs": [...], "tail_mass": 0.0} detected by a leading
// '{'. Parse failures raise ParseError with the line number.
Pmf load_pmf(const std::string& path);
Pmf parse_pmf(std::istream& in, const std::string& origin = "<stream>");
void save_pmf_csv(const Pmf& p, std::ostream& out);

// Spectrum dump: CSV columns delta_lo,delta_hi,c_value, one row per level,
// suitable for step plots.
void write_spectrum_csv(const Spectrum& s, std::ostream& out);

// DeterministicMap: CSV columns from_label,to_label.
void write_map_csv(const DeterministicMap& m, std::ostream& out);
DeterministicMap load_map_csv(const std::string& path);

// JointPmf: CSV columns x_label,y_label,prob.
void write_joint_csv(const JointPmf& j, std::ostream& out);

// Channel / coupling: CSV columns x_label,y_label,prob with rows grouped by
// x, each group summing to 1.
Channel load_channel(const std::string& path);
void write_channel_csv(const Channel& c, std::ostream& out);

// ChannelMap: CSV columns x_label,z_label,y_label.
void write_channel_map_csv(const ChannelMap& cm, std::ostream& out);

// FNV-1a 64 digest of a file's bytes, for run manifests.
std::string file_digest(const std::string& path);

}  // namespace specsim::io
