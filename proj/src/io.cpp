#include "specsim/io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>

#include <json.hpp>

namespace specsim::io {

namespace {

double parse_prob(const std::string& tok, long line) {
    try {
        std::size_t pos = 0;
        double v = std::stod(tok, &pos);
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError("malformed probability '" + tok + "'", line);
    }
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

Pmf parse_pmf_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid pmf JSON: ") + e.what());
    }
    Pmf p;
    if (!j.contains("labels") || !j.contains("probs"))
        throw ParseError("pmf JSON must contain 'labels' and 'probs'");
    p.labels = j.at("labels").get<std::vector<std::string>>();
    p.probs = j.at("probs").get<std::vector<double>>();
    p.tail_mass = j.value("tail_mass", 0.0);
    try {
        p.validate();
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
    return p;
}

}  // namespace

Pmf parse_pmf(std::istream& in, const std::string& origin) {
    // Peek for JSON.
    int c = in.peek();
    while (c == ' ' || c == '\n' || c == '\r' || c == '\t') {
        in.get();
        c = in.peek();
    }
    if (c == '{') return parse_pmf_json(in);

    Pmf p;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty()) continue;
        if (t[0] == '#') {
            auto pos = t.find("tail_mass=");
            if (pos != std::string::npos)
                p.tail_mass = parse_prob(trim(t.substr(pos + 10)), lineno);
            continue;
        }
        auto comma = t.find(',');
        if (comma == std::string::npos)
            throw ParseError("expected 'label,prob' in " + origin, lineno);
        std::string label = trim(t.substr(0, comma));
        std::string prob = trim(t.substr(comma + 1));
        if (lineno == 1 && label == "label" && prob == "prob") continue;  // header row
        p.labels.push_back(label);
        p.probs.push_back(parse_prob(prob, lineno));
    }
    try {
        p.validate();
    } catch (const Error& e) {
        throw ParseError(std::string(e.what()) + " in " + origin);
    }
    return p;
}

Pmf load_pmf(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open pmf file '" + path + "'");
    return parse_pmf(f, path);
}

void save_pmf_csv(const Pmf& p, std::ostream& out) {
    out << "label,prob\n";
    if (p.tail_mass != 0.0) out << "# tail_mass=" << std::setprecision(17) << p.tail_mass << "\n";
    out << std::setprecision(17);
    for (std::size_t i = 0; i < p.size(); ++i) out << p.labels[i] << "," << p.probs[i] << "\n";
}

void write_spectrum_csv(const Spectrum& s, std::ostream& out) {
    out << "delta_lo,delta_hi,c_value\n" << std::setprecision(17);
    double prev = 0.0;
    for (std::size_t k = 0; k < s.levels(); ++k) {
        out << prev << "," << s.breakpoints[k] << "," << s.values[k] << "\n";
        prev = s.breakpoints[k];
    }
}

void write_map_csv(const DeterministicMap& m, std::ostream& out) {
    out << "from_label,to_label\n";
    for (const auto& l : m.domain_labels) out << l << "," << m.apply(l) << "\n";
}

DeterministicMap load_map_csv(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open map file '" + path + "'");
    DeterministicMap m;
    std::map<std::string, bool> seen_cod;
    std::string line;
    long lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto comma = t.find(',');
        if (comma == std::string::npos)
            throw ParseError("expected 'from_label,to_label'", lineno);
        std::string from = trim(t.substr(0, comma));
        std::string to = trim(t.substr(comma + 1));
        if (lineno == 1 && from == "from_label" && to == "to_label") continue;
        m.domain_labels.push_back(from);
        m.assignment[from] = to;
        if (!seen_cod.count(to)) {
            seen_cod[to] = true;
            m.codomain_labels.push_back(to);
        }
    }
    return m;
}

void write_joint_csv(const JointPmf& j, std::ostream& out) {
    out << "x_label,y_label,prob\n" << std::setprecision(17);
    for (std::size_t i = 0; i < j.x_labels.size(); ++i)
        for (std::size_t k = 0; k < j.y_labels.size(); ++k)
            if (j.joint[i][k] > 0.0)
                out << j.x_labels[i] << "," << j.y_labels[k] << "," << j.joint[i][k] << "\n";
}

Channel load_channel(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open channel file '" + path + "'");
    // Preserve first-seen order for both alphabets.
    std::vector<std::string> inputs;
    std::vector<std::string> outputs;
    std::map<std::string, std::size_t> out_idx;
    std::map<std::string, std::vector<std::pair<std::size_t, double>>> row_entries;

    std::string line;
    long lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto c1 = t.find(',');
        auto c2 = c1 == std::string::npos ? std::string::npos : t.find(',', c1 + 1);
        if (c2 == std::string::npos)
            throw ParseError("expected 'x_label,y_label,prob'", lineno);
        std::string x = trim(t.substr(0, c1));
        std::string y = trim(t.substr(c1 + 1, c2 - c1 - 1));
        std::string pr = trim(t.substr(c2 + 1));
        if (lineno == 1 && pr == "prob") continue;
        if (!row_entries.count(x)) inputs.push_back(x);
        if (!out_idx.count(y)) {
            out_idx[y] = outputs.size();
            outputs.push_back(y);
        }
        row_entries[x].emplace_back(out_idx[y], parse_prob(pr, lineno));
    }
    Channel c;
    c.input_labels = inputs;
    c.output_labels = outputs;
    for (const auto& x : inputs) {
        Pmf row;
        row.labels = outputs;
        row.probs.assign(outputs.size(), 0.0);
        for (const auto& [j, pr] : row_entries[x]) row.probs[j] += pr;
        c.rows.push_back(std::move(row));
    }
    try {
        c.validate();
    } catch (const Error& e) {
        throw AlphabetError(std::string(e.what()) + " in " + path);
    }
    return c;
}

void write_channel_csv(const Channel& c, std::ostream& out) {
    out << "x_label,y_label,prob\n" << std::setprecision(17);
    for (std::size_t i = 0; i < c.input_labels.size(); ++i)
        for (std::size_t j = 0; j < c.output_labels.size(); ++j)
            if (c.rows[i].probs[j] > 0.0)
                out << c.input_labels[i] << "," << c.output_labels[j] << "," << c.rows[i].probs[j]
                    << "\n";
}

void write_channel_map_csv(const ChannelMap& cm, std::ostream& out) {
    out << "x_label,z_label,y_label\n";
    for (std::size_t i = 0; i < cm.input_labels.size(); ++i)
        for (const auto& z : cm.maps[i].domain_labels)
            out << cm.input_labels[i] << "," << z << "," << cm.maps[i].apply(z) << "\n";
}

std::string file_digest(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot open '" + path + "' for digest");
    std::uint64_t h = 1469598103934665603ull;
    char buf[4096];
    while (f.read(buf, sizeof buf) || f.gcount() > 0) {
        for (std::streamsize i = 0; i < f.gcount(); ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 1099511628211ull;
        }
        if (!f) break;
    }
    std::ostringstream os;
    os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

}  // namespace specsim::io
