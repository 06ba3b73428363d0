#include "specsim/mapping.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace specsim {

namespace {

struct SortedSupport {
    std::vector<std::string> labels;
    std::vector<double> probs;
    std::vector<double> cum;  // cum[i] = sum of probs[0..i]
};

// Spectrum order: probability descending, ties by label ascending; zero
// probabilities dropped.
SortedSupport sorted_support(const Pmf& p) {
    p.validate();
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p.probs[i] > 0.0) order.push_back(i);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (p.probs[a] != p.probs[b]) return p.probs[a] > p.probs[b];
        return p.labels[a] < p.labels[b];
    });
    SortedSupport s;
    s.labels.reserve(order.size());
    s.probs.reserve(order.size());
    s.cum.reserve(order.size());
    double sum = 0.0, comp = 0.0;
    for (std::size_t i : order) {
        s.labels.push_back(p.labels[i]);
        s.probs.push_back(p.probs[i]);
        double y = p.probs[i] - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        s.cum.push_back(sum);
    }
    return s;
}

// Smallest 1-based head length whose tail mass (including tail_mass) drops
// strictly below eps.
std::size_t head_index(const SortedSupport& s, double tail_mass, double eps) {
    // Tail sums accumulated back-to-front for accuracy.
    std::vector<double> tail(s.probs.size() + 1);
    tail[s.probs.size()] = tail_mass;
    for (std::size_t i = s.probs.size(); i-- > 0;) tail[i] = tail[i + 1] + s.probs[i];
    for (std::size_t j = 1; j <= s.probs.size(); ++j)
        if (tail[j] < eps) return j;
    throw PreconditionError(
        "build_mapping: truncated support never drops below eps; full coverage needed");
}

}  // namespace

const std::string& DeterministicMap::apply(const std::string& x) const {
    auto it = assignment.find(x);
    if (it == assignment.end())
        throw AlphabetError("map: symbol '" + x + "' outside the domain");
    return it->second;
}

DeterministicMap DeterministicMap::identity(const std::vector<std::string>& labels) {
    DeterministicMap m;
    m.domain_labels = labels;
    m.codomain_labels = labels;
    for (const auto& l : labels) m.assignment[l] = l;
    return m;
}

DeterministicMap DeterministicMap::constant(const std::vector<std::string>& domain,
                                            const std::string& target) {
    DeterministicMap m;
    m.domain_labels = domain;
    m.codomain_labels = {target};
    for (const auto& l : domain) m.assignment[l] = target;
    return m;
}

DeterministicMap build_mapping(const Pmf& coin, const Pmf& target, double eps, double gamma) {
    if (!(eps > 0.0) || !(eps < 1.0))
        throw PreconditionError("build_mapping: eps must lie in (0, 1)");
    if (!(gamma > 0.0))
        throw PreconditionError("build_mapping: gamma must be positive");
    // Relative slack absorbs the 1-ulp noise of exp(log(eps)) at equality.
    if (std::exp(-gamma) > eps * (1.0 + 1e-12))
        throw PreconditionError("build_mapping: hypothesis exp(-gamma) <= eps violated");

    SortedSupport cx = sorted_support(coin);
    SortedSupport cy = sorted_support(target);
    if (cy.labels.empty())
        throw PreconditionError("build_mapping: target support is empty");
    if (cx.labels.empty())
        throw PreconditionError("build_mapping: coin support is empty");

    const std::size_t i1 = head_index(cx, coin.tail_mass, eps);
    const std::size_t i2 = head_index(cy, target.tail_mass, eps);

    DeterministicMap m;
    m.domain_labels = coin.labels;
    m.codomain_labels = target.labels;
    DeterministicMap::Meta meta{eps, gamma, i1, i2, 0};

    for (std::size_t i = 1; i <= i1; ++i) {
        // delta^x_{i-1} lands in [delta^y_{j-1}, delta^y_j).
        double t = (i == 1) ? 0.0 : cx.cum[i - 2];
        auto it = std::upper_bound(cy.cum.begin(), cy.cum.end(), t);
        std::size_t jj = static_cast<std::size_t>(it - cy.cum.begin());
        jj = std::min(jj, i2 - 1);
        m.assignment[cx.labels[i - 1]] = cy.labels[jj];
        if (i == i1) meta.j2 = jj + 1;
    }
    // Everything outside the head maps to the i2-th target symbol, including
    // zero-probability coin labels.
    const std::string& sink = cy.labels[i2 - 1];
    for (const auto& l : coin.labels)
        if (!m.assignment.count(l)) m.assignment[l] = sink;

    m.meta = meta;
    return m;
}

Pmf pushforward(const DeterministicMap& map, const Pmf& p) {
    p.validate();
    if (p.tail_mass != 0.0)
        throw PreconditionError("pushforward: nonzero tail_mass cannot be mapped");
    std::unordered_map<std::string, std::size_t> idx;
    idx.reserve(map.codomain_labels.size());
    for (std::size_t i = 0; i < map.codomain_labels.size(); ++i)
        idx[map.codomain_labels[i]] = i;

    std::vector<double> q(map.codomain_labels.size(), 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.probs[i] == 0.0) continue;
        auto it = map.assignment.find(p.labels[i]);
        if (it == map.assignment.end())
            throw AlphabetError("pushforward: symbol '" + p.labels[i] + "' outside the map domain");
        q[idx.at(it->second)] += p.probs[i];
    }
    Pmf out;
    out.labels = map.codomain_labels;
    out.probs = std::move(q);
    out.validate();
    return out;
}

Prop1Report check_prop1_bound(const Pmf& coin, const Pmf& target, double eps, double gamma) {
    DeterministicMap map = build_mapping(coin, target, eps, gamma);
    Pmf pushed = pushforward(map, coin);
    Prop1Report r;
    r.eps = eps;
    r.gamma = gamma;
    r.i1 = map.meta->i1;
    r.i2 = map.meta->i2;
    r.j2 = map.meta->j2;
    r.deficiency = deficiency_measure(build_spectrum(coin), build_spectrum(target), gamma);
    r.d = variational_distance(target, pushed);
    r.bound = 9.0 * eps + 10.0 * r.deficiency;
    r.pass = r.d <= r.bound + 1e-9;
    return r;
}

void RealRvDist::validate() const {
    if (values.size() != probs.size())
        throw PreconditionError("real rv dist: values/probs length mismatch");
    double sum = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (!std::isfinite(values[i]))
            throw PreconditionError("real rv dist: non-finite value");
        if (!(probs[i] >= 0.0))
            throw PreconditionError("real rv dist: negative probability");
        sum += probs[i];
    }
    if (std::fabs(sum - 1.0) > 1e-12)
        throw PreconditionError("real rv dist: total mass not 1");
}

RealRvDist RealRvDist::from_pmf_self_information(const Pmf& p) {
    p.validate();
    if (p.tail_mass != 0.0)
        throw PreconditionError("self-information dist: nonzero tail_mass");
    RealRvDist d;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.probs[i] <= 0.0) continue;
        d.values.push_back(-std::log(p.probs[i]));
        d.probs.push_back(p.probs[i]);
    }
    return d;
}

RealRvDist RealRvDist::point(double v) { return RealRvDist{{v}, {1.0}}; }

namespace {

struct Cdf {
    std::vector<double> points;  // ascending, unique
    std::vector<double> cum;     // Pr{ X <= points[i] }

    explicit Cdf(const RealRvDist& d) {
        std::vector<std::pair<double, double>> vp;
        for (std::size_t i = 0; i < d.values.size(); ++i)
            if (d.probs[i] > 0.0) vp.emplace_back(d.values[i], d.probs[i]);
        std::sort(vp.begin(), vp.end());
        double sum = 0.0;
        for (const auto& [v, p] : vp) {
            sum += p;
            if (!points.empty() && points.back() == v)
                cum.back() = sum;
            else {
                points.push_back(v);
                cum.push_back(sum);
            }
        }
    }

    double at(double x) const {
        auto it = std::upper_bound(points.begin(), points.end(), x);
        return it == points.begin() ? 0.0 : cum[static_cast<std::size_t>(it - points.begin()) - 1];
    }
};

bool levy_feasible(const Cdf& fu, const Cdf& fv, double mu) {
    // The sandwich only needs checking where its step functions jump.
    for (std::size_t i = 0; i < fv.points.size(); ++i)
        if (fv.cum[i] > fu.at(fv.points[i] + mu) + mu) return false;
    for (std::size_t i = 0; i < fu.points.size(); ++i)
        if (fu.cum[i] - mu > fv.at(fu.points[i] + mu)) return false;
    return true;
}

}  // namespace

double levy_distance(const RealRvDist& u, const RealRvDist& v) {
    u.validate();
    v.validate();
    Cdf fu(u), fv(v);
    if (levy_feasible(fu, fv, 0.0)) return 0.0;
    double lo = 0.0, hi = 1.0;  // mu = 1 always satisfies the sandwich
    while (hi - lo > 1e-10) {
        double mid = 0.5 * (lo + hi);
        if (levy_feasible(fu, fv, mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

Pmf JointPmf::marginal_x() const {
    std::vector<double> p(x_labels.size(), 0.0);
    for (std::size_t i = 0; i < joint.size(); ++i)
        for (double q : joint[i]) p[i] += q;
    Pmf out;
    out.labels = x_labels;
    out.probs = std::move(p);
    return out;
}

Pmf JointPmf::marginal_y() const {
    std::vector<double> p(y_labels.size(), 0.0);
    for (const auto& row : joint)
        for (std::size_t j = 0; j < row.size(); ++j) p[j] += row[j];
    Pmf out;
    out.labels = y_labels;
    out.probs = std::move(p);
    return out;
}

namespace {

double linear_overlap(double a, double b, double c, double d) {
    return std::max(0.0, std::min(b, d) - std::max(a, c));
}

// Overlap of the cyclic interval [a - eps, b - eps) mod 1 with [c, d).
double shifted_overlap(double a, double b, double eps, double c, double d) {
    double s = a - eps;
    double len = b - a;
    if (s < 0.0) s += 1.0;
    double e = s + len;
    if (e <= 1.0) return linear_overlap(s, e, c, d);
    return linear_overlap(s, 1.0, c, d) + linear_overlap(0.0, e - 1.0, c, d);
}

}  // namespace

JointPmf shifted_coupling(const Pmf& x, const Pmf& y, double eps) {
    if (!(eps > 0.0) || !(eps < 1.0))
        throw PreconditionError("shifted_coupling: eps must lie in (0, 1)");
    if (x.tail_mass != 0.0 || y.tail_mass != 0.0)
        throw PreconditionError("shifted_coupling: full coverage required");
    SortedSupport sx = sorted_support(x);
    SortedSupport sy = sorted_support(y);

    JointPmf j;
    j.x_labels = sx.labels;
    j.y_labels = sy.labels;
    j.joint.assign(sx.labels.size(), std::vector<double>(sy.labels.size(), 0.0));
    for (std::size_t i = 0; i < sx.labels.size(); ++i) {
        double ax = (i == 0) ? 0.0 : sx.cum[i - 1];
        double bx = sx.cum[i];
        // Distribute the x-interval exactly: the last y cell absorbs rounding.
        double remaining = bx - ax;
        for (std::size_t k = 0; k < sy.labels.size(); ++k) {
            double ay = (k == 0) ? 0.0 : sy.cum[k - 1];
            double by = sy.cum[k];
            double o = shifted_overlap(ax, bx, eps, ay, by);
            j.joint[i][k] = o;
            remaining -= o;
        }
        // Spread any fp leftover onto the largest cell of the row.
        if (remaining != 0.0) {
            std::size_t best = 0;
            for (std::size_t k = 1; k < sy.labels.size(); ++k)
                if (j.joint[i][k] > j.joint[i][best]) best = k;
            j.joint[i][best] = std::max(0.0, j.joint[i][best] + remaining);
        }
    }
    return j;
}

double joint_log_ratio_cdf(const JointPmf& j, const Pmf& x, const Pmf& y, double threshold) {
    std::unordered_map<std::string, double> px, py;
    for (std::size_t i = 0; i < x.size(); ++i) px[x.labels[i]] = x.probs[i];
    for (std::size_t i = 0; i < y.size(); ++i) py[y.labels[i]] = y.probs[i];
    double sum = 0.0;
    for (std::size_t i = 0; i < j.x_labels.size(); ++i) {
        double lx = -std::log(px.at(j.x_labels[i]));
        for (std::size_t k = 0; k < j.y_labels.size(); ++k) {
            if (j.joint[i][k] <= 0.0) continue;
            double ly = -std::log(py.at(j.y_labels[k]));
            if (lx - ly < threshold) sum += j.joint[i][k];
        }
    }
    return sum;
}

}  // namespace specsim
