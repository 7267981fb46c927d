#include "pdattack/proxops.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace pdattack {

namespace {

void check_lambda(double lambda) {
    if (!(lambda > 0.0))
        throw std::invalid_argument("prox: lambda must be positive");
}

double sgn(double v) { return v < 0.0 ? -1.0 : 1.0; }

}  // namespace

std::string to_string(const NormKind& kind) {
    switch (kind.tag) {
        case NormTag::Linf: return "linf";
        case NormTag::L2: return "l2";
        case NormTag::L1: return "l1";
        case NormTag::L0: return "l0";
        case NormTag::GroupL0: return "group-l0:" + std::to_string(kind.group_size);
        case NormTag::LpHalf: return "l1,2";
        case NormTag::LpTwoThirds: return "l2,3";
    }
    return "?";
}

NormKind norm_kind_from_string(const std::string& s) {
    if (s == "linf") return {NormTag::Linf, 1};
    if (s == "l2") return {NormTag::L2, 1};
    if (s == "l1") return {NormTag::L1, 1};
    if (s == "l0") return {NormTag::L0, 1};
    if (s == "l1,2" || s == "l0.5") return {NormTag::LpHalf, 1};
    if (s == "l2,3") return {NormTag::LpTwoThirds, 1};
    if (s.rfind("group-l0", 0) == 0) {
        std::size_t gs = 3;
        const auto colon = s.find(':');
        if (colon != std::string::npos) gs = std::stoul(s.substr(colon + 1));
        if (gs == 0) throw std::invalid_argument("group size must be positive");
        return {NormTag::GroupL0, gs};
    }
    throw std::invalid_argument("unknown norm: " + s);
}

GroupPartition GroupPartition::contiguous(std::size_t length, std::size_t group_size) {
    if (group_size == 0 || length % group_size != 0)
        throw std::invalid_argument("GroupPartition: group size must divide length");
    GroupPartition part;
    part.num_groups = length / group_size;
    part.group_of.resize(length);
    for (std::size_t i = 0; i < length; ++i) part.group_of[i] = i / group_size;
    return part;
}

void GroupPartition::validate(std::size_t length) const {
    if (group_of.size() != length)
        throw std::invalid_argument("GroupPartition: wrong length");
    std::vector<std::size_t> counts(num_groups, 0);
    for (std::size_t g : group_of) {
        if (g >= num_groups)
            throw std::invalid_argument("GroupPartition: group id out of range");
        ++counts[g];
    }
    for (std::size_t c : counts)
        if (c == 0) throw std::invalid_argument("GroupPartition: empty group");
}

std::vector<std::vector<std::size_t>> GroupPartition::members() const {
    std::vector<std::vector<std::size_t>> out(num_groups);
    for (std::size_t i = 0; i < group_of.size(); ++i) out[group_of[i]].push_back(i);
    return out;
}

double norm_value(const NormKind& kind, const Tensor& v) {
    switch (kind.tag) {
        case NormTag::Linf: {
            double m = 0.0;
            for (double x : v.data) m = std::max(m, std::fabs(x));
            return m;
        }
        case NormTag::L2:
            return l2_norm(v);
        case NormTag::L1: {
            double s = 0.0;
            for (double x : v.data) s += std::fabs(x);
            return s;
        }
        case NormTag::L0: {
            double c = 0.0;
            for (double x : v.data)
                if (std::fabs(x) > kEffectiveZero) c += 1.0;
            return c;
        }
        case NormTag::GroupL0: {
            const GroupPartition part =
                GroupPartition::contiguous(v.size(), kind.group_size);
            std::vector<char> active(part.num_groups, 0);
            for (std::size_t i = 0; i < v.size(); ++i)
                if (std::fabs(v[i]) > kEffectiveZero) active[part.group_of[i]] = 1;
            return std::accumulate(active.begin(), active.end(), 0.0);
        }
        case NormTag::LpHalf:
        case NormTag::LpTwoThirds: {
            const double p = kind.tag == NormTag::LpHalf ? 0.5 : 2.0 / 3.0;
            double s = 0.0;
            for (double x : v.data) s += std::pow(std::fabs(x), p);
            return std::pow(s, 1.0 / p);
        }
    }
    throw std::logic_error("norm_value: unreachable");
}

Tensor project_box(const Tensor& x, const Tensor& r) {
    check_same_size(x, r, "project_box");
    Tensor out = r;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = std::clamp(x[i] + r[i], 0.0, 1.0) - x[i];
    return out;
}

std::array<double, 2> project_simplex2(const std::array<double, 2>& v) {
    // Project onto the line a+b=1, then clamp to the segment endpoints.
    const double mu = (v[0] + v[1] - 1.0) / 2.0;
    const double a = v[0] - mu;
    if (a <= 0.0) return {0.0, 1.0};
    if (a >= 1.0) return {1.0, 0.0};
    return {a, 1.0 - a};
}

Tensor project_l1_ball(const Tensor& v, double radius) {
    if (!(radius > 0.0))
        throw std::invalid_argument("project_l1_ball: radius must be positive");
    double l1 = 0.0;
    for (double x : v.data) l1 += std::fabs(x);
    if (l1 <= radius) return v;

    std::vector<double> mags(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) mags[i] = std::fabs(v[i]);
    std::sort(mags.begin(), mags.end(), std::greater<double>());
    double cumsum = 0.0;
    double theta = 0.0;
    for (std::size_t j = 0; j < mags.size(); ++j) {
        cumsum += mags[j];
        const double candidate = (cumsum - radius) / double(j + 1);
        if (mags[j] - candidate > 0.0)
            theta = candidate;
        else
            break;
    }
    Tensor out = v;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = sgn(v[i]) * std::max(std::fabs(v[i]) - theta, 0.0);
    return out;
}

Tensor project_l2_ball(const Tensor& v, double radius) {
    if (!(radius > 0.0))
        throw std::invalid_argument("project_l2_ball: radius must be positive");
    const double n = l2_norm(v);
    if (n <= radius) return v;
    return (radius / n) * v;
}

Tensor project_linf_ball(const Tensor& v, double radius) {
    if (!(radius > 0.0))
        throw std::invalid_argument("project_linf_ball: radius must be positive");
    Tensor out = v;
    for (double& x : out.data) x = std::clamp(x, -radius, radius);
    return out;
}

Tensor prox_l1(const Tensor& v, double lambda) {
    check_lambda(lambda);
    Tensor out = v;
    for (double& x : out.data)
        x = sgn(x) * std::max(std::fabs(x) - lambda, 0.0);
    return out;
}

Tensor prox_l2(const Tensor& v, double lambda) {
    check_lambda(lambda);
    const double n = l2_norm(v);
    if (n <= lambda) return Tensor::zeros_like(v);
    return (1.0 - lambda / n) * v;
}

Tensor prox_linf(const Tensor& v, double lambda) {
    check_lambda(lambda);
    double l1 = 0.0;
    for (double x : v.data) l1 += std::fabs(x);
    if (l1 <= lambda) return Tensor::zeros_like(v);
    const Tensor scaled = (1.0 / lambda) * v;
    const Tensor projected = project_l1_ball(scaled, 1.0);
    Tensor out = v;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = v[i] - lambda * projected[i];
    return out;
}

Tensor prox_l0(const Tensor& v, double lambda) {
    check_lambda(lambda);
    const double threshold = std::sqrt(2.0 * lambda);
    Tensor out = v;
    for (double& x : out.data)
        if (std::fabs(x) <= threshold) x = 0.0;
    return out;
}

Tensor prox_group_l0(const Tensor& v, double lambda, const GroupPartition& part) {
    check_lambda(lambda);
    part.validate(v.size());
    // Per group the prox is a binary keep/zero choice; zeroing costs
    // ||v_g||^2 / (2 lambda) against 1 for keeping, so a group survives only
    // when its total energy exceeds 2 lambda. Ties are zeroed.
    std::vector<double> energy(part.num_groups, 0.0);
    for (std::size_t i = 0; i < v.size(); ++i)
        energy[part.group_of[i]] += v[i] * v[i];
    Tensor out = v;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (energy[part.group_of[i]] <= 2.0 * lambda) out[i] = 0.0;
    return out;
}

Tensor prox_group_l0_weighted(const Tensor& v, double lambda, const Tensor& step,
                              const GroupPartition& part) {
    check_lambda(lambda);
    check_same_size(v, step, "prox_group_l0_weighted");
    part.validate(v.size());
    std::vector<double> energy(part.num_groups, 0.0);
    for (std::size_t i = 0; i < v.size(); ++i)
        energy[part.group_of[i]] += v[i] * v[i] / step[i];
    Tensor out = v;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (energy[part.group_of[i]] <= 2.0 * lambda) out[i] = 0.0;
    return out;
}

std::vector<double> solve_depressed_cubic(double p, double q) {
    std::vector<double> roots;
    if (p == 0.0 && q == 0.0) {
        roots.push_back(0.0);
        return roots;
    }
    const double disc = -4.0 * p * p * p - 27.0 * q * q;
    if (disc > 0.0) {
        // Three distinct real roots (requires p < 0): trigonometric form.
        const double m = 2.0 * std::sqrt(-p / 3.0);
        const double arg = std::clamp(3.0 * q / (p * m), -1.0, 1.0);
        const double phi = std::acos(arg) / 3.0;
        constexpr double two_thirds_pi = 2.0943951023931953;
        for (int k = 0; k < 3; ++k)
            roots.push_back(m * std::cos(phi - two_thirds_pi * k));
    } else if (disc == 0.0 && p != 0.0) {
        roots.push_back(3.0 * q / p);          // simple root
        roots.push_back(-3.0 * q / (2.0 * p)); // double root
    } else {
        const double radical = std::sqrt(q * q / 4.0 + p * p * p / 27.0);
        roots.push_back(std::cbrt(-q / 2.0 + radical) +
                        std::cbrt(-q / 2.0 - radical));
    }
    return roots;
}

std::vector<double> solve_depressed_quartic(double q, double r) {
    std::vector<double> roots;
    if (q == 0.0) {
        // x^4 = -r
        if (r <= 0.0) {
            const double x = std::pow(-r, 0.25);
            roots.push_back(x);
            roots.push_back(-x);
        }
        return roots;
    }
    // Ferrari: pick a positive root s of the resolvent s^3 - r s - q^2/8 = 0,
    // then split into two quadratics.
    double s = 0.0;
    for (double cand : solve_depressed_cubic(-r, -q * q / 8.0)) s = std::max(s, cand);
    if (s <= 0.0) return roots;
    const double a = std::sqrt(2.0 * s);
    const double half_q_over_a = q / (2.0 * a);
    const double d1 = a * a - 4.0 * (s + half_q_over_a);
    if (d1 >= 0.0) {
        roots.push_back((a + std::sqrt(d1)) / 2.0);
        roots.push_back((a - std::sqrt(d1)) / 2.0);
    }
    const double d2 = a * a - 4.0 * (s - half_q_over_a);
    if (d2 >= 0.0) {
        roots.push_back((-a + std::sqrt(d2)) / 2.0);
        roots.push_back((-a - std::sqrt(d2)) / 2.0);
    }
    return roots;
}

double prox_lp_scalar(double v, double lambda, double p) {
    check_lambda(lambda);
    const bool half = p == 0.5 || std::fabs(p - 0.5) < 1e-9;
    const bool two_thirds = p == 2.0 / 3.0 || std::fabs(p - 2.0 / 3.0) < 1e-9;
    if (!half && !two_thirds)
        throw std::invalid_argument("prox_lp: unsupported p");
    if (v == 0.0) return 0.0;
    const double mag = std::fabs(v);
    const double sign = sgn(v);

    // Stationary points of lambda u^p + (u - mag)^2 / 2 for u > 0 satisfy a
    // depressed cubic in sqrt(u) (p = 1/2) or quartic in cbrt(u) (p = 2/3).
    std::vector<double> candidates;
    if (half) {
        for (double w : solve_depressed_cubic(-mag, lambda / 2.0))
            if (w > 0.0) candidates.push_back(w * w);
    } else {
        for (double w : solve_depressed_quartic(-mag, 2.0 * lambda / 3.0))
            if (w > 0.0) candidates.push_back(w * w * w);
    }
    const double exponent = half ? 0.5 : 2.0 / 3.0;
    const double obj_zero = mag * mag / 2.0;
    double best_u = 0.0;
    double best_obj = obj_zero;
    for (double u : candidates) {
        const double obj = lambda * std::pow(u, exponent) +
                           (u - mag) * (u - mag) / 2.0;
        if (obj < best_obj) {
            best_obj = obj;
            best_u = u;
        }
    }
    return sign * best_u;
}

Tensor prox_lp(const Tensor& v, double lambda, double p) {
    check_lambda(lambda);
    Tensor out = v;
    for (double& x : out.data) x = prox_lp_scalar(x, lambda, p);
    return out;
}

Tensor prox_group_lp(const Tensor& v, double lambda, double p,
                     const GroupPartition& part) {
    check_lambda(lambda);
    part.validate(v.size());
    std::vector<std::size_t> max_index(part.num_groups,
                                       std::numeric_limits<std::size_t>::max());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::size_t g = part.group_of[i];
        if (max_index[g] == std::numeric_limits<std::size_t>::max() ||
            std::fabs(v[i]) > std::fabs(v[max_index[g]]))
            max_index[g] = i;
    }
    Tensor out = v;
    for (std::size_t g = 0; g < part.num_groups; ++g) {
        const std::size_t i = max_index[g];
        const double shrunk = prox_lp_scalar(v[i], lambda, p);
        out[i] = shrunk;
        if (shrunk == 0.0)
            for (std::size_t j = 0; j < v.size(); ++j)
                if (part.group_of[j] == g) out[j] = 0.0;
    }
    return out;
}

Tensor prox_l1_weighted(const Tensor& v, double lambda, const Tensor& step) {
    check_lambda(lambda);
    check_same_size(v, step, "prox_l1_weighted");
    Tensor out = v;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = sgn(v[i]) * std::max(std::fabs(v[i]) - lambda * step[i], 0.0);
    return out;
}

Tensor prox_l0_weighted(const Tensor& v, double lambda, const Tensor& step) {
    check_lambda(lambda);
    check_same_size(v, step, "prox_l0_weighted");
    Tensor out = v;
    for (std::size_t i = 0; i < out.size(); ++i)
        if (std::fabs(v[i]) <= std::sqrt(2.0 * lambda * step[i])) out[i] = 0.0;
    return out;
}

Tensor prox_lp_weighted(const Tensor& v, double lambda, double p,
                        const Tensor& step) {
    check_lambda(lambda);
    check_same_size(v, step, "prox_lp_weighted");
    Tensor out = v;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = prox_lp_scalar(v[i], lambda * step[i], p);
    return out;
}

Tensor prox_group_lp_weighted(const Tensor& v, double lambda, double p,
                              const Tensor& step, const GroupPartition& part) {
    check_lambda(lambda);
    check_same_size(v, step, "prox_group_lp_weighted");
    part.validate(v.size());
    std::vector<std::size_t> max_index(part.num_groups,
                                       std::numeric_limits<std::size_t>::max());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const std::size_t g = part.group_of[i];
        if (max_index[g] == std::numeric_limits<std::size_t>::max() ||
            std::fabs(v[i]) > std::fabs(v[max_index[g]]))
            max_index[g] = i;
    }
    Tensor out = v;
    for (std::size_t g = 0; g < part.num_groups; ++g) {
        const std::size_t i = max_index[g];
        const double shrunk = prox_lp_scalar(v[i], lambda * step[i], p);
        out[i] = shrunk;
        if (shrunk == 0.0)
            for (std::size_t j = 0; j < v.size(); ++j)
                if (part.group_of[j] == g) out[j] = 0.0;
    }
    return out;
}

}  // namespace pdattack
