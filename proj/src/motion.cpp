#include "holmc/motion.hpp"

#include <algorithm>
#include <cmath>

namespace holmc {

double pairwise_motion_distance(const Trajectory& a, const Trajectory& b, const FlowStats& stats) {
    const FrameSpan span = common_frames(a, b);
    if (span.length() < 2)
        throw NoOverlapError();
    double worst = 0.0;
    for (int f = span.begin; f < span.end; ++f)
        worst = std::max(worst, (a.velocity(f) - b.velocity(f)).norm() / stats.sigma(f));
    return worst;
}

double mean_spatial_distance(const Trajectory& a, const Trajectory& b) {
    const FrameSpan span = common_frames(a, b);
    if (span.length() < 1)
        throw NoOverlapError();
    double sum = 0.0;
    for (int f = span.begin; f < span.end; ++f)
        sum += distance(a.at(f), b.at(f));
    return sum / span.length();
}

double max_spatial_distance(const Trajectory& a, const Trajectory& b) {
    const FrameSpan span = common_frames(a, b);
    if (span.length() < 1)
        throw NoOverlapError();
    double worst = 0.0;
    for (int f = span.begin; f < span.end; ++f)
        worst = std::max(worst, distance(a.at(f), b.at(f)));
    return worst;
}

double mean_feature_distance(const Trajectory& a, const Trajectory& b) {
    if (a.features.empty() || b.features.empty())
        return 0.0;
    const FrameSpan span = common_frames(a, b);
    if (span.length() < 1)
        throw NoOverlapError();
    double sum = 0.0;
    for (int f = span.begin; f < span.end; ++f) {
        const auto& fa = a.features[static_cast<std::size_t>(f - a.start)];
        const auto& fb = b.features[static_cast<std::size_t>(f - b.start)];
        double d2 = 0.0;
        for (std::size_t i = 0; i < fa.size(); ++i) {
            const double d = fa[i] - fb[i];
            d2 += d * d;
        }
        sum += std::sqrt(d2);
    }
    return sum / span.length();
}

double pairwise_cost(const Trajectory& a, const Trajectory& b, const FlowStats& stats,
                     const CostParams& p) {
    const double dm = pairwise_motion_distance(a, b, stats);
    const double ds = mean_spatial_distance(a, b);
    const double dc = mean_feature_distance(a, b);
    const double full = p.theta_bar0 + p.theta1 * dm + p.theta2 * ds + p.theta3 * dc;
    const double motion_only = p.theta0 + p.theta1 * dm;
    return -std::max(full, motion_only);
}

Vec2 EuclideanTransform::apply(Vec2 p) const {
    const double c = std::cos(angle), s = std::sin(angle);
    return {scale * (c * p.x - s * p.y) + shift.x, scale * (s * p.x + c * p.y) + shift.y};
}

EuclideanTransform estimate_euclidean_transform(Vec2 a_from, Vec2 a_to, Vec2 b_from, Vec2 b_to,
                                                double delta) {
    const Vec2 u = a_from - b_from;
    const Vec2 w = a_to - b_to;
    const double nu = u.norm();
    if (nu <= delta)
        throw DegeneratePairError();
    const double nw = w.norm();

    EuclideanTransform t;
    t.scale = nw / nu;
    if (nw > 0.0) {
        const double c = std::clamp(dot(w, u) / (nw * nu), -1.0, 1.0);
        t.angle = std::copysign(std::acos(c), cross(u, w));
    }
    const Vec2 mid_from = (a_from + b_from) * 0.5;
    const Vec2 mid_to = (a_to + b_to) * 0.5;
    const double c = std::cos(t.angle), s = std::sin(t.angle);
    t.shift = {mid_to.x - t.scale * (c * mid_from.x - s * mid_from.y),
               mid_to.y - t.scale * (s * mid_from.x + c * mid_from.y)};
    return t;
}

EuclideanTransform estimate_euclidean_transform(const Trajectory& a, const Trajectory& b, int t,
                                                int t2, double delta) {
    return estimate_euclidean_transform(a.at(t), a.at(t2), b.at(t), b.at(t2), delta);
}

double triplet_distance(const EuclideanTransform& transform, const Trajectory& c, int t, int t2) {
    return distance(transform.apply(c.at(t)), c.at(t2));
}

double triplet_weight(const Trajectory& a, const Trajectory& b, const Trajectory& c, int t,
                      const FlowStats& stats, double delta) {
    const double dab = distance(a.at(t), b.at(t));
    const double dac = distance(a.at(t), c.at(t));
    const double dbc = distance(b.at(t), c.at(t));
    if (dab <= delta || dac <= delta || dbc <= delta)
        throw DegenerateTripleError();
    return std::pow(0.5 * (dab / dac + dab / dbc), 0.25) / stats.sigma(t);
}

double combine_triplet_cost(double d_min, double d_max, const CostParams& p) {
    const double c_min = p.triple_theta0 + p.triple_theta1 * d_min;
    const double c_max = p.triple_theta0 + p.triple_theta1 * d_max;
    if (c_min > 0.0 && c_max > 0.0)
        return c_min;
    if (c_min < 0.0 && c_max < 0.0)
        return c_max;
    return 0.0; // the fitted models disagree about this triple
}

double triplet_cost(const Trajectory& a, const Trajectory& b, const Trajectory& c,
                    const FlowStats& stats, const CostParams& params) {
    const FrameSpan span = common_frames(a, b, c);
    if (span.length() < 2)
        throw NoOverlapError();

    double d_min = 0.0, d_max = 0.0;
    bool any = false;
    for (int t = span.begin; t + 1 < span.end; ++t) {
        const double dab = distance(a.at(t), b.at(t));
        const double dac = distance(a.at(t), c.at(t));
        const double dbc = distance(b.at(t), c.at(t));
        if (dab <= default_degeneracy_delta || dac <= default_degeneracy_delta ||
            dbc <= default_degeneracy_delta)
            continue;

        const double e_ab = triplet_weight(a, b, c, t, stats) *
                            triplet_distance(estimate_euclidean_transform(a, b, t, t + 1), c, t,
                                             t + 1);
        const double e_ac = triplet_weight(a, c, b, t, stats) *
                            triplet_distance(estimate_euclidean_transform(a, c, t, t + 1), b, t,
                                             t + 1);
        const double e_bc = triplet_weight(b, c, a, t, stats) *
                            triplet_distance(estimate_euclidean_transform(b, c, t, t + 1), a, t,
                                             t + 1);
        d_max = std::max(d_max, std::max({e_ab, e_ac, e_bc}));
        d_min = std::max(d_min, std::min({e_ab, e_ac, e_bc}));
        any = true;
    }
    if (!any)
        throw DegenerateTripleError();
    return combine_triplet_cost(d_min, d_max, params);
}

} // namespace holmc
