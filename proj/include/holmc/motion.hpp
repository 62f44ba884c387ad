#pragma once

#include "holmc/trajectory.hpp"
#include "holmc/vec2.hpp"

namespace holmc {

struct CostParams {
    /* pairwise: cost = -max(theta_bar0 + theta1 d_motion + theta2 d_spatial
     *                       + theta3 d_feature, theta0 + theta1 d_motion) */
    double theta_bar0 = 1.0;
    double theta0 = 1.0;
    double theta1 = -0.08;
    double theta2 = 0.0;
    double theta3 = 0.0;
    /* third order: cost = triple_theta0 + triple_theta1 * distance */
    double triple_theta0 = -1.0;
    double triple_theta1 = 0.08;
};

inline constexpr double default_degeneracy_delta = 1e-6;

/* Largest normalized velocity difference over the common lifetime. Requires
 * at least two common frames, else NoOverlapError. */
double pairwise_motion_distance(const Trajectory& a, const Trajectory& b,
                                const FlowStats& stats = {});

/* Average / maximum point distance over the common lifetime. */
double mean_spatial_distance(const Trajectory& a, const Trajectory& b);
double max_spatial_distance(const Trajectory& a, const Trajectory& b);

/* Average feature distance over the common lifetime; 0 when either trajectory
 * carries no features. */
double mean_feature_distance(const Trajectory& a, const Trajectory& b);

double pairwise_cost(const Trajectory& a, const Trajectory& b, const FlowStats& stats = {},
                     const CostParams& params = {});

/* similarity transform without reflection: p -> scale * R(angle) * p + shift */
struct EuclideanTransform {
    double scale = 1.0;
    double angle = 0.0; // radians
    Vec2 shift{};

    Vec2 apply(Vec2 p) const;
};

/* The unique transform mapping two points onto their target positions.
 * Throws DegeneratePairError when the source points are closer than delta. */
EuclideanTransform estimate_euclidean_transform(Vec2 a_from, Vec2 a_to, Vec2 b_from, Vec2 b_to,
                                                double delta = default_degeneracy_delta);
EuclideanTransform estimate_euclidean_transform(const Trajectory& a, const Trajectory& b, int t,
                                                int t2, double delta = default_degeneracy_delta);

/* Prediction error of a transform on a third trajectory over one transition. */
double triplet_distance(const EuclideanTransform& transform, const Trajectory& c, int t, int t2);

/* Normalization for the prediction error of the model fitted to (a, b) and
 * evaluated on c, from the point configuration at frame t. Throws
 * DegenerateTripleError when any pair sits closer than delta. */
double triplet_weight(const Trajectory& a, const Trajectory& b, const Trajectory& c, int t,
                      const FlowStats& stats = {}, double delta = default_degeneracy_delta);

/* Folds the over- and under-estimated model errors into one cost; zero when
 * their signs disagree. */
double combine_triplet_cost(double d_min, double d_max, const CostParams& params = {});

/* Third-order cost over the common lifetime of three trajectories. Requires
 * two common frames (NoOverlapError); transitions with near-coincident points
 * are skipped, all of them degenerate raises DegenerateTripleError. */
double triplet_cost(const Trajectory& a, const Trajectory& b, const Trajectory& c,
                    const FlowStats& stats = {}, const CostParams& params = {});

} // namespace holmc
