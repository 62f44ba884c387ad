#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "holmc/hypergraph.hpp"
#include "holmc/motion.hpp"
#include "holmc/trajectory.hpp"
#include "holmc/vec2.hpp"

namespace holmc {

/* Axis-aligned rectangle with inclusive bounds. */
struct Rect {
    double x0 = 0, y0 = 0, x1 = 0, y1 = 0;

    bool contains(double x, double y) const;
    bool overlaps(const Rect& other) const;
};

/* A rigid scene object. Trajectories start on a grid over the support and
 * follow the listed motion; a single transform repeats on every transition. */
struct ObjectSpec {
    Rect support;
    std::vector<EuclideanTransform> motion;
};

struct SceneSpec {
    int n_frames = 2;
    double step = 8.0;      // sampling grid spacing
    double noise_sigma = 0; // iid Gaussian jitter on every observed position
    std::uint64_t seed = 0;
    std::vector<ObjectSpec> objects;
};

struct Scene {
    std::vector<Trajectory> trajectories;
    std::vector<std::uint32_t> labels; // object index per trajectory
    int n_frames = 0;
};

/* Object supports must be pairwise disjoint so the labels are unambiguous. */
Scene generate_scene(const SceneSpec& spec);

/* Dense two-frame flow instances on a side x side pixel grid, nodes in
 * row-major order. Third order costs come from a fixed local stencil,
 * zero cost connectivity edges tie the 8-neighborhood together, and with
 * `lifted` set the pixel pairs at the given offset get pairwise motion
 * costs on lifted edges. */
struct GridSpec {
    int side = 8;
    bool lifted = false;
    int lifted_offset = 5; // at least 2, so lifted pairs clear the 8-neighborhood
    CostParams costs{};
};

using FlowField = std::function<Vec2(double x, double y)>;

std::vector<Trajectory> grid_trajectories(int side, const FlowField& flow);
LiftedHypergraph grid_instance(const GridSpec& spec, const FlowField& flow);

FlowField constant_flow(Vec2 v);

/* Left and right halves move differently; an optional linear ramp of
 * half-width `blend` smooths the boundary. */
FlowField two_region_flow(int side, Vec2 left, Vec2 right, double blend = 0);
std::vector<std::uint32_t> two_region_labels(int side);

FlowField rotation_flow(Vec2 center, double angle);

/* A few randomly placed rectangles, each with its own translation, painted
 * over a still background. Later rectangles win where they overlap. */
FlowField random_region_flow(int side, std::uint64_t seed, int n_rects = 3);

} // namespace holmc
