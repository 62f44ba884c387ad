#include "holmc/synth.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>

#include "holmc/errors.hpp"

namespace holmc {

bool Rect::contains(double x, double y) const { return x >= x0 && x <= x1 && y >= y0 && y <= y1; }

bool Rect::overlaps(const Rect& other) const {
    return x0 <= other.x1 && other.x0 <= x1 && y0 <= other.y1 && other.y0 <= y1;
}

Scene generate_scene(const SceneSpec& spec) {
    if (spec.n_frames < 2)
        throw Error("scene needs at least two frames");
    if (!(spec.step > 0))
        throw Error("sampling step must be positive");
    for (std::size_t i = 0; i < spec.objects.size(); ++i)
        for (std::size_t j = i + 1; j < spec.objects.size(); ++j)
            if (spec.objects[i].support.overlaps(spec.objects[j].support))
                throw Error("object supports overlap");

    std::mt19937_64 rng(spec.seed);
    std::normal_distribution<double> jitter(0.0, spec.noise_sigma > 0 ? spec.noise_sigma : 1.0);

    Scene scene;
    scene.n_frames = spec.n_frames;
    for (std::size_t obj = 0; obj < spec.objects.size(); ++obj) {
        const ObjectSpec& o = spec.objects[obj];
        if (o.motion.empty())
            throw Error("object without motion");
        if (o.motion.size() != 1 && o.motion.size() != static_cast<std::size_t>(spec.n_frames - 1))
            throw Error("motion must list one transform or one per transition");
        const Rect& r = o.support;
        for (double y = r.y0; y <= r.y1 + 1e-9; y += spec.step) {
            for (double x = r.x0; x <= r.x1 + 1e-9; x += spec.step) {
                Trajectory t;
                t.start = 0;
                Vec2 p{x, y};
                t.points.push_back(p);
                for (int f = 0; f + 1 < spec.n_frames; ++f) {
                    const EuclideanTransform& m =
                        o.motion.size() == 1 ? o.motion[0] : o.motion[static_cast<std::size_t>(f)];
                    p = m.apply(p);
                    t.points.push_back(p);
                }
                if (spec.noise_sigma > 0)
                    for (Vec2& q : t.points)
                        q += Vec2{jitter(rng), jitter(rng)};
                scene.trajectories.push_back(std::move(t));
                scene.labels.push_back(static_cast<std::uint32_t>(obj));
            }
        }
    }
    return scene;
}

namespace {

NodeId node_at(int side, int x, int y) { return static_cast<NodeId>(y * side + x); }

bool in_grid(int side, int x, int y) { return x >= 0 && x < side && y >= 0 && y < side; }

} // namespace

std::vector<Trajectory> grid_trajectories(int side, const FlowField& flow) {
    std::vector<Trajectory> out;
    out.reserve(static_cast<std::size_t>(side) * static_cast<std::size_t>(side));
    for (int y = 0; y < side; ++y)
        for (int x = 0; x < side; ++x) {
            const Vec2 p{static_cast<double>(x), static_cast<double>(y)};
            out.push_back({0, {p, p + flow(p.x, p.y)}, {}});
        }
    return out;
}

LiftedHypergraph grid_instance(const GridSpec& spec, const FlowField& flow) {
    if (spec.side < 3)
        throw Error("grid side must be at least 3");
    if (spec.lifted && spec.lifted_offset < 2)
        throw Error("lifted offset must be at least 2");

    const int n = spec.side;
    const std::vector<Trajectory> tracks = grid_trajectories(n, flow);
    const FlowStats stats;
    LiftedHypergraph g(static_cast<NodeId>(tracks.size()));

    static constexpr int nbr[4][2] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x)
            for (const auto& d : nbr) {
                const int x2 = x + d[0], y2 = y + d[1];
                if (in_grid(n, x2, y2))
                    g.add_edge({node_at(n, x, y), node_at(n, x2, y2)}, 0.0,
                               EdgeKind::Connectivity);
            }

    if (spec.lifted) {
        const int L = spec.lifted_offset;
        const int off[4][2] = {{L, 0}, {0, L}, {L, L}, {L, -L}};
        for (int y = 0; y < n; ++y)
            for (int x = 0; x < n; ++x)
                for (const auto& d : off) {
                    const int x2 = x + d[0], y2 = y + d[1];
                    if (!in_grid(n, x2, y2))
                        continue;
                    const NodeId a = node_at(n, x, y);
                    const NodeId b = node_at(n, x2, y2);
                    g.add_edge({a, b}, pairwise_cost(tracks[a], tracks[b], stats, spec.costs),
                               EdgeKind::Lifted);
                }
    }

    /* two straight runs, two diagonal runs, two right-angle corners */
    static constexpr int stencil[6][4] = {{1, 0, 2, 0},  {0, 1, 0, 2}, {1, 1, 2, 2},
                                          {1, -1, 2, -2}, {1, 0, 0, 1}, {1, 0, 1, 1}};
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x)
            for (const auto& s : stencil) {
                const int xb = x + s[0], yb = y + s[1];
                const int xc = x + s[2], yc = y + s[3];
                if (!in_grid(n, xb, yb) || !in_grid(n, xc, yc))
                    continue;
                const NodeId a = node_at(n, x, y);
                const NodeId b = node_at(n, xb, yb);
                const NodeId c = node_at(n, xc, yc);
                g.add_edge({a, b, c}, triplet_cost(tracks[a], tracks[b], tracks[c], stats, spec.costs),
                           EdgeKind::Connectivity);
            }

    return g;
}

FlowField constant_flow(Vec2 v) {
    return [v](double, double) { return v; };
}

FlowField two_region_flow(int side, Vec2 left, Vec2 right, double blend) {
    const double mid = 0.5 * (side - 1);
    return [=](double x, double) {
        if (blend > 0) {
            const double t = std::clamp((x - (mid - blend)) / (2.0 * blend), 0.0, 1.0);
            return left * (1.0 - t) + right * t;
        }
        return x <= mid ? left : right;
    };
}

std::vector<std::uint32_t> two_region_labels(int side) {
    std::vector<std::uint32_t> labels(static_cast<std::size_t>(side) * static_cast<std::size_t>(side));
    const double mid = 0.5 * (side - 1);
    for (int y = 0; y < side; ++y)
        for (int x = 0; x < side; ++x)
            labels[node_at(side, x, y)] = x <= mid ? 0 : 1;
    return labels;
}

FlowField rotation_flow(Vec2 center, double angle) {
    const double c = std::cos(angle), s = std::sin(angle);
    return [=](double x, double y) {
        const Vec2 r{x - center.x, y - center.y};
        return Vec2{c * r.x - s * r.y - r.x, s * r.x + c * r.y - r.y};
    };
}

FlowField random_region_flow(int side, std::uint64_t seed, int n_rects) {
    struct Region {
        Rect box;
        Vec2 v;
    };
    auto regions = std::make_shared<std::vector<Region>>();
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> pos(0.0, static_cast<double>(side - 1));
    std::uniform_real_distribution<double> extent(side / 4.0, side / 2.0);
    std::uniform_real_distribution<double> vel(-3.0, 3.0);
    for (int i = 0; i < n_rects; ++i) {
        const double x0 = pos(rng), y0 = pos(rng);
        const double w = extent(rng), h = extent(rng);
        regions->push_back({{x0, y0, x0 + w, y0 + h}, {vel(rng), vel(rng)}});
    }
    return [regions](double x, double y) {
        Vec2 v{};
        for (const Region& r : *regions)
            if (r.box.contains(x, y))
                v = r.v;
        return v;
    };
}

} // namespace holmc
