#pragma once

#include <vector>

#include "holmc/errors.hpp"
#include "holmc/vec2.hpp"

namespace holmc {

/* A tracked point: one position per frame of its lifetime, frames
 * [start, start + points.size()). Optional per-frame feature vectors. */
struct Trajectory {
    int start = 0;
    std::vector<Vec2> points;
    std::vector<std::vector<double>> features; // empty or one vector per frame

    int first_frame() const { return start; }
    int end_frame() const { return start + static_cast<int>(points.size()); } // exclusive
    bool alive(int f) const { return f >= start && f < end_frame(); }
    const Vec2& at(int f) const { return points[static_cast<std::size_t>(f - start)]; }

    /* forward difference; the final frame falls back to its last two positions */
    Vec2 velocity(int f) const {
        if (f + 1 < end_frame())
            return at(f + 1) - at(f);
        return at(f) - at(f - 1);
    }
};

struct FrameSpan {
    int begin = 0;
    int end = 0; // exclusive
    int length() const { return end > begin ? end - begin : 0; }
};

inline FrameSpan common_frames(const Trajectory& a, const Trajectory& b) {
    return {std::max(a.first_frame(), b.first_frame()), std::min(a.end_frame(), b.end_frame())};
}

inline FrameSpan common_frames(const Trajectory& a, const Trajectory& b, const Trajectory& c) {
    return {std::max({a.first_frame(), b.first_frame(), c.first_frame()}),
            std::min({a.end_frame(), b.end_frame(), c.end_frame()})};
}

/* Per-transition scale of the optical flow variation, used to normalize
 * motion distances. Defaults to 1 everywhere. */
class FlowStats {
public:
    FlowStats() = default;
    FlowStats(int first_frame, std::vector<double> sigma)
        : first_(first_frame), sigma_(std::move(sigma)) {
        for (double s : sigma_)
            if (!(s > 0.0))
                throw Error("flow scale must be positive");
    }

    double sigma(int t) const {
        const int i = t - first_;
        if (i < 0 || i >= static_cast<int>(sigma_.size()))
            return 1.0;
        return sigma_[static_cast<std::size_t>(i)];
    }

private:
    int first_ = 0;
    std::vector<double> sigma_;
};

} // namespace holmc
