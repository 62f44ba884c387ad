#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "holmc/hypergraph.hpp"
#include "holmc/trajectory.hpp"

namespace holmc {

/* Shortest representation that parses back to the same value. */
std::string format_double(double v);

/* Instance files:
 *
 *   HOLMC 1
 *   nodes 4
 *   edge F 2 0 1 -1.5
 *   edge L 3 0 2 3 0.25
 *
 * One edge per line: kind (F connectivity, L lifted), order, nodes, cost.
 * Tokens are whitespace separated and # starts a comment. Writing is
 * canonical: edges sorted by order, then node list, connectivity first. */
void write_instance(std::ostream& out, const LiftedHypergraph& g);
LiftedHypergraph read_instance(std::istream& in);

/* Trajectory files:
 *
 *   TRAJ 1 <n_frames> <feature_dim>
 *   traj <id> <start> <length>
 *   <x> <y> <features...>     (length point lines)
 *
 * Ids must run 0, 1, 2, ... in order. */
struct TrajectorySet {
    std::vector<Trajectory> trajectories;
    int n_frames = 0;
    int feature_dim = 0;
};

void write_trajectories(std::ostream& out, const TrajectorySet& set);
TrajectorySet read_trajectories(std::istream& in);

/* Solution files double as label files:
 *
 *   objective -1.5
 *   0 0
 *   1 0
 *   2 2
 *
 * One <node> <component> line per node, every node exactly once. */
struct Solution {
    double objective = 0;
    std::vector<std::uint32_t> labels;
};

void write_solution(std::ostream& out, const Solution& s);
Solution read_solution(std::istream& in);

LiftedHypergraph read_instance_file(const std::string& path);
void write_instance_file(const std::string& path, const LiftedHypergraph& g);
TrajectorySet read_trajectories_file(const std::string& path);
void write_trajectories_file(const std::string& path, const TrajectorySet& set);
Solution read_solution_file(const std::string& path);
void write_solution_file(const std::string& path, const Solution& s);

} // namespace holmc
