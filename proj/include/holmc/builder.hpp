#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "holmc/hypergraph.hpp"
#include "holmc/motion.hpp"
#include "holmc/trajectory.hpp"

namespace holmc {

enum class BuildMode : std::uint8_t {
    Adaptive,        // pairwise costs where attractive, triples around repulsive pairs
    HigherOrderFull, // every admissible pairwise cost plus every sampled triple
    HigherOrderOnly, // sampled triples only
    Pairwise         // translational costs only
};

struct BuilderConfig {
    BuildMode mode = BuildMode::Adaptive;
    bool lifted = false;
    double pairwise_cutoff = 100.0; // px, mean spatial distance bound for pairwise edges
    int lift_neighbors = 12;        // spatially nearest neighbors kept in F
    double lift_distance = 40.0;    // px, max spatial distance kept in F
    double triple_keep_all = 20.0;  // px, triples at most this far apart are always kept
    double triple_cutoff = 300.0;   // px, triples at least this far apart are dropped
    std::uint64_t seed = 0;
    CostParams costs{};
};

using Triple = std::array<NodeId, 3>;

/* Keep probability for a candidate triple whose trajectories are at most d
 * apart (largest pairwise mean spatial distance). */
double triple_keep_probability(double d, const BuilderConfig& config);

/* Deterministic per-triple sampling decision; independent of enumeration
 * order. Nodes may come in any order. */
bool keep_triple(NodeId i, NodeId j, NodeId k, double d, const BuilderConfig& config);

std::vector<Triple> sample_triples(std::span<const Triple> candidates,
                                   std::span<const double> distances,
                                   const BuilderConfig& config);

/* One node per trajectory. Pairs qualify with at least two common frames and
 * mean spatial distance under the cutoff; triples additionally pass the
 * distance-based sampling. With config.lifted the result is passed through
 * lift(). */
LiftedHypergraph build_graph(const std::vector<Trajectory>& trajectories, const FlowStats& stats,
                             const BuilderConfig& config);

/* Re-derives the kind of every pairwise edge: it stays a connectivity edge
 * iff one endpoint is among the other's nearest temporally overlapping
 * neighbors or the two never drift further apart than lift_distance;
 * otherwise it becomes lifted. Higher-order edges always stay. */
LiftedHypergraph lift(const LiftedHypergraph& g, const std::vector<Trajectory>& trajectories,
                      const BuilderConfig& config);

} // namespace holmc
