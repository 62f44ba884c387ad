#pragma once

#include <functional>
#include <span>

#include "holmc/multicut.hpp"

namespace holmc {

/* State of one bipartition update, exposed to the gain audit hook. All spans
 * except scope are indexed by node id; side is 0 or 1 inside the current
 * scope and -1 elsewhere. gain holds the predicted objective decrease for
 * moving each unmoved scope node to the other side. */
struct GainSnapshot {
    const LiftedHypergraph& graph;
    std::span<const NodeId> scope;
    std::span<const signed char> side;
    std::span<const char> moved;
    std::span<const double> gain;
};

struct SolverConfig {
    std::size_t max_outer_iterations = 1000;
    double epsilon = 1e-9;
    /* undo a whole transformation when splitting disconnected classes ate the
     * predicted gain */
    bool rollback = true;
    std::function<void(const GainSnapshot&)> gain_audit;
    std::function<void(std::size_t iteration, double objective, const NodePartition&)>
        iteration_hook;
};

struct SolveResult {
    EdgeLabeling labeling;
    NodePartition partition;
    double objective = 0.0;
    std::size_t outer_iterations = 0;
    bool converged = false;
};

/* Local search over decompositions: repeatedly improves pairs of adjacent
 * components by greedy node exchange with the best prefix kept, compares
 * against joining the pair outright, and tries to split a new component off
 * each existing one. Stops at a sweep without change or at the iteration cap.
 * Throws InfeasibleInputError if the initial labeling is not a decomposition. */
SolveResult solve(const LiftedHypergraph& g, const EdgeLabeling& initial,
                  const SolverConfig& config = {});

/* Nodes of A and B incident to a connectivity edge that reaches the other
 * side; with B empty, all of A. Ascending. */
std::vector<NodeId> initial_boundary(const LiftedHypergraph& g, std::span<const NodeId> side_a,
                                     std::span<const NodeId> side_b);

} // namespace holmc
