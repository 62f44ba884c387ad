#pragma once

#include <cstdint>

#include "holmc/multicut.hpp"

namespace holmc {

struct ExactResult {
    EdgeLabeling labeling;
    NodePartition partition;
    double objective = 0.0;
    std::uint64_t feasible_count = 0; // decompositions enumerated
};

/* Minimizes the objective by enumerating all set partitions as restricted
 * growth strings and discarding those with a disconnected class. Ties go to
 * the lexicographically smallest growth string. Throws TooLargeError beyond
 * node_limit nodes. */
ExactResult solve_exact(const LiftedHypergraph& g, std::size_t node_limit = 10);

} // namespace holmc
