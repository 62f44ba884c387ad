#pragma once

#include <cstdint>
#include <vector>

#include "holmc/hypergraph.hpp"

namespace holmc {

/* y_e = 1 iff all nodes of edge e lie in one component, indexed by edge id. */
using EdgeLabeling = std::vector<std::uint8_t>;

struct MulticutInstance {
    LiftedHypergraph graph;
};

/* Labeling induced by a decomposition. Throws DisconnectedClassError if some
 * class does not induce a connected subgraph of the connectivity edges. */
EdgeLabeling labeling_from_partition(const LiftedHypergraph& g, const NodePartition& p);

/* Components of (V, {e in F : y_e = 1}); lifted edges are ignored. */
NodePartition partition_from_labeling(const LiftedHypergraph& g, const EdgeLabeling& y);

/* True iff y is induced by some decomposition, i.e. the round trip through
 * partition_from_labeling reproduces y. */
bool is_feasible(const LiftedHypergraph& g, const EdgeLabeling& y);

double objective(const LiftedHypergraph& g, const EdgeLabeling& y);

struct ConstraintViolation {
    enum class Kind : std::uint8_t {
        Monotonicity, // y of a hyperedge exceeds y of one of its sub-edges
        Connectedness // hyperedge cut although its sub-edges cut less
    };
    Kind kind;
    EdgeId hyper_edge;
    EdgeId sub_edge; // no_edge for Connectedness
};

/* Violations of the local constraints over stored edges: for every stored pair
 * e strictly inside e_h, y[e_h] <= y[e]; and for every e_h whose stored strict
 * sub-edges connect its nodes, (1 - y[e_h]) <= sum over those e of (1 - y[e]).
 * Empty for every feasible labeling. */
std::vector<ConstraintViolation> local_diagnostics(const LiftedHypergraph& g,
                                                   const EdgeLabeling& y);

/* Splits every class into the components it induces in the connectivity
 * graph. Fixed point exactly on decompositions. */
NodePartition canonicalize(const LiftedHypergraph& g, const NodePartition& p);

} // namespace holmc
