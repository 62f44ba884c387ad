#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

namespace holmc {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr EdgeId no_edge = static_cast<EdgeId>(-1);

/* Connectivity edges define which decompositions are expressible, lifted edges
 * only contribute costs. */
enum class EdgeKind : std::uint8_t { Connectivity, Lifted };

struct HyperEdge {
    std::vector<NodeId> nodes; // strictly ascending
    double cost = 0.0;
    EdgeKind kind = EdgeKind::Connectivity;

    std::size_t order() const { return nodes.size(); }
};

/* A partition of the node set. Class ids are canonical: each class is named by
 * its minimum member id. */
struct NodePartition {
    std::vector<NodeId> class_of;

    std::size_t node_count() const { return class_of.size(); }
    std::size_t class_count() const;
    std::vector<std::vector<NodeId>> classes() const; // ordered by class id, members ascending

    static NodePartition singletons(std::size_t n);
    /* relabels arbitrary class ids to the canonical min-member convention */
    static NodePartition from_class_of(const std::vector<NodeId>& raw);

    bool operator==(const NodePartition&) const = default;
};

class LiftedHypergraph {
public:
    explicit LiftedHypergraph(std::size_t node_count);

    /* Nodes may come in any order; they are sorted internally. Adding an edge
     * over a node set that is already present with the same kind accumulates
     * the cost, with the other kind it throws. */
    EdgeId add_edge(std::vector<NodeId> nodes, double cost, EdgeKind kind = EdgeKind::Connectivity);

    std::size_t node_count() const { return node_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    const HyperEdge& edge(EdgeId e) const { return edges_[e]; }
    const std::vector<HyperEdge>& edges() const { return edges_; }
    std::size_t max_order() const { return max_order_; }

    const std::vector<EdgeId>& connectivity_edges_of(NodeId v) const { return conn_of_[v]; }
    const std::vector<EdgeId>& lifted_edges_of(NodeId v) const { return lifted_of_[v]; }

    std::optional<EdgeId> find_edge(std::vector<NodeId> nodes) const;

    /* nodes sharing a connectivity edge with v, ascending, v excluded */
    std::vector<NodeId> f_neighbors(NodeId v) const;

private:
    struct NodeVecHash {
        std::size_t operator()(const std::vector<NodeId>& v) const;
    };

    std::size_t node_count_;
    std::size_t max_order_ = 0;
    std::vector<HyperEdge> edges_;
    std::vector<std::vector<EdgeId>> conn_of_;
    std::vector<std::vector<EdgeId>> lifted_of_;
    std::unordered_map<std::vector<NodeId>, EdgeId, NodeVecHash> index_;
};

/* Connected components of (V, F), connectivity edges only. */
NodePartition connected_components(const LiftedHypergraph& g);

/* Components of the subgraph keeping only connectivity edges for which
 * active(e) holds. */
NodePartition connected_components(const LiftedHypergraph& g,
                                   const std::function<bool(EdgeId)>& active);

} // namespace holmc
