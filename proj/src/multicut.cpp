#include "holmc/multicut.hpp"

#include <algorithm>

#include "holmc/errors.hpp"
#include "holmc/union_find.hpp"

namespace holmc {

namespace {

bool same_class(const NodePartition& p, const std::vector<NodeId>& nodes) {
    const NodeId c = p.class_of[nodes.front()];
    for (NodeId v : nodes)
        if (p.class_of[v] != c)
            return false;
    return true;
}

} // namespace

NodePartition canonicalize(const LiftedHypergraph& g, const NodePartition& p) {
    UnionFind uf(g.node_count());
    for (const HyperEdge& e : g.edges()) {
        if (e.kind != EdgeKind::Connectivity || !same_class(p, e.nodes))
            continue;
        for (std::size_t i = 1; i < e.nodes.size(); ++i)
            uf.unite(e.nodes[0], e.nodes[i]);
    }
    std::vector<NodeId> raw(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v)
        raw[v] = uf.find(v);
    return NodePartition::from_class_of(raw);
}

EdgeLabeling labeling_from_partition(const LiftedHypergraph& g, const NodePartition& p) {
    if (p.class_of.size() != g.node_count())
        throw Error("partition size does not match node count");
    const NodePartition norm = NodePartition::from_class_of(p.class_of);
    const NodePartition canon = canonicalize(g, norm);
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (canon.class_of[v] != norm.class_of[v])
            throw DisconnectedClassError(norm.class_of[v]);
    EdgeLabeling y(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        y[e] = same_class(norm, g.edge(e).nodes) ? 1 : 0;
    return y;
}

NodePartition partition_from_labeling(const LiftedHypergraph& g, const EdgeLabeling& y) {
    if (y.size() != g.edge_count())
        throw Error("labeling size does not match edge count");
    return connected_components(g, [&](EdgeId e) { return y[e] != 0; });
}

bool is_feasible(const LiftedHypergraph& g, const EdgeLabeling& y) {
    if (y.size() != g.edge_count())
        throw Error("labeling size does not match edge count");
    const NodePartition p = partition_from_labeling(g, y);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if ((y[e] != 0) != same_class(p, g.edge(e).nodes))
            return false;
    return true;
}

double objective(const LiftedHypergraph& g, const EdgeLabeling& y) {
    if (y.size() != g.edge_count())
        throw Error("labeling size does not match edge count");
    double total = 0.0;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (y[e])
            total += g.edge(e).cost;
    return total;
}

std::vector<ConstraintViolation> local_diagnostics(const LiftedHypergraph& g,
                                                   const EdgeLabeling& y) {
    if (y.size() != g.edge_count())
        throw Error("labeling size does not match edge count");

    std::vector<ConstraintViolation> out;
    std::vector<char> in_hyper(g.node_count(), 0);
    std::vector<char> edge_seen(g.edge_count(), 0);
    UnionFind uf;

    for (EdgeId eh = 0; eh < g.edge_count(); ++eh) {
        const HyperEdge& hyper = g.edge(eh);
        if (hyper.order() < 3)
            continue; // a strict sub-edge has at least two nodes
        for (NodeId v : hyper.nodes)
            in_hyper[v] = 1;

        std::vector<EdgeId> subs;
        for (NodeId v : hyper.nodes) {
            for (const auto* list : {&g.connectivity_edges_of(v), &g.lifted_edges_of(v)}) {
                for (EdgeId e : *list) {
                    if (e == eh || edge_seen[e] || g.edge(e).order() >= hyper.order())
                        continue;
                    edge_seen[e] = 1;
                    if (std::all_of(g.edge(e).nodes.begin(), g.edge(e).nodes.end(),
                                    [&](NodeId w) { return in_hyper[w]; }))
                        subs.push_back(e);
                }
            }
        }
        std::sort(subs.begin(), subs.end());

        int cut_subs = 0;
        for (EdgeId e : subs) {
            edge_seen[e] = 0;
            if (y[eh] > y[e])
                out.push_back({ConstraintViolation::Kind::Monotonicity, eh, e});
            if (!y[e])
                ++cut_subs;
        }
        for (NodeId v : hyper.nodes)
            in_hyper[v] = 0;

        if (subs.empty())
            continue;
        uf.reset(g.node_count());
        std::size_t merges = 0;
        for (EdgeId e : subs)
            for (std::size_t i = 1; i < g.edge(e).nodes.size(); ++i)
                merges += uf.unite(g.edge(e).nodes[0], g.edge(e).nodes[i]) ? 1 : 0;
        if (merges + 1 < hyper.order())
            continue; // sub-edges do not connect the hyperedge
        if (!y[eh] && cut_subs == 0)
            out.push_back({ConstraintViolation::Kind::Connectedness, eh, no_edge});
    }
    return out;
}

} // namespace holmc
