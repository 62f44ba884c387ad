#include "holmc/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "holmc/errors.hpp"
#include "holmc/union_find.hpp"

namespace holmc {

std::size_t NodePartition::class_count() const {
    std::size_t n = 0;
    for (NodeId v = 0; v < class_of.size(); ++v)
        if (class_of[v] == v)
            ++n;
    return n;
}

std::vector<std::vector<NodeId>> NodePartition::classes() const {
    std::vector<std::vector<NodeId>> out;
    std::vector<std::uint32_t> slot(class_of.size(), static_cast<std::uint32_t>(-1));
    for (NodeId v = 0; v < class_of.size(); ++v) {
        const NodeId c = class_of[v];
        if (slot[c] == static_cast<std::uint32_t>(-1)) {
            slot[c] = static_cast<std::uint32_t>(out.size());
            out.emplace_back();
        }
        out[slot[c]].push_back(v);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

NodePartition NodePartition::singletons(std::size_t n) {
    NodePartition p;
    p.class_of.resize(n);
    for (NodeId v = 0; v < n; ++v)
        p.class_of[v] = v;
    return p;
}

NodePartition NodePartition::from_class_of(const std::vector<NodeId>& raw) {
    const std::size_t n = raw.size();
    std::vector<NodeId> min_member(n, static_cast<NodeId>(-1));
    for (NodeId v = 0; v < n; ++v) {
        if (raw[v] >= n)
            throw Error("class id " + std::to_string(raw[v]) + " out of range");
        if (min_member[raw[v]] == static_cast<NodeId>(-1))
            min_member[raw[v]] = v;
    }
    NodePartition p;
    p.class_of.resize(n);
    for (NodeId v = 0; v < n; ++v)
        p.class_of[v] = min_member[raw[v]];
    return p;
}

std::size_t LiftedHypergraph::NodeVecHash::operator()(const std::vector<NodeId>& v) const {
    std::size_t h = v.size();
    for (NodeId x : v)
        h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

LiftedHypergraph::LiftedHypergraph(std::size_t node_count)
    : node_count_(node_count), conn_of_(node_count), lifted_of_(node_count) {}

EdgeId LiftedHypergraph::add_edge(std::vector<NodeId> nodes, double cost, EdgeKind kind) {
    if (nodes.size() < 2)
        throw Error("edge needs at least two nodes");
    std::sort(nodes.begin(), nodes.end());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i] >= node_count_)
            throw Error("node id " + std::to_string(nodes[i]) + " out of range");
        if (i > 0 && nodes[i] == nodes[i - 1])
            throw Error("duplicate node " + std::to_string(nodes[i]) + " in edge");
    }
    if (!std::isfinite(cost))
        throw Error("edge cost must be finite");

    if (auto it = index_.find(nodes); it != index_.end()) {
        HyperEdge& e = edges_[it->second];
        if (e.kind != kind)
            throw Error("edge already present with the other kind");
        e.cost += cost;
        return it->second;
    }

    const EdgeId id = static_cast<EdgeId>(edges_.size());
    for (NodeId v : nodes)
        (kind == EdgeKind::Connectivity ? conn_of_ : lifted_of_)[v].push_back(id);
    max_order_ = std::max(max_order_, nodes.size());
    index_.emplace(nodes, id);
    edges_.push_back({std::move(nodes), cost, kind});
    return id;
}

std::optional<EdgeId> LiftedHypergraph::find_edge(std::vector<NodeId> nodes) const {
    std::sort(nodes.begin(), nodes.end());
    if (auto it = index_.find(nodes); it != index_.end())
        return it->second;
    return std::nullopt;
}

std::vector<NodeId> LiftedHypergraph::f_neighbors(NodeId v) const {
    std::vector<NodeId> out;
    for (EdgeId e : conn_of_[v])
        for (NodeId w : edges_[e].nodes)
            if (w != v)
                out.push_back(w);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

NodePartition connected_components(const LiftedHypergraph& g) {
    return connected_components(g, [](EdgeId) { return true; });
}

NodePartition connected_components(const LiftedHypergraph& g,
                                   const std::function<bool(EdgeId)>& active) {
    UnionFind uf(g.node_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const HyperEdge& he = g.edge(e);
        if (he.kind != EdgeKind::Connectivity || !active(e))
            continue;
        for (std::size_t i = 1; i < he.nodes.size(); ++i)
            uf.unite(he.nodes[0], he.nodes[i]);
    }
    std::vector<NodeId> raw(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v)
        raw[v] = uf.find(v);
    return NodePartition::from_class_of(raw);
}

} // namespace holmc
