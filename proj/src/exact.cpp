#include "holmc/exact.hpp"

#include <vector>

#include "holmc/errors.hpp"
#include "holmc/union_find.hpp"

namespace holmc {

namespace {

/* Advances to the next restricted growth string in lexicographic order.
 * a[0] = 0 and a[i] <= max(a[0..i-1]) + 1. Returns false after the last one. */
bool next_growth_string(std::vector<NodeId>& a, std::vector<NodeId>& prefix_max) {
    const std::size_t n = a.size();
    for (std::size_t i = n - 1; i > 0; --i) {
        if (a[i] <= prefix_max[i - 1]) {
            ++a[i];
            prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
            for (std::size_t j = i + 1; j < n; ++j) {
                a[j] = 0;
                prefix_max[j] = prefix_max[j - 1];
            }
            return true;
        }
    }
    return false;
}

} // namespace

ExactResult solve_exact(const LiftedHypergraph& g, std::size_t node_limit) {
    const std::size_t n = g.node_count();
    if (n > node_limit)
        throw TooLargeError(n, node_limit);

    ExactResult best;
    if (n == 0) {
        best.feasible_count = 1;
        best.labeling.assign(g.edge_count(), 0);
        return best;
    }

    std::vector<NodeId> a(n, 0), prefix_max(n, 0);
    UnionFind uf;
    bool have_best = false;
    double best_objective = 0.0;
    std::vector<NodeId> best_assignment;

    std::vector<NodeId> class_root(n);
    do {
        // every class must induce a connected subgraph of the connectivity edges
        uf.reset(n);
        for (const HyperEdge& e : g.edges()) {
            if (e.kind != EdgeKind::Connectivity)
                continue;
            const NodeId c = a[e.nodes.front()];
            bool inside = true;
            for (NodeId v : e.nodes)
                inside &= a[v] == c;
            if (inside)
                for (std::size_t i = 1; i < e.nodes.size(); ++i)
                    uf.unite(e.nodes[0], e.nodes[i]);
        }
        // a class is connected iff all its members share one union-find root
        std::fill(class_root.begin(), class_root.end(), static_cast<NodeId>(-1));
        bool feasible = true;
        for (NodeId v = 0; v < n && feasible; ++v) {
            const NodeId r = uf.find(v);
            if (class_root[a[v]] == static_cast<NodeId>(-1))
                class_root[a[v]] = r;
            else if (class_root[a[v]] != r)
                feasible = false;
        }
        if (!feasible)
            continue;

        ++best.feasible_count;
        double obj = 0.0;
        for (const HyperEdge& e : g.edges()) {
            const NodeId c = a[e.nodes.front()];
            bool inside = true;
            for (NodeId v : e.nodes)
                inside &= a[v] == c;
            if (inside)
                obj += e.cost;
        }
        if (!have_best || obj < best_objective) {
            have_best = true;
            best_objective = obj;
            best_assignment = a;
        }
    } while (next_growth_string(a, prefix_max));

    best.partition = NodePartition::from_class_of(best_assignment);
    best.labeling = labeling_from_partition(g, best.partition);
    best.objective = objective(g, best.labeling);
    return best;
}

} // namespace holmc
