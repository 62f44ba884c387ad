#include "holmc/kl.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "holmc/errors.hpp"

namespace holmc {

std::vector<NodeId> initial_boundary(const LiftedHypergraph& g, std::span<const NodeId> side_a,
                                     std::span<const NodeId> side_b) {
    std::vector<NodeId> out;
    if (side_b.empty()) {
        out.assign(side_a.begin(), side_a.end());
        std::sort(out.begin(), out.end());
        return out;
    }
    std::vector<signed char> side(g.node_count(), -1);
    for (NodeId v : side_a)
        side[v] = 0;
    for (NodeId v : side_b)
        side[v] = 1;
    for (const auto scope : {side_a, side_b}) {
        for (NodeId v : scope) {
            bool crossed = false;
            for (EdgeId e : g.connectivity_edges_of(v)) {
                for (NodeId w : g.edge(e).nodes)
                    if (side[w] >= 0 && side[w] != side[v]) {
                        crossed = true;
                        break;
                    }
                if (crossed)
                    break;
            }
            if (crossed)
                out.push_back(v);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

constexpr double minus_infinity = -std::numeric_limits<double>::infinity();

struct HeapEntry {
    double gain;
    NodeId node;
    std::uint32_t stamp;
};

/* max-heap on gain, smaller node id wins ties */
struct HeapLess {
    bool operator()(const HeapEntry& a, const HeapEntry& b) const {
        if (a.gain != b.gain)
            return a.gain < b.gain;
        return a.node > b.node;
    }
};

class Solver {
public:
    Solver(const LiftedHypergraph& g, const SolverConfig& cfg)
        : g_(g), cfg_(cfg), side_(g.node_count(), -1), moved_(g.node_count(), 0),
          candidate_(g.node_count(), 0), gain_(g.node_count(), 0.0), stamp_(g.node_count(), 0),
          parent_(g.node_count(), 0), root_rep_(g.node_count(), 0),
          edge_state_(g.edge_count(), 0), comp_of_(g.node_count()) {}

    SolveResult run(const EdgeLabeling& initial) {
        if (!is_feasible(g_, initial))
            throw InfeasibleInputError("initial labeling is not induced by a decomposition");

        const NodePartition start = partition_from_labeling(g_, initial);
        comp_of_ = start.class_of;
        members_.assign(g_.node_count(), {});
        for (NodeId v = 0; v < g_.node_count(); ++v)
            members_[comp_of_[v]].push_back(v);
        objective_ = objective(g_, initial);

        SolveResult result;
        for (std::size_t t = 1; t <= cfg_.max_outer_iterations; ++t) {
            result.outer_iterations = t;
            bool changed = false;

            for (const auto& [a, b] : adjacent_component_pairs())
                if (!members_[a].empty() && !members_[b].empty())
                    changed |= update_bipartition(a, b, true);

            std::vector<NodeId> reps;
            for (NodeId v = 0; v < g_.node_count(); ++v)
                if (!members_[v].empty())
                    reps.push_back(v);
            for (NodeId a : reps)
                if (!members_[a].empty())
                    changed |= update_bipartition(a, 0, false);

            if (cfg_.iteration_hook)
                cfg_.iteration_hook(t, objective_, NodePartition{comp_of_});
            if (!changed) {
                result.converged = true;
                break;
            }
        }

        result.partition = NodePartition::from_class_of(comp_of_);
        result.labeling = labeling_from_partition(g_, result.partition);
        result.objective = objective(g_, result.labeling);
        return result;
    }

private:
    std::vector<std::pair<NodeId, NodeId>> adjacent_component_pairs() const {
        std::vector<std::pair<NodeId, NodeId>> pairs;
        std::vector<NodeId> comps;
        for (const HyperEdge& e : g_.edges()) {
            if (e.kind != EdgeKind::Connectivity)
                continue;
            comps.clear();
            for (NodeId v : e.nodes)
                comps.push_back(comp_of_[v]);
            std::sort(comps.begin(), comps.end());
            comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
            for (std::size_t i = 0; i < comps.size(); ++i)
                for (std::size_t j = i + 1; j < comps.size(); ++j)
                    pairs.emplace_back(comps[i], comps[j]);
        }
        std::sort(pairs.begin(), pairs.end());
        pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
        return pairs;
    }

    void push_candidate(NodeId v) {
        heap_.push_back({gain_[v], v, stamp_[v]});
        std::push_heap(heap_.begin(), heap_.end(), HeapLess{});
    }

    NodeId local_find(NodeId v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    void local_unite(NodeId a, NodeId b) {
        a = local_find(a);
        b = local_find(b);
        if (a != b)
            parent_[b] = a;
    }

    void audit() const {
        if (cfg_.gain_audit)
            cfg_.gain_audit(GainSnapshot{g_, scope_, side_, moved_, gain_});
    }

    bool update_bipartition(NodeId rep_a, NodeId rep_b, bool has_b) {
        scope_.clear();
        for (NodeId v : members_[rep_a]) {
            scope_.push_back(v);
            side_[v] = 0;
        }
        if (has_b)
            for (NodeId v : members_[rep_b]) {
                scope_.push_back(v);
                side_[v] = 1;
            }
        std::sort(scope_.begin(), scope_.end());

        // edges with every node inside the scope carry all movable cost
        scope_edges_.clear();
        touched_edges_.clear();
        for (NodeId v : scope_) {
            for (const auto* list : {&g_.connectivity_edges_of(v), &g_.lifted_edges_of(v)}) {
                for (EdgeId e : *list) {
                    if (edge_state_[e] != 0)
                        continue;
                    bool inside = true;
                    for (NodeId w : g_.edge(e).nodes)
                        inside &= side_[w] >= 0;
                    edge_state_[e] = inside ? 2 : 1;
                    touched_edges_.push_back(e);
                    if (inside)
                        scope_edges_.push_back(e);
                }
            }
        }

        double obj_before = 0.0;
        double join_gain = minus_infinity;
        if (has_b)
            join_gain = 0.0;
        for (EdgeId e : scope_edges_) {
            const HyperEdge& he = g_.edge(e);
            bool one_side = true;
            for (NodeId w : he.nodes)
                one_side &= side_[w] == side_[he.nodes.front()];
            if (one_side)
                obj_before += he.cost;
            else if (has_b)
                join_gain -= he.cost;
        }

        for (NodeId v : scope_) {
            gain_[v] = 0.0;
            moved_[v] = 0;
            candidate_[v] = 0;
            ++stamp_[v];
        }
        for (EdgeId e : scope_edges_) {
            const HyperEdge& he = g_.edge(e);
            const std::size_t k = he.order();
            std::size_t c0 = 0;
            for (NodeId w : he.nodes)
                c0 += side_[w] == 0;
            const std::size_t c1 = k - c0;
            for (NodeId w : he.nodes) {
                const std::size_t cs = side_[w] == 0 ? c0 : c1;
                gain_[w] += he.cost * (double((cs == k)) - double((cs == 1)));
            }
        }
        audit();

        heap_.clear();
        if (has_b) {
            for (EdgeId e : touched_edges_) {
                const HyperEdge& he = g_.edge(e);
                if (he.kind != EdgeKind::Connectivity)
                    continue;
                bool has0 = false, has1 = false;
                for (NodeId w : he.nodes) {
                    has0 |= side_[w] == 0;
                    has1 |= side_[w] == 1;
                }
                if (has0 && has1)
                    for (NodeId w : he.nodes)
                        if (side_[w] >= 0)
                            candidate_[w] = 1;
            }
        } else {
            for (NodeId v : scope_)
                candidate_[v] = 1;
        }
        for (NodeId v : scope_)
            if (candidate_[v])
                push_candidate(v);

        // greedy exchange: move the best boundary node, track cumulative gains
        move_order_.clear();
        prefix_gain_.clear();
        double running = 0.0;
        while (!heap_.empty()) {
            std::pop_heap(heap_.begin(), heap_.end(), HeapLess{});
            const HeapEntry top = heap_.back();
            heap_.pop_back();
            if (top.stamp != stamp_[top.node] || moved_[top.node] || !candidate_[top.node])
                continue;

            const NodeId v = top.node;
            moved_[v] = 1;
            ++stamp_[v];
            running += gain_[v];
            gain_[v] = minus_infinity;
            move_order_.push_back(v);
            prefix_gain_.push_back(running);
            side_[v] ^= 1;

            for (const auto* list : {&g_.connectivity_edges_of(v), &g_.lifted_edges_of(v)}) {
                for (EdgeId e : *list) {
                    if (edge_state_[e] != 2)
                        continue;
                    const HyperEdge& he = g_.edge(e);
                    const std::size_t k = he.order();
                    std::size_t c0 = 0;
                    for (NodeId w : he.nodes)
                        c0 += side_[w] == 0;
                    const std::size_t c1 = k - c0;
                    for (NodeId w : he.nodes) {
                        if (w == v || moved_[w])
                            continue;
                        const std::size_t after = side_[w] == 0 ? c0 : c1;
                        const std::size_t before = side_[w] == side_[v] ? after - 1 : after + 1;
                        const double delta =
                            he.cost * ((double(after == k) - double(after == 1)) -
                                       (double(before == k) - double(before == 1)));
                        if (delta != 0.0) {
                            gain_[w] += delta;
                            if (candidate_[w]) {
                                ++stamp_[w];
                                push_candidate(w);
                            }
                        }
                    }
                }
            }

            if (!has_b && move_order_.size() == 1) {
                // from now on only nodes touching the freshly split part qualify
                for (NodeId u : scope_)
                    if (candidate_[u] && !moved_[u]) {
                        candidate_[u] = 0;
                        ++stamp_[u];
                    }
            }
            for (EdgeId e : g_.connectivity_edges_of(v)) {
                if (edge_state_[e] == 0)
                    continue;
                const HyperEdge& he = g_.edge(e);
                bool qualifies = !has_b;
                if (has_b)
                    for (NodeId w : he.nodes)
                        qualifies |= side_[w] >= 0 && side_[w] != side_[v];
                if (!qualifies)
                    continue;
                for (NodeId w : he.nodes)
                    if (side_[w] >= 0 && !moved_[w] && !candidate_[w]) {
                        candidate_[w] = 1;
                        ++stamp_[w];
                        push_candidate(w);
                    }
            }
            audit();
        }

        std::size_t best_k = 0;
        double best_gain = 0.0;
        for (std::size_t i = 0; i < prefix_gain_.size(); ++i)
            if (prefix_gain_[i] > best_gain) {
                best_gain = prefix_gain_[i];
                best_k = i + 1;
            }

        const bool do_join = has_b && join_gain > best_gain && join_gain > cfg_.epsilon;
        const bool do_moves = !do_join && best_gain > cfg_.epsilon;
        if (!do_join && !do_moves)
            return cleanup(false);

        if (do_join)
            for (NodeId v : scope_)
                side_[v] = 0;
        else
            for (std::size_t i = best_k; i < move_order_.size(); ++i)
                side_[move_order_[i]] ^= 1;

        // split sides into their connectivity components and price the outcome
        for (NodeId v : scope_)
            parent_[v] = v;
        for (EdgeId e : scope_edges_) {
            const HyperEdge& he = g_.edge(e);
            if (he.kind != EdgeKind::Connectivity)
                continue;
            bool one_side = true;
            for (NodeId w : he.nodes)
                one_side &= side_[w] == side_[he.nodes.front()];
            if (one_side)
                for (std::size_t i = 1; i < he.nodes.size(); ++i)
                    local_unite(he.nodes[0], he.nodes[i]);
        }
        double obj_after = 0.0;
        for (EdgeId e : scope_edges_) {
            const HyperEdge& he = g_.edge(e);
            const NodeId r = local_find(he.nodes.front());
            bool joined = true;
            for (NodeId w : he.nodes)
                joined &= local_find(w) == r;
            if (joined)
                obj_after += he.cost;
        }

        const double realized = obj_before - obj_after;
        if (cfg_.rollback && realized <= cfg_.epsilon)
            return cleanup(false);

        members_[rep_a].clear();
        if (has_b)
            members_[rep_b].clear();
        for (NodeId v : scope_)
            root_rep_[v] = static_cast<NodeId>(-1);
        for (NodeId v : scope_) {
            const NodeId r = local_find(v);
            if (root_rep_[r] == static_cast<NodeId>(-1))
                root_rep_[r] = v; // scope is sorted, first hit is the minimum
        }
        for (NodeId v : scope_) {
            const NodeId rep = root_rep_[local_find(v)];
            comp_of_[v] = rep;
            members_[rep].push_back(v);
        }
        objective_ += obj_after - obj_before;
        return cleanup(true);
    }

    bool cleanup(bool applied) {
        for (NodeId v : scope_) {
            side_[v] = -1;
            moved_[v] = 0;
            candidate_[v] = 0;
        }
        for (EdgeId e : touched_edges_)
            edge_state_[e] = 0;
        return applied;
    }

    const LiftedHypergraph& g_;
    const SolverConfig& cfg_;
    std::vector<signed char> side_;
    std::vector<char> moved_;
    std::vector<char> candidate_;
    std::vector<double> gain_;
    std::vector<std::uint32_t> stamp_;
    std::vector<NodeId> parent_;
    std::vector<NodeId> root_rep_;
    std::vector<std::uint8_t> edge_state_; // 0 untouched, 1 partly inside, 2 inside
    std::vector<NodeId> comp_of_;
    std::vector<std::vector<NodeId>> members_;
    std::vector<NodeId> scope_;
    std::vector<EdgeId> scope_edges_;
    std::vector<EdgeId> touched_edges_;
    std::vector<HeapEntry> heap_;
    std::vector<NodeId> move_order_;
    std::vector<double> prefix_gain_;
    double objective_ = 0.0;
};

} // namespace

SolveResult solve(const LiftedHypergraph& g, const EdgeLabeling& initial,
                  const SolverConfig& config) {
    Solver solver(g, config);
    return solver.run(initial);
}

} // namespace holmc
