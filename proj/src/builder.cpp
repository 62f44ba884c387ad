#include "holmc/builder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_set>

namespace holmc {

namespace {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/* Pair admissibility and distances, computed once. */
class PairTable {
public:
    PairTable(const std::vector<Trajectory>& trajectories, const FlowStats& stats,
              const BuilderConfig& config)
        : n_(trajectories.size()), overlap_(n_ * n_, 0),
          mean_dist_(n_ * n_, std::numeric_limits<double>::infinity()), cost_(n_ * n_, 0.0) {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j) {
                const FrameSpan span = common_frames(trajectories[i], trajectories[j]);
                overlap_[i * n_ + j] = overlap_[j * n_ + i] = span.length();
                if (span.length() < 1)
                    continue;
                const double md = mean_spatial_distance(trajectories[i], trajectories[j]);
                mean_dist_[i * n_ + j] = mean_dist_[j * n_ + i] = md;
                if (span.length() >= 2 && md < config.pairwise_cutoff) {
                    const double c =
                        pairwise_cost(trajectories[i], trajectories[j], stats, config.costs);
                    cost_[i * n_ + j] = cost_[j * n_ + i] = c;
                }
            }
    }

    int overlap(std::size_t i, std::size_t j) const { return overlap_[i * n_ + j]; }
    double mean_dist(std::size_t i, std::size_t j) const { return mean_dist_[i * n_ + j]; }
    double cost(std::size_t i, std::size_t j) const { return cost_[i * n_ + j]; }

    bool admissible(std::size_t i, std::size_t j, const BuilderConfig& config) const {
        return overlap(i, j) >= 2 && mean_dist(i, j) < config.pairwise_cutoff;
    }

    /* largest pairwise mean spatial distance inside the triple */
    double spread(std::size_t i, std::size_t j, std::size_t k) const {
        return std::max({mean_dist(i, j), mean_dist(i, k), mean_dist(j, k)});
    }

private:
    std::size_t n_;
    std::vector<int> overlap_;
    std::vector<double> mean_dist_;
    std::vector<double> cost_;
};

class TripleCollector {
public:
    TripleCollector(LiftedHypergraph& g, const std::vector<Trajectory>& trajectories,
                    const FlowStats& stats, const BuilderConfig& config)
        : g_(g), trajectories_(trajectories), stats_(stats), config_(config) {}

    /* Adds the triple once; sampling decided by node set, duplicates and
     * degenerate triples skipped. */
    void propose(NodeId i, NodeId j, NodeId k, double spread) {
        Triple t{i, j, k};
        std::sort(t.begin(), t.end());
        if (!keep_triple(t[0], t[1], t[2], spread, config_))
            return;
        if (!seen_.insert(t).second)
            return;
        try {
            const double c = triplet_cost(trajectories_[t[0]], trajectories_[t[1]],
                                          trajectories_[t[2]], stats_, config_.costs);
            g_.add_edge({t[0], t[1], t[2]}, c, EdgeKind::Connectivity);
        } catch (const DegenerateTripleError&) {
        }
    }

private:
    struct TripleHash {
        std::size_t operator()(const Triple& t) const {
            return mix64((std::uint64_t(t[0]) << 42) ^ (std::uint64_t(t[1]) << 21) ^ t[2]);
        }
    };
    LiftedHypergraph& g_;
    const std::vector<Trajectory>& trajectories_;
    const FlowStats& stats_;
    const BuilderConfig& config_;
    std::unordered_set<Triple, TripleHash> seen_;
};

} // namespace

double triple_keep_probability(double d, const BuilderConfig& config) {
    if (d <= config.triple_keep_all)
        return 1.0;
    if (d >= config.triple_cutoff)
        return 0.0;
    return std::min(1.0, 100.0 / (d * d) / 100.0); // 100/d^2 percent
}

bool keep_triple(NodeId i, NodeId j, NodeId k, double d, const BuilderConfig& config) {
    const double p = triple_keep_probability(d, config);
    if (p >= 1.0)
        return true;
    if (p <= 0.0)
        return false;
    NodeId a = i, b = j, c = k;
    if (a > b)
        std::swap(a, b);
    if (b > c)
        std::swap(b, c);
    if (a > b)
        std::swap(a, b);
    std::uint64_t h = mix64(config.seed ^ 0x7f4a7c15u);
    h = mix64(h ^ a);
    h = mix64(h ^ b);
    h = mix64(h ^ c);
    const double u = double(h >> 11) * 0x1.0p-53;
    return u < p;
}

std::vector<Triple> sample_triples(std::span<const Triple> candidates,
                                   std::span<const double> distances,
                                   const BuilderConfig& config) {
    std::vector<Triple> kept;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (keep_triple(candidates[i][0], candidates[i][1], candidates[i][2], distances[i],
                        config))
            kept.push_back(candidates[i]);
    return kept;
}

LiftedHypergraph build_graph(const std::vector<Trajectory>& trajectories, const FlowStats& stats,
                             const BuilderConfig& config) {
    const std::size_t n = trajectories.size();
    LiftedHypergraph g(n);
    const PairTable pairs(trajectories, stats, config);
    TripleCollector triples(g, trajectories, stats, config);

    const bool want_pairwise = config.mode != BuildMode::HigherOrderOnly;
    const bool all_triples =
        config.mode == BuildMode::HigherOrderFull || config.mode == BuildMode::HigherOrderOnly;

    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j) {
            if (!pairs.admissible(i, j, config))
                continue;
            const double c = pairs.cost(i, j);
            if (want_pairwise) {
                const bool adaptive_zero = config.mode == BuildMode::Adaptive && c >= 0.0;
                g.add_edge({i, j}, adaptive_zero ? 0.0 : c, EdgeKind::Connectivity);
            }
            if (config.mode == BuildMode::Adaptive && c >= 0.0) {
                // the translational model rejects this pair; let triples decide
                for (NodeId k = 0; k < n; ++k) {
                    if (k == i || k == j)
                        continue;
                    if (common_frames(trajectories[i], trajectories[j], trajectories[k]).length() <
                        2)
                        continue;
                    triples.propose(i, j, k, pairs.spread(i, j, k));
                }
            }
        }

    if (all_triples)
        for (NodeId i = 0; i < n; ++i)
            for (NodeId j = i + 1; j < n; ++j)
                for (NodeId k = j + 1; k < n; ++k) {
                    if (common_frames(trajectories[i], trajectories[j], trajectories[k]).length() <
                        2)
                        continue;
                    triples.propose(i, j, k, pairs.spread(i, j, k));
                }

    if (config.lifted)
        return lift(g, trajectories, config);
    return g;
}

LiftedHypergraph lift(const LiftedHypergraph& g, const std::vector<Trajectory>& trajectories,
                      const BuilderConfig& config) {
    const std::size_t n = trajectories.size();

    // nearest overlapping neighbors by mean spatial distance
    std::vector<std::vector<NodeId>> near(n);
    std::vector<std::pair<double, NodeId>> order;
    for (NodeId i = 0; i < n; ++i) {
        order.clear();
        for (NodeId j = 0; j < n; ++j) {
            if (j == i || common_frames(trajectories[i], trajectories[j]).length() < 2)
                continue;
            order.emplace_back(mean_spatial_distance(trajectories[i], trajectories[j]), j);
        }
        std::sort(order.begin(), order.end());
        const std::size_t keep = std::min<std::size_t>(order.size(), config.lift_neighbors);
        for (std::size_t r = 0; r < keep; ++r)
            near[i].push_back(order[r].second);
    }
    const auto is_near = [&](NodeId i, NodeId j) {
        return std::find(near[i].begin(), near[i].end(), j) != near[i].end();
    };

    LiftedHypergraph out(g.node_count());
    for (const HyperEdge& e : g.edges()) {
        EdgeKind kind = EdgeKind::Connectivity;
        if (e.order() == 2) {
            const NodeId i = e.nodes[0], j = e.nodes[1];
            const bool keep_f = is_near(i, j) || is_near(j, i) ||
                                max_spatial_distance(trajectories[i], trajectories[j]) <
                                    config.lift_distance;
            kind = keep_f ? EdgeKind::Connectivity : EdgeKind::Lifted;
        }
        out.add_edge(e.nodes, e.cost, kind);
    }
    return out;
}

} // namespace holmc
