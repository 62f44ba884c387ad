#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"

#include "holmc/errors.hpp"
#include "holmc/exact.hpp"
#include "holmc/kl.hpp"
#include "oracles.hpp"

using namespace holmc;

namespace {

EdgeLabeling joined_init(const LiftedHypergraph& g) {
    return labeling_from_partition(g, connected_components(g));
}

EdgeLabeling singleton_init(const LiftedHypergraph& g) {
    return labeling_from_partition(g, NodePartition::singletons(g.node_count()));
}

} // namespace

TEST_CASE("splitting a triangle with one expensive pair") {
    LiftedHypergraph g(3);
    g.add_edge({0, 1}, -1.0);
    g.add_edge({1, 2}, -1.0);
    g.add_edge({0, 2}, 3.0);

    const SolveResult res = solve(g, joined_init(g));
    CHECK(res.partition.class_of == std::vector<NodeId>{0, 1, 1});
    CHECK(res.objective == -1.0);
    CHECK(res.converged);
    CHECK(res.outer_iterations == 2);
}

TEST_CASE("lifted edge pays without offering connectivity") {
    LiftedHypergraph g(3);
    g.add_edge({0, 1}, -1.0);
    g.add_edge({1, 2}, -1.0);
    g.add_edge({0, 2}, 3.0, EdgeKind::Lifted);

    const SolveResult res = solve(g, joined_init(g));
    CHECK(res.objective == -1.0);
    CHECK(res.partition.class_count() == 2);
    CHECK(res.converged);
}

TEST_CASE("two singletons merge over an attractive edge") {
    LiftedHypergraph g(2);
    g.add_edge({0, 1}, -5.0);

    const SolveResult res = solve(g, singleton_init(g));
    CHECK(res.partition.class_of == std::vector<NodeId>{0, 0});
    CHECK(res.objective == -5.0);
    CHECK(res.converged);
    CHECK(res.outer_iterations == 2);
}

TEST_CASE("a component splits off its repulsive tail") {
    LiftedHypergraph g(3);
    g.add_edge({0, 1}, -1.0);
    g.add_edge({1, 2}, 2.0);

    const SolveResult res = solve(g, joined_init(g));
    CHECK(res.partition.class_of == std::vector<NodeId>{0, 0, 2});
    CHECK(res.objective == -1.0);
    CHECK(res.converged);
}

TEST_CASE("third order gains are invisible to pairwise scopes") {
    /* the optimum joins all three nodes, but no sequence of pair updates from
     * singletons sees the triple payoff, so the search halts at zero */
    LiftedHypergraph g(3);
    g.add_edge({0, 1, 2}, -2.0);
    g.add_edge({0, 1}, 1.0);

    const SolveResult from_singles = solve(g, singleton_init(g));
    CHECK(from_singles.objective == 0.0);
    CHECK(from_singles.partition.class_count() == 3);
    CHECK(from_singles.converged);
    CHECK(from_singles.outer_iterations == 1);

    const SolveResult from_joined = solve(g, joined_init(g));
    CHECK(from_joined.objective == -1.0);
    CHECK(from_joined.partition.class_count() == 1);
    CHECK(from_joined.outer_iterations == 1);

    CHECK(solve_exact(g).objective == -1.0);
}

TEST_CASE("infeasible initial labelings are rejected") {
    LiftedHypergraph g(3);
    g.add_edge({0, 1}, -1.0);
    g.add_edge({1, 2}, -1.0);
    g.add_edge({0, 2}, 3.0, EdgeKind::Lifted);

    CHECK_THROWS_AS(solve(g, EdgeLabeling{0, 0, 1}), InfeasibleInputError);
    CHECK_THROWS_AS(solve(g, EdgeLabeling{0, 0}), Error);
}

TEST_CASE("initial boundary") {
    LiftedHypergraph g(4);
    g.add_edge({0, 1}, 1.0);
    g.add_edge({1, 2}, 1.0);
    g.add_edge({2, 3}, 1.0);
    g.add_edge({0, 3}, 1.0, EdgeKind::Lifted);

    const std::vector<NodeId> a{0, 1}, b{2, 3}, lone{0}, far{3};
    CHECK(initial_boundary(g, a, b) == std::vector<NodeId>{1, 2});
    /* lifted contact does not make a boundary */
    CHECK(initial_boundary(g, lone, far).empty());
    CHECK(initial_boundary(g, a, {}) == std::vector<NodeId>{0, 1});
}

TEST_CASE("random instances: feasible, monotone, never worse than the start") {
    std::mt19937_64 rng(17);
    oracle::RandomInstanceSpec spec;
    spec.min_nodes = 4;
    spec.max_nodes = 8;
    for (int round = 0; round < 60; ++round) {
        const LiftedHypergraph g = oracle::random_instance(rng, spec);
        const ExactResult best = solve_exact(g);

        std::vector<NodeId> raw(g.node_count());
        for (auto& c : raw)
            c = static_cast<NodeId>(rng() % g.node_count());
        const NodePartition random_start =
            canonicalize(g, NodePartition::from_class_of(raw));

        for (const EdgeLabeling& init :
             {singleton_init(g), joined_init(g), labeling_from_partition(g, random_start)}) {
            std::vector<double> trace;
            SolverConfig cfg;
            cfg.iteration_hook = [&](std::size_t, double obj, const NodePartition& p) {
                trace.push_back(obj);
                // the incremental objective must track the partition exactly
                CHECK(std::abs(obj - oracle::partition_objective(g, p.class_of)) <= 1e-9);
            };
            const SolveResult res = solve(g, init, cfg);

            CHECK(is_feasible(g, res.labeling));
            CHECK(labeling_from_partition(g, res.partition) == res.labeling);
            CHECK(res.objective == doctest::Approx(objective(g, res.labeling)));
            CHECK(res.objective <= objective(g, init) + 1e-9);
            CHECK(res.objective >= best.objective - 1e-9);
            CHECK(res.converged);
            for (std::size_t i = 1; i < trace.size(); ++i)
                CHECK(trace[i] <= trace[i - 1] + 1e-9);

            const SolveResult again = solve(g, init);
            CHECK(again.partition == res.partition);
            CHECK(again.outer_iterations == res.outer_iterations);
        }
    }
}

TEST_CASE("predicted gains equal whole objective differences") {
    std::mt19937_64 rng(23);
    oracle::RandomInstanceSpec spec;
    spec.min_nodes = 4;
    spec.max_nodes = 7;
    spec.triple_density = 0.3;
    std::size_t snapshots = 0;
    for (int round = 0; round < 30; ++round) {
        const LiftedHypergraph g = oracle::random_instance(rng, spec);
        SolverConfig cfg;
        cfg.gain_audit = [&](const GainSnapshot& s) {
            ++snapshots;
            const std::vector<signed char> side(s.side.begin(), s.side.end());
            for (NodeId v : s.scope) {
                if (s.moved[v])
                    continue;
                const double ref = oracle::flip_gain(s.graph, side, v);
                CHECK(std::abs(s.gain[v] - ref) <= 1e-9);
            }
        };
        (void)solve(g, singleton_init(g), cfg);
        (void)solve(g, joined_init(g), cfg);
    }
    CHECK(snapshots > 100); // the hook must actually have fired
}

TEST_CASE("iteration cap stops an unconverged search") {
    LiftedHypergraph g(2);
    g.add_edge({0, 1}, -5.0);
    SolverConfig cfg;
    cfg.max_outer_iterations = 1;
    const SolveResult res = solve(g, singleton_init(g), cfg);
    CHECK(res.outer_iterations == 1);
    CHECK(!res.converged);
    CHECK(res.objective == -5.0);
}

TEST_CASE("edgeless nodes stay where they are") {
    const LiftedHypergraph g(4);
    const SolveResult res = solve(g, EdgeLabeling{});
    CHECK(res.partition == NodePartition::singletons(4));
    CHECK(res.objective == 0.0);
    CHECK(res.converged);
    CHECK(res.outer_iterations == 1);
}
