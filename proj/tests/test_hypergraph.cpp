#include <limits>
#include <vector>

#include "doctest.h"

#include "holmc/errors.hpp"
#include "holmc/hypergraph.hpp"

using namespace holmc;

TEST_CASE("add_edge sorts nodes and validates input") {
    LiftedHypergraph g(5);
    const EdgeId e = g.add_edge({3, 0, 4}, 1.5);
    CHECK(g.edge(e).nodes == std::vector<NodeId>{0, 3, 4});
    CHECK(g.edge(e).cost == 1.5);
    CHECK(g.edge(e).kind == EdgeKind::Connectivity);
    CHECK(g.edge(e).order() == 3);
    CHECK(g.max_order() == 3);

    CHECK_THROWS_AS(g.add_edge({2}, 1.0), Error);
    CHECK_THROWS_AS(g.add_edge({1, 1}, 1.0), Error);
    CHECK_THROWS_AS(g.add_edge({1, 5}, 1.0), Error);
    CHECK_THROWS_AS(g.add_edge({0, 1}, std::numeric_limits<double>::infinity()), Error);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("repeated node sets merge per kind") {
    LiftedHypergraph g(4);
    const EdgeId a = g.add_edge({0, 1}, 1.0);
    const EdgeId b = g.add_edge({1, 0}, 0.25);
    CHECK(a == b);
    CHECK(g.edge_count() == 1);
    CHECK(g.edge(a).cost == 1.25);

    g.add_edge({0, 1, 2}, -1.0, EdgeKind::Lifted);
    CHECK_THROWS_AS(g.add_edge({2, 1, 0}, 1.0, EdgeKind::Connectivity), Error);
    CHECK(g.edge_count() == 2);
}

TEST_CASE("incidence lists split by kind") {
    LiftedHypergraph g(4);
    const EdgeId f = g.add_edge({0, 1}, -1.0);
    const EdgeId l = g.add_edge({0, 2}, 2.0, EdgeKind::Lifted);
    const EdgeId t = g.add_edge({0, 1, 3}, 0.5);

    CHECK(g.connectivity_edges_of(0) == std::vector<EdgeId>{f, t});
    CHECK(g.lifted_edges_of(0) == std::vector<EdgeId>{l});
    CHECK(g.connectivity_edges_of(2).empty());
    CHECK(g.lifted_edges_of(2) == std::vector<EdgeId>{l});

    CHECK(g.f_neighbors(0) == std::vector<NodeId>{1, 3});
    CHECK(g.f_neighbors(2).empty()); // lifted edges do not count
    CHECK(g.f_neighbors(3) == std::vector<NodeId>{0, 1});
}

TEST_CASE("find_edge ignores node order") {
    LiftedHypergraph g(4);
    const EdgeId e = g.add_edge({2, 0, 1}, 1.0);
    CHECK(g.find_edge({1, 2, 0}) == e);
    CHECK(!g.find_edge({0, 1}).has_value());
    CHECK(!g.find_edge({0, 1, 3}).has_value());
}

TEST_CASE("partition helpers use min member class ids") {
    const NodePartition s = NodePartition::singletons(3);
    CHECK(s.class_of == std::vector<NodeId>{0, 1, 2});
    CHECK(s.class_count() == 3);

    const NodePartition p = NodePartition::from_class_of({4, 3, 4, 3, 1});
    CHECK(p.class_of == std::vector<NodeId>{0, 1, 0, 1, 4});
    CHECK(p.class_count() == 3);
    const auto classes = p.classes();
    REQUIRE(classes.size() == 3);
    CHECK(classes[0] == std::vector<NodeId>{0, 2});
    CHECK(classes[1] == std::vector<NodeId>{1, 3});
    CHECK(classes[2] == std::vector<NodeId>{4});

    CHECK_THROWS_AS(NodePartition::from_class_of({0, 5}), Error);

    CHECK(p == NodePartition::from_class_of({0, 1, 0, 1, 4}));
    CHECK(p != s);
}

TEST_CASE("connected components follow connectivity edges only") {
    LiftedHypergraph g(6);
    g.add_edge({0, 1}, 1.0);
    g.add_edge({1, 2, 3}, 1.0);
    g.add_edge({4, 5}, 1.0, EdgeKind::Lifted);

    const NodePartition p = connected_components(g);
    CHECK(p.class_of == std::vector<NodeId>{0, 0, 0, 0, 4, 5});

    const NodePartition q =
        connected_components(g, [&](EdgeId e) { return g.edge(e).order() == 2; });
    CHECK(q.class_of == std::vector<NodeId>{0, 0, 2, 3, 4, 5});
}

TEST_CASE("empty graph edge cases") {
    LiftedHypergraph g(0);
    CHECK(g.node_count() == 0);
    CHECK(g.edge_count() == 0);
    CHECK(g.max_order() == 0);
    CHECK(connected_components(g).class_of.empty());
    CHECK(NodePartition::singletons(0).class_count() == 0);
}
