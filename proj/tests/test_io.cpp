#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "holmc/errors.hpp"
#include "holmc/io.hpp"

using namespace holmc;

namespace {

std::string write_str(const LiftedHypergraph& g) {
    std::ostringstream out;
    write_instance(out, g);
    return out.str();
}

std::string write_str(const TrajectorySet& set) {
    std::ostringstream out;
    write_trajectories(out, set);
    return out.str();
}

std::string write_str(const Solution& s) {
    std::ostringstream out;
    write_solution(out, s);
    return out.str();
}

LiftedHypergraph read_instance_str(const std::string& s) {
    std::istringstream in(s);
    return read_instance(in);
}

TrajectorySet read_trajectories_str(const std::string& s) {
    std::istringstream in(s);
    return read_trajectories(in);
}

Solution read_solution_str(const std::string& s) {
    std::istringstream in(s);
    return read_solution(in);
}

void check_same_graph(const LiftedHypergraph& a, const LiftedHypergraph& b) {
    CHECK(a.node_count() == b.node_count());
    REQUIRE(a.edge_count() == b.edge_count());
    for (const HyperEdge& e : a.edges()) {
        const auto id = b.find_edge(e.nodes);
        REQUIRE(id.has_value());
        CHECK(b.edge(*id).cost == e.cost);
        CHECK(b.edge(*id).kind == e.kind);
    }
}

std::optional<ParseError> parse_error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e;
    }
    return std::nullopt;
}

void check_error(const std::function<void()>& f, std::size_t line, std::size_t column,
                 const std::string& what) {
    const auto e = parse_error_of(f);
    REQUIRE(e.has_value());
    CHECK(e->line == line);
    CHECK(e->column == column);
    CHECK(std::string(e->what()) ==
          "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

LiftedHypergraph sample_graph() {
    LiftedHypergraph g(5);
    g.add_edge({1, 2}, 2.0, EdgeKind::Connectivity);
    g.add_edge({0, 1}, -1.0, EdgeKind::Connectivity);
    g.add_edge({0, 2}, 0.5, EdgeKind::Lifted);
    g.add_edge({0, 1, 2}, -2.0, EdgeKind::Connectivity);
    g.add_edge({0, 2, 4}, 1.0, EdgeKind::Connectivity);
    return g;
}

const std::string sample_graph_text = "HOLMC 1\n"
                                      "nodes 5\n"
                                      "edge F 2 0 1 -1\n"
                                      "edge L 2 0 2 0.5\n"
                                      "edge F 2 1 2 2\n"
                                      "edge F 3 0 1 2 -2\n"
                                      "edge F 3 0 2 4 1\n";

} // namespace

TEST_CASE("format_double is shortest and exact") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(-5.0) == "-5");
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(0.0) == "0");

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> mantissa(-1.0, 1.0);
    std::uniform_int_distribution<int> exponent(-30, 30);
    for (int i = 0; i < 1000; ++i) {
        const double v = std::ldexp(mantissa(rng), exponent(rng));
        const std::string s = format_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
}

TEST_CASE("instance files") {
    SUBCASE("writing is canonical") { CHECK(write_str(sample_graph()) == sample_graph_text); }
    SUBCASE("the round trip preserves the graph") {
        const LiftedHypergraph g = read_instance_str(sample_graph_text);
        check_same_graph(sample_graph(), g);
        CHECK(write_str(g) == sample_graph_text);
    }
    SUBCASE("comments and loose whitespace are fine") {
        const LiftedHypergraph g = read_instance_str("# scrambled copy\n"
                                                     "HOLMC 1 # version\n"
                                                     "nodes\t5\n\n"
                                                     "edge F 3 2 0 1 -2\n"
                                                     "edge  F 2   1 0 -1\n"
                                                     "edge L 2 2 0 0.5\n"
                                                     "edge F 2 2 1 2\n"
                                                     "edge F 3 4 2 0 1 # last\n");
        CHECK(write_str(g) == sample_graph_text);
    }
    SUBCASE("repeating an edge accumulates its cost") {
        const LiftedHypergraph g = read_instance_str("HOLMC 1\nnodes 2\n"
                                                     "edge F 2 0 1 1.5\n"
                                                     "edge F 2 1 0 1\n");
        CHECK(g.edge_count() == 1);
        CHECK(g.edge(0).cost == doctest::Approx(2.5));
    }
    SUBCASE("an edgeless file is valid") {
        CHECK(read_instance_str("HOLMC 1\nnodes 0\n").node_count() == 0);
    }
    SUBCASE("parse errors carry positions") {
        const auto read = [](std::string text) {
            return [text = std::move(text)] { read_instance_str(text); };
        };
        check_error(read(""), 1, 1, "expected 'HOLMC'");
        check_error(read("HOLMc 1\nnodes 2\n"), 1, 1, "expected 'HOLMC', got 'HOLMc'");
        check_error(read("HOLMC 3\nnodes 2\n"), 1, 7, "unsupported format version '3'");
        check_error(read("HOLMC 1\nnode 2\n"), 2, 1, "expected 'nodes', got 'node'");
        check_error(read("HOLMC 1\nnodes -1\n"), 2, 7, "node count out of range");
        check_error(read("HOLMC 1\nnodes two\n"), 2, 7, "expected integer node count, got 'two'");
        check_error(read("HOLMC 1\nnodes 3\nfoo\n"), 3, 1, "expected 'edge', got 'foo'");
        check_error(read("HOLMC 1\nnodes 3\nedge X 2 0 1 1\n"), 3, 6, "edge kind must be F or L");
        check_error(read("HOLMC 1\nnodes 3\nedge F 1 0 1\n"), 3, 8, "edge order out of range");
        check_error(read("HOLMC 1\nnodes 3\nedge F 4 0 1 2 0 1\n"), 3, 8, "edge order out of range");
        check_error(read("HOLMC 1\nnodes 3\nedge F 2 0 3 1\n"), 3, 12, "node id out of range");
        check_error(read("HOLMC 1\nnodes 3\nedge F 2 0 1 abc\n"), 3, 14,
                    "expected number edge cost, got 'abc'");
        check_error(read("HOLMC 1\nnodes 3\nedge F 2 1 1 0.5\n"), 3, 1,
                    "duplicate node 1 in edge");
        check_error(read("HOLMC 1\nnodes 3\nedge F 2 0 1 1\nedge L 2 0 1 1\n"), 4, 1,
                    "edge already present with the other kind");
        check_error(read("HOLMC 1\nnodes 2\nedge F 2 0"), 3, 11, "expected node id");
    }
}

TEST_CASE("trajectory files") {
    TrajectorySet set;
    set.n_frames = 3;
    set.feature_dim = 2;
    set.trajectories.push_back({0, {{0.5, 1}, {1.5, 1}}, {{7, 8}, {9, 10}}});
    set.trajectories.push_back({2, {{-3, 4.25}}, {{0, 0}}});
    const std::string text = "TRAJ 1 3 2\n"
                             "traj 0 0 2\n"
                             "0.5 1 7 8\n"
                             "1.5 1 9 10\n"
                             "traj 1 2 1\n"
                             "-3 4.25 0 0\n";

    SUBCASE("golden output") { CHECK(write_str(set) == text); }
    SUBCASE("round trip") {
        const TrajectorySet r = read_trajectories_str(text);
        CHECK(r.n_frames == 3);
        CHECK(r.feature_dim == 2);
        REQUIRE(r.trajectories.size() == 2);
        for (std::size_t i = 0; i < 2; ++i) {
            CHECK(r.trajectories[i].start == set.trajectories[i].start);
            CHECK(r.trajectories[i].points == set.trajectories[i].points);
            CHECK(r.trajectories[i].features == set.trajectories[i].features);
        }
        CHECK(write_str(r) == text);
    }
    SUBCASE("featureless round trip") {
        const std::string plain = "TRAJ 1 2 0\ntraj 0 0 2\n0 0\n1 2.5\n";
        const TrajectorySet r = read_trajectories_str(plain);
        REQUIRE(r.trajectories.size() == 1);
        CHECK(r.trajectories[0].features.empty());
        CHECK(write_str(r) == plain);
    }
    SUBCASE("the writer validates shapes") {
        TrajectorySet bad = set;
        bad.trajectories[0].points.clear();
        bad.trajectories[0].features.clear();
        CHECK_THROWS_AS(write_str(bad), Error);

        bad = set;
        bad.trajectories[1].start = 2;
        bad.trajectories[1].points.push_back({0, 0});
        bad.trajectories[1].features.push_back({0, 0});
        CHECK_THROWS_AS(write_str(bad), Error); // runs past the last frame

        bad = set;
        bad.trajectories[0].features[1].pop_back();
        CHECK_THROWS_AS(write_str(bad), Error);
    }
    SUBCASE("parse errors carry positions") {
        const auto read = [](std::string text_) {
            return [text_ = std::move(text_)] { read_trajectories_str(text_); };
        };
        check_error(read("TRAJ 2 3 0\n"), 1, 6, "unsupported format version '2'");
        check_error(read("TRAJ 1 0 0\n"), 1, 8, "frame count out of range");
        check_error(read("TRAJ 1 3 0\ntraj 1 0 1\n0 0\n"), 2, 8,
                    "trajectory ids must be sequential starting at 0");
        check_error(read("TRAJ 1 3 0\ntraj 0 3 1\n0 0\n"), 2, 8, "start frame out of range");
        check_error(read("TRAJ 1 3 0\ntraj 0 1 3\n0 0\n0 0\n0 0\n"), 2, 10, "length out of range");
        check_error(read("TRAJ 1 2 1\ntraj 0 0 1\n1 2\n"), 4, 1, "expected feature");
        check_error(read("TRAJ 1 2 0\ntraj 0 0 2\n0 0\n"), 4, 1, "expected x");
    }
}

TEST_CASE("solution files") {
    const Solution s{-1.5, {0, 0, 2}};
    const std::string text = "objective -1.5\n0 0\n1 0\n2 2\n";

    SUBCASE("golden output") { CHECK(write_str(s) == text); }
    SUBCASE("round trip") {
        const Solution r = read_solution_str(text);
        CHECK(r.objective == -1.5);
        CHECK(r.labels == s.labels);
        CHECK(write_str(r) == text);
    }
    SUBCASE("node lines may come in any order") {
        const Solution r = read_solution_str("objective -1.5\n2 2\n0 0\n1 0\n");
        CHECK(r.labels == s.labels);
    }
    SUBCASE("an empty assignment is valid") {
        CHECK(read_solution_str("objective 0\n").labels.empty());
    }
    SUBCASE("parse errors carry positions") {
        const auto read = [](std::string text_) {
            return [text_ = std::move(text_)] { read_solution_str(text_); };
        };
        check_error(read(""), 1, 1, "expected 'objective'");
        check_error(read("objectiv 0\n0 0\n"), 1, 1, "expected 'objective', got 'objectiv'");
        check_error(read("objective x\n"), 1, 11, "expected number objective value, got 'x'");
        check_error(read("objective 0\nv 0\n"), 2, 1, "expected node id, got 'v'");
        check_error(read("objective 0\n-1 0\n"), 2, 1, "expected node id, got '-1'");
        check_error(read("objective 0\n0\n"), 3, 1, "expected component id");
        check_error(read("objective 0\n0 0\n0 1\n"), 3, 1, "node listed twice");
        check_error(read("objective 0\n0 0\n2 0\n"), 4, 1, "node 1 has no component");
    }
}

TEST_CASE("malformed input never escapes as anything but a parse error") {
    const auto safe = [](const std::string& text) {
        int outcomes = 0;
        for (int which = 0; which < 3; ++which) {
            try {
                switch (which) {
                case 0: read_instance_str(text); break;
                case 1: read_trajectories_str(text); break;
                default: read_solution_str(text); break;
                }
                ++outcomes;
            } catch (const ParseError&) {
                ++outcomes;
            } catch (...) {
            }
        }
        return outcomes == 3;
    };

    SUBCASE("random byte soup") {
        const std::string alphabet = "0123456789 .-+eEFLn\n\t#objectivraHOLMCTRAJ";
        std::mt19937_64 rng(99);
        std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
        std::uniform_int_distribution<int> len(0, 64);
        for (int round = 0; round < 400; ++round) {
            std::string text;
            const int n = len(rng);
            for (int i = 0; i < n; ++i)
                text += alphabet[pick(rng)];
            CHECK(safe(text));
        }
    }
    SUBCASE("mutated and truncated goldens") {
        const std::string goldens[] = {sample_graph_text,
                                       "TRAJ 1 3 2\ntraj 0 0 2\n0.5 1 7 8\n1.5 1 9 10\n",
                                       "objective -1.5\n0 0\n1 0\n2 2\n"};
        const std::string alphabet = "0123456789.-eFL \nx#";
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
        for (const std::string& golden : goldens) {
            for (std::size_t cut = 0; cut <= golden.size(); ++cut)
                CHECK(safe(golden.substr(0, cut)));
            std::uniform_int_distribution<std::size_t> pos(0, golden.size() - 1);
            for (int round = 0; round < 300; ++round) {
                std::string text = golden;
                const int edits = 1 + round % 3;
                for (int i = 0; i < edits; ++i)
                    text[pos(rng)] = alphabet[pick(rng)];
                CHECK(safe(text));
            }
        }
    }
}
