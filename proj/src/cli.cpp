#include "holmc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numbers>
#include <ostream>
#include <string>

#include "CLI11.hpp"

#include "holmc/builder.hpp"
#include "holmc/errors.hpp"
#include "holmc/exact.hpp"
#include "holmc/io.hpp"
#include "holmc/kl.hpp"
#include "holmc/metrics.hpp"
#include "holmc/multicut.hpp"
#include "holmc/synth.hpp"

namespace holmc {

namespace {

struct UsageError : Error {
    using Error::Error;
};

/* forces a decimal point so numbers read as such (1 -> 1.0) */
std::string pretty(double v) {
    std::string s = format_double(v);
    if (s.find_first_of(".en") == std::string::npos)
        s += ".0";
    return s;
}

double radians(double degrees) { return degrees * std::numbers::pi / 180.0; }

struct SynthOpts {
    int frames = 20;
    double step = 8.0;
    double noise = 0.0;
    std::uint64_t seed = 0;
    std::vector<double> objects; // flat, 8 numbers each
    std::string out;
    std::string labels;
};

int run_synth(const SynthOpts& o, std::ostream& out) {
    SceneSpec spec;
    spec.n_frames = o.frames;
    spec.step = o.step;
    spec.noise_sigma = o.noise;
    spec.seed = o.seed;
    for (std::size_t i = 0; i + 8 <= o.objects.size(); i += 8) {
        const double* p = o.objects.data() + i;
        spec.objects.push_back(
            {{p[0], p[1], p[2], p[3]}, {EuclideanTransform{p[4], radians(p[5]), {p[6], p[7]}}}});
    }
    const Scene scene = generate_scene(spec);
    write_trajectories_file(o.out, {scene.trajectories, scene.n_frames, 0});
    if (!o.labels.empty())
        write_solution_file(o.labels, {0.0, scene.labels});
    out << "trajectories " << scene.trajectories.size() << '\n';
    out << "objects " << spec.objects.size() << '\n';
    return 0;
}

struct GridOpts {
    int side = 8;
    bool lifted = false;
    int offset = 5;
    std::string flow = "constant";
    double vx = 0, vy = 0;
    std::vector<double> left{0.0, 0.0};
    std::vector<double> right{3.0, 0.0};
    double blend = 0;
    double angle_deg = 5.0;
    std::vector<double> center;
    int regions = 3;
    std::uint64_t flow_seed = 0;
    CostParams costs;
    std::string out;
    std::string labels;
    std::string traj_out;
};

FlowField make_flow(const GridOpts& o) {
    if (o.flow == "constant")
        return constant_flow({o.vx, o.vy});
    if (o.flow == "two_region")
        return two_region_flow(o.side, {o.left[0], o.left[1]}, {o.right[0], o.right[1]}, o.blend);
    if (o.flow == "rotation") {
        const Vec2 c = o.center.size() == 2
                           ? Vec2{o.center[0], o.center[1]}
                           : Vec2{(o.side - 1) / 2.0, (o.side - 1) / 2.0};
        return rotation_flow(c, radians(o.angle_deg));
    }
    return random_region_flow(o.side, o.flow_seed, o.regions);
}

int run_grid(const GridOpts& o, std::ostream& out) {
    GridSpec spec{o.side, o.lifted, o.offset, o.costs};
    const FlowField flow = make_flow(o);
    const LiftedHypergraph g = grid_instance(spec, flow);
    write_instance_file(o.out, g);
    if (!o.labels.empty()) {
        std::vector<std::uint32_t> labels;
        if (o.flow == "constant")
            labels.assign(g.node_count(), 0);
        else if (o.flow == "two_region")
            labels = two_region_labels(o.side);
        else
            throw UsageError("labels are only defined for constant and two_region flows");
        write_solution_file(o.labels, {0.0, labels});
    }
    if (!o.traj_out.empty())
        write_trajectories_file(o.traj_out, {grid_trajectories(o.side, flow), 2, 0});
    out << "nodes " << g.node_count() << '\n';
    out << "edges " << g.edge_count() << '\n';
    return 0;
}

struct BuildOpts {
    std::string in;
    std::string out;
    BuilderConfig config;
    std::vector<double> sigma;
};

int run_build(const BuildOpts& o, std::ostream& out) {
    const TrajectorySet set = read_trajectories_file(o.in);
    FlowStats stats;
    if (!o.sigma.empty()) {
        int first = 0;
        for (const Trajectory& t : set.trajectories)
            first = &t == &set.trajectories.front() ? t.first_frame()
                                                    : std::min(first, t.first_frame());
        std::vector<double> sigma = o.sigma;
        if (sigma.size() == 1)
            sigma.assign(static_cast<std::size_t>(std::max(set.n_frames - 1, 1)), sigma[0]);
        stats = FlowStats(first, std::move(sigma));
    }
    const LiftedHypergraph g = build_graph(set.trajectories, stats, o.config);
    write_instance_file(o.out, g);
    std::size_t pairs = 0, triples = 0, lifted = 0;
    for (const HyperEdge& e : g.edges()) {
        if (e.order() == 2)
            ++pairs;
        else
            ++triples;
        if (e.kind == EdgeKind::Lifted)
            ++lifted;
    }
    out << "nodes " << g.node_count() << '\n';
    out << "pairwise " << pairs << '\n';
    out << "triples " << triples << '\n';
    out << "lifted " << lifted << '\n';
    return 0;
}

struct SolveOpts {
    std::string in;
    std::string out;
    std::string init = "singletons";
    std::size_t max_iterations = 1000;
    double epsilon = 1e-9;
    bool no_rollback = false;
};

NodePartition initial_partition(const LiftedHypergraph& g, const std::string& init) {
    if (init == "singletons")
        return NodePartition::singletons(g.node_count());
    if (init == "joined")
        return connected_components(g);
    const Solution s = read_solution_file(init);
    if (s.labels.size() != g.node_count())
        throw Error("initial solution does not match the instance");
    return NodePartition::from_class_of(s.labels);
}

int run_solve(const SolveOpts& o, std::ostream& out) {
    const LiftedHypergraph g = read_instance_file(o.in);
    const EdgeLabeling start = labeling_from_partition(g, initial_partition(g, o.init));
    SolverConfig cfg;
    cfg.max_outer_iterations = o.max_iterations;
    cfg.epsilon = o.epsilon;
    cfg.rollback = !o.no_rollback;
    const auto t0 = std::chrono::steady_clock::now();
    const SolveResult res = solve(g, start, cfg);
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    out << "objective " << pretty(res.objective) << '\n';
    out << "components " << res.partition.class_count() << '\n';
    out << "iterations " << res.outer_iterations << '\n';
    out << "converged " << (res.converged ? "yes" : "no") << '\n';
    out << "time " << pretty(dt.count()) << '\n';
    if (!o.out.empty())
        write_solution_file(o.out, {res.objective, res.partition.class_of});
    return 0;
}

struct ExactOpts {
    std::string in;
    std::string out;
    std::size_t node_limit = 10;
};

int run_exact(const ExactOpts& o, std::ostream& out) {
    const LiftedHypergraph g = read_instance_file(o.in);
    const ExactResult res = solve_exact(g, o.node_limit);
    out << "objective " << pretty(res.objective) << '\n';
    out << "components " << res.partition.class_count() << '\n';
    out << "feasible " << res.feasible_count << '\n';
    if (!o.out.empty())
        write_solution_file(o.out, {res.objective, res.partition.class_of});
    return 0;
}

struct VerifyOpts {
    std::string instance;
    std::string solution;
    double tolerance = 1e-6;
};

int run_verify(const VerifyOpts& o, std::ostream& out) {
    const LiftedHypergraph g = read_instance_file(o.instance);
    const Solution s = read_solution_file(o.solution);
    if (s.labels.size() != g.node_count()) {
        out << "infeasible: " << s.labels.size() << " labels for " << g.node_count()
            << " nodes\n";
        return 1;
    }
    EdgeLabeling y;
    try {
        y = labeling_from_partition(g, NodePartition::from_class_of(s.labels));
    } catch (const DisconnectedClassError& e) {
        out << "infeasible: " << e.what() << '\n';
        return 1;
    }
    if (!is_feasible(g, y) || !local_diagnostics(g, y).empty()) {
        out << "infeasible: labeling fails the decomposition check\n";
        return 1;
    }
    const double obj = objective(g, y);
    out << "feasible\n";
    out << "objective " << pretty(obj) << '\n';
    if (std::abs(obj - s.objective) > o.tolerance) {
        out << "objective mismatch: file says " << pretty(s.objective) << '\n';
        return 1;
    }
    return 0;
}

struct EvalOpts {
    std::string prediction;
    std::string truth;
};

int run_eval(const EvalOpts& o, std::ostream& out) {
    const Solution pred = read_solution_file(o.prediction);
    const Solution truth = read_solution_file(o.truth);
    if (pred.labels.size() != truth.labels.size())
        throw Error("prediction and truth disagree on the node count");
    const Scores s = score_partition(NodePartition::from_class_of(pred.labels), truth.labels);
    out << "rand " << pretty(s.rand_index) << '\n';
    out << "precision " << pretty(s.precision) << '\n';
    out << "recall " << pretty(s.recall) << '\n';
    out << "f " << pretty(s.f_measure) << '\n';
    return 0;
}

struct BenchOpts {
    std::vector<int> sides{8, 16, 32, 64, 128};
    bool lifted = false;
    int offset = 5;
    std::uint64_t seed = 0;
    int regions = 3;
};

int run_bench(const BenchOpts& o, std::ostream& out) {
    for (int side : o.sides) {
        GridSpec spec;
        spec.side = side;
        spec.lifted = o.lifted;
        spec.lifted_offset = o.offset;
        const LiftedHypergraph g =
            grid_instance(spec, random_region_flow(side, o.seed + static_cast<std::uint64_t>(side),
                                                   o.regions));
        const EdgeLabeling start = labeling_from_partition(g, connected_components(g));
        const auto t0 = std::chrono::steady_clock::now();
        const SolveResult res = solve(g, start);
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        std::size_t triples = 0;
        for (const HyperEdge& e : g.edges())
            triples += e.order() == 3 ? 1 : 0;
        out << "side " << side << " nodes " << g.node_count() << " edges " << g.edge_count()
            << " triples " << triples << " components " << res.partition.class_count() << " time "
            << pretty(dt.count()) << " objective " << pretty(res.objective) << '\n';
    }
    return 0;
}

void add_cost_options(CLI::App* cmd, CostParams& p) {
    cmd->add_option("--theta-bar0", p.theta_bar0, "pairwise bias, full model");
    cmd->add_option("--theta0", p.theta0, "pairwise bias, motion only model");
    cmd->add_option("--theta1", p.theta1, "pairwise motion distance weight");
    cmd->add_option("--theta2", p.theta2, "pairwise spatial distance weight");
    cmd->add_option("--theta3", p.theta3, "pairwise feature distance weight");
    cmd->add_option("--triple-theta0", p.triple_theta0, "third order bias");
    cmd->add_option("--triple-theta1", p.triple_theta1, "third order distance weight");
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"higher order lifted multicut toolkit"};
    app.set_config("--config");
    app.require_subcommand(1);

    SynthOpts sy;
    CLI::App* synth = app.add_subcommand("synth", "sample trajectories from a rigid motion scene");
    synth->add_option("--frames", sy.frames, "frames per trajectory")->check(CLI::Range(2, 100000));
    synth->add_option("--step", sy.step, "sampling grid spacing")->check(CLI::PositiveNumber);
    synth->add_option("--noise", sy.noise, "position jitter sigma")->check(CLI::NonNegativeNumber);
    synth->add_option("--seed", sy.seed, "rng seed");
    synth->add_option("--object", sy.objects, "x0 y0 x1 y1 scale angle_deg tx ty")
        ->type_size(8)
        ->required();
    synth->add_option("-o,--output", sy.out, "trajectory file")->required();
    synth->add_option("--labels", sy.labels, "ground truth label file");

    GridOpts gr;
    CLI::App* grid = app.add_subcommand("grid", "dense two frame flow instance on a pixel grid");
    grid->add_option("--side", gr.side, "grid side length")->check(CLI::Range(3, 100000));
    grid->add_flag("--lifted", gr.lifted, "add lifted pairwise edges");
    grid->add_option("--lifted-offset", gr.offset, "lifted pair offset")->check(CLI::Range(2, 100000));
    grid->add_option("--flow", gr.flow, "flow preset")
        ->check(CLI::IsMember({"constant", "two_region", "rotation", "random_region"}));
    grid->add_option("--vx", gr.vx, "constant flow x");
    grid->add_option("--vy", gr.vy, "constant flow y");
    grid->add_option("--left", gr.left, "left half flow")->type_size(2);
    grid->add_option("--right", gr.right, "right half flow")->type_size(2);
    grid->add_option("--blend", gr.blend, "half width of the boundary ramp")
        ->check(CLI::NonNegativeNumber);
    grid->add_option("--angle", gr.angle_deg, "rotation per transition, degrees");
    grid->add_option("--center", gr.center, "rotation center")->type_size(2);
    grid->add_option("--regions", gr.regions, "moving rectangles")->check(CLI::Range(0, 1000));
    grid->add_option("--flow-seed", gr.flow_seed, "rng seed for random regions");
    add_cost_options(grid, gr.costs);
    grid->add_option("-o,--output", gr.out, "instance file")->required();
    grid->add_option("--labels", gr.labels, "ground truth label file");
    grid->add_option("--trajectories", gr.traj_out, "per pixel trajectory file");

    BuildOpts bg;
    CLI::App* build = app.add_subcommand("build-graph", "instance from a trajectory file");
    build->add_option("-i,--trajectories", bg.in, "trajectory file")->required();
    build->add_option("-o,--output", bg.out, "instance file")->required();
    const std::map<std::string, BuildMode> modes{{"adaptive", BuildMode::Adaptive},
                                                 {"full", BuildMode::HigherOrderFull},
                                                 {"higher-only", BuildMode::HigherOrderOnly},
                                                 {"pairwise", BuildMode::Pairwise}};
    build->add_option("--mode", bg.config.mode, "cost structure")
        ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case)
                        .description("{adaptive,full,higher-only,pairwise}"));
    build->add_flag("--lifted", bg.config.lifted, "move distant pairs to lifted edges");
    build->add_option("--pairwise-cutoff", bg.config.pairwise_cutoff, "max mean distance for pairs")
        ->check(CLI::PositiveNumber);
    build->add_option("--lift-neighbors", bg.config.lift_neighbors, "nearest neighbors kept in F")
        ->check(CLI::NonNegativeNumber);
    build->add_option("--lift-distance", bg.config.lift_distance, "max distance kept in F")
        ->check(CLI::NonNegativeNumber);
    build->add_option("--triple-keep-all", bg.config.triple_keep_all,
                      "triples this close are always kept")
        ->check(CLI::NonNegativeNumber);
    build->add_option("--triple-cutoff", bg.config.triple_cutoff, "triples this far are dropped")
        ->check(CLI::PositiveNumber);
    build->add_option("--seed", bg.config.seed, "triple sampling seed");
    build->add_option("--sigma", bg.sigma, "per transition flow scale, one value broadcasts");
    add_cost_options(build, bg.config.costs);

    SolveOpts so;
    CLI::App* solve_cmd = app.add_subcommand("solve", "local search from an initial decomposition");
    solve_cmd->add_option("-i,--instance", so.in, "instance file")->required();
    solve_cmd->add_option("-o,--output", so.out, "solution file");
    solve_cmd->add_option("--init", so.init, "singletons, joined, or a solution file");
    solve_cmd->add_option("--max-iterations", so.max_iterations, "outer sweep cap");
    solve_cmd->add_option("--epsilon", so.epsilon, "minimum accepted gain")
        ->check(CLI::NonNegativeNumber);
    solve_cmd->add_flag("--no-rollback", so.no_rollback, "keep transformations that lost their gain");

    ExactOpts se;
    CLI::App* exact_cmd = app.add_subcommand("solve-exact", "exhaustive search over decompositions");
    exact_cmd->add_option("-i,--instance", se.in, "instance file")->required();
    exact_cmd->add_option("-o,--output", se.out, "solution file");
    exact_cmd->add_option("--node-limit", se.node_limit, "refuse larger instances");

    VerifyOpts ve;
    CLI::App* verify_cmd = app.add_subcommand("verify", "check a solution file against an instance");
    verify_cmd->add_option("-i,--instance", ve.instance, "instance file")->required();
    verify_cmd->add_option("-s,--solution", ve.solution, "solution file")->required();
    verify_cmd->add_option("--tolerance", ve.tolerance, "objective mismatch tolerance")
        ->check(CLI::NonNegativeNumber);

    EvalOpts ev;
    CLI::App* eval_cmd = app.add_subcommand("eval", "score a solution against ground truth labels");
    eval_cmd->add_option("-s,--solution", ev.prediction, "predicted solution file")->required();
    eval_cmd->add_option("-t,--truth", ev.truth, "ground truth label file")->required();

    BenchOpts be;
    CLI::App* bench_cmd = app.add_subcommand("bench", "timing sweep over random region grids");
    bench_cmd->add_option("--sides", be.sides, "grid side lengths")->delimiter(',');
    bench_cmd->add_flag("--lifted", be.lifted, "add lifted pairwise edges");
    bench_cmd->add_option("--lifted-offset", be.offset, "lifted pair offset")
        ->check(CLI::Range(2, 100000));
    bench_cmd->add_option("--seed", be.seed, "rng seed");
    bench_cmd->add_option("--regions", be.regions, "moving rectangles")->check(CLI::Range(0, 1000));

    for (CLI::App* cmd : app.get_subcommands([](const CLI::App*) { return true; }))
        cmd->configurable();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (synth->parsed())
            return run_synth(sy, out);
        if (grid->parsed())
            return run_grid(gr, out);
        if (build->parsed())
            return run_build(bg, out);
        if (solve_cmd->parsed())
            return run_solve(so, out);
        if (exact_cmd->parsed())
            return run_exact(se, out);
        if (verify_cmd->parsed())
            return run_verify(ve, out);
        if (eval_cmd->parsed())
            return run_eval(ev, out);
        if (bench_cmd->parsed())
            return run_bench(be, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace holmc
