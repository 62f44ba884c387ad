#include "holmc/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <iterator>
#include <numeric>
#include <ostream>
#include <string_view>
#include <unordered_map>

#include "holmc/errors.hpp"

namespace holmc {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

namespace {

struct Token {
    std::string_view text;
    int line = 0;
    int col = 0;
};

/* Whitespace separated tokens with source positions; # comments out the
 * rest of the line. */
class Tokenizer {
public:
    explicit Tokenizer(std::istream& in)
        : text_(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()) {
        int line = 1, col = 1;
        std::size_t start = npos;
        int tline = 0, tcol = 0;
        bool comment = false;
        for (std::size_t i = 0; i <= text_.size(); ++i) {
            const char c = i < text_.size() ? text_[i] : '\n';
            if (i == text_.size()) {
                end_line_ = line;
                end_col_ = col;
            }
            if (c == '#')
                comment = true;
            const bool sep =
                comment || c == '\n' || std::isspace(static_cast<unsigned char>(c)) != 0;
            if (sep) {
                if (start != npos) {
                    tokens_.push_back({std::string_view(text_).substr(start, i - start), tline, tcol});
                    start = npos;
                }
            } else if (start == npos) {
                start = i;
                tline = line;
                tcol = col;
            }
            if (c == '\n') {
                comment = false;
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    }

    bool done() const { return cursor_ >= tokens_.size(); }

    Token take(const std::string& what) {
        if (done())
            throw ParseError(end_line_, end_col_, "expected " + what);
        return tokens_[cursor_++];
    }

    void expect_keyword(const std::string& kw) {
        const Token t = take("'" + kw + "'");
        if (t.text != kw)
            throw ParseError(t.line, t.col, "expected '" + kw + "', got '" + std::string(t.text) + "'");
    }

    long long take_int(const std::string& what, long long lo, long long hi) {
        const Token t = take(what);
        long long v = 0;
        const char* first = t.text.data();
        const char* last = first + t.text.size();
        const auto res = std::from_chars(first, last, v);
        if (res.ec != std::errc() || res.ptr != last)
            throw ParseError(t.line, t.col,
                             "expected integer " + what + ", got '" + std::string(t.text) + "'");
        if (v < lo || v > hi)
            throw ParseError(t.line, t.col, what + " out of range");
        return v;
    }

    double take_double(const std::string& what) {
        const Token t = take(what);
        double v = 0;
        const char* first = t.text.data();
        const char* last = first + t.text.size();
        const auto res = std::from_chars(first, last, v);
        if (res.ec != std::errc() || res.ptr != last)
            throw ParseError(t.line, t.col,
                             "expected number " + what + ", got '" + std::string(t.text) + "'");
        return v;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        if (done())
            throw ParseError(end_line_, end_col_, msg);
        throw ParseError(tokens_[cursor_].line, tokens_[cursor_].col, msg);
    }

private:
    static constexpr std::size_t npos = std::string::npos;

    std::string text_;
    std::vector<Token> tokens_;
    std::size_t cursor_ = 0;
    int end_line_ = 1;
    int end_col_ = 1;
};

constexpr long long max_node_count = 1ll << 31;

} // namespace

void write_instance(std::ostream& out, const LiftedHypergraph& g) {
    out << "HOLMC 1\n";
    out << "nodes " << g.node_count() << "\n";
    std::vector<EdgeId> order(g.edge_count());
    std::iota(order.begin(), order.end(), EdgeId{0});
    std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
        const HyperEdge& ea = g.edge(a);
        const HyperEdge& eb = g.edge(b);
        if (ea.order() != eb.order())
            return ea.order() < eb.order();
        if (ea.nodes != eb.nodes)
            return ea.nodes < eb.nodes;
        return ea.kind < eb.kind;
    });
    for (EdgeId e : order) {
        const HyperEdge& he = g.edge(e);
        out << "edge " << (he.kind == EdgeKind::Lifted ? 'L' : 'F') << ' ' << he.order();
        for (NodeId v : he.nodes)
            out << ' ' << v;
        out << ' ' << format_double(he.cost) << '\n';
    }
}

LiftedHypergraph read_instance(std::istream& in) {
    Tokenizer tok(in);
    tok.expect_keyword("HOLMC");
    {
        const Token t = tok.take("format version");
        if (t.text != "1")
            throw ParseError(t.line, t.col, "unsupported format version '" + std::string(t.text) + "'");
    }
    tok.expect_keyword("nodes");
    const long long n = tok.take_int("node count", 0, max_node_count);
    LiftedHypergraph g(static_cast<NodeId>(n));
    while (!tok.done()) {
        const Token kw = tok.take("'edge'");
        if (kw.text != "edge")
            throw ParseError(kw.line, kw.col, "expected 'edge', got '" + std::string(kw.text) + "'");
        const Token kind_tok = tok.take("edge kind");
        EdgeKind kind;
        if (kind_tok.text == "F")
            kind = EdgeKind::Connectivity;
        else if (kind_tok.text == "L")
            kind = EdgeKind::Lifted;
        else
            throw ParseError(kind_tok.line, kind_tok.col, "edge kind must be F or L");
        const long long order = tok.take_int("edge order", 2, std::max<long long>(n, 2));
        std::vector<NodeId> nodes(static_cast<std::size_t>(order));
        for (auto& v : nodes)
            v = static_cast<NodeId>(tok.take_int("node id", 0, n - 1));
        const double cost = tok.take_double("edge cost");
        try {
            g.add_edge(nodes, cost, kind);
        } catch (const Error& e) {
            throw ParseError(kw.line, kw.col, e.what());
        }
    }
    return g;
}

void write_trajectories(std::ostream& out, const TrajectorySet& set) {
    out << "TRAJ 1 " << set.n_frames << ' ' << set.feature_dim << '\n';
    for (std::size_t i = 0; i < set.trajectories.size(); ++i) {
        const Trajectory& t = set.trajectories[i];
        if (t.points.empty())
            throw Error("trajectory without points");
        if (t.start < 0 || t.end_frame() > set.n_frames)
            throw Error("trajectory leaves the frame range");
        if (!t.features.empty() && t.features.size() != t.points.size())
            throw Error("feature rows do not match point count");
        out << "traj " << i << ' ' << t.start << ' ' << t.points.size() << '\n';
        for (std::size_t j = 0; j < t.points.size(); ++j) {
            out << format_double(t.points[j].x) << ' ' << format_double(t.points[j].y);
            if (!t.features.empty()) {
                if (t.features[j].size() != static_cast<std::size_t>(set.feature_dim))
                    throw Error("feature width does not match the header");
                for (double f : t.features[j])
                    out << ' ' << format_double(f);
            } else if (set.feature_dim != 0) {
                throw Error("feature width does not match the header");
            }
            out << '\n';
        }
    }
}

TrajectorySet read_trajectories(std::istream& in) {
    Tokenizer tok(in);
    tok.expect_keyword("TRAJ");
    {
        const Token t = tok.take("format version");
        if (t.text != "1")
            throw ParseError(t.line, t.col, "unsupported format version '" + std::string(t.text) + "'");
    }
    TrajectorySet set;
    set.n_frames = static_cast<int>(tok.take_int("frame count", 1, 1000000000));
    set.feature_dim = static_cast<int>(tok.take_int("feature width", 0, 100000));
    while (!tok.done()) {
        tok.expect_keyword("traj");
        const long long id = tok.take_int("trajectory id", 0, max_node_count);
        if (id != static_cast<long long>(set.trajectories.size()))
            tok.fail("trajectory ids must be sequential starting at 0");
        Trajectory t;
        t.start = static_cast<int>(tok.take_int("start frame", 0, set.n_frames - 1));
        const long long len = tok.take_int("length", 1, set.n_frames - t.start);
        t.points.reserve(static_cast<std::size_t>(len));
        for (long long j = 0; j < len; ++j) {
            Vec2 p;
            p.x = tok.take_double("x");
            p.y = tok.take_double("y");
            t.points.push_back(p);
            if (set.feature_dim > 0) {
                std::vector<double> row(static_cast<std::size_t>(set.feature_dim));
                for (auto& f : row)
                    f = tok.take_double("feature");
                t.features.push_back(std::move(row));
            }
        }
        set.trajectories.push_back(std::move(t));
    }
    return set;
}

void write_solution(std::ostream& out, const Solution& s) {
    out << "objective " << format_double(s.objective) << '\n';
    for (std::size_t v = 0; v < s.labels.size(); ++v)
        out << v << ' ' << s.labels[v] << '\n';
}

Solution read_solution(std::istream& in) {
    Tokenizer tok(in);
    tok.expect_keyword("objective");
    Solution s;
    s.objective = tok.take_double("objective value");
    std::unordered_map<std::uint32_t, std::uint32_t> assignment;
    long long max_node = -1;
    while (!tok.done()) {
        const Token node_tok = tok.take("node id");
        long long node = 0;
        {
            const char* first = node_tok.text.data();
            const char* last = first + node_tok.text.size();
            const auto res = std::from_chars(first, last, node);
            if (res.ec != std::errc() || res.ptr != last || node < 0 || node >= max_node_count)
                throw ParseError(node_tok.line, node_tok.col,
                                 "expected node id, got '" + std::string(node_tok.text) + "'");
        }
        const long long comp = tok.take_int("component id", 0, max_node_count);
        if (!assignment.emplace(static_cast<std::uint32_t>(node), static_cast<std::uint32_t>(comp))
                 .second)
            throw ParseError(node_tok.line, node_tok.col, "node listed twice");
        max_node = std::max(max_node, node);
    }
    s.labels.resize(static_cast<std::size_t>(max_node + 1));
    for (long long v = 0; v <= max_node; ++v) {
        const auto it = assignment.find(static_cast<std::uint32_t>(v));
        if (it == assignment.end())
            tok.fail("node " + std::to_string(v) + " has no component");
        s.labels[static_cast<std::size_t>(v)] = it->second;
    }
    return s;
}

namespace {

std::ifstream open_in(const std::string& path) {
    std::ifstream f(path);
    if (!f)
        throw Error("cannot open " + path);
    return f;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f)
        throw Error("cannot write " + path);
    return f;
}

} // namespace

LiftedHypergraph read_instance_file(const std::string& path) {
    auto f = open_in(path);
    return read_instance(f);
}

void write_instance_file(const std::string& path, const LiftedHypergraph& g) {
    auto f = open_out(path);
    write_instance(f, g);
    if (!f.good())
        throw Error("cannot write " + path);
}

TrajectorySet read_trajectories_file(const std::string& path) {
    auto f = open_in(path);
    return read_trajectories(f);
}

void write_trajectories_file(const std::string& path, const TrajectorySet& set) {
    auto f = open_out(path);
    write_trajectories(f, set);
    if (!f.good())
        throw Error("cannot write " + path);
}

Solution read_solution_file(const std::string& path) {
    auto f = open_in(path);
    return read_solution(f);
}

void write_solution_file(const std::string& path, const Solution& s) {
    auto f = open_out(path);
    write_solution(f, s);
    if (!f.good())
        throw Error("cannot write " + path);
}

} // namespace holmc
