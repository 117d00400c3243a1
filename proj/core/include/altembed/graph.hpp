#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace altembed {

/// Unordered vertex pair, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw std::invalid_argument("loop edge");
    }
    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
    bool touches(int w) const { return u == w || v == w; }
    int other(int w) const { return w == u ? v : u; }
};

/// Simple undirected graph on vertices 0..n-1. Edges kept sorted and unique.
struct Graph {
    int n = 0;
    std::vector<Edge> edges;

    Graph() = default;
    Graph(int vertices, std::vector<Edge> es);

    bool operator==(const Graph&) const = default;

    bool has_edge(int a, int b) const;
    int degree(int v) const;
    std::vector<std::vector<int>> adjacency() const;
    std::vector<int> degrees() const;
    int edge_count() const { return static_cast<int>(edges.size()); }

    std::vector<int> component_ids() const;  // per vertex, 0-based
    int component_count() const;
    bool connected() const;  // true for n <= 1

    Graph induced_without(const std::vector<int>& removed) const;

    static Graph complete(int k);
    static Graph complete_bipartite(int a, int b);
    static Graph cycle(int k);
    static Graph path(int k);
};

/// Undirected multigraph: parallel edges allowed, loops are not.
struct MultiGraph {
    int n = 0;
    std::vector<Edge> edges;  // multiset, kept sorted

    MultiGraph() = default;
    MultiGraph(int vertices, std::vector<Edge> es);
    explicit MultiGraph(const Graph& g) : MultiGraph(g.n, g.edges) {}

    int degree(int v) const;
    int edge_count() const { return static_cast<int>(edges.size()); }
    Graph simplified() const;  // collapse parallel edges

    std::vector<int> component_ids() const;
    int component_count() const;
};

/// Simple graph with two distinguished terminal vertices x and y.
/// Terminals may be isolated; they are preserved by minor operations.
class TerminalGraph {
  public:
    TerminalGraph() : g_(2, {}), x_(0), y_(1) {}
    TerminalGraph(Graph g, int x, int y);
    TerminalGraph(int n, std::vector<Edge> edges, int x, int y)
        : TerminalGraph(Graph(n, std::move(edges)), x, y) {}

    const Graph& graph() const { return g_; }
    int n() const { return g_.n; }
    const std::vector<Edge>& edges() const { return g_.edges; }
    int x() const { return x_; }
    int y() const { return y_; }
    bool is_terminal(int v) const { return v == x_ || v == y_; }
    bool has_edge(int a, int b) const { return g_.has_edge(a, b); }
    bool has_xy_edge() const { return g_.has_edge(x_, y_); }
    int degree(int v) const { return g_.degree(v); }

    bool operator==(const TerminalGraph&) const = default;

  private:
    Graph g_;
    int x_;
    int y_;
};

enum class MinorOp : uint8_t { Delete, Contract };

/// One minor step: delete or contract an existing edge.
/// Contracting the terminal-terminal edge is forbidden.
struct MinorStep {
    Edge edge;
    MinorOp op = MinorOp::Delete;
};

/// Result of identifying the two terminals into one vertex v_xy.
/// The xy edge, if present, is removed before identification, so every
/// edge at v_xy descends from an x-edge or a y-edge; `from_x` records which.
struct IdentifyResult {
    MultiGraph graph;
    int vxy = 0;
    std::vector<int> new_id;      // old vertex -> new vertex (x,y -> vxy)
    std::vector<bool> from_x;     // per edge of `graph`, meaningful at v_xy edges
};

TerminalGraph apply_minor(const TerminalGraph& g, const MinorStep& step);
std::vector<MinorStep> legal_minor_steps(const TerminalGraph& g);

IdentifyResult identify_terminals(const TerminalGraph& g);
Graph simple_identify(const TerminalGraph& g);

TerminalGraph plus_xy(const TerminalGraph& g);
TerminalGraph star_augment(const TerminalGraph& g);
TerminalGraph xy_sum(const TerminalGraph& g1, const TerminalGraph& g2, bool keep_edge);

/// All ways to replace vertex v by two new terminal vertices x1, x2 and
/// distribute the edges at v between them. Splits join x1 and x2 by an edge,
/// cuts leave them non-adjacent. Empty sides are allowed.
/// splits_of / cuts_of deduplicate up to terminal-respecting isomorphism;
/// the raw variant returns all 2^deg(v) distributions.
std::vector<TerminalGraph> splits_of(const Graph& g, int v);
std::vector<TerminalGraph> cuts_of(const Graph& g, int v);
std::vector<TerminalGraph> vertex_splits_raw(const Graph& g, int v, bool join_edge);

}  // namespace altembed
