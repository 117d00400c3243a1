#include "altembed/graph.hpp"

#include <algorithm>
#include <numeric>

namespace altembed {

namespace {

void check_endpoints(int n, const std::vector<Edge>& es) {
    for (const Edge& e : es) {
        if (e.u < 0 || e.v >= n) throw std::invalid_argument("edge endpoint out of range");
    }
}

std::vector<int> components_of(int n, const std::vector<Edge>& es) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (const Edge& e : es) parent[find(e.u)] = find(e.v);
    std::vector<int> id(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        if (id[r] < 0) id[r] = next++;
        id[v] = id[r];
    }
    return id;
}

}  // namespace

Graph::Graph(int vertices, std::vector<Edge> es) : n(vertices), edges(std::move(es)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    check_endpoints(n, edges);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool Graph::has_edge(int a, int b) const {
    if (a == b) return false;
    return std::binary_search(edges.begin(), edges.end(), Edge(a, b));
}

int Graph::degree(int v) const {
    int d = 0;
    for (const Edge& e : edges) d += e.touches(v);
    return d;
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return adj;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n, 0);
    for (const Edge& e : edges) {
        ++d[e.u];
        ++d[e.v];
    }
    return d;
}

std::vector<int> Graph::component_ids() const { return components_of(n, edges); }

int Graph::component_count() const {
    auto id = component_ids();
    return id.empty() ? 0 : 1 + *std::max_element(id.begin(), id.end());
}

bool Graph::connected() const { return component_count() <= 1; }

Graph Graph::induced_without(const std::vector<int>& removed) const {
    std::vector<bool> drop(n, false);
    for (int v : removed) drop[v] = true;
    std::vector<int> new_id(n, -1);
    int m = 0;
    for (int v = 0; v < n; ++v)
        if (!drop[v]) new_id[v] = m++;
    std::vector<Edge> es;
    for (const Edge& e : edges)
        if (!drop[e.u] && !drop[e.v]) es.emplace_back(new_id[e.u], new_id[e.v]);
    return Graph(m, std::move(es));
}

Graph Graph::complete(int k) {
    std::vector<Edge> es;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) es.emplace_back(i, j);
    return Graph(k, std::move(es));
}

Graph Graph::complete_bipartite(int a, int b) {
    std::vector<Edge> es;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
    return Graph(a + b, std::move(es));
}

Graph Graph::cycle(int k) {
    std::vector<Edge> es;
    for (int i = 0; i < k; ++i) es.emplace_back(i, (i + 1) % k);
    return Graph(k, std::move(es));
}

Graph Graph::path(int k) {
    std::vector<Edge> es;
    for (int i = 0; i + 1 < k; ++i) es.emplace_back(i, i + 1);
    return Graph(k, std::move(es));
}

MultiGraph::MultiGraph(int vertices, std::vector<Edge> es) : n(vertices), edges(std::move(es)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    check_endpoints(n, edges);
    std::sort(edges.begin(), edges.end());
}

int MultiGraph::degree(int v) const {
    int d = 0;
    for (const Edge& e : edges) d += e.touches(v);
    return d;
}

Graph MultiGraph::simplified() const { return Graph(n, edges); }

std::vector<int> MultiGraph::component_ids() const { return components_of(n, edges); }

int MultiGraph::component_count() const {
    auto id = component_ids();
    return id.empty() ? 0 : 1 + *std::max_element(id.begin(), id.end());
}

TerminalGraph::TerminalGraph(Graph g, int x, int y) : g_(std::move(g)), x_(x), y_(y) {
    if (x_ == y_) throw std::invalid_argument("terminals must be distinct");
    if (x_ < 0 || x_ >= g_.n || y_ < 0 || y_ >= g_.n)
        throw std::invalid_argument("terminal out of range");
}

TerminalGraph apply_minor(const TerminalGraph& g, const MinorStep& step) {
    const Edge& e = step.edge;
    if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("minor step on missing edge");
    if (step.op == MinorOp::Delete) {
        std::vector<Edge> es;
        for (const Edge& f : g.edges())
            if (!(f == e)) es.push_back(f);
        return TerminalGraph(g.n(), std::move(es), g.x(), g.y());
    }
    if (g.is_terminal(e.u) && g.is_terminal(e.v))
        throw std::invalid_argument("cannot contract the terminal-terminal edge");
    // Contract e.v into e.u, then densify ids. The merged vertex is a
    // terminal iff either endpoint was.
    int keep = e.u, gone = e.v;
    std::vector<int> new_id(g.n());
    int m = 0;
    for (int v = 0; v < g.n(); ++v) {
        if (v == gone) continue;
        new_id[v] = m++;
    }
    new_id[gone] = new_id[keep];
    std::vector<Edge> es;
    for (const Edge& f : g.edges()) {
        int a = new_id[f.u], b = new_id[f.v];
        if (a != b) es.emplace_back(a, b);
    }
    // new_id[gone] == new_id[keep], so terminal positions follow the map;
    // a terminal endpoint keeps the merged vertex terminal.
    return TerminalGraph(m, std::move(es), new_id[g.x()], new_id[g.y()]);
}

std::vector<MinorStep> legal_minor_steps(const TerminalGraph& g) {
    std::vector<MinorStep> steps;
    Edge xy(std::min(g.x(), g.y()), std::max(g.x(), g.y()));
    for (const Edge& e : g.edges()) {
        steps.push_back({e, MinorOp::Delete});
        if (!(e == xy)) steps.push_back({e, MinorOp::Contract});
    }
    return steps;
}

IdentifyResult identify_terminals(const TerminalGraph& g) {
    IdentifyResult res;
    res.new_id.assign(g.n(), -1);
    int m = 0;
    for (int v = 0; v < g.n(); ++v) {
        if (g.is_terminal(v)) continue;
        res.new_id[v] = m++;
    }
    res.vxy = m;
    res.new_id[g.x()] = res.vxy;
    res.new_id[g.y()] = res.vxy;

    Edge xy(std::min(g.x(), g.y()), std::max(g.x(), g.y()));
    struct Item {
        Edge e;
        bool fx;
    };
    std::vector<Item> items;
    for (const Edge& e : g.edges()) {
        if (e == xy) continue;  // deleted before identification
        Edge mapped(res.new_id[e.u], res.new_id[e.v]);
        bool fx = e.touches(g.x());
        items.push_back({mapped, fx});
    }
    std::sort(items.begin(), items.end(),
              [](const Item& a, const Item& b) { return a.e < b.e || (a.e == b.e && a.fx < b.fx); });
    std::vector<Edge> es;
    for (const Item& it : items) {
        es.push_back(it.e);
        res.from_x.push_back(it.fx);
    }
    res.graph = MultiGraph(m + 1, std::move(es));
    return res;
}

Graph simple_identify(const TerminalGraph& g) { return identify_terminals(g).graph.simplified(); }

TerminalGraph plus_xy(const TerminalGraph& g) {
    if (g.has_xy_edge()) return g;
    std::vector<Edge> es = g.edges();
    es.emplace_back(g.x(), g.y());
    return TerminalGraph(g.n(), std::move(es), g.x(), g.y());
}

TerminalGraph star_augment(const TerminalGraph& g) {
    int n = g.n();
    std::vector<Edge> es = g.edges();
    int a = n, b = n + 1, c = n + 2;
    for (int w : {a, b, c}) {
        es.emplace_back(g.x(), w);
        es.emplace_back(g.y(), w);
    }
    es.emplace_back(a, b);
    es.emplace_back(a, c);
    es.emplace_back(b, c);
    return TerminalGraph(n + 3, std::move(es), g.x(), g.y());
}

TerminalGraph xy_sum(const TerminalGraph& g1, const TerminalGraph& g2, bool keep_edge) {
    // Result layout: x = 0, y = 1, then g1's non-terminals, then g2's.
    auto place = [](const TerminalGraph& g, int offset) {
        std::vector<int> id(g.n());
        int m = offset;
        for (int v = 0; v < g.n(); ++v) {
            if (v == g.x())
                id[v] = 0;
            else if (v == g.y())
                id[v] = 1;
            else
                id[v] = m++;
        }
        return id;
    };
    std::vector<int> id1 = place(g1, 2);
    std::vector<int> id2 = place(g2, g1.n());
    int n = g1.n() + g2.n() - 2;
    std::vector<Edge> es;
    bool had_xy = false;
    auto add_from = [&](const TerminalGraph& g, const std::vector<int>& id) {
        for (const Edge& e : g.edges()) {
            if (g.is_terminal(e.u) && g.is_terminal(e.v)) {
                had_xy = true;
                continue;
            }
            es.emplace_back(id[e.u], id[e.v]);
        }
    };
    add_from(g1, id1);
    add_from(g2, id2);
    if (keep_edge && had_xy) es.emplace_back(0, 1);
    return TerminalGraph(n, std::move(es), 0, 1);
}

std::vector<TerminalGraph> vertex_splits_raw(const Graph& g, int v, bool join_edge) {
    if (v < 0 || v >= g.n) throw std::invalid_argument("split vertex out of range");
    // v keeps its slot as terminal x1; the new terminal x2 is appended as n.
    std::vector<Edge> at_v, rest;
    for (const Edge& e : g.edges) (e.touches(v) ? at_v : rest).push_back(e);
    int k = static_cast<int>(at_v.size());
    std::vector<TerminalGraph> out;
    for (uint32_t mask = 0; mask < (1u << k); ++mask) {
        std::vector<Edge> es = rest;
        for (int i = 0; i < k; ++i) {
            int other = at_v[i].other(v);
            int side = (mask >> i) & 1 ? g.n : v;
            es.emplace_back(other, side);
        }
        if (join_edge) es.emplace_back(v, g.n);
        out.emplace_back(g.n + 1, std::move(es), v, g.n);
    }
    return out;
}

}  // namespace altembed
