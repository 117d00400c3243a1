#include "altembed/bridges.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace altembed {

BridgeDecomposition bridges_of(const Graph& g, const std::vector<int>& h_vertices,
                               const std::vector<Edge>& h_edges) {
    BridgeDecomposition dec;
    dec.h_vertices = h_vertices;
    std::sort(dec.h_vertices.begin(), dec.h_vertices.end());
    dec.h_edges = h_edges;
    std::sort(dec.h_edges.begin(), dec.h_edges.end());
    std::vector<bool> in_h(g.n, false);
    for (int v : dec.h_vertices) in_h[v] = true;
    for (const Edge& e : dec.h_edges)
        if (!in_h[e.u] || !in_h[e.v]) throw std::invalid_argument("h edge outside h vertices");

    auto is_h_edge = [&](const Edge& e) {
        return std::binary_search(dec.h_edges.begin(), dec.h_edges.end(), e);
    };
    // single-edge bridges: chords of H
    for (const Edge& e : g.edges) {
        if (in_h[e.u] && in_h[e.v] && !is_h_edge(e)) {
            Bridge b;
            b.edges.push_back(e);
            b.attachments = {e.u, e.v};
            if (e.u == e.v) b.attachments.pop_back();
            dec.bridges.push_back(std::move(b));
        }
    }
    // components of G - V(H) plus their edges into H
    std::vector<int> comp(g.n, -1);
    int nc = 0;
    for (int root = 0; root < g.n; ++root) {
        if (in_h[root] || comp[root] >= 0) continue;
        comp[root] = nc;
        std::vector<int> stack{root};
        auto adj = g.adjacency();
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[u]) {
                if (!in_h[w] && comp[w] < 0) {
                    comp[w] = nc;
                    stack.push_back(w);
                }
            }
        }
        ++nc;
    }
    std::vector<Bridge> comp_bridges(nc);
    for (int v = 0; v < g.n; ++v)
        if (comp[v] >= 0) comp_bridges[comp[v]].interior_vertices.push_back(v);
    for (const Edge& e : g.edges) {
        int cu = in_h[e.u] ? -1 : comp[e.u];
        int cv = in_h[e.v] ? -1 : comp[e.v];
        if (cu < 0 && cv < 0) continue;
        int c = cu >= 0 ? cu : cv;
        comp_bridges[c].edges.push_back(e);
        if (cu < 0) comp_bridges[c].attachments.push_back(e.u);
        if (cv < 0) comp_bridges[c].attachments.push_back(e.v);
    }
    for (Bridge& b : comp_bridges) {
        std::sort(b.attachments.begin(), b.attachments.end());
        b.attachments.erase(std::unique(b.attachments.begin(), b.attachments.end()),
                            b.attachments.end());
        dec.bridges.push_back(std::move(b));
    }
    return dec;
}

namespace {

// Branches of H: maximal paths whose interior vertices have degree 2.
// A component that is a cycle has no branch vertex and forms one branch.
std::vector<std::vector<int>> branches_of_subgraph(const std::vector<int>& h_vertices,
                                                   const std::vector<Edge>& h_edges) {
    int maxv = 0;
    for (int v : h_vertices) maxv = std::max(maxv, v + 1);
    std::vector<std::vector<int>> adj(maxv);
    for (const Edge& e : h_edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<std::vector<int>> branches;
    std::set<std::pair<int, std::pair<int, int>>> used;  // (vertex, arc) consumed
    auto walk = [&](int bv, int first) {
        std::vector<int> path{bv, first};
        int prev = bv, cur = first;
        while (adj[cur].size() == 2) {
            int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = nxt;
            path.push_back(cur);
        }
        return path;
    };
    for (int v : h_vertices) {
        if (adj[v].size() == 2 || adj[v].empty()) continue;  // not a branch vertex
        for (int w : adj[v]) {
            if (used.count({v, {v, w}})) continue;
            std::vector<int> path = walk(v, w);
            used.insert({v, {v, w}});
            used.insert({path.back(), {path.back(), path[path.size() - 2]}});
            branches.push_back(std::move(path));
        }
    }
    // leftover cycle components (every vertex degree 2)
    std::vector<bool> seen(maxv, false);
    for (const auto& br : branches)
        for (int v : br) seen[v] = true;
    for (int v : h_vertices) {
        if (seen[v] || adj[v].size() != 2) continue;
        std::vector<int> cyc{v};
        seen[v] = true;
        int prev = v, cur = adj[v][0];
        while (cur != v) {
            cyc.push_back(cur);
            seen[cur] = true;
            int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = nxt;
        }
        cyc.push_back(v);  // close so segment containment treats it whole
        branches.push_back(std::move(cyc));
    }
    return branches;
}

}  // namespace

bool is_local(const Bridge& b, const std::vector<int>& h_vertices,
              const std::vector<Edge>& h_edges) {
    auto branches = branches_of_subgraph(h_vertices, h_edges);
    for (const auto& br : branches) {
        bool all = true;
        for (int a : b.attachments)
            if (std::find(br.begin(), br.end(), a) == br.end()) {
                all = false;
                break;
            }
        if (all) return true;
    }
    return false;
}

bool bridges_avoid(const std::vector<int>& cycle, const std::vector<int>& att1,
                   const std::vector<int>& att2) {
    int L = static_cast<int>(cycle.size());
    std::vector<int> pos1, pos2;
    auto position = [&](int v) {
        for (int i = 0; i < L; ++i)
            if (cycle[i] == v) return i;
        throw std::invalid_argument("attachment not on cycle");
    };
    for (int v : att1) pos1.push_back(position(v));
    for (int v : att2) pos2.push_back(position(v));
    if (pos1.empty() || pos2.empty()) return true;
    auto in_arc = [&](int p, int i, int j) {  // closed arc i..j forward
        int span = (j - i + L) % L;
        int off = (p - i + L) % L;
        return off <= span;
    };
    for (int i = 0; i < L; ++i) {
        for (int j = 0; j < L; ++j) {
            bool ok = true;
            for (int p : pos1)
                if (!in_arc(p, i, j)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            for (int p : pos2)
                if (!in_arc(p, j, i)) {
                    ok = false;
                    break;
                }
            if (ok) return true;
        }
    }
    return false;
}

OverlapGraph overlap_graph(const std::vector<int>& cycle, const BridgeDecomposition& dec) {
    OverlapGraph og;
    og.n = static_cast<int>(dec.bridges.size());
    for (int i = 0; i < og.n; ++i)
        for (int j = i + 1; j < og.n; ++j)
            if (!bridges_avoid(cycle, dec.bridges[i].attachments, dec.bridges[j].attachments))
                og.edges.emplace_back(i, j);
    return og;
}

OverlapVerdict planar_via_overlap(const Graph& g, const std::vector<int>& cycle) {
    std::vector<Edge> cycle_edges;
    for (size_t i = 0; i < cycle.size(); ++i) {
        int u = cycle[i], w = cycle[(i + 1) % cycle.size()];
        if (!g.has_edge(u, w)) throw std::invalid_argument("not a cycle of g");
        cycle_edges.emplace_back(u, w);
    }
    BridgeDecomposition dec = bridges_of(g, cycle, cycle_edges);
    for (size_t i = 0; i < dec.bridges.size(); ++i) {
        std::vector<Edge> es = cycle_edges;
        es.insert(es.end(), dec.bridges[i].edges.begin(), dec.bridges[i].edges.end());
        if (!planar_decision(Graph(g.n, std::move(es))))
            throw NonPlanarBridge(static_cast<int>(i));
    }
    OverlapVerdict verdict;
    verdict.overlap = overlap_graph(cycle, dec);
    // bipartition by BFS; a conflicting edge closes an odd cycle
    int n = verdict.overlap.n;
    std::vector<std::vector<int>> adj(n);
    for (const Edge& e : verdict.overlap.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);
    for (int root = 0; root < n; ++root) {
        if (color[root] >= 0) continue;
        color[root] = 0;
        std::vector<int> queue{root};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (int w : adj[u]) {
                if (color[w] < 0) {
                    color[w] = color[u] ^ 1;
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    // odd cycle through u and w
                    std::vector<int> pu{u}, pw{w};
                    int a = u, b = w;
                    while (depth[a] > depth[b]) pu.push_back(a = parent[a]);
                    while (depth[b] > depth[a]) pw.push_back(b = parent[b]);
                    while (a != b) {
                        pu.push_back(a = parent[a]);
                        pw.push_back(b = parent[b]);
                    }
                    verdict.odd_cycle = pu;
                    for (auto it = pw.rbegin() + 1; it != pw.rend(); ++it)
                        verdict.odd_cycle.push_back(*it);
                    verdict.planar = false;
                    return verdict;
                }
            }
        }
    }
    verdict.planar = true;
    return verdict;
}

std::vector<int> support_of(const Bridge& b, const std::vector<int>& segment) {
    int lo = static_cast<int>(segment.size()), hi = -1;
    for (int a : b.attachments) {
        auto it = std::find(segment.begin(), segment.end(), a);
        if (it == segment.end()) throw std::invalid_argument("attachment outside segment");
        int p = static_cast<int>(it - segment.begin());
        lo = std::min(lo, p);
        hi = std::max(hi, p);
    }
    if (hi < 0) return {};
    return std::vector<int>(segment.begin() + lo, segment.begin() + hi + 1);
}

namespace {

// DFS over systems of internally disjoint paths joining required pairs of
// branch vertices.
class PathSystemFinder {
  public:
    PathSystemFinder(const Graph& g, const std::vector<char>& allowed)
        : g_(g), adj_(g.adjacency()), allowed_(allowed), used_(g.n, 0) {}

    // links: pairs into `branch`; min_interior: minimum interior vertices per path.
    bool find(const std::vector<int>& branch, const std::vector<std::pair<int, int>>& links,
              int min_len, const std::function<bool(const std::vector<std::vector<int>>&)>& cb) {
        branch_ = branch;
        links_ = &links;
        min_len_ = min_len;
        cb_ = &cb;
        paths_.assign(links.size(), {});
        for (int v : branch) used_[v] = 1;
        bool keep = rec(0);
        for (int v : branch) used_[v] = 0;
        return keep;  // false = stop everything
    }

  private:
    bool rec(size_t li) {
        if (li == links_->size()) return (*cb_)(paths_);
        auto [ai, bi] = (*links_)[li];
        int a = branch_[ai], b = branch_[bi];
        std::vector<int> path{a};
        return dfs(li, a, b, path);
    }

    bool dfs(size_t li, int cur, int target, std::vector<int>& path) {
        for (int w : adj_[cur]) {
            if (w == target) {
                if (static_cast<int>(path.size()) < min_len_) continue;
                path.push_back(w);
                paths_[li] = path;
                bool keep = rec(li + 1);
                path.pop_back();
                if (!keep) return false;
                continue;
            }
            if (used_[w] || !allowed_[w]) continue;
            used_[w] = 1;
            path.push_back(w);
            bool keep = dfs(li, w, target, path);
            path.pop_back();
            used_[w] = 0;
            if (!keep) return false;
        }
        return true;
    }

    const Graph& g_;
    std::vector<std::vector<int>> adj_;
    std::vector<char> allowed_;
    std::vector<char> used_;
    std::vector<int> branch_;
    const std::vector<std::pair<int, int>>* links_ = nullptr;
    int min_len_ = 1;
    const std::function<bool(const std::vector<std::vector<int>>&)>* cb_ = nullptr;
    std::vector<std::vector<int>> paths_;
};

std::vector<std::pair<int, int>> complete_links(int k) {
    std::vector<std::pair<int, int>> links;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) links.emplace_back(i, j);
    return links;
}

std::vector<Edge> path_edges(const std::vector<std::vector<int>>& paths) {
    std::vector<Edge> es;
    for (const auto& p : paths)
        for (size_t i = 0; i + 1 < p.size(); ++i) es.emplace_back(p[i], p[i + 1]);
    std::sort(es.begin(), es.end());
    return es;
}

// Enumerates Kuratowski subdivisions (K5 first, then K3,3), lazily.
bool for_each_kuratowski(const Graph& g,
                         const std::function<bool(KuratowskiSubdivision&)>& cb) {
    std::vector<char> allowed(g.n, 1);
    std::vector<int> deg = g.degrees();
    PathSystemFinder finder(g, allowed);
    // K5: five branch vertices of degree >= 4
    {
        std::vector<int> cand;
        for (int v = 0; v < g.n; ++v)
            if (deg[v] >= 4) cand.push_back(v);
        int c = static_cast<int>(cand.size());
        auto links = complete_links(5);
        std::vector<int> pick(5);
        std::function<bool(int, int)> choose = [&](int idx, int from) -> bool {
            if (idx == 5) {
                std::vector<int> branch;
                for (int i : pick) branch.push_back(cand[i]);
                return finder.find(branch, links, 1,
                                   [&](const std::vector<std::vector<int>>& paths) {
                                       KuratowskiSubdivision sub;
                                       sub.kind = KuratowskiKind::K5;
                                       sub.edges = path_edges(paths);
                                       return cb(sub);
                                   });
            }
            for (int i = from; i < c; ++i) {
                pick[idx] = i;
                if (!choose(idx + 1, i + 1)) return false;
            }
            return true;
        };
        if (c >= 5 && !choose(0, 0)) return false;
    }
    // K3,3: parts {0,1,2} and {3,4,5}, all of degree >= 3
    {
        std::vector<int> cand;
        for (int v = 0; v < g.n; ++v)
            if (deg[v] >= 3) cand.push_back(v);
        int c = static_cast<int>(cand.size());
        std::vector<std::pair<int, int>> links;
        for (int i = 0; i < 3; ++i)
            for (int j = 3; j < 6; ++j) links.emplace_back(i, j);
        std::vector<int> pick(6);
        // part A strictly increasing, part B strictly increasing,
        // A.front() < B.front() kills the part swap
        std::function<bool(int, int)> choose = [&](int idx, int from) -> bool {
            if (idx == 6) {
                std::vector<int> branch;
                for (int i : pick) branch.push_back(cand[i]);
                return finder.find(branch, links, 1,
                                   [&](const std::vector<std::vector<int>>& paths) {
                                       KuratowskiSubdivision sub;
                                       sub.kind = KuratowskiKind::K33;
                                       sub.edges = path_edges(paths);
                                       return cb(sub);
                                   });
            }
            int start = (idx == 3) ? pick[0] + 1 : from;
            for (int i = start; i < c; ++i) {
                bool taken = false;
                for (int j = 0; j < idx; ++j)
                    if (pick[j] == i) taken = true;
                if (taken) continue;
                pick[idx] = i;
                if (!choose(idx + 1, i + 1)) return false;
            }
            return true;
        };
        if (c >= 6 && !choose(0, 0)) return false;
    }
    return true;
}

// K-graph search inside an edge set, avoiding the two terminals.
std::optional<KGraphWitness> k_graph_inside(const Graph& g, const KuratowskiSubdivision& host,
                                            int x, int y) {
    // restrict to host edges minus terminals
    std::vector<Edge> es;
    for (const Edge& e : host.edges)
        if (!e.touches(x) && !e.touches(y)) es.push_back(e);
    Graph sub(g.n, es);
    std::vector<char> allowed(g.n, 1);
    allowed[x] = allowed[y] = 0;
    std::vector<int> deg = sub.degrees();
    PathSystemFinder finder(sub, allowed);
    std::optional<KGraphWitness> found;
    // K4 subdivision
    {
        std::vector<int> cand;
        for (int v = 0; v < g.n; ++v)
            if (deg[v] >= 3 && allowed[v]) cand.push_back(v);
        auto links = complete_links(4);
        int c = static_cast<int>(cand.size());
        std::vector<int> pick(4);
        std::function<bool(int, int)> choose = [&](int idx, int from) -> bool {
            if (idx == 4) {
                std::vector<int> branch;
                for (int i : pick) branch.push_back(cand[i]);
                return finder.find(branch, links, 1,
                                   [&](const std::vector<std::vector<int>>& paths) {
                                       KGraphWitness w;
                                       w.kind = KGraphWitness::Kind::K4;
                                       w.branch_vertices = branch;
                                       w.paths = paths;
                                       w.host = host;
                                       found = std::move(w);
                                       return false;
                                   });
            }
            for (int i = from; i < c; ++i) {
                pick[idx] = i;
                if (!choose(idx + 1, i + 1)) return false;
            }
            return true;
        };
        if (c >= 4) choose(0, 0);
        if (found) return found;
    }
    // K2,3 subdivision: two centers joined by three paths of length >= 2
    {
        std::vector<std::pair<int, int>> links{{0, 1}, {0, 1}, {0, 1}};
        for (int u = 0; u < g.n; ++u) {
            if (deg[u] < 3 || !allowed[u]) continue;
            for (int v = u + 1; v < g.n; ++v) {
                if (deg[v] < 3 || !allowed[v]) continue;
                finder.find({u, v}, links, 2, [&](const std::vector<std::vector<int>>& paths) {
                    KGraphWitness w;
                    w.kind = KGraphWitness::Kind::K23;
                    w.branch_vertices = {u, v};
                    w.paths = paths;
                    w.host = host;
                    found = std::move(w);
                    return false;
                });
                if (found) return found;
            }
        }
    }
    return found;
}

}  // namespace

std::optional<KGraphWitness> find_k_graph_disjoint(const TerminalGraph& g) {
    std::optional<KGraphWitness> found;
    for_each_kuratowski(g.graph(), [&](KuratowskiSubdivision& sub) {
        found = k_graph_inside(g.graph(), sub, g.x(), g.y());
        return !found.has_value();
    });
    return found;
}

void check_k_graph_witness(const TerminalGraph& g, const KGraphWitness& w) {
    if (!check_kuratowski(g.graph(), w.host)) throw std::invalid_argument("host not Kuratowski");
    std::set<Edge> host_edges(w.host.edges.begin(), w.host.edges.end());
    std::set<int> interior_seen;
    size_t expected_paths = w.kind == KGraphWitness::Kind::K4 ? 6 : 3;
    if (w.paths.size() != expected_paths) throw std::invalid_argument("wrong path count");
    int min_len = w.kind == KGraphWitness::Kind::K4 ? 1 : 2;
    for (const auto& p : w.paths) {
        if (static_cast<int>(p.size()) < min_len + 1) throw std::invalid_argument("path too short");
        for (size_t i = 0; i + 1 < p.size(); ++i) {
            Edge e(p[i], p[i + 1]);
            if (!host_edges.count(e)) throw std::invalid_argument("path edge outside host");
        }
        for (size_t i = 1; i + 1 < p.size(); ++i) {
            int v = p[i];
            if (v == g.x() || v == g.y()) throw std::invalid_argument("path touches terminal");
            if (std::find(w.branch_vertices.begin(), w.branch_vertices.end(), v) !=
                w.branch_vertices.end())
                throw std::invalid_argument("path passes a branch vertex");
            if (!interior_seen.insert(v).second)
                throw std::invalid_argument("paths not internally disjoint");
        }
    }
    for (int v : w.branch_vertices)
        if (v == g.x() || v == g.y()) throw std::invalid_argument("branch vertex is terminal");
    if (w.kind == KGraphWitness::Kind::K4) {
        if (w.branch_vertices.size() != 4) throw std::invalid_argument("need 4 branch vertices");
        size_t li = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j, ++li) {
                const auto& p = w.paths[li];
                if (p.front() != w.branch_vertices[i] || p.back() != w.branch_vertices[j])
                    throw std::invalid_argument("path endpoints mismatch");
            }
    } else {
        if (w.branch_vertices.size() != 2) throw std::invalid_argument("need 2 branch vertices");
        for (const auto& p : w.paths)
            if (p.front() != w.branch_vertices[0] || p.back() != w.branch_vertices[1])
                throw std::invalid_argument("path endpoints mismatch");
    }
}

}  // namespace altembed
