#pragma once

// Test-only oracles, kept independent of the library's production paths:
// brute-force isomorphism by permutation search and exhaustive scans over
// complete rotation systems without pruning.

#include <algorithm>
#include <numeric>
#include <vector>

#include "altembed/embedding.hpp"
#include "altembed/genus.hpp"
#include "altembed/graph.hpp"

namespace oracle {

using altembed::Edge;
using altembed::Graph;
using altembed::MultiGraph;
using altembed::TerminalGraph;

// Terminal-respecting isomorphism by trying every vertex permutation that
// maps {x,y} onto {x,y}.
inline bool brute_isomorphic(const TerminalGraph& a, const TerminalGraph& b) {
    if (a.n() != b.n() || a.edges().size() != b.edges().size()) return false;
    int n = a.n();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (!((perm[a.x()] == b.x() && perm[a.y()] == b.y()) ||
              (perm[a.x()] == b.y() && perm[a.y()] == b.x())))
            continue;
        bool ok = true;
        for (const Edge& e : a.edges()) {
            if (!b.has_edge(perm[e.u], perm[e.v])) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline bool brute_isomorphic_plain(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
    std::vector<int> perm(a.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (const Edge& e : a.edges) {
            if (!b.has_edge(perm[e.u], perm[e.v])) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline size_t count_classes_brute(const std::vector<TerminalGraph>& graphs) {
    std::vector<TerminalGraph> reps;
    for (const auto& g : graphs) {
        bool seen = false;
        for (const auto& r : reps)
            if (brute_isomorphic(g, r)) {
                seen = true;
                break;
            }
        if (!seen) reps.push_back(g);
    }
    return reps.size();
}

// Visits every all-positive rotation system of a connected multigraph, with
// no pruning and no symmetry reduction.
template <typename F>
void for_each_rotation(const MultiGraph& g, F&& visit) {
    int m = g.edge_count();
    std::vector<std::vector<int>> darts_at(g.n);
    for (int d = 0; d < 2 * m; ++d) darts_at[altembed::dart_tail(g, d)].push_back(d);
    std::vector<std::vector<int>> rotation(g.n);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == g.n) {
            altembed::RotationEmbedding emb{g, rotation, std::vector<int8_t>(m, 1)};
            visit(emb);
            return;
        }
        std::vector<int> rot = darts_at[v];
        std::sort(rot.begin(), rot.end());
        if (rot.size() <= 1) {
            rotation[v] = rot;
            self(self, v + 1);
            return;
        }
        do {
            rotation[v] = rot;
            self(self, v + 1);
        } while (std::next_permutation(rot.begin() + 1, rot.end()));
    };
    rec(rec, 0);
}

// Exact minimum orientable genus by exhaustive rotation enumeration over a
// connected graph (no pruning).
inline int exhaustive_min_genus_connected(const Graph& g) {
    MultiGraph host(g);
    int best = 1 << 20;
    for_each_rotation(host, [&](const altembed::RotationEmbedding& emb) {
        best = std::min(best, altembed::euler_genus(emb) / 2);
    });
    return best;
}

}  // namespace oracle
