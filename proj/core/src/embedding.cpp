#include "altembed/embedding.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace altembed {

int dart_tail(const MultiGraph& g, int d) {
    const Edge& e = g.edges[dart_edge(d)];
    return (d & 1) ? e.v : e.u;
}

int dart_head(const MultiGraph& g, int d) {
    const Edge& e = g.edges[dart_edge(d)];
    return (d & 1) ? e.u : e.v;
}

RotationEmbedding RotationEmbedding::with_default_rotation(const MultiGraph& g) {
    RotationEmbedding emb;
    emb.host = g;
    emb.rotation.assign(g.n, {});
    for (int d = 0; d < 2 * g.edge_count(); ++d) emb.rotation[dart_tail(g, d)].push_back(d);
    emb.signature.assign(g.edge_count(), 1);
    return emb;
}

void RotationEmbedding::validate() const {
    int m = host.edge_count();
    if (static_cast<int>(signature.size()) != m) throw std::invalid_argument("signature size");
    for (int8_t s : signature)
        if (s != 1 && s != -1) throw std::invalid_argument("signature value");
    if (static_cast<int>(rotation.size()) != host.n) throw std::invalid_argument("rotation size");
    std::vector<int> seen(2 * m, 0);
    for (int v = 0; v < host.n; ++v) {
        for (int d : rotation[v]) {
            if (d < 0 || d >= 2 * m) throw std::invalid_argument("dart out of range");
            if (dart_tail(host, d) != v) throw std::invalid_argument("dart at wrong vertex");
            if (seen[d]++) throw std::invalid_argument("dart repeated in rotation");
        }
    }
    for (int d = 0; d < 2 * m; ++d)
        if (!seen[d]) throw std::invalid_argument("dart missing from rotation");
}

std::vector<int> FaceWalk::vertices(const MultiGraph& g) const {
    std::vector<int> vs;
    vs.reserve(darts.size());
    for (int d : darts) vs.push_back(dart_tail(g, d));
    return vs;
}

namespace {

// Position of each dart inside its tail's rotation.
std::vector<int> rotation_positions(const RotationEmbedding& emb) {
    std::vector<int> pos(2 * emb.host.edge_count(), -1);
    for (const auto& rot : emb.rotation)
        for (size_t i = 0; i < rot.size(); ++i) pos[rot[i]] = static_cast<int>(i);
    return pos;
}

}  // namespace

std::vector<FaceWalk> trace_faces(const RotationEmbedding& emb) {
    const MultiGraph& g = emb.host;
    int m = g.edge_count();
    std::vector<int> pos = rotation_positions(emb);
    // State (dart d, sign s) encoded as 2*d + (s < 0). The face-successor:
    // let s' = s * sig(e); continue at head(d) with the next dart after
    // twin(d) in rotation order if s' > 0, the previous one if s' < 0.
    auto step = [&](int d, int s, int& nd, int& ns) {
        ns = s * emb.signature[dart_edge(d)];
        int v = dart_head(g, d);
        int t = dart_twin(d);
        const auto& rot = emb.rotation[v];
        int k = static_cast<int>(rot.size());
        int p = pos[t];
        nd = rot[(ns > 0 ? p + 1 : p + k - 1) % k];
    };
    std::vector<char> visited(4 * m, 0);
    auto state_id = [](int d, int s) { return 2 * d + (s < 0 ? 1 : 0); };
    std::vector<FaceWalk> faces;
    for (int d0 = 0; d0 < 2 * m; ++d0) {
        for (int s0 : {1, -1}) {
            if (visited[state_id(d0, s0)]) continue;
            FaceWalk w;
            int d = d0, s = s0;
            do {
                visited[state_id(d, s)] = 1;
                w.darts.push_back(d);
                w.signs.push_back(static_cast<int8_t>(s));
                int nd, ns;
                step(d, s, nd, ns);
                d = nd;
                s = ns;
            } while (!(d == d0 && s == s0));
            // Mark the mirror traversal of the same face as visited. The
            // mirror states always form a fresh orbit of equal length.
            for (size_t i = 0; i < w.darts.size(); ++i) {
                int md = dart_twin(w.darts[i]);
                int ms = -w.signs[i] * emb.signature[dart_edge(w.darts[i])];
                int id = state_id(md, ms);
                if (visited[id]) throw std::logic_error("face tracing: mirror orbit collision");
                visited[id] = 1;
            }
            faces.push_back(std::move(w));
        }
    }
    return faces;
}

int euler_genus(const RotationEmbedding& emb) {
    const MultiGraph& g = emb.host;
    int c = g.component_count();
    int f = static_cast<int>(trace_faces(emb).size());
    // Components without edges trace no walks but bound one face each.
    std::vector<int> comp = g.component_ids();
    std::vector<char> has_edge(c, 0);
    for (const Edge& e : g.edges) has_edge[comp[e.u]] = 1;
    for (int i = 0; i < c; ++i)
        if (!has_edge[i]) ++f;
    return 2 * c - (g.n - g.edge_count() + f);
}

namespace {

// Vertex switching signs: +1/-1 per vertex making spanning-forest edges
// positive; reports whether every edge then carries +1.
std::pair<std::vector<int8_t>, bool> switching_signs(const RotationEmbedding& emb) {
    const MultiGraph& g = emb.host;
    std::vector<std::vector<std::pair<int, int>>> adj(g.n);  // (neighbor, edge)
    for (int i = 0; i < g.edge_count(); ++i) {
        adj[g.edges[i].u].push_back({g.edges[i].v, i});
        adj[g.edges[i].v].push_back({g.edges[i].u, i});
    }
    std::vector<int8_t> sigma(g.n, 0);
    bool orientable = true;
    for (int root = 0; root < g.n; ++root) {
        if (sigma[root]) continue;
        sigma[root] = 1;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto [w, e] : adj[u]) {
                int8_t want = static_cast<int8_t>(sigma[u] * emb.signature[e]);
                if (!sigma[w]) {
                    sigma[w] = want;
                    stack.push_back(w);
                } else if (sigma[w] != want) {
                    orientable = false;
                }
            }
        }
    }
    return {sigma, orientable};
}

}  // namespace

bool is_orientable(const RotationEmbedding& emb) { return switching_signs(emb).second; }

int genus(const RotationEmbedding& emb) {
    if (!is_orientable(emb)) throw std::invalid_argument("genus of non-orientable embedding");
    int eg = euler_genus(emb);
    return eg / 2;
}

RotationEmbedding normalize_signatures(const RotationEmbedding& emb) {
    auto [sigma, orientable] = switching_signs(emb);
    (void)orientable;
    RotationEmbedding out = emb;
    for (int i = 0; i < out.host.edge_count(); ++i) {
        const Edge& e = out.host.edges[i];
        out.signature[i] = static_cast<int8_t>(emb.signature[i] * sigma[e.u] * sigma[e.v]);
    }
    for (int v = 0; v < out.host.n; ++v)
        if (sigma[v] < 0) std::reverse(out.rotation[v].begin(), out.rotation[v].end());
    return out;
}

RotationEmbedding relabel_embedding(const RotationEmbedding& emb,
                                    const std::vector<int>& new_of_old) {
    const MultiGraph& g = emb.host;
    std::vector<Edge> mapped;
    for (const Edge& e : g.edges) mapped.emplace_back(new_of_old[e.u], new_of_old[e.v]);
    MultiGraph host(g.n, mapped);
    // occurrence matching against the sorted multiset
    std::vector<int> slot(g.edge_count());
    {
        std::map<Edge, std::vector<int>> by_edge;
        for (int i = host.edge_count() - 1; i >= 0; --i) by_edge[host.edges[i]].push_back(i);
        for (int i = 0; i < g.edge_count(); ++i) {
            slot[i] = by_edge[mapped[i]].back();
            by_edge[mapped[i]].pop_back();
        }
    }
    RotationEmbedding out;
    out.host = host;
    out.rotation.assign(g.n, {});
    out.signature.assign(g.edge_count(), 1);
    for (int i = 0; i < g.edge_count(); ++i) out.signature[slot[i]] = emb.signature[i];
    for (int v = 0; v < g.n; ++v) {
        for (int d : emb.rotation[v]) {
            int ni = slot[dart_edge(d)];
            int tail = new_of_old[dart_tail(g, d)];
            out.rotation[new_of_old[v]].push_back(2 * ni + (host.edges[ni].u == tail ? 0 : 1));
        }
    }
    out.validate();
    return out;
}

std::string face_edge_cycle_key(const FaceWalk& w) {
    size_t L = w.darts.size();
    std::vector<int> cyc(L);
    for (size_t i = 0; i < L; ++i) cyc[i] = dart_edge(w.darts[i]);
    std::string best;
    for (int dir = 0; dir < 2; ++dir) {
        for (size_t off = 0; off < L; ++off) {
            std::string s;
            s.reserve(L * 3);
            for (size_t i = 0; i < L; ++i) {
                size_t idx = dir ? (off + L - i) % L : (off + i) % L;
                s += std::to_string(cyc[idx]);
                s.push_back(',');
            }
            if (best.empty() || s < best) best = s;
        }
        if (L == 0) break;
    }
    return best;
}

}  // namespace altembed
