#include "altembed/genus.hpp"

#include <algorithm>
#include <bit>
#include <array>
#include <cstdlib>

namespace altembed {

long long default_budget_limit() {
    if (const char* env = std::getenv("ALTEMBED_BUDGET")) {
        long long v = std::atoll(env);
        if (v != 0) return v;
    }
    return 50'000'000;
}

namespace {

// Rotation systems are generated face by face. Each dart is traversed by
// exactly one facial walk; picking the out-dart that continues a walk at a
// vertex fixes one rotation successor (a "corner"). The rotation at a vertex
// is the single carousel its corners form, so partial corner assignments
// must never close a cycle that skips darts of the vertex.
class FaceBuilder {
  public:
    FaceBuilder(const MultiGraph& g, const RotationSearchOptions& opt, Budget& budget,
                const std::function<bool(const std::vector<std::vector<int>>&, int)>& cb)
        : g_(g), opt_(opt), budget_(budget), cb_(cb) {
        int m = g.edge_count();
        n_darts_ = 2 * m;
        rho_.assign(n_darts_, -1);
        rho_in_.assign(n_darts_, 0);
        chain_start_.resize(n_darts_);
        chain_end_.resize(n_darts_);
        for (int d = 0; d < n_darts_; ++d) chain_start_[d] = chain_end_[d] = d;
        traversed_.assign(n_darts_, 0);
        degree_.assign(g.n, 0);
        assigned_.assign(g.n, 0);
        darts_at_.assign(g.n, {});
        for (int d = 0; d < n_darts_; ++d) {
            ++degree_[dart_tail(g, d)];
            darts_at_[dart_tail(g, d)].push_back(d);
        }
        face_parity_ = (((m - g.n) % 2) + 2) % 2;
        min_face_len_ = min_face_length();
        setup_packing_caps();
        if (opt.alt_x >= 0 && opt.alt_y >= 0) {
            track_alt_ = true;
            for (int d = 0; d < n_darts_; ++d) {
                remaining_x_ += dart_tail(g, d) == opt.alt_x;
                remaining_y_ += dart_tail(g, d) == opt.alt_y;
            }
        }
    }

    bool run() {
        remaining_ = n_darts_;
        return start_face();
    }

  private:
    int min_face_length() const {
        Graph s = g_.simplified();
        if (s.edge_count() != g_.edge_count()) return 2;  // parallel edges
        for (int v = 0; v < g_.n; ++v)
            if (degree_[v] == 1) return 2;  // pendant edge walked twice
        // bipartite simple graphs only have even faces
        std::vector<int> color(g_.n, -1);
        bool bipartite = true;
        auto adj = s.adjacency();
        for (int root = 0; root < g_.n && bipartite; ++root) {
            if (color[root] >= 0) continue;
            color[root] = 0;
            std::vector<int> stack{root};
            while (!stack.empty() && bipartite) {
                int u = stack.back();
                stack.pop_back();
                for (int w : adj[u]) {
                    if (color[w] < 0) {
                        color[w] = color[u] ^ 1;
                        stack.push_back(w);
                    } else if (color[w] == color[u]) {
                        bipartite = false;
                    }
                }
            }
        }
        return bipartite ? 4 : 3;
    }

    // Short faces are scarce: a triangular face needs a triangle of the
    // graph, and a triangle bounds at most two faces; likewise 4-cycles.
    void setup_packing_caps() {
        refined_ = false;
        if (min_face_len_ < 3 || g_.n > 62) return;
        Graph simple = g_.simplified();
        if (simple.edge_count() != g_.edge_count()) return;
        std::vector<uint64_t> adj(g_.n, 0);
        for (const Edge& e : simple.edges) {
            adj[e.u] |= 1ull << e.v;
            adj[e.v] |= 1ull << e.u;
        }
        long long t3 = 0, c4 = 0;
        for (const Edge& e : simple.edges) t3 += std::popcount(adj[e.u] & adj[e.v]);
        t3 /= 3;
        for (int u = 0; u < g_.n; ++u) {
            for (int w = u + 1; w < g_.n; ++w) {
                long long common = std::popcount(adj[u] & adj[w]);
                c4 += common * (common - 1) / 2;
            }
        }
        c4 /= 2;
        tri_cap_ = 2 * t3;
        quad_cap_ = 2 * c4;
        rest_div_ = min_face_len_ >= 4 ? 6 : 5;
        refined_ = true;
    }

    bool bound_ok(int extra_open) const {
        int optimistic;
        if (refined_) {
            long long r = remaining_;
            long long t3 =
                min_face_len_ >= 4
                    ? 0
                    : std::min<long long>(std::max(0LL, tri_cap_ - closed_tri_), r / 3);
            r -= 3 * t3;
            long long t4 = std::min<long long>(std::max(0LL, quad_cap_ - closed_quad_), r / 4);
            r -= 4 * t4;
            optimistic = closed_ + extra_open + static_cast<int>(t3 + t4 + r / rest_div_);
        } else {
            optimistic = closed_ + extra_open + remaining_ / min_face_len_;
        }
        if (optimistic % 2 != face_parity_) --optimistic;
        return optimistic >= opt_.target_faces;
    }

    // Opens the next face at the smallest untraversed dart (or finishes).
    bool start_face() {
        if (remaining_ == 0) return emit();
        if (!bound_ok(1)) return true;
        // a face visiting x,y,x,y needs two darts at each; once the closed
        // faces have eaten them without alternating, the branch is dead
        if (track_alt_ && !opt_.first_face_must_alternate && alt_faces_ == 0 &&
            (remaining_x_ < 2 || remaining_y_ < 2))
            return true;
        int d0;
        if (closed_ == 0 && opt_.start_dart >= 0) {
            d0 = opt_.start_dart;
        } else {
            // fail first: open the next face where the continuation is most
            // constrained; any deterministic state function keeps the
            // enumeration free of duplicates
            d0 = -1;
            int best = 1 << 29;
            for (int d = 0; d < n_darts_; ++d) {
                if (traversed_[d]) continue;
                int h = dart_head(g_, d);
                int free = 0;
                for (int e : darts_at_[h]) free += !traversed_[e];
                int score = free * n_darts_ + d;
                if (score < best) {
                    best = score;
                    d0 = d;
                }
            }
        }
        mark(d0, true);
        bool cont = walk(d0, d0, 1);
        mark(d0, false);
        return cont;
    }

    void mark(int d, bool on) {
        traversed_[d] = on;
        remaining_ += on ? -1 : 1;
        if (!track_alt_) return;
        int t = dart_tail(g_, d);
        if (t != opt_.alt_x && t != opt_.alt_y) return;
        (t == opt_.alt_x ? remaining_x_ : remaining_y_) += on ? -1 : 1;
        if (on) {
            open_visits_.push_back(t == opt_.alt_y);
            ++open_len_xy_;
        } else {
            open_visits_.pop_back();
            --open_len_xy_;
        }
    }

    // visits of x and y in the open face alternate at least twice around
    bool open_face_alternates(size_t from) const {
        int runs = 0;
        int last = -1;
        size_t L = open_visits_.size() - from;
        if (L < 4) return false;
        for (size_t i = from; i < open_visits_.size(); ++i) {
            if (open_visits_[i] != last) {
                ++runs;
                last = open_visits_[i];
            }
        }
        if (open_visits_[from] == last && runs > 1) --runs;  // cyclic merge
        return runs >= 4;
    }

    // The walk is at dart `d` (already traversed); choose how it continues.
    bool walk(int face_start, int d, int face_len) {
        budget_.charge();
        if (opt_.first_face_must_alternate && closed_ == 0) {
            // the whole visit stack belongs to the face under construction
            int xs = 0, ys = 0;
            for (char c : open_visits_) (c ? ys : xs) += 1;
            if (xs + remaining_x_ < 2 || ys + remaining_y_ < 2) return true;
        }
        int v = dart_head(g_, d);
        int pivot = dart_twin(d);  // out-dart at v whose corner we now fix
        // Either close the face (continue with face_start, allowed when the
        // corner target is legal) or continue with an untraversed out-dart.
        for (int o : darts_at_[v]) {
            bool closing = (o == face_start);
            if (!closing && traversed_[o]) continue;
            if (rho_in_[o]) continue;
            if (closing && face_len < min_face_len_) continue;
            // premature carousel: linking pivot -> o closes a rotation cycle
            // at v unless it completes the whole vertex
            if (chain_start_[pivot] == o && assigned_[v] + 1 < degree_[v]) continue;
            if (closing && dart_tail(g_, face_start) != v) continue;

            bool alt = false;
            if (closing && track_alt_) {
                alt = open_face_alternates(open_visits_.size() - open_len_xy_);
                // in restricted mode the face being closed is the designated
                // alternating face; reject before touching any state
                if (opt_.first_face_must_alternate && closed_ == 0 && !alt) continue;
            }
            int s = chain_start_[pivot], e = chain_end_[o];
            bool cycle_closed = (s == o);
            rho_[pivot] = o;
            rho_in_[o] = 1;
            ++assigned_[v];
            if (!cycle_closed) {
                chain_end_[s] = e;
                chain_start_[e] = s;
            }
            bool cont;
            if (closing) {
                ++closed_;
                closed_tri_ += face_len == 3;
                closed_quad_ += face_len == 4;
                alt_faces_ += alt;
                size_t keep = open_len_xy_;
                open_len_xy_ = 0;
                cont = start_face();
                open_len_xy_ = keep;
                alt_faces_ -= alt;
                closed_quad_ -= face_len == 4;
                closed_tri_ -= face_len == 3;
                --closed_;
            } else {
                mark(o, true);
                cont = bound_ok(1) ? walk(face_start, o, face_len + 1) : true;
                mark(o, false);
            }
            if (!cycle_closed) {
                chain_end_[s] = pivot;
                chain_start_[e] = o;
            }
            --assigned_[v];
            rho_in_[o] = 0;
            rho_[pivot] = -1;
            if (!cont) return false;
        }
        return true;
    }

    bool emit() {
        int f = closed_;
        if (f < opt_.target_faces || (opt_.exact_faces && f != opt_.target_faces)) return true;
        std::vector<std::vector<int>> rotation(g_.n);
        for (int v = 0; v < g_.n; ++v) {
            if (darts_at_[v].empty()) continue;
            int d = darts_at_[v][0];
            rotation[v].push_back(d);
            for (int cur = rho_[d]; cur != d; cur = rho_[cur]) rotation[v].push_back(cur);
        }
        return cb_(rotation, f);
    }

    const MultiGraph& g_;
    RotationSearchOptions opt_;
    Budget& budget_;
    const std::function<bool(const std::vector<std::vector<int>>&, int)>& cb_;
    int n_darts_ = 0;
    std::vector<int> rho_;        // rotation successor per out-dart
    std::vector<char> rho_in_;    // whether a dart is already some successor
    std::vector<int> chain_start_, chain_end_;
    std::vector<char> traversed_;
    std::vector<int> degree_, assigned_;
    std::vector<std::vector<int>> darts_at_;
    int face_parity_ = 0;
    int min_face_len_ = 3;
    int closed_ = 0;
    int remaining_ = 0;
    bool refined_ = false;
    long long tri_cap_ = 0, quad_cap_ = 0;
    int rest_div_ = 5;
    int closed_tri_ = 0, closed_quad_ = 0;
    bool track_alt_ = false;
    int remaining_x_ = 0, remaining_y_ = 0;
    int alt_faces_ = 0;
    size_t open_len_xy_ = 0;
    std::vector<char> open_visits_;
};

}  // namespace

bool enumerate_rotations(const MultiGraph& g, const RotationSearchOptions& opt, Budget& budget,
                         const std::function<bool(const std::vector<std::vector<int>>&, int)>& cb) {
    if (g.component_count() > 1) throw std::invalid_argument("enumerate_rotations: disconnected");
    if (g.edge_count() == 0) {
        // Single vertex (or empty): one trivial embedding, no faces traced.
        std::vector<std::vector<int>> empty_rotation(g.n);
        int f = 0;
        if (f >= opt.target_faces && (!opt.exact_faces || f == opt.target_faces))
            return cb(empty_rotation, f);
        return true;
    }
    FaceBuilder builder(g, opt, budget, cb);
    return builder.run();
}

int genus_lower_bound(const Graph& g) {
    // Simple graphs have girth >= 3, so F <= 2E/3 blockwise.
    int total = 0;
    // crude blockwise application: use the whole graph per component
    std::vector<int> comp = g.component_ids();
    int c = g.component_count();
    std::vector<int> nv(c, 0), ne(c, 0);
    for (int v = 0; v < g.n; ++v) ++nv[comp[v]];
    for (const Edge& e : g.edges) ++ne[comp[e.u]];
    for (int i = 0; i < c; ++i) {
        if (nv[i] < 3) continue;  // the face bound needs length-3 faces
        int slack = ne[i] - 3 * nv[i] + 6;
        if (slack > 0) total += (slack + 5) / 6;
    }
    return total;
}

namespace {

// Biconnected components (blocks) as edge lists; standard lowpoint DFS.
std::vector<std::vector<Edge>> blocks_of(const Graph& g) {
    std::vector<std::vector<std::pair<int, int>>> adj(g.n);  // (neighbor, edge idx)
    for (int i = 0; i < g.edge_count(); ++i) {
        adj[g.edges[i].u].push_back({g.edges[i].v, i});
        adj[g.edges[i].v].push_back({g.edges[i].u, i});
    }
    std::vector<int> num(g.n, -1), low(g.n, 0);
    std::vector<std::vector<Edge>> blocks;
    std::vector<int> edge_stack;
    int counter = 0;

    struct Frame {
        int v, parent_edge;
        size_t idx;
    };
    for (int root = 0; root < g.n; ++root) {
        if (num[root] >= 0) continue;
        std::vector<Frame> stack{{root, -1, 0}};
        num[root] = low[root] = counter++;
        while (!stack.empty()) {
            Frame& fr = stack.back();
            if (fr.idx < adj[fr.v].size()) {
                auto [w, ei] = adj[fr.v][fr.idx++];
                if (ei == fr.parent_edge) continue;
                if (num[w] < 0) {
                    edge_stack.push_back(ei);
                    num[w] = low[w] = counter++;
                    stack.push_back({w, ei, 0});
                } else if (num[w] < num[fr.v]) {
                    edge_stack.push_back(ei);
                    low[fr.v] = std::min(low[fr.v], num[w]);
                }
            } else {
                int v = fr.v;
                int pe = fr.parent_edge;
                stack.pop_back();
                if (!stack.empty()) {
                    int u = stack.back().v;
                    low[u] = std::min(low[u], low[v]);
                    if (low[v] >= num[u]) {
                        std::vector<Edge> block;
                        int ei;
                        do {
                            ei = edge_stack.back();
                            edge_stack.pop_back();
                            block.push_back(g.edges[ei]);
                        } while (ei != pe);
                        blocks.push_back(std::move(block));
                    }
                }
            }
        }
    }
    return blocks;
}

Graph block_graph(const std::vector<Edge>& block_edges, std::vector<int>& old_of_new) {
    std::vector<int> new_id;
    old_of_new.clear();
    int maxv = 0;
    for (const Edge& e : block_edges) maxv = std::max({maxv, e.u, e.v});
    new_id.assign(maxv + 1, -1);
    std::vector<Edge> es;
    for (const Edge& e : block_edges) {
        for (int v : {e.u, e.v}) {
            if (new_id[v] < 0) {
                new_id[v] = static_cast<int>(old_of_new.size());
                old_of_new.push_back(v);
            }
        }
        es.emplace_back(new_id[e.u], new_id[e.v]);
    }
    return Graph(static_cast<int>(old_of_new.size()), std::move(es));
}

std::optional<RotationEmbedding> block_embedding_with_genus(const Graph& block, int target_genus,
                                                            Budget& budget, bool exact) {
    int f_target = block.edge_count() - block.n + 2 - 2 * target_genus;
    RotationSearchOptions opt;
    opt.target_faces = f_target;
    opt.exact_faces = exact;
    std::optional<RotationEmbedding> found;
    MultiGraph host(block);
    enumerate_rotations(host, opt, budget,
                        [&](const std::vector<std::vector<int>>& rot, int) {
                            found = RotationEmbedding{host, rot,
                                                      std::vector<int8_t>(host.edge_count(), 1)};
                            return false;
                        });
    return found;
}

}  // namespace

GenusResult min_genus(const Graph& g, Budget& budget) {
    GenusResult res;
    std::vector<std::vector<Edge>> blocks = blocks_of(g);
    // Assemble a witness embedding of the full graph as we go.
    RotationEmbedding whole;
    whole.host = MultiGraph(g);
    whole.rotation.assign(g.n, {});
    whole.signature.assign(g.edge_count(), 1);
    auto edge_index = [&](const Edge& e) {
        auto it = std::lower_bound(whole.host.edges.begin(), whole.host.edges.end(), e);
        return static_cast<int>(it - whole.host.edges.begin());
    };
    int total = 0;
    try {
        for (const auto& bedges : blocks) {
            std::vector<int> old_of_new;
            Graph block = block_graph(bedges, old_of_new);
            int lb = genus_lower_bound(block);
            for (int t = lb;; ++t) {
                auto emb = block_embedding_with_genus(block, t, budget, false);
                if (emb) {
                    total += t;
                    // splice the block rotation into the whole-graph embedding
                    for (int v = 0; v < block.n; ++v) {
                        for (int d : emb->rotation[v]) {
                            const Edge& be = block.edges[dart_edge(d)];
                            Edge oe(old_of_new[be.u], old_of_new[be.v]);
                            int oi = edge_index(oe);
                            int tail_old = old_of_new[dart_tail(emb->host, d)];
                            int od = 2 * oi + (whole.host.edges[oi].u == tail_old ? 0 : 1);
                            whole.rotation[old_of_new[v]].push_back(od);
                        }
                    }
                    break;
                }
            }
        }
    } catch (const BudgetExceeded&) {
        res.status = SearchStatus::Exceeded;
        return res;
    }
    whole.validate();
    if (euler_genus(whole) != 2 * total)
        throw std::logic_error("min_genus: block splice lost genus");
    res.status = SearchStatus::Decided;
    res.genus = total;
    res.witness = std::move(whole);
    return res;
}

GenusResult min_genus(const MultiGraph& g, Budget& budget) { return min_genus(g.simplified(), budget); }

GenusDecision embeds_in_genus(const Graph& g, int k, Budget& budget) {
    GenusDecision dec;
    if (genus_lower_bound(g) > k) {
        dec.embeddable = false;
        return dec;
    }
    GenusResult res = min_genus(g, budget);
    if (res.status == SearchStatus::Exceeded) {
        dec.status = SearchStatus::Exceeded;
        return dec;
    }
    dec.embeddable = res.genus <= k;
    if (dec.embeddable) dec.witness = std::move(res.witness);
    return dec;
}

std::optional<std::array<int, 4>> alternating_indices(const MultiGraph& host, const FaceWalk& w,
                                                      int x, int y) {
    // Restrict the walk to visits of x and y and group them into maximal
    // runs. The cyclic pattern x,y,x,y exists iff there are >= 4 runs, and
    // then the first four runs of the linear presentation pin indices
    // i1<i2<i3<i4 with alternating vertices (starting with either terminal).
    std::vector<int> verts = w.vertices(host);
    std::array<int, 4> idx{-1, -1, -1, -1};
    int runs = 0;
    int last = -1;
    for (int i = 0; i < static_cast<int>(verts.size()) && runs < 4; ++i) {
        if (verts[i] != x && verts[i] != y) continue;
        if (verts[i] != last) {
            idx[runs++] = i;
            last = verts[i];
        }
    }
    if (runs == 4) return idx;
    return std::nullopt;
}

AlternatingResult find_alternating_embedding(const TerminalGraph& g, int k, Budget& budget) {
    AlternatingResult out;
    const Graph& graph = g.graph();
    std::vector<int> comp = graph.component_ids();
    if (graph.n == 0 || comp[g.x()] != comp[g.y()]) return out;  // no common face possible
    int cxy = comp[g.x()];
    int c = graph.component_count();

    // Other components embed at their own minimum genus; the component of the
    // terminals gets the remaining handles.
    std::vector<std::vector<int>> comp_vertices(c);
    for (int v = 0; v < graph.n; ++v) comp_vertices[comp[v]].push_back(v);
    int others_genus = 0;
    std::vector<RotationEmbedding> other_embs(c);
    try {
        for (int ci = 0; ci < c; ++ci) {
            if (ci == cxy) continue;
            std::vector<int> others_removed;
            for (int v = 0; v < graph.n; ++v)
                if (comp[v] != ci) others_removed.push_back(v);
            Graph sub = graph.induced_without(others_removed);
            GenusResult r = min_genus(sub, budget);
            if (r.status == SearchStatus::Exceeded) {
                out.status = SearchStatus::Exceeded;
                return out;
            }
            others_genus += r.genus;
            other_embs[ci] = *r.witness;
        }
    } catch (const BudgetExceeded&) {
        out.status = SearchStatus::Exceeded;
        return out;
    }
    int k_local = k - others_genus;
    if (k_local < 0) return out;

    // terminals first: their darts get the smallest ids, so the search
    // builds their faces early and the alternation prune can bite
    std::vector<int> old_of_new{g.x(), g.y()};
    std::vector<int> removed;
    for (int v = 0; v < graph.n; ++v) {
        if (comp[v] != cxy)
            removed.push_back(v);
        else if (v != g.x() && v != g.y())
            old_of_new.push_back(v);
    }
    std::vector<int> new_of_old(graph.n, -1);
    for (size_t i = 0; i < old_of_new.size(); ++i) new_of_old[old_of_new[i]] = static_cast<int>(i);
    std::vector<Edge> local_edges;
    for (const Edge& e : graph.edges)
        if (comp[e.u] == cxy) local_edges.emplace_back(new_of_old[e.u], new_of_old[e.v]);
    Graph local(static_cast<int>(old_of_new.size()), std::move(local_edges));
    int lx = 0, ly = 1;

    int f_target = local.edge_count() - local.n + 2 - 2 * k_local;
    if (f_target < 1) return out;
    MultiGraph host(local);
    std::optional<AlternatingWitness> witness;
    // The alternating face contains a dart leaving x. For each such dart,
    // enumerate only the embeddings whose face through it alternates: the
    // non-alternating bulk of the rotation space is never visited. Every
    // embedding with an alternating face is covered by the dart it uses.
    std::vector<int> x_darts;
    for (int d = 0; d < 2 * host.edge_count(); ++d)
        if (dart_tail(host, d) == lx) x_darts.push_back(d);
    try {
        for (int start : x_darts) {
            if (witness) break;
            RotationSearchOptions opt;
            opt.target_faces = f_target;
            opt.exact_faces = true;
            opt.alt_x = lx;
            opt.alt_y = ly;
            opt.start_dart = start;
            opt.first_face_must_alternate = true;
            enumerate_rotations(host, opt, budget,
                                [&](const std::vector<std::vector<int>>& rot, int) {
                                    RotationEmbedding emb{
                                        host, rot, std::vector<int8_t>(host.edge_count(), 1)};
                                    auto faces = trace_faces(emb);
                                    for (size_t fi = 0; fi < faces.size(); ++fi) {
                                        auto idx = alternating_indices(host, faces[fi], lx, ly);
                                        if (!idx) continue;
                                        AlternatingWitness w;
                                        w.emb = emb;
                                        w.face_index = static_cast<int>(fi);
                                        w.face = faces[fi];
                                        w.i1 = (*idx)[0];
                                        w.i2 = (*idx)[1];
                                        w.i3 = (*idx)[2];
                                        w.i4 = (*idx)[3];
                                        w.claimed_genus = k_local;
                                        witness = std::move(w);
                                        return false;
                                    }
                                    return true;
                                });
        }
    } catch (const BudgetExceeded&) {
        out.status = SearchStatus::Exceeded;
        return out;
    }
    if (!witness) return out;

    // Lift the local witness onto the whole graph (undoing the terminal-first
    // relabeling) and merge in the embeddings of the remaining components.
    RotationEmbedding whole;
    whole.host = MultiGraph(graph);
    whole.rotation.assign(graph.n, {});
    whole.signature.assign(graph.edge_count(), 1);
    auto edge_index = [&](const Edge& e) {
        auto it = std::lower_bound(whole.host.edges.begin(), whole.host.edges.end(), e);
        return static_cast<int>(it - whole.host.edges.begin());
    };
    auto lift = [&](const RotationEmbedding& emb, const std::vector<int>& old_ids) {
        for (int v = 0; v < emb.host.n; ++v) {
            for (int d : emb.rotation[v]) {
                const Edge& le = emb.host.edges[dart_edge(d)];
                Edge oe(old_ids[le.u], old_ids[le.v]);
                int oi = edge_index(oe);
                int tail_old = old_ids[dart_tail(emb.host, d)];
                int od = 2 * oi + (whole.host.edges[oi].u == tail_old ? 0 : 1);
                whole.rotation[old_ids[v]].push_back(od);
            }
        }
    };
    lift(witness->emb, old_of_new);
    for (int ci = 0; ci < c; ++ci) {
        if (ci == cxy) continue;
        lift(other_embs[ci], comp_vertices[ci]);
    }
    // Re-locate the alternating face in the lifted embedding.
    auto faces = trace_faces(whole);
    for (size_t fi = 0; fi < faces.size(); ++fi) {
        auto idx = alternating_indices(whole.host, faces[fi], g.x(), g.y());
        if (!idx) continue;
        AlternatingWitness w;
        w.emb = whole;
        w.face_index = static_cast<int>(fi);
        w.face = faces[fi];
        w.i1 = (*idx)[0];
        w.i2 = (*idx)[1];
        w.i3 = (*idx)[2];
        w.i4 = (*idx)[3];
        w.claimed_genus = k;
        out.witness = std::move(w);
        return out;
    }
    throw std::logic_error("find_alternating_embedding: lifted witness lost its face");
}

void check_alternating_witness(const TerminalGraph& g, const AlternatingWitness& w) {
    w.emb.validate();
    if (w.emb.host.simplified().edges != g.graph().edges || w.emb.host.n != g.n())
        throw std::invalid_argument("witness embeds a different graph");
    if (!is_orientable(w.emb)) throw std::invalid_argument("witness embedding not orientable");
    if (euler_genus(w.emb) != 2 * w.claimed_genus)
        throw std::invalid_argument("witness genus mismatch");
    auto faces = trace_faces(w.emb);
    if (w.face_index < 0 || w.face_index >= static_cast<int>(faces.size()))
        throw std::invalid_argument("witness face index out of range");
    const FaceWalk& face = faces[w.face_index];
    if (face.darts != w.face.darts) throw std::invalid_argument("witness face mismatch");
    auto verts = face.vertices(w.emb.host);
    auto at = [&](int i) { return verts[i]; };
    bool ok = w.i1 < w.i2 && w.i2 < w.i3 && w.i3 < w.i4 && w.i4 < face.length() && w.i1 >= 0 &&
              at(w.i1) == at(w.i3) && at(w.i2) == at(w.i4) &&
              ((at(w.i1) == g.x() && at(w.i2) == g.y()) || (at(w.i1) == g.y() && at(w.i2) == g.x()));
    if (!ok) throw std::invalid_argument("witness indices not alternating");
}

}  // namespace altembed
