#include "altembed/alternation.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace altembed {

XYLabelledGraph to_labelled(const TerminalGraph& g) {
    XYLabelledGraph out;
    std::vector<int> new_id(g.n(), -1);
    int m = 0;
    for (int v = 0; v < g.n(); ++v)
        if (!g.is_terminal(v)) new_id[v] = m++;
    std::vector<Edge> es;
    out.labels.assign(m, 0);
    for (const Edge& e : g.edges()) {
        bool tu = g.is_terminal(e.u), tv = g.is_terminal(e.v);
        if (tu && tv) {
            out.xy_edge = true;
        } else if (tu || tv) {
            int t = tu ? e.u : e.v;
            int v = new_id[tu ? e.v : e.u];
            out.labels[v] |= (t == g.x()) ? kLabelX : kLabelY;
        } else {
            es.emplace_back(new_id[e.u], new_id[e.v]);
        }
    }
    out.h = Graph(m, std::move(es));
    return out;
}

TerminalGraph to_terminal(const XYLabelledGraph& h) {
    int n = h.h.n;
    std::vector<Edge> es = h.h.edges;
    for (int v = 0; v < n; ++v) {
        if (h.labels[v] & kLabelX) es.emplace_back(v, n);
        if (h.labels[v] & kLabelY) es.emplace_back(v, n + 1);
    }
    if (h.xy_edge) es.emplace_back(n, n + 1);
    return TerminalGraph(n + 2, std::move(es), n, n + 1);
}

HatGraph hat_of(const XYLabelledGraph& h) {
    HatGraph out;
    out.vxy = h.h.n;
    std::vector<Edge> es;
    std::vector<uint8_t> labels;
    for (const Edge& e : h.h.edges) {
        es.push_back(e);
        labels.push_back(0);
    }
    for (int v = 0; v < h.h.n; ++v) {
        if (h.labels[v] & kLabelX) {
            es.emplace_back(v, out.vxy);
            labels.push_back(kLabelX);
        }
        if (h.labels[v] & kLabelY) {
            es.emplace_back(v, out.vxy);
            labels.push_back(kLabelY);
        }
    }
    // MultiGraph sorts its edges; sort the labels alongside
    std::vector<int> order(es.size());
    for (size_t i = 0; i < es.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return es[a] < es[b]; });
    std::vector<Edge> sorted;
    out.edge_label.clear();
    for (int i : order) {
        sorted.push_back(es[i]);
        out.edge_label.push_back(labels[i]);
    }
    out.graph = MultiGraph(h.h.n + 1, sorted);
    return out;
}

int transitions(const LabelSequence& s) {
    int n = static_cast<int>(s.size());
    if (n <= 1) return 0;
    int t = 0;
    for (int i = 0; i < n; ++i) t += (s[i] != s[(i + 1) % n]);
    return t;
}

bool is_k_alternating(const LabelSequence& s, int k) { return transitions(s) == 2 * k; }

LabelSequence label_sequence_of(const RotationEmbedding& emb, const HatGraph& hat) {
    LabelSequence s;
    for (int d : emb.rotation[hat.vxy]) {
        uint8_t l = hat.edge_label[dart_edge(d)];
        if (l == 0) throw std::invalid_argument("unlabelled edge at v_xy");
        s.push_back(l);
    }
    return s;
}

namespace {

// Component of `host` containing `center`, as a local multigraph plus maps.
struct LocalComponent {
    MultiGraph graph;
    std::vector<int> old_of_new;
    std::vector<int> new_of_old;
    std::vector<int> edge_of_local;  // local edge index -> host edge index
};

LocalComponent component_of(const MultiGraph& host, int center) {
    LocalComponent lc;
    std::vector<int> comp = host.component_ids();
    lc.new_of_old.assign(host.n, -1);
    for (int v = 0; v < host.n; ++v) {
        if (comp[v] != comp[center]) continue;
        lc.new_of_old[v] = static_cast<int>(lc.old_of_new.size());
        lc.old_of_new.push_back(v);
    }
    std::vector<Edge> es;
    for (int i = 0; i < host.edge_count(); ++i) {
        const Edge& e = host.edges[i];
        if (comp[e.u] != comp[center]) continue;
        es.emplace_back(lc.new_of_old[e.u], lc.new_of_old[e.v]);
        lc.edge_of_local.push_back(i);
    }
    lc.graph = MultiGraph(static_cast<int>(lc.old_of_new.size()), es);
    // MultiGraph sorted the edges; es was built in host order which is
    // already sorted, and relabeling is monotone, so indices still line up.
    for (size_t i = 0; i < es.size(); ++i)
        if (!(lc.graph.edges[i] == es[i])) throw std::logic_error("component edge order");
    return lc;
}

// Planar embeddings of every other component, for assembling full-host
// witnesses. Throws NonPlanarInput if any component is non-planar.
RotationEmbedding assemble_full(const MultiGraph& host, const LocalComponent& lc,
                                const RotationEmbedding& local_emb) {
    RotationEmbedding out;
    out.host = host;
    out.rotation.assign(host.n, {});
    out.signature.assign(host.edge_count(), 1);
    for (int v = 0; v < lc.graph.n; ++v) {
        for (int d : local_emb.rotation[v]) {
            int he = lc.edge_of_local[dart_edge(d)];
            int tail = lc.old_of_new[dart_tail(lc.graph, d)];
            out.rotation[tail].push_back(2 * he + (host.edges[he].u == tail ? 0 : 1));
        }
    }
    // remaining components: planar embeddings via the simple-graph machinery;
    // parallel edges of the hat all sit at v_xy, inside lc (validate() below
    // would catch any dart collision)
    std::vector<int> comp = host.component_ids();
    std::set<int> done;
    for (int v : lc.old_of_new) done.insert(comp[v]);
    Graph simple = host.simplified();
    std::map<int, std::vector<int>> comp_vertices;
    for (int v = 0; v < host.n; ++v)
        if (!done.count(comp[v])) comp_vertices[comp[v]].push_back(v);
    for (auto& [ci, verts] : comp_vertices) {
        std::vector<int> removed;
        std::vector<int> new_of_old(host.n, -1);
        for (size_t i = 0; i < verts.size(); ++i) new_of_old[verts[i]] = static_cast<int>(i);
        for (int v = 0; v < host.n; ++v)
            if (comp[v] != ci) removed.push_back(v);
        Graph sub = simple.induced_without(removed);
        PlanarityResult pr = is_planar(sub);
        if (!pr.planar) throw NonPlanarInput();
        for (int v = 0; v < sub.n; ++v) {
            for (int d : pr.embedding->rotation[v]) {
                const Edge& se = sub.edges[dart_edge(d)];
                Edge he(verts[se.u], verts[se.v]);
                auto it = std::lower_bound(host.edges.begin(), host.edges.end(), he);
                int hi = static_cast<int>(it - host.edges.begin());
                int tail = verts[dart_tail(pr.embedding->host, d)];
                int hd = 2 * hi + (host.edges[hi].u == tail ? 0 : 1);
                out.rotation[tail].push_back(hd);
            }
        }
    }
    out.validate();
    return out;
}

}  // namespace

MinAlternationResult min_alternation(const XYLabelledGraph& h, Budget& budget) {
    HatGraph hat = hat_of(h);
    if (!planar_decision(hat.graph.simplified())) throw NonPlanarInput();
    MinAlternationResult res;
    LocalComponent lc = component_of(hat.graph, hat.vxy);
    int local_vxy = lc.new_of_old[hat.vxy];
    if (lc.graph.edge_count() == 0) {  // no labels at all: empty sequence
        res.min_tau = 0;
        RotationEmbedding local{lc.graph, std::vector<std::vector<int>>(lc.graph.n),
                                std::vector<int8_t>{}};
        res.witness = assemble_full(hat.graph, lc, local);
        return res;
    }
    // lowest conceivable transition count
    std::set<uint8_t> present;
    for (size_t i = 0; i < hat.edge_label.size(); ++i)
        if (hat.edge_label[i]) present.insert(hat.edge_label[i]);
    int floor_tau = present.size() == 2 ? 2 : 0;

    RotationSearchOptions opt;
    opt.target_faces = lc.graph.edge_count() - lc.graph.n + 2;
    std::vector<std::vector<int>> best_rot;
    int best_tau = -1;
    try {
        enumerate_rotations(lc.graph, opt, budget,
                            [&](const std::vector<std::vector<int>>& rot, int) {
                                LabelSequence s;
                                for (int d : rot[local_vxy])
                                    s.push_back(hat.edge_label[lc.edge_of_local[dart_edge(d)]]);
                                int tau = transitions(s);
                                if (best_tau < 0 || tau < best_tau) {
                                    best_tau = tau;
                                    best_rot = rot;
                                }
                                return best_tau != floor_tau;
                            });
    } catch (const BudgetExceeded&) {
        res.status = SearchStatus::Exceeded;
        return res;
    }
    if (best_tau < 0) throw std::logic_error("min_alternation: planar component lost");
    res.min_tau = best_tau;
    RotationEmbedding local{lc.graph, best_rot, std::vector<int8_t>(lc.graph.edge_count(), 1)};
    res.witness = assemble_full(hat.graph, lc, local);
    return res;
}

std::optional<RotationEmbedding> embedding_with_tau(const XYLabelledGraph& h, int tau,
                                                    Budget& budget) {
    HatGraph hat = hat_of(h);
    if (!planar_decision(hat.graph.simplified())) throw NonPlanarInput();
    LocalComponent lc = component_of(hat.graph, hat.vxy);
    int local_vxy = lc.new_of_old[hat.vxy];
    if (lc.graph.edge_count() == 0) {
        if (tau != 0) return std::nullopt;
        RotationEmbedding local{lc.graph, std::vector<std::vector<int>>(lc.graph.n),
                                std::vector<int8_t>{}};
        return assemble_full(hat.graph, lc, local);
    }
    RotationSearchOptions opt;
    opt.target_faces = lc.graph.edge_count() - lc.graph.n + 2;
    std::vector<std::vector<int>> found;
    enumerate_rotations(lc.graph, opt, budget,
                        [&](const std::vector<std::vector<int>>& rot, int) {
                            LabelSequence s;
                            for (int d : rot[local_vxy])
                                s.push_back(hat.edge_label[lc.edge_of_local[dart_edge(d)]]);
                            if (transitions(s) != tau) return true;
                            found = rot;
                            return false;
                        });
    if (found.empty()) return std::nullopt;
    RotationEmbedding local{lc.graph, found, std::vector<int8_t>(lc.graph.edge_count(), 1)};
    return assemble_full(hat.graph, lc, local);
}

namespace {

std::string cyclic_key(const std::vector<int>& seq) {
    size_t L = seq.size();
    std::string best;
    for (int rev = 0; rev < 2; ++rev) {
        for (size_t off = 0; off < L; ++off) {
            std::string s;
            for (size_t i = 0; i < L; ++i) {
                size_t idx = rev ? (off + L - i) % L : (off + i) % L;
                s += std::to_string(seq[idx]);
                s.push_back(',');
            }
            if (best.empty() || s < best) best = s;
        }
        if (L == 0) break;
    }
    return best;
}

}  // namespace

std::vector<std::vector<int>> boundaries_of(const XYLabelledGraph& h, Budget& budget) {
    if (!h.h.connected()) throw std::invalid_argument("boundaries_of: H must be connected");
    HatGraph hat = hat_of(h);
    if (!planar_decision(hat.graph.simplified())) throw NonPlanarInput();
    LocalComponent lc = component_of(hat.graph, hat.vxy);
    int local_vxy = lc.new_of_old[hat.vxy];

    std::map<std::string, std::vector<int>> out;
    RotationSearchOptions opt;
    opt.target_faces = lc.graph.edge_count() - lc.graph.n + 2;
    enumerate_rotations(lc.graph, opt, budget, [&](const std::vector<std::vector<int>>& rot, int) {
        RotationEmbedding hemb{lc.graph, rot, std::vector<int8_t>(lc.graph.edge_count(), 1)};
        // H with v_xy removed: drop all darts at v_xy
        std::vector<Edge> h_edges;
        std::vector<int> local_of_h;  // h edge -> lc edge index
        for (int i = 0; i < lc.graph.edge_count(); ++i) {
            if (lc.graph.edges[i].touches(local_vxy)) continue;
            h_edges.push_back(lc.graph.edges[i]);
            local_of_h.push_back(i);
        }
        MultiGraph hhost(lc.graph.n, h_edges);
        std::vector<int> h_of_local(lc.graph.edge_count(), -1);
        for (size_t i = 0; i < local_of_h.size(); ++i) h_of_local[local_of_h[i]] = static_cast<int>(i);
        RotationEmbedding hcut;
        hcut.host = hhost;
        hcut.rotation.assign(hhost.n, {});
        hcut.signature.assign(hhost.edge_count(), 1);
        for (int v = 0; v < lc.graph.n; ++v) {
            if (v == local_vxy) continue;
            for (int d : rot[v]) {
                int he = h_of_local[dart_edge(d)];
                if (he < 0) continue;
                hcut.rotation[v].push_back(2 * he + (hhost.edges[he].u == v ? 0 : 1));
            }
        }
        std::vector<int> boundary;
        if (hhost.edge_count() == 0) {
            for (int d : rot[local_vxy]) {
                int w = dart_head(lc.graph, d);
                if (boundary.empty() || boundary.back() != w) boundary.push_back(w);
            }
        } else {
            // reference dart: one lying on a face of the hat embedding that
            // passes v_xy, surviving into H
            auto hat_faces = trace_faces(hemb);
            int ref = -1;
            for (const FaceWalk& f : hat_faces) {
                bool at_vxy = false;
                for (int d : f.darts)
                    if (dart_tail(lc.graph, d) == local_vxy) at_vxy = true;
                if (!at_vxy) continue;
                for (int d : f.darts) {
                    if (h_of_local[dart_edge(d)] >= 0) {
                        ref = 2 * h_of_local[dart_edge(d)] +
                              (hhost.edges[h_of_local[dart_edge(d)]].u ==
                                       dart_tail(lc.graph, d)
                                   ? 0
                                   : 1);
                        break;
                    }
                }
                if (ref >= 0) break;
            }
            if (ref < 0) return true;  // v_xy's faces touch no H edge: degenerate
            for (const FaceWalk& f : trace_faces(hcut)) {
                if (std::find(f.darts.begin(), f.darts.end(), ref) != f.darts.end()) {
                    boundary = f.vertices(hcut.host);
                    break;
                }
            }
        }
        // map back to h vertex ids (identity except for localization)
        for (int& v : boundary) v = lc.old_of_new[v];
        out.emplace(cyclic_key(boundary), boundary);
        return true;
    });
    std::vector<std::vector<int>> list;
    for (auto& [k, b] : out) list.push_back(std::move(b));
    return list;
}

bool covered_by_two_blocks(const std::vector<int>& boundary, const std::vector<uint8_t>& labels,
                           uint8_t label) {
    uint8_t other = label == kLabelX ? kLabelY : kLabelX;
    int L = static_cast<int>(boundary.size());
    // target vertex set
    std::set<int> targets;
    for (size_t v = 0; v < labels.size(); ++v)
        if (labels[v] & label) targets.insert(static_cast<int>(v));
    if (targets.empty()) return true;
    std::map<int, int> target_bit;
    uint64_t all = 0;
    {
        int b = 0;
        for (int v : targets) {
            target_bit[v] = b;
            all |= 1ull << b;
            ++b;
        }
        if (b > 60) throw std::invalid_argument("too many labelled vertices");
    }
    for (int v : targets) {
        bool occurs = false;
        for (int q : boundary) occurs |= (q == v);
        if (!occurs) return false;
    }
    // coverage masks for every valid block (interior free of the other label)
    std::vector<uint64_t> masks;
    for (int s = 0; s < L; ++s) {
        uint64_t mask = 0;
        for (int span = 0; span < L; ++span) {
            int p = (s + span) % L;
            // extending to p turns the previous endpoint into an interior
            // vertex, which must not carry the other label
            if (span >= 2) {
                int q = (s + span - 1) % L;
                int v = boundary[q];
                if (v >= 0 && v < static_cast<int>(labels.size()) && (labels[v] & other)) break;
            }
            int v = boundary[p];
            if (target_bit.count(v)) mask |= 1ull << target_bit[v];
            masks.push_back(mask);
        }
    }
    for (uint64_t m1 : masks)
        for (uint64_t m2 : masks)
            if ((m1 | m2) == all) return true;
    return false;
}

std::optional<std::array<int, 6>> find_xyxyxy(const std::vector<LabelledVertex>& r) {
    int L = static_cast<int>(r.size());
    if (L < 6) return std::nullopt;
    for (int s = 0; s < L; ++s) {
        if (!(r[s].labels & kLabelX)) continue;
        std::array<int, 6> pick{r[s].id, 0, 0, 0, 0, 0};
        int stage = 1;
        static const uint8_t want[6] = {kLabelX, kLabelY, kLabelX, kLabelY, kLabelX, kLabelY};
        for (int off = 1; off < L && stage < 6; ++off) {
            const LabelledVertex& lv = r[(s + off) % L];
            if (lv.labels & want[stage]) pick[stage++] = lv.id;
        }
        if (stage == 6) return pick;
    }
    return std::nullopt;
}

bool contains_xyxyxy(const std::vector<LabelledVertex>& r) { return find_xyxyxy(r).has_value(); }

ArrangementResult arrange_2_alternating(const std::vector<LabelledVertex>& r) {
    ArrangementResult res;
    res.pattern = find_xyxyxy(r);
    std::vector<int> doubly;
    for (size_t i = 0; i < r.size(); ++i) {
        if (r[i].labels == 0) throw std::invalid_argument("unlabelled vertex in sequence");
        if (r[i].labels == (kLabelX | kLabelY)) doubly.push_back(static_cast<int>(i));
    }
    if (doubly.size() > 20) throw std::invalid_argument("too many doubly-labelled vertices");
    LabelSequence best_seq;
    for (uint32_t mask = 0; mask < (1u << doubly.size()); ++mask) {
        LabelSequence s;
        size_t di = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            if (r[i].labels == (kLabelX | kLabelY)) {
                bool swap = (mask >> di) & 1;
                ++di;
                s.push_back(swap ? kLabelY : kLabelX);
                s.push_back(swap ? kLabelX : kLabelY);
            } else {
                s.push_back(r[i].labels);
            }
        }
        int tau = transitions(s);
        if (res.min_tau < 0 || tau < res.min_tau) {
            res.min_tau = tau;
            best_seq = std::move(s);
        }
    }
    if (res.min_tau >= 0 && res.min_tau <= 4) res.arrangement = std::move(best_seq);
    return res;
}

RotationEmbedding torus_from_3_alternating(const XYLabelledGraph& h, Budget& budget) {
    std::optional<RotationEmbedding> emb6 = embedding_with_tau(h, 6, budget);
    if (!emb6) throw std::invalid_argument("no 3-alternating planar embedding (tau != 6)");
    HatGraph hat = hat_of(h);
    TerminalGraph g = to_terminal(h);
    int x = g.x(), y = g.y();

    // runs of the label sequence around v_xy
    const std::vector<int>& vrot = emb6->rotation[hat.vxy];
    int L = static_cast<int>(vrot.size());
    auto label_at = [&](int i) { return hat.edge_label[dart_edge(vrot[(i % L + L) % L])]; };
    int start = 0;
    while (start < L && label_at(start - 1) == label_at(start)) ++start;
    if (start == L) throw std::invalid_argument("single-label sequence cannot be 3-alternating");
    std::vector<std::vector<int>> runs;  // dart lists, alternating labels
    std::vector<int> current;
    for (int i = 0; i < L; ++i) {
        int p = (start + i) % L;
        if (!current.empty() && label_at(p) != label_at(p - 1)) {
            runs.push_back(current);
            current.clear();
        }
        current.push_back(vrot[p]);
    }
    runs.push_back(current);
    if (runs.size() != 6) throw std::logic_error("tau == 6 embedding without 6 runs");

    // map hat darts to G darts
    MultiGraph ghost(g.graph());
    auto g_edge_index = [&](const Edge& e) {
        auto it = std::lower_bound(ghost.edges.begin(), ghost.edges.end(), e);
        return static_cast<int>(it - ghost.edges.begin());
    };
    auto map_dart = [&](int d) {
        int he = dart_edge(d);
        const Edge& e = hat.graph.edges[he];
        uint8_t l = hat.edge_label[he];
        Edge ge = e;
        if (l != 0) ge = Edge(e.other(hat.vxy), l == kLabelX ? x : y);
        int gi = g_edge_index(ge);
        int tail = dart_tail(hat.graph, d);
        int gt = (tail == hat.vxy) ? (l == kLabelX ? x : y) : tail;
        return 2 * gi + (ghost.edges[gi].u == gt ? 0 : 1);
    };

    std::vector<std::vector<int>> xruns, yruns;
    for (const auto& run : runs) {
        uint8_t l = hat.edge_label[dart_edge(run[0])];
        (l == kLabelX ? xruns : yruns).push_back(run);
    }
    if (xruns.size() != 3 || yruns.size() != 3)
        throw std::logic_error("unbalanced runs in 3-alternating sequence");

    auto build_terminal_rotation = [&](const std::vector<std::vector<int>>& rs, int order,
                                       int flips) {
        static const int perms[2][3] = {{0, 1, 2}, {0, 2, 1}};
        std::vector<int> rot;
        for (int k = 0; k < 3; ++k) {
            std::vector<int> run = rs[perms[order][k]];
            if ((flips >> k) & 1) std::reverse(run.begin(), run.end());
            for (int d : run) rot.push_back(map_dart(d));
        }
        return rot;
    };

    int target = 2;  // Euler genus of the torus
    for (int vx = 0; vx < 16; ++vx) {
        for (int vy = 0; vy < 16; ++vy) {
            RotationEmbedding out;
            out.host = ghost;
            out.rotation.assign(ghost.n, {});
            out.signature.assign(ghost.edge_count(), 1);
            for (int v = 0; v < hat.graph.n; ++v) {
                if (v == hat.vxy) continue;
                for (int d : emb6->rotation[v]) out.rotation[v].push_back(map_dart(d));
            }
            out.rotation[x] = build_terminal_rotation(xruns, vx & 1, vx >> 1);
            out.rotation[y] = build_terminal_rotation(yruns, vy & 1, vy >> 1);
            if (!h.xy_edge) {
                out.validate();
                if (euler_genus(out) == target && is_orientable(out)) return out;
                continue;
            }
            // place the xy edge into a face containing both terminals
            int exy = g_edge_index(Edge(x, y));
            int dxy = 2 * exy + (ghost.edges[exy].u == x ? 0 : 1);
            int dx = static_cast<int>(out.rotation[x].size());
            int dy = static_cast<int>(out.rotation[y].size());
            for (int px = 0; px <= dx; ++px) {
                for (int py = 0; py <= dy; ++py) {
                    RotationEmbedding trial = out;
                    trial.rotation[x].insert(trial.rotation[x].begin() + px, dxy);
                    trial.rotation[y].insert(trial.rotation[y].begin() + py, dart_twin(dxy));
                    trial.validate();
                    if (euler_genus(trial) == target && is_orientable(trial)) return trial;
                }
            }
        }
    }
    throw std::logic_error("torus_from_3_alternating: no handle arrangement worked");
}

}  // namespace altembed
