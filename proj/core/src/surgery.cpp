#include "altembed/surgery.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "altembed/planarity.hpp"

namespace altembed {

namespace {

int position_in(const std::vector<int>& rot, int dart) {
    auto it = std::find(rot.begin(), rot.end(), dart);
    if (it == rot.end()) throw std::invalid_argument("dart missing from rotation");
    return static_cast<int>(it - rot.begin());
}

// The face corner used at visit j of the walk: the rotation of v_j is cut
// between `before` and `after` (after = the dart leaving v_j at this visit
// under a positive tracing sign; swapped under a negative one).
struct CornerGap {
    int before, after;
};

CornerGap corner_at(const FaceWalk& w, int j) {
    int L = w.length();
    int dj = w.darts[j];
    int din = w.darts[(j - 1 + L) % L];
    int sj = w.signs[j];
    int before = dart_twin(din);
    int after = dj;
    if (sj < 0) std::swap(before, after);
    return {before, after};
}

// Arc of the rotation from g1.after forward up to g2.before, inclusive.
std::vector<int> arc_between(const std::vector<int>& rot, const CornerGap& g1,
                             const CornerGap& g2) {
    int k = static_cast<int>(rot.size());
    int start = position_in(rot, g1.after);
    std::vector<int> arc;
    for (int i = 0; i < k; ++i) {
        int d = rot[(start + i) % k];
        arc.push_back(d);
        if (d == g2.before) return arc;
    }
    throw std::invalid_argument("corner gaps do not split the rotation");
}

bool face_visits(const MultiGraph& host, const FaceWalk& f, int v) {
    for (int d : f.darts)
        if (dart_tail(host, d) == v) return true;
    return false;
}

bool quad_interlaced(const std::vector<int>& walk, int a, int b, int c, int d) {
    int L = static_cast<int>(walk.size());
    for (int rev = 0; rev < 2; ++rev) {
        std::array<int, 4> p =
            rev ? std::array<int, 4>{a, d, c, b} : std::array<int, 4>{a, b, c, d};
        for (int s = 0; s < L; ++s) {
            if (walk[s] != p[0]) continue;
            int stage = 1;
            for (int off = 1; off < L && stage < 4; ++off)
                if (walk[(s + off) % L] == p[stage]) ++stage;
            if (stage == 4) return true;
        }
    }
    return false;
}

}  // namespace

SurgeryResult surgery_reduce(const RotationEmbedding& emb, const AlternatingWitness& w) {
    emb.validate();
    auto faces = trace_faces(emb);
    if (w.face_index < 0 || w.face_index >= static_cast<int>(faces.size()) ||
        faces[w.face_index].darts != w.face.darts)
        throw std::invalid_argument("surgery_reduce: stale witness");
    const FaceWalk& walk = faces[w.face_index];
    auto verts = walk.vertices(emb.host);
    int a = verts[w.i1];  // appears at i1 and i3
    int b = verts[w.i2];  // appears at i2 and i4

    RotationEmbedding out = emb;
    auto flip_arc = [&](int v, int j1, int j2) {
        CornerGap g1 = corner_at(walk, j1);
        CornerGap g2 = corner_at(walk, j2);
        const std::vector<int>& rot = emb.rotation[v];
        std::vector<int> arc = arc_between(rot, g1, g2);
        std::vector<int> rest = arc_between(rot, g2, g1);
        std::vector<int> rebuilt(arc.rbegin(), arc.rend());
        rebuilt.insert(rebuilt.end(), rest.begin(), rest.end());
        out.rotation[v] = rebuilt;
        for (int d : arc) out.signature[dart_edge(d)] = -out.signature[dart_edge(d)];
        return arc;
    };
    std::vector<int> side_x = flip_arc(a, w.i1, w.i3);
    std::vector<int> side_y = flip_arc(b, w.i2, w.i4);

    out.validate();
    if (euler_genus(out) != euler_genus(emb) - 1)
        throw std::logic_error("surgery_reduce: genus did not drop by one");
    auto new_faces = trace_faces(out);
    if (new_faces.size() != faces.size() + 1)
        throw std::logic_error("surgery_reduce: face count did not grow by one");
    // every old face except the witness survives; it splits into two walks
    // that both visit a and b
    std::multiset<std::string> old_keys;
    for (size_t i = 0; i < faces.size(); ++i)
        if (static_cast<int>(i) != w.face_index) old_keys.insert(face_edge_cycle_key(faces[i]));
    SurgeryResult res;
    res.curve.x = a;
    res.curve.y = b;
    res.curve.side_x = std::move(side_x);
    res.curve.side_y = std::move(side_y);
    std::vector<int> fresh;
    for (size_t i = 0; i < new_faces.size(); ++i) {
        std::string key = face_edge_cycle_key(new_faces[i]);
        auto it = old_keys.find(key);
        if (it != old_keys.end())
            old_keys.erase(it);
        else
            fresh.push_back(static_cast<int>(i));
    }
    if (!old_keys.empty() || fresh.size() != 2)
        throw std::logic_error("surgery_reduce: face multiset changed beyond the witness");
    for (int fi : fresh)
        if (!face_visits(out.host, new_faces[fi], a) || !face_visits(out.host, new_faces[fi], b))
            throw std::logic_error("surgery_reduce: new face misses a terminal");
    res.curve.face1 = fresh[0];
    res.curve.face2 = fresh[1];
    res.reduced = std::move(out);
    return res;
}

CutAlongResult cut_along(const RotationEmbedding& emb, const Width2Curve& curve) {
    emb.validate();
    const MultiGraph& g = emb.host;
    std::set<int> sx(curve.side_x.begin(), curve.side_x.end());
    std::set<int> sy(curve.side_y.begin(), curve.side_y.end());
    for (int d : curve.side_x)
        if (dart_tail(g, d) != curve.x) throw std::invalid_argument("side_x dart not at x");
    for (int d : curve.side_y)
        if (dart_tail(g, d) != curve.y) throw std::invalid_argument("side_y dart not at y");

    CutAlongResult res;
    res.x1 = curve.x;
    res.y1 = curve.y;
    res.x2 = g.n;
    res.y2 = g.n + 1;
    auto new_tail = [&](int d) {
        if (sx.count(d)) return res.x2;
        if (sy.count(d)) return res.y2;
        return dart_tail(g, d);
    };
    std::vector<Edge> new_edges;
    for (int i = 0; i < g.edge_count(); ++i)
        new_edges.emplace_back(new_tail(2 * i), new_tail(2 * i + 1));
    MultiGraph host(g.n + 2, new_edges);
    // match occurrences: host sorted its edge multiset
    std::map<Edge, std::vector<int>> slots;
    for (int i = host.edge_count() - 1; i >= 0; --i) slots[host.edges[i]].push_back(i);
    std::vector<int> new_index(g.edge_count());
    RotationEmbedding out;
    out.host = host;
    out.rotation.assign(host.n, {});
    out.signature.assign(host.edge_count(), 1);
    for (int i = 0; i < g.edge_count(); ++i) {
        auto& v = slots[new_edges[i]];
        new_index[i] = v.back();
        v.pop_back();
        out.signature[new_index[i]] = emb.signature[i];
    }
    // a dart may map onto either end of the new edge; disambiguate via the
    // remembered tail, breaking u == v ties by dart parity (loops cannot
    // arise: the curve sides never contain both darts of an edge)
    auto mapped_dart = [&](int d) {
        int ni = new_index[dart_edge(d)];
        int nt = new_tail(d);
        const Edge& e = host.edges[ni];
        if (e.u == e.v) throw std::logic_error("cut_along: loop created");
        return 2 * ni + (e.u == nt ? 0 : 1);
    };
    for (int v = 0; v < g.n; ++v) {
        for (int d : emb.rotation[v]) {
            int nd = mapped_dart(d);
            out.rotation[dart_tail(host, nd)].push_back(nd);
        }
    }
    out.validate();
    RotationEmbedding norm = normalize_signatures(out);
    for (int8_t s : norm.signature)
        if (s != 1) throw std::invalid_argument("cut_along: curve is not orientizing");
    if (euler_genus(norm) != euler_genus(emb) - 1)
        throw std::logic_error("cut_along: Euler genus did not drop by one");
    auto faces = trace_faces(norm);
    for (size_t i = 0; i < faces.size(); ++i) {
        if (quad_interlaced(faces[i].vertices(norm.host), res.x1, res.y1, res.x2, res.y2)) {
            res.face = static_cast<int>(i);
            break;
        }
    }
    if (res.face < 0) throw std::logic_error("cut_along: cut vertices not interlaced");
    res.emb = std::move(norm);
    return res;
}

PatchResult extend_with_planar_patch(const RotationEmbedding& emb, const TerminalGraph& g1,
                                     const TerminalGraph& g2) {
    emb.validate();
    for (int8_t s : emb.signature)
        if (s != 1) throw std::invalid_argument("patch: embedding must be all-positive");
    TerminalGraph g1p = plus_xy(g1);
    if (emb.host.simplified().edges != g1p.edges() || emb.host.n != g1p.n())
        throw std::invalid_argument("patch: embedding does not match plus_xy(g1)");
    TerminalGraph g2p = plus_xy(g2);
    PlanarityResult pr = is_planar(g2p.graph());
    if (!pr.planar) throw std::invalid_argument("patch: plus_xy(g2) is not planar");
    const RotationEmbedding& emb2 = *pr.embedding;

    PatchResult res;
    res.graph = xy_sum(g1p, g2, true);
    MultiGraph host(res.graph.graph());

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
    std::vector<int> id1 = place(g1p, 2);
    std::vector<int> id2 = place(g2p, g1p.n());

    auto edge_index = [&](const Edge& e) {
        auto it = std::lower_bound(host.edges.begin(), host.edges.end(), e);
        if (it == host.edges.end() || !(*it == e)) throw std::logic_error("patch: edge lookup");
        return static_cast<int>(it - host.edges.begin());
    };
    auto map_dart = [&](const RotationEmbedding& src, const std::vector<int>& id, int d) {
        const Edge& se = src.host.edges[dart_edge(d)];
        Edge oe(id[se.u], id[se.v]);
        int oi = edge_index(oe);
        int tail = id[dart_tail(src.host, d)];
        return 2 * oi + (host.edges[oi].u == tail ? 0 : 1);
    };

    int e2 = -1;
    for (int i = 0; i < emb2.host.edge_count(); ++i)
        if (emb2.host.edges[i] == Edge(g2p.x(), g2p.y())) e2 = i;
    auto arc_after = [&](int v, int xy_dart) {
        const auto& rot = emb2.rotation[v];
        int p = position_in(rot, xy_dart);
        std::vector<int> arc;
        int k = static_cast<int>(rot.size());
        for (int i = 1; i < k; ++i) arc.push_back(rot[(p + i) % k]);
        return arc;
    };
    int d2x = 2 * e2 + (emb2.host.edges[e2].u == g2p.x() ? 0 : 1);
    std::vector<int> ax = arc_after(g2p.x(), d2x);
    std::vector<int> ay = arc_after(g2p.y(), dart_twin(d2x));

    int exy = edge_index(Edge(0, 1));
    int D = 2 * exy + (host.edges[exy].u == 0 ? 0 : 1);

    int target = euler_genus(emb);
    for (int variant = 0; variant < 16; ++variant) {
        std::vector<int> vax = ax, vay = ay;
        if (variant & 1) std::reverse(vax.begin(), vax.end());
        if (variant & 2) std::reverse(vay.begin(), vay.end());
        bool x_after = !(variant & 4);
        bool y_after = !(variant & 8);

        RotationEmbedding out;
        out.host = host;
        out.rotation.assign(host.n, {});
        out.signature.assign(host.edge_count(), 1);
        for (int v = 0; v < g1p.n(); ++v)
            for (int d : emb.rotation[v])
                out.rotation[id1[dart_tail(emb.host, d)]].push_back(map_dart(emb, id1, d));
        for (int v = 0; v < g2p.n(); ++v) {
            if (v == g2p.x() || v == g2p.y()) continue;
            for (int d : emb2.rotation[v])
                out.rotation[id2[v]].push_back(map_dart(emb2, id2, d));
        }
        auto splice = [&](int vertex, int pivot, const std::vector<int>& arc, bool after) {
            auto& rot = out.rotation[vertex];
            int p = position_in(rot, pivot);
            std::vector<int> mapped;
            for (int d : arc) mapped.push_back(map_dart(emb2, id2, d));
            rot.insert(rot.begin() + p + (after ? 1 : 0), mapped.begin(), mapped.end());
        };
        splice(0, D, vax, x_after);
        splice(1, dart_twin(D), vay, y_after);
        out.validate();
        if (euler_genus(out) == target) {
            res.emb = std::move(out);
            return res;
        }
    }
    throw std::logic_error("extend_with_planar_patch: no insertion preserved the genus");
}

RotationEmbedding triangle_extend(const RotationEmbedding& emb, int u, int v, int w) {
    emb.validate();
    const MultiGraph& g = emb.host;
    if (g.simplified().has_edge(v, w)) throw std::invalid_argument("triangle_extend: vw present");
    int euv = -1, euw = -1;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (g.edges[i] == Edge(u, v)) euv = i;
        if (g.edges[i] == Edge(u, w)) euw = i;
    }
    if (euv < 0 || euw < 0 || g.degree(u) != 3)
        throw std::invalid_argument("triangle_extend: need deg(u) = 3 with uv, uw edges");

    std::vector<Edge> es = g.edges;
    es.emplace_back(v, w);
    MultiGraph host(g.n, es);
    std::map<Edge, std::vector<int>> slots;
    for (int i = host.edge_count() - 1; i >= 0; --i) slots[host.edges[i]].push_back(i);
    std::vector<int> new_index(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        auto& s = slots[g.edges[i]];
        new_index[i] = s.back();
        s.pop_back();
    }
    int evw = slots[Edge(v, w)].back();

    int target = euler_genus(emb);
    int8_t sig = static_cast<int8_t>(emb.signature[euv] * emb.signature[euw]);
    for (int variant = 0; variant < 8; ++variant) {
        RotationEmbedding out;
        out.host = host;
        out.rotation.assign(host.n, {});
        out.signature.assign(host.edge_count(), 1);
        for (int i = 0; i < g.edge_count(); ++i) out.signature[new_index[i]] = emb.signature[i];
        out.signature[evw] = (variant & 4) ? static_cast<int8_t>(-sig) : sig;
        auto map_dart = [&](int d) {
            int ni = new_index[dart_edge(d)];
            int tail = dart_tail(g, d);
            return 2 * ni + (host.edges[ni].u == tail ? 0 : 1);
        };
        for (int a = 0; a < g.n; ++a)
            for (int d : emb.rotation[a]) out.rotation[a].push_back(map_dart(d));
        int dvw = 2 * evw + (host.edges[evw].u == v ? 0 : 1);
        auto insert_next_to = [&](int vertex, int old_edge, int dart, bool after) {
            auto& rot = out.rotation[vertex];
            int anchor = 2 * new_index[old_edge] +
                         (host.edges[new_index[old_edge]].u == vertex ? 0 : 1);
            int p = position_in(rot, anchor);
            rot.insert(rot.begin() + p + (after ? 1 : 0), dart);
        };
        insert_next_to(v, euv, dvw, variant & 1);
        insert_next_to(w, euw, dart_twin(dvw), variant & 2);
        out.validate();
        if (euler_genus(out) == target) return out;
    }
    throw std::logic_error("triangle_extend: no routing preserved the surface");
}

}  // namespace altembed
