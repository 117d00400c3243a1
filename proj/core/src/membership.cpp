#include <algorithm>
#include <array>
#include <set>

#include "altembed/alternation.hpp"
#include "altembed/canonical.hpp"

namespace altembed {

CutGraphResult apply_cut(const TerminalGraph& g, const CutAssignment& cut) {
    CutGraphResult res;
    res.x1 = g.x();
    res.y1 = g.y();
    res.x2 = g.n();
    res.y2 = g.n() + 1;
    std::set<Edge> sx(cut.x_side2.begin(), cut.x_side2.end());
    std::set<Edge> sy(cut.y_side2.begin(), cut.y_side2.end());
    for (const Edge& e : cut.x_side2)
        if (!g.has_edge(e.u, e.v) || !e.touches(g.x()))
            throw std::invalid_argument("cut: x side edge invalid");
    for (const Edge& e : cut.y_side2)
        if (!g.has_edge(e.u, e.v) || !e.touches(g.y()))
            throw std::invalid_argument("cut: y side edge invalid");
    std::vector<Edge> es;
    for (const Edge& e : g.edges()) {
        int u = e.u, v = e.v;
        if (sx.count(e)) {
            if (u == g.x())
                u = res.x2;
            else
                v = res.x2;
        }
        if (sy.count(e)) {
            if (u == g.y())
                u = res.y2;
            else if (v == g.y())
                v = res.y2;
        }
        es.emplace_back(u, v);
    }
    res.graph = Graph(g.n() + 2, std::move(es));
    return res;
}

namespace {

bool cyclic_quad_in_order(const std::vector<int>& walk, const std::array<int, 4>& quad) {
    int L = static_cast<int>(walk.size());
    for (int rev = 0; rev < 2; ++rev) {
        std::array<int, 4> p = quad;
        if (rev) std::reverse(p.begin() + 1, p.end());
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

// Planar embedding of `g` with a face carrying the active vertices in the
// required pattern, obtained by embedding the gadget graph and stripping
// the gadget. Callers must have checked the gadget test already.
std::pair<RotationEmbedding, int> cofacial_witness(const Graph& g, const std::vector<int>& active,
                                                   bool ordered) {
    std::vector<Edge> es = g.edges;
    int hub = g.n;
    int extra = 1;
    if (ordered && active.size() == 4) {
        for (int i = 0; i < 4; ++i) {
            int mid = g.n + 1 + i;
            es.emplace_back(active[i], hub);
            es.emplace_back(active[i], mid);
            es.emplace_back(mid, active[(i + 1) % 4]);
        }
        extra = 5;
    } else {
        for (int v : active) es.emplace_back(v, hub);
    }
    Graph gadget(g.n + extra, std::move(es));
    PlanarityResult pr = is_planar(gadget);
    if (!pr.planar) throw std::logic_error("cofacial_witness: gadget not planar");
    // strip the gadget: drop darts of edges touching vertices >= g.n
    const RotationEmbedding& ge = *pr.embedding;
    MultiGraph host(g);
    auto edge_index = [&](const Edge& e) {
        auto it = std::lower_bound(host.edges.begin(), host.edges.end(), e);
        return static_cast<int>(it - host.edges.begin());
    };
    RotationEmbedding out;
    out.host = host;
    out.rotation.assign(g.n, {});
    out.signature.assign(host.edge_count(), 1);
    for (int v = 0; v < g.n; ++v) {
        for (int d : ge.rotation[v]) {
            const Edge& e = ge.host.edges[dart_edge(d)];
            if (e.u >= g.n || e.v >= g.n) continue;
            int oi = edge_index(e);
            out.rotation[v].push_back(2 * oi + (host.edges[oi].u == v ? 0 : 1));
        }
    }
    out.validate();
    if (euler_genus(out) != 0) throw std::logic_error("cofacial_witness: strip broke planarity");
    auto faces = trace_faces(out);
    for (size_t i = 0; i < faces.size(); ++i) {
        auto verts = faces[i].vertices(host);
        bool ok;
        if (ordered && active.size() == 4) {
            ok = cyclic_quad_in_order(verts, {active[0], active[1], active[2], active[3]});
        } else {
            ok = true;
            for (int v : active)
                ok = ok && std::find(verts.begin(), verts.end(), v) != verts.end();
            if (active.empty()) ok = true;
        }
        if (ok) return {std::move(out), static_cast<int>(i)};
    }
    throw std::logic_error("cofacial_witness: no face realizes the pattern");
}

// The four cut vertices minus those isolated by empty sides; isolated split
// copies can be drawn into any face, so only the rest constrain the test.
std::vector<int> active_quad(const CutGraphResult& cg) {
    std::vector<int> degs = cg.graph.degrees();
    std::vector<int> active;
    for (int v : {cg.x1, cg.y1, cg.x2, cg.y2})
        if (degs[v] > 0) active.push_back(v);
    return active;
}

bool cut_admissible(const CutGraphResult& cg) {
    if (!planar_decision(cg.graph)) return false;
    std::vector<int> degs = cg.graph.degrees();
    std::vector<int> active = active_quad(cg);
    if (active.size() == 4) return cofacial_in_order(cg.graph, {cg.x1, cg.y1, cg.x2, cg.y2});
    return cofacial_set(cg.graph, active);
}

}  // namespace

MembershipVerdict membership_A1(const TerminalGraph& g) {
    MembershipVerdict v;
    v.decider = MembershipDecider::Cut;
    PlanarityResult pr = is_planar(g.graph());
    if (pr.planar) {
        v.member = true;
        v.planar_embedding = std::move(pr.embedding);
        return v;
    }
    // a non-planar member must have a planar identification
    if (!planar_decision(simple_identify(g))) {
        v.member = false;
        return v;
    }
    std::vector<Edge> ex, ey;
    for (const Edge& e : g.edges()) {
        if (e.touches(g.x())) ex.push_back(e);
        if (e.touches(g.y())) ey.push_back(e);
    }
    // sides are unordered: pin the first edge at each terminal to side 1
    int bx = std::max(0, static_cast<int>(ex.size()) - 1);
    int by = std::max(0, static_cast<int>(ey.size()) - 1);
    for (uint32_t mx = 0; mx < (1u << bx); ++mx) {
        for (uint32_t my = 0; my < (1u << by); ++my) {
            CutAssignment cut;
            for (int i = 0; i < bx; ++i)
                if (mx >> i & 1) cut.x_side2.push_back(ex[i + 1]);
            for (int i = 0; i < by; ++i)
                if (my >> i & 1) cut.y_side2.push_back(ey[i + 1]);
            CutGraphResult cg = apply_cut(g, cut);
            if (!cut_admissible(cg)) continue;
            std::vector<int> active = active_quad(cg);
            bool ordered = active.size() == 4;
            std::vector<int> pattern =
                ordered ? std::vector<int>{cg.x1, cg.y1, cg.x2, cg.y2} : active;
            auto [emb, face] = cofacial_witness(cg.graph, pattern, ordered);
            v.member = true;
            v.cut = std::move(cut);
            v.cut_embedding = std::move(emb);
            v.cut_face = face;
            return v;
        }
    }
    v.member = false;
    return v;
}

MembershipVerdict membership_oracle(const TerminalGraph& g, Budget& budget) {
    MembershipVerdict v;
    v.decider = MembershipDecider::Oracle;
    PlanarityResult pr = is_planar(g.graph());
    if (pr.planar) {
        v.member = true;
        v.planar_embedding = std::move(pr.embedding);
        return v;
    }
    GenusResult gr = min_genus(g.graph(), budget);
    if (gr.status == SearchStatus::Exceeded) {
        v.status = SearchStatus::Exceeded;
        return v;
    }
    if (gr.genus != 1) {
        v.member = false;
        return v;
    }
    AlternatingResult ar = find_alternating_embedding(g, 1, budget);
    if (ar.status == SearchStatus::Exceeded) {
        v.status = SearchStatus::Exceeded;
        return v;
    }
    v.member = ar.witness.has_value();
    if (v.member) v.alternating = std::move(ar.witness);
    return v;
}

MembershipVerdict membership_via_gstar(const TerminalGraph& g, Budget& budget) {
    MembershipVerdict v;
    v.decider = MembershipDecider::GStar;
    TerminalGraph gs = star_augment(g);
    // subgraph monotonicity: genus(G) > 1 already rules G* out
    if (genus_lower_bound(g.graph()) > 1 || genus_lower_bound(gs.graph()) > 1) {
        v.member = false;
        return v;
    }
    GenusDecision dec = embeds_in_genus(gs.graph(), 1, budget);
    if (dec.status == SearchStatus::Exceeded) {
        v.status = SearchStatus::Exceeded;
        return v;
    }
    v.member = dec.embeddable;
    if (dec.embeddable) v.gstar_embedding = std::move(dec.witness);
    return v;
}

void check_membership_witness(const TerminalGraph& g, const MembershipVerdict& v) {
    if (!v.member) return;
    if (v.planar_embedding) {
        v.planar_embedding->validate();
        if (v.planar_embedding->host.simplified().edges != g.edges() ||
            v.planar_embedding->host.n != g.n())
            throw std::invalid_argument("witness embeds a different graph");
        if (euler_genus(*v.planar_embedding) != 0)
            throw std::invalid_argument("planar witness has positive genus");
        return;
    }
    if (v.cut) {
        CutGraphResult cg = apply_cut(g, *v.cut);
        if (!v.cut_embedding) throw std::invalid_argument("cut witness lacks embedding");
        v.cut_embedding->validate();
        if (v.cut_embedding->host.simplified().edges != cg.graph.edges ||
            v.cut_embedding->host.n != cg.graph.n)
            throw std::invalid_argument("cut witness embeds a different graph");
        if (euler_genus(*v.cut_embedding) != 0)
            throw std::invalid_argument("cut witness not planar");
        auto faces = trace_faces(*v.cut_embedding);
        if (v.cut_face < 0 || v.cut_face >= static_cast<int>(faces.size()))
            throw std::invalid_argument("cut witness face out of range");
        auto verts = faces[v.cut_face].vertices(v.cut_embedding->host);
        std::vector<int> active = active_quad(cg);
        bool ok;
        if (active.size() == 4) {
            ok = cyclic_quad_in_order(verts, {cg.x1, cg.y1, cg.x2, cg.y2});
        } else {
            ok = true;
            for (int a : active) ok = ok && std::find(verts.begin(), verts.end(), a) != verts.end();
        }
        if (!ok) throw std::invalid_argument("cut witness face lacks the pattern");
        return;
    }
    if (v.alternating) {
        check_alternating_witness(g, *v.alternating);
        if (v.alternating->claimed_genus != 1)
            throw std::invalid_argument("alternating witness not on the torus");
        if (planar_decision(g.graph()))
            throw std::invalid_argument("planar graph carries an alternating witness");
        return;
    }
    if (v.gstar_embedding) {
        TerminalGraph gs = star_augment(g);
        v.gstar_embedding->validate();
        if (v.gstar_embedding->host.simplified().edges != gs.edges() ||
            v.gstar_embedding->host.n != gs.n())
            throw std::invalid_argument("gstar witness embeds a different graph");
        if (!is_orientable(*v.gstar_embedding) || euler_genus(*v.gstar_embedding) > 2)
            throw std::invalid_argument("gstar witness beyond the torus");
        return;
    }
    throw std::invalid_argument("member verdict without witness");
}

}  // namespace altembed
