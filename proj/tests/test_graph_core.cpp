#include "doctest.h"

#include <set>

#include "altembed/canonical.hpp"
#include "altembed/graph.hpp"
#include "oracles.hpp"

using namespace altembed;

namespace {

TerminalGraph k5_terminals(int x = 0, int y = 1) { return TerminalGraph(Graph::complete(5), x, y); }

TerminalGraph k33_terminals(int x, int y) {
    return TerminalGraph(Graph::complete_bipartite(3, 3), x, y);
}

}  // namespace

TEST_CASE("TerminalGraph invariants") {
    CHECK_THROWS(TerminalGraph(3, {{0, 1}}, 2, 2));
    CHECK_THROWS(TerminalGraph(3, {{0, 1}}, 0, 5));
    CHECK_THROWS(TerminalGraph(2, {{0, 5}}, 0, 1));
    TerminalGraph g(4, {{0, 1}, {1, 2}}, 0, 3);  // isolated terminal is fine
    CHECK(g.degree(3) == 0);
}

TEST_CASE("apply_minor: deletion") {
    TerminalGraph g = k5_terminals();
    TerminalGraph d = apply_minor(g, {{0, 1}, MinorOp::Delete});
    CHECK(d.n() == 5);
    CHECK(d.edges().size() == 9);
    CHECK(!d.has_xy_edge());
}

TEST_CASE("apply_minor: contraction onto a terminal") {
    // path x - a - y, contract xa: single edge with both terminals
    TerminalGraph g(3, {{0, 2}, {1, 2}}, 0, 1);
    TerminalGraph c = apply_minor(g, {{0, 2}, MinorOp::Contract});
    CHECK(c.n() == 2);
    CHECK(c.edges().size() == 1);
    CHECK(c.has_xy_edge());
}

TEST_CASE("apply_minor: contraction simplifies parallels") {
    // triangle x,y,a; contracting ya must not leave a doubled xy edge
    TerminalGraph g(3, {{0, 1}, {0, 2}, {1, 2}}, 0, 1);
    TerminalGraph c = apply_minor(g, {{1, 2}, MinorOp::Contract});
    CHECK(c.n() == 2);
    CHECK(c.edges().size() == 1);
}

TEST_CASE("apply_minor: forbidden and invalid steps") {
    TerminalGraph g(3, {{0, 1}, {1, 2}}, 0, 1);
    CHECK_THROWS(apply_minor(g, {{0, 1}, MinorOp::Contract}));
    CHECK_THROWS(apply_minor(g, {{0, 2}, MinorOp::Delete}));
}

TEST_CASE("apply_minor bookkeeping invariants") {
    TerminalGraph g = k33_terminals(0, 3);
    for (const MinorStep& s : legal_minor_steps(g)) {
        TerminalGraph m = apply_minor(g, s);
        CHECK(m.x() != m.y());
        int expected_n = g.n() - (s.op == MinorOp::Contract ? 1 : 0);
        CHECK(m.n() == expected_n);
    }
}

TEST_CASE("one_step_minors of K5, counted against brute-force isomorphism") {
    TerminalGraph g = k5_terminals();
    std::vector<TerminalGraph> all;
    for (const MinorStep& s : legal_minor_steps(g)) all.push_back(apply_minor(g, s));
    size_t brute = oracle::count_classes_brute(all);
    std::vector<TerminalGraph> dedup = one_step_minors(g);
    CHECK(dedup.size() == brute);
    CHECK(dedup.size() == 4);  // frozen from the oracle count
}

TEST_CASE("one_step_minors edge cases") {
    TerminalGraph single(2, {{0, 1}}, 0, 1);
    auto minors = one_step_minors(single);
    REQUIRE(minors.size() == 1);
    CHECK(minors[0].edges().empty());
    CHECK(minors[0].n() == 2);

    TerminalGraph empty(2, {}, 0, 1);
    CHECK(one_step_minors(empty).empty());
}

TEST_CASE("identify_terminals keeps parallel edges, simple_identify collapses them") {
    // C4 = x - a - y - b - x with x=0, y=1, a=2, b=3
    TerminalGraph c4(4, {{0, 2}, {1, 2}, {1, 3}, {0, 3}}, 0, 1);
    IdentifyResult id = identify_terminals(c4);
    CHECK(id.graph.n == 3);
    CHECK(id.graph.edge_count() == 4);
    CHECK(id.graph.degree(id.vxy) == 4);
    Graph s = simple_identify(c4);
    CHECK(s.edge_count() == 2);

    // common neighbor of nonadjacent terminals: double edge at v_xy
    TerminalGraph wedge(3, {{0, 2}, {1, 2}}, 0, 1);
    IdentifyResult idw = identify_terminals(wedge);
    CHECK(idw.graph.edge_count() == 2);
    CHECK(simple_identify(wedge).edge_count() == 1);
}

TEST_CASE("identify_terminals drops the xy edge first") {
    TerminalGraph g(3, {{0, 1}, {0, 2}, {1, 2}}, 0, 1);
    IdentifyResult id = identify_terminals(g);
    CHECK(id.graph.n == 2);
    CHECK(id.graph.edge_count() == 2);  // parallel pair, xy edge gone
}

TEST_CASE("plus_xy and star_augment") {
    TerminalGraph iso(2, {}, 0, 1);
    TerminalGraph star = star_augment(iso);
    CHECK(star.n() == 5);
    CHECK(star.edges().size() == 9);
    CHECK(oracle::brute_isomorphic_plain(star.graph(),
                                         apply_minor(TerminalGraph(Graph::complete(5), 0, 1),
                                                     {{0, 1}, MinorOp::Delete})
                                             .graph()));

    TerminalGraph k5 = k5_terminals();
    TerminalGraph gs = star_augment(k5);
    CHECK(gs.n() == 8);
    CHECK(gs.edges().size() == 19);

    CHECK(plus_xy(plus_xy(iso)) == plus_xy(iso));
}

TEST_CASE("star_augment's added bridge is K5 minus an edge") {
    TerminalGraph g(4, {{0, 2}, {1, 3}, {2, 3}}, 0, 1);
    TerminalGraph gs = star_augment(g);
    // the bridge = terminals + 3 new vertices, with the 9 added edges
    std::vector<Edge> bridge_edges;
    for (const Edge& e : gs.edges())
        if (e.u >= 4 || e.v >= 4 || (gs.is_terminal(e.u) && e.v >= 4)) bridge_edges.push_back(e);
    std::set<int> verts;
    for (const Edge& e : bridge_edges) {
        verts.insert(e.u);
        verts.insert(e.v);
    }
    CHECK(bridge_edges.size() == 9);
    CHECK(verts.size() == 5);
}

TEST_CASE("xy_sum sizes") {
    TerminalGraph a = k33_terminals(0, 3);  // adjacent pair
    TerminalGraph sum = xy_sum(a, a, false);
    CHECK(sum.n() == 10);
    CHECK(sum.edges().size() == 16);

    TerminalGraph k5 = k5_terminals();
    TerminalGraph sum5 = xy_sum(k5, k5, false);
    CHECK(sum5.n() == 8);
    CHECK(sum5.edges().size() == 18);

    TerminalGraph g(4, {{0, 2}, {2, 3}, {1, 3}}, 0, 1);
    TerminalGraph edge_only(2, {{0, 1}}, 0, 1);
    CHECK(is_isomorphic(xy_sum(g, edge_only, true), plus_xy(g)));
}

TEST_CASE("splits of K5 fall into 3 canonical classes") {
    Graph k5 = Graph::complete(5);
    auto raw = vertex_splits_raw(k5, 0, true);
    CHECK(raw.size() == 16);
    CHECK(oracle::count_classes_brute(raw) == 3);  // part sizes {0,4},{1,3},{2,2}
    CHECK(splits_of(k5, 0).size() == 3);
}

TEST_CASE("cut of a degree-2 vertex with parts {1,1} gives a path through the terminals") {
    Graph p3 = Graph::path(3);  // 0-1-2, cut at middle
    auto cuts = cuts_of(p3, 1);
    bool found = false;
    for (const auto& c : cuts) {
        if (c.degree(c.x()) == 1 && c.degree(c.y()) == 1 && c.edges().size() == 2 &&
            !c.has_xy_edge())
            found = true;
    }
    CHECK(found);
}

TEST_CASE("split with an empty side leaves a pendant terminal") {
    Graph tri = Graph::cycle(3);
    auto raw = vertex_splits_raw(tri, 0, true);
    bool found = false;
    for (const auto& s : raw)
        if (s.degree(s.y()) == 1 && s.degree(s.x()) == 3) found = true;
    CHECK(found);
}

TEST_CASE("splitting then re-identifying the two halves recovers the graph") {
    Graph g(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    for (const TerminalGraph& s : splits_of(g, 0)) {
        CHECK(oracle::brute_isomorphic_plain(simple_identify(s), g));
    }
}

TEST_CASE("canonical form agrees with brute-force isomorphism") {
    // K3,3 with terminals in the same part vs opposite parts
    TerminalGraph same = k33_terminals(0, 1);
    TerminalGraph opp = k33_terminals(0, 3);
    CHECK(!is_isomorphic(same, opp));
    CHECK(!oracle::brute_isomorphic(same, opp));

    // terminal swap is allowed
    TerminalGraph g1(4, {{0, 2}, {2, 3}, {1, 3}}, 0, 1);
    TerminalGraph g2(4, {{0, 2}, {2, 3}, {1, 3}}, 1, 0);
    CHECK(is_isomorphic(g1, g2));

    // C4 relabelings
    TerminalGraph c1(4, {{0, 2}, {1, 2}, {0, 3}, {1, 3}}, 0, 1);
    TerminalGraph c2(4, {{0, 3}, {1, 3}, {0, 2}, {1, 2}}, 0, 1);
    CHECK(is_isomorphic(c1, c2));
}

TEST_CASE("canonical form is a congruence on small random graphs") {
    // exhaustive-ish: all graphs on 5 vertices with terminals 0,1 over a
    // sample of edge masks, cross-validated against permutation search
    std::vector<Edge> all_edges;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) all_edges.emplace_back(i, j);
    std::vector<TerminalGraph> pool;
    for (uint32_t mask = 0; mask < (1u << 10); mask += 7) {
        std::vector<Edge> es;
        for (int b = 0; b < 10; ++b)
            if (mask >> b & 1) es.push_back(all_edges[b]);
        pool.emplace_back(5, std::move(es), 0, 1);
    }
    for (size_t i = 0; i < pool.size(); i += 13) {
        for (size_t j = i; j < pool.size(); j += 17) {
            bool brute = oracle::brute_isomorphic(pool[i], pool[j]);
            bool canon = is_isomorphic(pool[i], pool[j]);
            CHECK(brute == canon);
        }
    }
}

TEST_CASE("canonical relabel puts terminals at 0 and 1 and is stable") {
    TerminalGraph g(6, {{2, 4}, {0, 4}, {1, 5}, {3, 5}, {2, 3}}, 2, 3);
    TerminalGraph c = canonical_relabel(g);
    CHECK(c.x() == 0);
    CHECK(c.y() == 1);
    CHECK(canonical_form(c).key() == canonical_form(g).key());
}
