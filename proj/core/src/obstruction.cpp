#include "altembed/obstruction.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "altembed/bridges.hpp"
#include "altembed/io.hpp"
#include "altembed/surgery.hpp"

namespace altembed {

std::string to_string(ObstructionClass c) {
    switch (c) {
        case ObstructionClass::SplitKuratowski: return "split_kuratowski";
        case ObstructionClass::KuratowskiPlusIsolated: return "kuratowski_plus_isolated";
        case ObstructionClass::SumOfKuratowskis: return "sum_of_kuratowskis";
        case ObstructionClass::LabelledType: return "labelled_type";
        case ObstructionClass::Unclassified: return "unclassified";
    }
    return "unclassified";
}

std::string to_string(HConnectivity h) {
    switch (h) {
        case HConnectivity::NotApplicable: return "n/a";
        case HConnectivity::Disconnected: return "disconnected";
        case HConnectivity::One: return "connectivity-1";
        case HConnectivity::TwoConnected: return "2-connected";
    }
    return "n/a";
}

namespace {

std::map<std::string, bool>& global_membership_cache() {
    static std::map<std::string, bool> cache;
    return cache;
}

// Tiered membership for search-internal rejection: planarity both ways, then
// the genus-1 alternating route, which is far cheaper than exhausting cut
// assignments when the answer is negative. Agrees with membership_A1 (the
// deciders are equivalent; the acceptance suite cross-checks them).
bool membership_fast(const TerminalGraph& g) {
    if (planar_decision(g.graph())) return true;
    if (!planar_decision(simple_identify(g))) return false;
    if (genus_lower_bound(g.graph()) > 1) return false;
    Budget budget = Budget::capped(default_budget_limit());
    GenusResult gr = min_genus(g.graph(), budget);
    if (gr.status == SearchStatus::Decided && gr.genus > 1) return false;
    if (gr.status == SearchStatus::Decided && gr.genus == 1) {
        AlternatingResult ar = find_alternating_embedding(g, 1, budget);
        if (ar.status == SearchStatus::Decided) return ar.witness.has_value();
    }
    // budget trouble: fall back to the production decider
    return membership_A1(g).member;
}

// Memoized by canonical form; the searches ask about the same minors over
// and over.
bool member_cached(const TerminalGraph& g, std::map<std::string, bool>& cache) {
    std::string key = canonical_form(g).key();
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    bool m = membership_fast(g);
    cache.emplace(std::move(key), m);
    return m;
}

}  // namespace

ObstructionVerdict verify_obstruction(const TerminalGraph& g) {
    ObstructionVerdict v;
    v.member = membership_A1(g).member;
    std::map<std::string, MinorTableEntry> table;
    for (const MinorStep& step : legal_minor_steps(g)) {
        TerminalGraph minor = apply_minor(g, step);
        std::string key = canonical_form(minor).key();
        if (table.count(key)) continue;
        MinorTableEntry entry{step, minor, false};
        entry.member = membership_A1(minor).member;
        table.emplace(std::move(key), std::move(entry));
    }
    bool all_members = true;
    for (auto& [key, entry] : table) {
        all_members = all_members && entry.member;
        v.minor_table.push_back(std::move(entry));
    }
    v.is_obstruction = !v.member && all_members;
    return v;
}

namespace {

bool is_obstruction_quick(const TerminalGraph& g, std::map<std::string, bool>& cache) {
    if (planar_decision(g.graph())) return false;  // members never qualify
    // minors first: membership is minor-monotone, so this never discards a
    // member, and non-members usually carry a cheap non-member minor whose
    // verdict stays cached across candidates
    std::set<std::string> seen;
    for (const MinorStep& step : legal_minor_steps(g)) {
        TerminalGraph minor = apply_minor(g, step);
        if (!seen.insert(canonical_form(minor).key()).second) continue;
        if (!member_cached(minor, cache)) return false;
    }
    return !member_cached(g, cache);
}

bool two_connected(const Graph& g) {
    if (g.n < 3 || !g.connected()) return false;
    for (int v = 0; v < g.n; ++v) {
        std::vector<int> removed{v};
        Graph rest = g.induced_without(removed);
        if (rest.n > 1 && !rest.connected()) return false;
    }
    return true;
}

bool kuratowski_like(const Graph& g) {
    return is_isomorphic(g, Graph::complete(5)) ||
           is_isomorphic(g, Graph::complete_bipartite(3, 3));
}

}  // namespace

Classification classify(const TerminalGraph& g) {
    Classification out;
    // Kuratowski graph plus one or two isolated terminal vertices
    {
        std::vector<int> iso;
        for (int t : {g.x(), g.y()})
            if (g.degree(t) == 0) iso.push_back(t);
        if (!iso.empty()) {
            Graph rest = g.graph().induced_without(iso);
            if (kuratowski_like(rest)) {
                out.cls = ObstructionClass::KuratowskiPlusIsolated;
                return out;
            }
        }
    }
    // split or cut of a Kuratowski graph: identifying the terminals gives
    // back the Kuratowski graph with no edges merged
    {
        Graph merged = simple_identify(g);
        int expected = static_cast<int>(g.edges().size()) - (g.has_xy_edge() ? 1 : 0);
        if (merged.edge_count() == expected && kuratowski_like(merged)) {
            out.cls = ObstructionClass::SplitKuratowski;
            return out;
        }
    }
    // xy-sum of two Kuratowski graphs
    if (!g.has_xy_edge()) {
        BridgeDecomposition dec = bridges_of(g.graph(), {g.x(), g.y()}, {});
        std::vector<const Bridge*> nontrivial;
        for (const Bridge& b : dec.bridges)
            if (!b.interior_vertices.empty()) nontrivial.push_back(&b);
        if (nontrivial.size() == 2 && dec.bridges.size() == 2) {
            bool both = true;
            for (const Bridge* b : nontrivial) {
                // close the bridge into a candidate summand on its vertices
                std::vector<int> keep = b->interior_vertices;
                keep.push_back(g.x());
                keep.push_back(g.y());
                std::sort(keep.begin(), keep.end());
                std::vector<int> removed;
                for (int v = 0; v < g.n(); ++v)
                    if (!std::binary_search(keep.begin(), keep.end(), v)) removed.push_back(v);
                Graph summand = g.graph().induced_without(removed);
                // terminals may or may not be adjacent inside the summand
                std::vector<int> new_id(g.n(), -1);
                int m = 0;
                for (int v = 0; v < g.n(); ++v)
                    if (std::binary_search(keep.begin(), keep.end(), v)) new_id[v] = m++;
                std::vector<Edge> plus = summand.edges;
                plus.emplace_back(new_id[g.x()], new_id[g.y()]);
                Graph closed(summand.n, plus);
                both = both && (kuratowski_like(summand) || kuratowski_like(closed));
            }
            if (both) {
                out.cls = ObstructionClass::SumOfKuratowskis;
                return out;
            }
        }
    }
    // labelled type: planar identification, reported by H connectivity
    if (planar_decision(simple_identify(g))) {
        out.cls = ObstructionClass::LabelledType;
        XYLabelledGraph h = to_labelled(g);
        if (!h.h.connected())
            out.h_class = HConnectivity::Disconnected;
        else if (two_connected(h.h))
            out.h_class = HConnectivity::TwoConnected;
        else
            out.h_class = HConnectivity::One;
        return out;
    }
    out.cls = ObstructionClass::Unclassified;
    return out;
}

ForbTypeResult forb_type(const TerminalGraph& g, Budget& budget) {
    ForbTypeResult res;
    GenusResult rg = min_genus(g.graph(), budget);
    GenusResult rp = min_genus(plus_xy(g).graph(), budget);
    GenusResult rs = min_genus(star_augment(g).graph(), budget);
    if (rg.status != SearchStatus::Decided || rp.status != SearchStatus::Decided ||
        rs.status != SearchStatus::Decided) {
        res.status = SearchStatus::Exceeded;
        return res;
    }
    res.genus_g = rg.genus;
    res.genus_gplus = rp.genus;
    res.genus_gstar = rs.genus;
    TerminalGraph named = g;
    if (rg.genus > 1) {
        res.type = ForbType::G;
    } else if (rp.genus > rg.genus) {
        res.type = ForbType::GPlus;
        named = plus_xy(g);
    } else {
        res.type = ForbType::GStar;
        named = star_augment(g);
    }
    // deletion-minimality at the genus-2 threshold for the named graph
    try {
        GenusResult nr = min_genus(named.graph(), budget);
        bool ok = nr.genus > 1;
        if (ok) {
            for (const Edge& e : named.edges()) {
                TerminalGraph del = apply_minor(named, {e, MinorOp::Delete});
                GenusResult dr = min_genus(del.graph(), budget);
                if (dr.status != SearchStatus::Decided) {
                    res.status = SearchStatus::Exceeded;
                    return res;
                }
                if (dr.genus > 1) {
                    ok = false;
                    break;
                }
            }
        }
        res.forb_membership_verified = ok;
    } catch (const BudgetExceeded&) {
        res.status = SearchStatus::Exceeded;
    }
    return res;
}

namespace {

// All unlabeled graphs on up to max_n vertices, by vertex extension with
// canonical-form rejection.
std::vector<Graph> all_graphs_up_to(int max_n) {
    std::vector<Graph> out;
    std::vector<Graph> level{Graph(1, {})};
    out.push_back(level[0]);
    for (int n = 2; n <= max_n; ++n) {
        std::map<std::string, Graph> next;
        for (const Graph& parent : level) {
            for (uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
                std::vector<Edge> es = parent.edges;
                for (int v = 0; v < n - 1; ++v)
                    if (mask >> v & 1) es.emplace_back(v, n - 1);
                Graph g(n, std::move(es));
                next.emplace(plain_canonical_key(g), std::move(g));
            }
        }
        level.clear();
        for (auto& [k, g] : next) level.push_back(std::move(g));
        for (const Graph& g : level) out.push_back(g);
    }
    return out;
}

std::string name_for(const TerminalGraph& g, const Classification& c) {
    if (c.cls != ObstructionClass::LabelledType) return "-";
    XYLabelledGraph h = to_labelled(g);
    int n = h.h.n;
    bool cycle = h.h.connected() && n >= 3 && h.h.edge_count() == n;
    bool all_deg2 = true;
    for (int d : h.h.degrees()) all_deg2 = all_deg2 && d == 2;
    if (g.has_xy_edge() && cycle && all_deg2) {
        bool all_double = true, alternating_single = true;
        for (int v = 0; v < n; ++v) all_double = all_double && h.labels[v] == (kLabelX | kLabelY);
        // single labels around the cycle, alternating
        if (n == 6) {
            for (int v = 0; v < n; ++v)
                alternating_single =
                    alternating_single && (h.labels[v] == kLabelX || h.labels[v] == kLabelY);
        } else {
            alternating_single = false;
        }
        if (n == 5 && all_double) return "Pentagon";
        if (n == 6 && alternating_single) return "Hexagon";
    }
    return "unnamed";
}

}  // namespace

Catalog search_obstructions(const SearchConstraints& c, Budget& budget) {
    Catalog catalog;
    auto& cache = global_membership_cache();
    std::set<std::string> seen;
    std::vector<CatalogEntry> found;
    try {
        for (const Graph& u : all_graphs_up_to(c.max_n)) {
            budget.charge();
            if (planar_decision(u)) continue;  // every terminal choice is a member
            std::vector<int> lowdeg;
            std::vector<int> deg = u.degrees();
            for (int v = 0; v < u.n; ++v)
                if (deg[v] < c.min_nonterminal_degree) lowdeg.push_back(v);
            if (lowdeg.size() > 2) continue;
            std::vector<std::pair<int, int>> pairs;
            if (lowdeg.size() == 2) {
                pairs.push_back({lowdeg[0], lowdeg[1]});
            } else if (lowdeg.size() == 1) {
                for (int v = 0; v < u.n; ++v)
                    if (v != lowdeg[0]) pairs.push_back({std::min(lowdeg[0], v), std::max(lowdeg[0], v)});
            } else {
                for (int a = 0; a < u.n; ++a)
                    for (int b = a + 1; b < u.n; ++b) pairs.push_back({a, b});
            }
            for (auto [a, b] : pairs) {
                budget.charge();
                TerminalGraph tg(u, a, b);
                if (c.require_xy_edge && !tg.has_xy_edge()) continue;
                if (!seen.insert(canonical_form(tg).key()).second) continue;
                if (!is_obstruction_quick(tg, cache)) continue;
                Classification cls = classify(tg);
                if (c.h_class_filter && cls.h_class != *c.h_class_filter) continue;
                CatalogEntry entry;
                entry.graph = canonical_relabel(tg);
                entry.classification = cls.cls;
                entry.h_class = cls.h_class;
                entry.name = name_for(tg, cls);
                found.push_back(std::move(entry));
            }
        }
    } catch (const BudgetExceeded&) {
        catalog.complete = false;
    }
    std::sort(found.begin(), found.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        auto ka = std::make_tuple(a.graph.n(), a.graph.edges().size(), canonical_form(a.graph).key());
        auto kb = std::make_tuple(b.graph.n(), b.graph.edges().size(), canonical_form(b.graph).key());
        return ka < kb;
    });
    catalog.entries = std::move(found);
    return catalog;
}

Catalog builtin_catalog() {
    std::vector<TerminalGraph> candidates;
    std::vector<std::string> names;
    Graph k5 = Graph::complete(5);
    Graph k33 = Graph::complete_bipartite(3, 3);
    // splits and cuts of the Kuratowski graphs (vertex orbits: any K5 vertex,
    // any K33 vertex)
    for (const Graph* k : {&k5, &k33}) {
        for (bool join : {true, false}) {
            for (const TerminalGraph& s : vertex_splits_raw(*k, 0, join)) {
                candidates.push_back(s);
                names.push_back(join ? "split" : "cut");
            }
        }
    }
    // Kuratowski graphs plus one or two isolated terminals
    for (const Graph* k : {&k5, &k33}) {
        TerminalGraph one(Graph(k->n + 1, k->edges), k->n, 0);
        candidates.push_back(one);
        names.push_back("plus_one_isolated");
        TerminalGraph two(Graph(k->n + 2, k->edges), k->n, k->n + 1);
        candidates.push_back(two);
        names.push_back("plus_two_isolated");
    }
    // the six xy-sums of Kuratowski graphs
    {
        TerminalGraph k5t(k5, 0, 1);
        TerminalGraph k33adj(k33, 0, 3);
        TerminalGraph k33non(k33, 0, 1);
        std::vector<std::pair<TerminalGraph, std::string>> summands{
            {k5t, "K5"}, {k33adj, "K33adj"}, {k33non, "K33non"}};
        for (size_t i = 0; i < summands.size(); ++i) {
            for (size_t j = i; j < summands.size(); ++j) {
                candidates.push_back(xy_sum(summands[i].first, summands[j].first, false));
                names.push_back("sum_" + summands[i].second + "_" + summands[j].second);
            }
        }
    }
    Catalog catalog;
    auto& cache = global_membership_cache();
    std::set<std::string> seen;
    for (size_t i = 0; i < candidates.size(); ++i) {
        const TerminalGraph& g = candidates[i];
        if (!seen.insert(canonical_form(g).key()).second) continue;
        if (!is_obstruction_quick(g, cache)) continue;
        CatalogEntry entry;
        entry.graph = canonical_relabel(g);
        Classification cls = classify(g);
        entry.classification = cls.cls;
        entry.h_class = cls.h_class;
        entry.name = names[i];
        // a split or cut with an empty side is really a Kuratowski graph
        // plus an isolated terminal; name entries by what they are
        if (cls.cls == ObstructionClass::KuratowskiPlusIsolated) {
            std::vector<int> iso;
            for (int t : {g.x(), g.y()})
                if (g.degree(t) == 0) iso.push_back(t);
            Graph rest = g.graph().induced_without(iso);
            std::string k = is_isomorphic(rest, Graph::complete(5)) ? "K5" : "K33";
            entry.name = k + (iso.size() == 2 ? "_plus_two_isolated" : "_plus_one_isolated");
        } else if (cls.cls == ObstructionClass::SplitKuratowski) {
            std::string k = is_isomorphic(simple_identify(g), Graph::complete(5)) ? "K5" : "K33";
            entry.name = "split_" + k;
        }
        catalog.entries.push_back(std::move(entry));
    }
    // labelled-type entries pinned from the exhaustive search
    for (const std::string& line : labelled_catalog_records()) {
        CatalogRecord rec = parse_catalog_record(line);
        if (!seen.insert(canonical_form(rec.graph).key()).second) continue;
        CatalogEntry entry;
        entry.graph = canonical_relabel(rec.graph);
        Classification cls = classify(rec.graph);
        entry.classification = cls.cls;
        entry.h_class = cls.h_class;
        entry.name = rec.name;
        catalog.entries.push_back(std::move(entry));
    }
    std::sort(catalog.entries.begin(), catalog.entries.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) {
                  auto ka = std::make_tuple(a.graph.n(), a.graph.edges().size(),
                                            canonical_form(a.graph).key());
                  auto kb = std::make_tuple(b.graph.n(), b.graph.edges().size(),
                                            canonical_form(b.graph).key());
                  return ka < kb;
              });
    return catalog;
}

TorusWitnessResult torus_witness(const CatalogEntry& e, Budget& budget) {
    TorusWitnessResult res;
    if (e.classification == ObstructionClass::LabelledType) {
        try {
            XYLabelledGraph h = to_labelled(e.graph);
            RotationEmbedding emb = torus_from_3_alternating(h, budget);
            // the construction embeds to_terminal(h), which renames the
            // terminals to the last two slots; rename them back
            int n = e.graph.n();
            std::vector<int> back(n);
            for (int v = 0; v < n - 2; ++v) {
                int old = v + (v >= e.graph.x() ? 1 : 0);
                old += (old >= e.graph.y() ? 1 : 0);
                back[v] = old;
            }
            back[n - 2] = e.graph.x();
            back[n - 1] = e.graph.y();
            RotationEmbedding named = relabel_embedding(emb, back);
            if (named.host.simplified().edges != e.graph.edges())
                throw std::logic_error("torus_witness: relabel mismatch");
            res.emb = std::move(named);
            res.via_alternating_construction = true;
            return res;
        } catch (const BudgetExceeded&) {
            res.status = SearchStatus::Exceeded;
            return res;
        } catch (const std::invalid_argument&) {
            // fall through to the direct search
        }
    }
    GenusDecision dec = embeds_in_genus(e.graph.graph(), 1, budget);
    if (dec.status == SearchStatus::Exceeded) {
        res.status = SearchStatus::Exceeded;
        return res;
    }
    if (dec.embeddable) res.emb = std::move(dec.witness);
    return res;
}

AltJumpReport alt_jump_check(const TerminalGraph& g, Budget& budget) {
    AltJumpReport rep;
    try {
        GenusResult gr = min_genus(g.graph(), budget);
        if (gr.status != SearchStatus::Decided) {
            rep.status = SearchStatus::Exceeded;
            return rep;
        }
        rep.genus = gr.genus;
        rep.is_obstruction = verify_obstruction(g).is_obstruction;
        rep.hypothesis_applies = rep.is_obstruction && gr.genus > 1;
        rep.xy_edge_absent = !g.has_xy_edge();
        if (rep.genus > 1) {
            AlternatingResult ar = find_alternating_embedding(g, rep.genus, budget);
            if (ar.status != SearchStatus::Decided) {
                rep.status = SearchStatus::Exceeded;
                return rep;
            }
            rep.alternating_on_s2 = ar.witness.has_value() && rep.genus == 2;
            // torus obstruction: genus 2 but every single minor embeds
            bool minimal = true;
            for (const MinorStep& step : legal_minor_steps(g)) {
                TerminalGraph minor = apply_minor(g, step);
                GenusResult mr = min_genus(minor.graph(), budget);
                if (mr.status != SearchStatus::Decided) {
                    rep.status = SearchStatus::Exceeded;
                    return rep;
                }
                if (mr.genus > 1) {
                    minimal = false;
                    break;
                }
            }
            rep.torus_obstruction = minimal;
        }
    } catch (const BudgetExceeded&) {
        rep.status = SearchStatus::Exceeded;
    }
    return rep;
}

bool alt_jump_vacuous(const Catalog& catalog, Budget& budget) {
    for (const CatalogEntry& e : catalog.entries) {
        GenusDecision dec = embeds_in_genus(e.graph.graph(), 1, budget);
        if (dec.status != SearchStatus::Decided) throw BudgetExceeded();
        if (!dec.embeddable) return false;
    }
    return true;
}

}  // namespace altembed
