// Command-line front end: file ingestion, subcommand dispatch, JSON reports
// on stdout and a human summary on stderr.
// Exit codes: 0 decided, 1 input error, 2 budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "altembed/bridges.hpp"
#include "altembed/io.hpp"
#include "altembed/obstruction.hpp"
#include "altembed/surgery.hpp"

using json = nlohmann::ordered_json;
using namespace altembed;

namespace {

// embedding files start with "n m", terminal graphs with "n x y"
bool looks_like_embedding(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        size_t h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        std::istringstream ss(line);
        std::vector<std::string> tok;
        std::string t;
        while (ss >> t) tok.push_back(t);
        if (tok.empty()) continue;
        return tok.size() == 2;
    }
    return false;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fnv_digest(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[20];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json edges_json(const std::vector<Edge>& es) {
    json a = json::array();
    for (const Edge& e : es) a.push_back({e.u, e.v});
    return a;
}

json graph_json(const TerminalGraph& g) {
    json j;
    j["n"] = g.n();
    j["x"] = g.x();
    j["y"] = g.y();
    j["edges"] = edges_json(g.edges());
    j["graph6"] = graph6_encode(g.graph());
    return j;
}

json membership_json(const TerminalGraph& g, const MembershipVerdict& v, bool check) {
    if (check) check_membership_witness(g, v);
    json j;
    j["member"] = v.member;
    j["decider"] = v.decider == MembershipDecider::Cut      ? "cut"
                   : v.decider == MembershipDecider::Oracle ? "oracle"
                                                            : "gstar";
    if (v.planar_embedding) j["witness"] = {{"kind", "planar_embedding"},
                                            {"embedding", write_embedding(*v.planar_embedding)}};
    if (v.cut) {
        json w;
        w["kind"] = "cut_cofacial";
        w["x_side2"] = edges_json(v.cut->x_side2);
        w["y_side2"] = edges_json(v.cut->y_side2);
        w["cut_embedding"] = write_embedding(*v.cut_embedding);
        w["face"] = v.cut_face;
        j["witness"] = w;
    }
    if (v.alternating) {
        json w;
        w["kind"] = "alternating_face";
        w["embedding"] = write_embedding(v.alternating->emb);
        w["face"] = v.alternating->face_index;
        w["visits"] = {v.alternating->i1, v.alternating->i2, v.alternating->i3, v.alternating->i4};
        j["witness"] = w;
    }
    if (v.gstar_embedding) j["witness"] = {{"kind", "gstar_torus_embedding"},
                                           {"embedding", write_embedding(*v.gstar_embedding)}};
    return j;
}

int emit(const json& report, const std::string& summary, SearchStatus status) {
    std::cout << report.dump(2) << "\n";
    std::cerr << summary << "\n";
    return status == SearchStatus::Exceeded ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-terminal alternating embeddings toolkit"};
    app.require_subcommand(1);
    long long budget_limit = default_budget_limit();
    bool check_witness = false;
    app.add_option("--budget", budget_limit, "node-expansion budget for searches");
    app.add_flag("--check-witness", check_witness, "re-validate every witness before reporting");

    std::string path;
    auto* planar_cmd = app.add_subcommand("planar", "planarity with certificates");
    planar_cmd->add_option("file", path, "terminal-graph file")->required();

    auto* genus_cmd = app.add_subcommand("genus", "minimum orientable genus");
    genus_cmd->add_option("file", path, "terminal-graph file")->required();

    auto* membership_cmd = app.add_subcommand("membership", "class membership");
    membership_cmd->add_option("file", path, "terminal-graph file")->required();
    std::string decider = "cut";
    membership_cmd->add_option("--decider", decider, "cut | oracle | gstar | all")
        ->check(CLI::IsMember({"cut", "oracle", "gstar", "all"}));

    auto* verify_cmd = app.add_subcommand("verify", "minimal-obstruction verification");
    verify_cmd->add_option("file", path, "terminal-graph file")->required();

    auto* search_cmd = app.add_subcommand("search", "exhaustive obstruction search");
    int max_n = 7;
    bool require_xy = false;
    search_cmd->add_option("--max-n", max_n, "largest vertex count");
    search_cmd->add_flag("--require-xy-edge", require_xy, "only graphs with the xy edge");

    auto* catalog_cmd = app.add_subcommand("catalog", "built-in obstruction catalog");
    bool witnesses = false;
    catalog_cmd->add_flag("--torus-witnesses", witnesses, "attach genus-1 embeddings");

    auto* surgery_cmd = app.add_subcommand("surgery", "alternating-face surgery pipeline");
    surgery_cmd->add_option("file", path, "terminal-graph or embedding file")->required();
    std::vector<int> terminals;
    surgery_cmd->add_option("--terminals", terminals, "terminal pair for embedding inputs")
        ->expected(2);

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();
    CLI11_PARSE(app, argc, argv);

    Budget budget = Budget::capped(budget_limit);
    json report;
    report["tool"] = "altembed";
    try {
        if (app.got_subcommand(planar_cmd)) {
            std::string text = slurp(path);
            TerminalGraph g = parse_terminal_graph(text);
            report["subcommand"] = "planar";
            report["input_digest"] = fnv_digest(text);
            report["graph"] = graph_json(g);
            PlanarityResult r = is_planar(g.graph());
            report["planar"] = r.planar;
            if (r.planar) {
                if (check_witness && euler_genus(*r.embedding) != 0)
                    throw std::logic_error("witness check failed");
                report["witness"] = {{"kind", "planar_embedding"},
                                     {"embedding", write_embedding(*r.embedding)}};
            } else {
                if (check_witness && !check_kuratowski(g.graph(), *r.kuratowski))
                    throw std::logic_error("witness check failed");
                report["witness"] = {
                    {"kind", r.kuratowski->kind == KuratowskiKind::K5 ? "k5_subdivision"
                                                                      : "k33_subdivision"},
                    {"edges", edges_json(r.kuratowski->edges)}};
            }
            report["cost"] = {{"expansions", budget.used}};
            return emit(report, r.planar ? "planar" : "non-planar (Kuratowski certificate)",
                        SearchStatus::Decided);
        }
        if (app.got_subcommand(genus_cmd)) {
            std::string text = slurp(path);
            report["subcommand"] = "genus";
            report["input_digest"] = fnv_digest(text);
            if (looks_like_embedding(text)) {
                // report the surface of the embedding as given
                std::istringstream in(text);
                RotationEmbedding emb = read_embedding(in);
                report["euler_genus"] = euler_genus(emb);
                bool ori = is_orientable(emb);
                report["orientable"] = ori;
                if (ori) report["genus"] = genus(emb);
                report["faces"] = trace_faces(emb).size();
                report["cost"] = {{"expansions", budget.used}};
                return emit(report,
                            "euler genus " + std::to_string(euler_genus(emb)) +
                                (ori ? " (orientable)" : " (non-orientable)"),
                            SearchStatus::Decided);
            }
            TerminalGraph g = parse_terminal_graph(text);
            report["graph"] = graph_json(g);
            GenusResult r = min_genus(g.graph(), budget);
            report["status"] = r.status == SearchStatus::Decided ? "decided" : "budget_exceeded";
            report["cost"] = {{"expansions", budget.used}};
            if (r.status == SearchStatus::Decided) {
                report["genus"] = r.genus;
                report["witness"] = {{"kind", "embedding"},
                                     {"embedding", write_embedding(*r.witness)}};
                if (check_witness && euler_genus(*r.witness) != 2 * r.genus)
                    throw std::logic_error("witness check failed");
                return emit(report, "genus " + std::to_string(r.genus), SearchStatus::Decided);
            }
            return emit(report, "budget exceeded", SearchStatus::Exceeded);
        }
        if (app.got_subcommand(membership_cmd)) {
            std::string text = slurp(path);
            TerminalGraph g = parse_terminal_graph(text);
            report["subcommand"] = "membership";
            report["input_digest"] = fnv_digest(text);
            report["graph"] = graph_json(g);
            SearchStatus worst = SearchStatus::Decided;
            json verdicts = json::object();
            auto run = [&](const std::string& which) {
                MembershipVerdict v = which == "cut"      ? membership_A1(g)
                                      : which == "oracle" ? membership_oracle(g, budget)
                                                          : membership_via_gstar(g, budget);
                if (v.status == SearchStatus::Exceeded) {
                    worst = SearchStatus::Exceeded;
                    verdicts[which] = {{"status", "budget_exceeded"}};
                } else {
                    verdicts[which] = membership_json(g, v, check_witness);
                }
            };
            if (decider == "all") {
                run("cut");
                run("oracle");
                run("gstar");
            } else {
                run(decider);
            }
            report["verdicts"] = verdicts;
            report["cost"] = {{"expansions", budget.used}};
            std::string summary;
            for (auto& [k, v] : verdicts.items())
                summary += k + ": " +
                           (v.contains("member")
                                ? std::string(v["member"].get<bool>() ? "member" : "non-member")
                                : std::string("budget exceeded")) +
                           "  ";
            return emit(report, summary, worst);
        }
        if (app.got_subcommand(verify_cmd)) {
            std::string text = slurp(path);
            TerminalGraph g = parse_terminal_graph(text);
            report["subcommand"] = "verify";
            report["input_digest"] = fnv_digest(text);
            report["graph"] = graph_json(g);
            ObstructionVerdict v = verify_obstruction(g);
            report["member"] = v.member;
            report["is_obstruction"] = v.is_obstruction;
            json table = json::array();
            for (const MinorTableEntry& e : v.minor_table) {
                table.push_back({{"op", e.step.op == MinorOp::Delete ? "delete" : "contract"},
                                 {"edge", {e.step.edge.u, e.step.edge.v}},
                                 {"member", e.member}});
            }
            report["minor_table"] = table;
            if (v.is_obstruction) {
                Classification c = classify(g);
                report["classification"] = to_string(c.cls);
                report["h_class"] = to_string(c.h_class);
            }
            report["cost"] = {{"expansions", budget.used}};
            return emit(report,
                        v.is_obstruction ? "minimal obstruction"
                                         : (v.member ? "member" : "non-member, not minimal"),
                        SearchStatus::Decided);
        }
        if (app.got_subcommand(search_cmd)) {
            report["subcommand"] = "search";
            SearchConstraints c;
            c.max_n = max_n;
            c.require_xy_edge = require_xy;
            report["max_n"] = max_n;
            report["require_xy_edge"] = require_xy;
            Catalog cat = search_obstructions(c, budget);
            report["complete"] = cat.complete;
            json entries = json::array();
            for (const CatalogEntry& e : cat.entries) {
                entries.push_back({{"graph6", graph6_encode(e.graph.graph())},
                                   {"x", e.graph.x()},
                                   {"y", e.graph.y()},
                                   {"classification", to_string(e.classification)},
                                   {"h_class", to_string(e.h_class)},
                                   {"name", e.name}});
            }
            report["obstructions"] = entries;
            report["cost"] = {{"expansions", budget.used}};
            return emit(report, std::to_string(cat.entries.size()) + " obstructions",
                        cat.complete ? SearchStatus::Decided : SearchStatus::Exceeded);
        }
        if (app.got_subcommand(catalog_cmd)) {
            report["subcommand"] = "catalog";
            Catalog cat = builtin_catalog();
            json entries = json::array();
            SearchStatus worst = SearchStatus::Decided;
            for (const CatalogEntry& e : cat.entries) {
                json je = {{"graph6", graph6_encode(e.graph.graph())},
                           {"x", e.graph.x()},
                           {"y", e.graph.y()},
                           {"classification", to_string(e.classification)},
                           {"h_class", to_string(e.h_class)},
                           {"name", e.name},
                           {"record", catalog_record(e.graph.graph(), e.graph.x(), e.graph.y(),
                                                     to_string(e.classification),
                                                     to_string(e.h_class), e.name)}};
                if (witnesses) {
                    TorusWitnessResult w = torus_witness(e, budget);
                    if (w.status == SearchStatus::Exceeded || !w.emb) {
                        worst = SearchStatus::Exceeded;
                        je["torus_witness"] = "budget_exceeded";
                    } else {
                        if (check_witness && (euler_genus(*w.emb) != 2 || !is_orientable(*w.emb)))
                            throw std::logic_error("witness check failed");
                        je["torus_witness"] = write_embedding(*w.emb);
                        je["via_alternating_construction"] = w.via_alternating_construction;
                    }
                }
                entries.push_back(std::move(je));
            }
            report["entries"] = entries;
            report["cost"] = {{"expansions", budget.used}};
            return emit(report, std::to_string(cat.entries.size()) + " catalog entries", worst);
        }
        if (app.got_subcommand(surgery_cmd)) {
            std::string text = slurp(path);
            report["subcommand"] = "surgery";
            report["input_digest"] = fnv_digest(text);
            std::optional<AlternatingWitness> witness;
            std::optional<TerminalGraph> tg;
            if (looks_like_embedding(text)) {
                // operate on the given embedding: scan its faces for an
                // alternating one through the --terminals pair
                if (terminals.size() != 2)
                    throw std::runtime_error("embedding input needs --terminals x y");
                std::istringstream in(text);
                RotationEmbedding emb = read_embedding(in);
                tg = TerminalGraph(emb.host.simplified(), terminals[0], terminals[1]);
                auto faces = trace_faces(emb);
                for (size_t fi = 0; fi < faces.size() && !witness; ++fi) {
                    auto idx = alternating_indices(emb.host, faces[fi], terminals[0], terminals[1]);
                    if (!idx) continue;
                    AlternatingWitness w;
                    w.emb = emb;
                    w.face_index = static_cast<int>(fi);
                    w.face = faces[fi];
                    w.i1 = (*idx)[0];
                    w.i2 = (*idx)[1];
                    w.i3 = (*idx)[2];
                    w.i4 = (*idx)[3];
                    w.claimed_genus = euler_genus(emb) / 2;
                    witness = std::move(w);
                }
            } else {
                tg = parse_terminal_graph(text);
                report["graph"] = graph_json(*tg);
                AlternatingResult ar = find_alternating_embedding(*tg, 1, budget);
                if (ar.status == SearchStatus::Exceeded) {
                    report["status"] = "budget_exceeded";
                    return emit(report, "budget exceeded", SearchStatus::Exceeded);
                }
                witness = std::move(ar.witness);
            }
            TerminalGraph g = *tg;
            if (!witness) {
                report["alternating"] = false;
                report["cost"] = {{"expansions", budget.used}};
                return emit(report, "no alternating face found", SearchStatus::Decided);
            }
            AlternatingResult ar;
            ar.witness = std::move(witness);
            if (check_witness && !looks_like_embedding(text))
                check_alternating_witness(g, *ar.witness);
            report["alternating"] = true;
            report["witness"] = {
                {"embedding", write_embedding(ar.witness->emb)},
                {"face", ar.witness->face_index},
                {"visits", {ar.witness->i1, ar.witness->i2, ar.witness->i3, ar.witness->i4}}};
            SurgeryResult sr = surgery_reduce(ar.witness->emb, *ar.witness);
            report["reduced"] = {{"embedding", write_embedding(sr.reduced)},
                                 {"euler_genus", euler_genus(sr.reduced)}};
            CutAlongResult cr = cut_along(sr.reduced, sr.curve);
            report["cut"] = {{"embedding", write_embedding(cr.emb)},
                             {"euler_genus", euler_genus(cr.emb)},
                             {"x1", cr.x1},
                             {"y1", cr.y1},
                             {"x2", cr.x2},
                             {"y2", cr.y2},
                             {"face", cr.face}};
            report["cost"] = {{"expansions", budget.used}};
            return emit(report, "surgery pipeline complete", SearchStatus::Decided);
        }
    } catch (const BudgetExceeded&) {
        report["status"] = "budget_exceeded";
        std::cout << report.dump(2) << "\n";
        std::cerr << "budget exceeded\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
