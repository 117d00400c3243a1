#include "altembed/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "altembed/canonical.hpp"

namespace altembed {

std::string graph6_encode(const Graph& g) {
    if (g.n > 62) throw std::invalid_argument("graph6_encode: more than 62 vertices");
    std::string s;
    s.push_back(static_cast<char>(63 + g.n));
    int bit = 5;
    char cur = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (g.has_edge(i, j)) cur |= 1 << bit;
            if (--bit < 0) {
                s.push_back(static_cast<char>(63 + cur));
                bit = 5;
                cur = 0;
            }
        }
    }
    if (bit != 5) s.push_back(static_cast<char>(63 + cur));
    return s;
}

Graph graph6_decode(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("graph6_decode: empty string");
    int n = s[0] - 63;
    if (n < 0 || n > 62) throw std::invalid_argument("graph6_decode: unsupported size byte");
    std::vector<Edge> es;
    size_t pos = 1;
    int bit = 5;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (pos >= s.size()) throw std::invalid_argument("graph6_decode: truncated");
            int c = s[pos] - 63;
            if (c < 0 || c > 63) throw std::invalid_argument("graph6_decode: bad character");
            if (c >> bit & 1) es.emplace_back(i, j);
            if (--bit < 0) {
                bit = 5;
                ++pos;
            }
        }
    }
    return Graph(n, std::move(es));
}

namespace {

std::vector<std::pair<int, std::string>> significant_lines(std::istream& in) {
    std::vector<std::pair<int, std::string>> lines;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        size_t h = line.find('#');
        if (h != std::string::npos) line = line.substr(0, h);
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        size_t b = line.find_last_not_of(" \t\r");
        lines.push_back({no, line.substr(a, b - a + 1)});
    }
    return lines;
}

}  // namespace

TerminalGraph read_terminal_graph(std::istream& in) {
    auto lines = significant_lines(in);
    if (lines.empty()) throw ParseError(1, "empty input");
    const std::string& first = lines[0].second;
    if (!first.empty() && !isdigit(static_cast<unsigned char>(first[0]))) {
        // graph6 line plus a "terminals: x y" annotation
        Graph g;
        try {
            g = graph6_decode(first);
        } catch (const std::invalid_argument& e) {
            throw ParseError(lines[0].first, e.what());
        }
        for (size_t i = 1; i < lines.size(); ++i) {
            std::istringstream ss(lines[i].second);
            std::string tag;
            int x, y;
            if (ss >> tag >> x >> y && tag == "terminals:") {
                try {
                    return TerminalGraph(g, x, y);
                } catch (const std::invalid_argument& e) {
                    throw ParseError(lines[i].first, e.what());
                }
            }
        }
        throw ParseError(lines[0].first, "graph6 input needs a 'terminals: x y' line");
    }
    std::istringstream head(first);
    int n, x, y;
    if (!(head >> n >> x >> y)) throw ParseError(lines[0].first, "expected 'n x y'");
    std::vector<Edge> es;
    for (size_t i = 1; i < lines.size(); ++i) {
        std::istringstream ss(lines[i].second);
        int u, v;
        if (!(ss >> u >> v)) throw ParseError(lines[i].first, "expected 'u v'");
        if (u == v) throw ParseError(lines[i].first, "loop edge");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(lines[i].first, "edge endpoint out of range");
        es.emplace_back(u, v);
    }
    try {
        return TerminalGraph(n, std::move(es), x, y);
    } catch (const std::invalid_argument& e) {
        throw ParseError(lines[0].first, e.what());
    }
}

TerminalGraph read_terminal_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_terminal_graph(in);
}

TerminalGraph parse_terminal_graph(const std::string& text) {
    std::istringstream in(text);
    return read_terminal_graph(in);
}

std::string to_canonical_text(const TerminalGraph& g) {
    TerminalGraph c = canonical_relabel(g);
    std::ostringstream out;
    out << c.n() << " " << c.x() << " " << c.y() << "\n";
    for (const Edge& e : c.edges()) out << e.u << " " << e.v << "\n";
    return out.str();
}

XYLabelledGraph read_labelled_graph(std::istream& in) {
    auto lines = significant_lines(in);
    if (lines.empty()) throw ParseError(1, "empty input");
    size_t li = 0;
    int n;
    {
        std::istringstream ss(lines[li].second);
        if (!(ss >> n) || n < 0) throw ParseError(lines[li].first, "expected vertex count");
        ++li;
    }
    XYLabelledGraph h;
    h.labels.assign(n, 0);
    if (li >= lines.size()) throw ParseError(lines.back().first, "missing xy-edge line");
    {
        std::istringstream ss(lines[li].second);
        std::string tag, val;
        if (!(ss >> tag >> val) || tag != "xy-edge:" || (val != "yes" && val != "no"))
            throw ParseError(lines[li].first, "expected 'xy-edge: yes|no'");
        h.xy_edge = val == "yes";
        ++li;
    }
    for (int v = 0; v < n; ++v, ++li) {
        if (li >= lines.size()) throw ParseError(lines.back().first, "missing label line");
        const std::string& l = lines[li].second;
        if (l == "-")
            h.labels[v] = 0;
        else if (l == "X")
            h.labels[v] = kLabelX;
        else if (l == "Y")
            h.labels[v] = kLabelY;
        else if (l == "XY")
            h.labels[v] = kLabelX | kLabelY;
        else
            throw ParseError(lines[li].first, "label must be one of -, X, Y, XY");
    }
    std::vector<Edge> es;
    for (; li < lines.size(); ++li) {
        std::istringstream ss(lines[li].second);
        int u, v;
        if (!(ss >> u >> v)) throw ParseError(lines[li].first, "expected 'u v'");
        if (u == v || u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(lines[li].first, "bad edge");
        es.emplace_back(u, v);
    }
    h.h = Graph(n, std::move(es));
    return h;
}

std::string write_labelled_graph(const XYLabelledGraph& h) {
    std::ostringstream out;
    out << h.h.n << "\n";
    out << "xy-edge: " << (h.xy_edge ? "yes" : "no") << "\n";
    for (int v = 0; v < h.h.n; ++v) {
        uint8_t l = h.labels[v];
        out << (l == 0 ? "-" : l == kLabelX ? "X" : l == kLabelY ? "Y" : "XY") << "\n";
    }
    for (const Edge& e : h.h.edges) out << e.u << " " << e.v << "\n";
    return out.str();
}

std::string write_embedding(const RotationEmbedding& emb) {
    std::ostringstream out;
    out << emb.host.n << " " << emb.host.edge_count() << "\n";
    for (const Edge& e : emb.host.edges) out << e.u << " " << e.v << "\n";
    for (int v = 0; v < emb.host.n; ++v) {
        out << "rot " << v << ":";
        for (int d : emb.rotation[v]) out << " " << dart_edge(d) << ((d & 1) ? "<" : ">");
        out << "\n";
    }
    out << "sig:";
    for (int8_t s : emb.signature) out << " " << (s > 0 ? "+" : "-");
    out << "\n";
    return out.str();
}

RotationEmbedding read_embedding(std::istream& in) {
    auto lines = significant_lines(in);
    if (lines.empty()) throw ParseError(1, "empty input");
    std::istringstream head(lines[0].second);
    int n, m;
    if (!(head >> n >> m)) throw ParseError(lines[0].first, "expected 'n m'");
    if (static_cast<int>(lines.size()) < 1 + m) throw ParseError(lines[0].first, "missing edges");
    std::vector<Edge> es;
    for (int i = 0; i < m; ++i) {
        std::istringstream ss(lines[1 + i].second);
        int u, v;
        if (!(ss >> u >> v)) throw ParseError(lines[1 + i].first, "expected 'u v'");
        es.emplace_back(u, v);
    }
    RotationEmbedding emb;
    // the host sorts its edge multiset; remember where each input line went
    MultiGraph host(n, es);
    std::vector<int> slot;
    {
        std::map<Edge, std::vector<int>> pool;
        for (int i = host.edge_count() - 1; i >= 0; --i) pool[host.edges[i]].push_back(i);
        for (int i = 0; i < m; ++i) {
            slot.push_back(pool[es[i]].back());
            pool[es[i]].pop_back();
        }
    }
    emb.host = host;
    emb.rotation.assign(n, {});
    emb.signature.assign(m, 1);
    size_t li = 1 + m;
    for (int v = 0; v < n; ++v, ++li) {
        if (li >= lines.size()) throw ParseError(lines.back().first, "missing rotation line");
        std::istringstream ss(lines[li].second);
        std::string tag, vtok;
        if (!(ss >> tag >> vtok) || tag != "rot" || vtok != std::to_string(v) + ":")
            throw ParseError(lines[li].first, "expected 'rot v: ...'");
        std::string tok;
        while (ss >> tok) {
            if (tok.size() < 2) throw ParseError(lines[li].first, "bad dart token");
            char dir = tok.back();
            int e;
            try {
                e = std::stoi(tok.substr(0, tok.size() - 1));
            } catch (...) {
                throw ParseError(lines[li].first, "bad dart token");
            }
            if (e < 0 || e >= m || (dir != '>' && dir != '<'))
                throw ParseError(lines[li].first, "bad dart token");
            emb.rotation[v].push_back(2 * slot[e] + (dir == '<' ? 1 : 0));
        }
    }
    if (li >= lines.size()) throw ParseError(lines.back().first, "missing signature line");
    {
        std::istringstream ss(lines[li].second);
        std::string tag;
        ss >> tag;
        if (tag != "sig:") throw ParseError(lines[li].first, "expected 'sig: ...'");
        for (int i = 0; i < m; ++i) {
            std::string s;
            if (!(ss >> s) || (s != "+" && s != "-"))
                throw ParseError(lines[li].first, "expected + or - per edge");
            emb.signature[slot[i]] = s == "+" ? 1 : -1;
        }
    }
    try {
        emb.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(lines[0].first, std::string("invalid embedding: ") + e.what());
    }
    return emb;
}

std::string catalog_record(const Graph& g, int x, int y, const std::string& cls,
                           const std::string& hcls, const std::string& name) {
    std::ostringstream out;
    out << graph6_encode(g) << " " << x << " " << y << " " << cls << " " << hcls << " " << name;
    return out.str();
}

CatalogRecord parse_catalog_record(const std::string& line) {
    std::istringstream ss(line);
    std::string g6, cls, hcls, name;
    int x, y;
    if (!(ss >> g6 >> x >> y >> cls >> hcls >> name))
        throw std::invalid_argument("bad catalog record: " + line);
    CatalogRecord rec{TerminalGraph(graph6_decode(g6), x, y), cls, hcls, name};
    return rec;
}

}  // namespace altembed
