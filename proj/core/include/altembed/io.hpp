#pragma once

#include <iosfwd>
#include <string>

#include "altembed/alternation.hpp"
#include "altembed/embedding.hpp"
#include "altembed/graph.hpp"

namespace altembed {

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_number(line) {}
    int line_number;
};

/// graph6 strings for graphs with up to 62 vertices.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& s);

/// Terminal-graph text format:
///   # comment lines allowed anywhere
///   n x y
///   u v        (one edge per line)
/// or a graph6 line followed by "terminals: x y".
TerminalGraph read_terminal_graph(std::istream& in);
TerminalGraph read_terminal_graph_file(const std::string& path);
TerminalGraph parse_terminal_graph(const std::string& text);

/// Canonical writer: relabels canonically (terminals at 0 and 1) and prints
/// edges in lexicographic order, bit-exact for isomorphic inputs.
std::string to_canonical_text(const TerminalGraph& g);

/// XY-labelled text format:
///   n
///   xy-edge: yes|no
///   label lines over {-, X, Y, XY}, one per vertex
///   u v        (one edge per line)
XYLabelledGraph read_labelled_graph(std::istream& in);
std::string write_labelled_graph(const XYLabelledGraph& h);

/// Embedding serialization: edge list, per-vertex dart cycles, signatures.
///   n m
///   u v            (m lines, edge ids 0..m-1)
///   rot v: 3> 2< 0>    (dart = edge id, '>' from the smaller endpoint)
///   sig: + - + ...
std::string write_embedding(const RotationEmbedding& emb);
RotationEmbedding read_embedding(std::istream& in);

/// Catalog record: graph6, terminals, classification tag, connectivity tag,
/// name, separated by single spaces.
std::string catalog_record(const Graph& g, int x, int y, const std::string& cls,
                           const std::string& hcls, const std::string& name);

struct CatalogRecord {
    TerminalGraph graph;
    std::string classification;
    std::string h_class;
    std::string name;
};
CatalogRecord parse_catalog_record(const std::string& line);

}  // namespace altembed
