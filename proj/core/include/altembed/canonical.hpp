#pragma once

#include <string>
#include <vector>

#include "altembed/graph.hpp"

namespace altembed {

/// Canonical relabeling of a graph with two terminals. Two terminal graphs
/// have equal canonical forms exactly when they are isomorphic as graphs
/// with terminals, where swapping the two terminals is allowed.
/// Terminals occupy positions 0 and 1 of the canonical ordering.
struct CanonicalForm {
    int n = 0;
    std::vector<Edge> edges;    // lexicographically sorted, canonical ids
    bool terminals_swapped = false;  // canonical labeling maps y -> 0, x -> 1

    std::string key() const;  // compact string, usable as a map key
    bool operator==(const CanonicalForm&) const = default;
    auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const TerminalGraph& g);
TerminalGraph canonical_relabel(const TerminalGraph& g);
bool is_isomorphic(const TerminalGraph& a, const TerminalGraph& b);

/// Plain-graph canonical form (no terminals); used for comparing structures
/// such as Kuratowski certificates.
std::string plain_canonical_key(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

/// All one-step minors of g (every legal delete/contract), deduplicated by
/// canonical form, in canonical-key order.
std::vector<TerminalGraph> one_step_minors(const TerminalGraph& g);

std::vector<TerminalGraph> dedup_canonical(std::vector<TerminalGraph> graphs);

}  // namespace altembed
