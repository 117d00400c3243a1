#pragma once

#include <optional>
#include <vector>

#include "altembed/graph.hpp"
#include "altembed/planarity.hpp"

namespace altembed {

/// One H-bridge: either a single edge with both ends on H, or a component of
/// G - V(H) together with its edges into H. Attachments are its vertices
/// on H, sorted.
struct Bridge {
    std::vector<int> interior_vertices;
    std::vector<Edge> edges;
    std::vector<int> attachments;
};

struct BridgeDecomposition {
    std::vector<int> h_vertices;
    std::vector<Edge> h_edges;
    std::vector<Bridge> bridges;
};

BridgeDecomposition bridges_of(const Graph& g, const std::vector<int>& h_vertices,
                               const std::vector<Edge>& h_edges);

/// True iff all attachments lie on one branch of H (maximal path through
/// degree-2 vertices). A cycle block of H counts as a single branch.
bool is_local(const Bridge& b, const std::vector<int>& h_vertices,
              const std::vector<Edge>& h_edges);

/// Overlap graph of the C-bridges: two bridges avoid each other when their
/// attachments fit into complementary segments of the cycle; otherwise they
/// overlap and are adjacent here.
struct OverlapGraph {
    int n = 0;                    // one vertex per bridge
    std::vector<Edge> edges;      // overlapping pairs
};

bool bridges_avoid(const std::vector<int>& cycle, const std::vector<int>& att1,
                   const std::vector<int>& att2);
OverlapGraph overlap_graph(const std::vector<int>& cycle, const BridgeDecomposition& dec);

struct NonPlanarBridge : std::invalid_argument {
    explicit NonPlanarBridge(int index)
        : std::invalid_argument("C-bridge " + std::to_string(index) + " is not planar"),
          bridge_index(index) {}
    int bridge_index;
};

/// Planarity of a cycle plus bridges via bipartiteness of the overlap graph.
/// Requires every C-bridge planar (throws NonPlanarBridge otherwise); on a
/// non-planar verdict an odd overlap cycle is returned as witness.
struct OverlapVerdict {
    bool planar = false;
    OverlapGraph overlap;
    std::vector<int> odd_cycle;  // bridge indices, empty when planar
};
OverlapVerdict planar_via_overlap(const Graph& g, const std::vector<int>& cycle);

/// Smallest subsegment of the path `segment` containing all attachments.
std::vector<int> support_of(const Bridge& b, const std::vector<int>& segment);

/// Subdivision of K4 or K2,3 avoiding both terminals, together with a host
/// Kuratowski subdivision certifying extendability.
struct KGraphWitness {
    enum class Kind { K4, K23 } kind = Kind::K4;
    std::vector<int> branch_vertices;
    std::vector<std::vector<int>> paths;  // vertex sequences between branch vertices
    KuratowskiSubdivision host;           // contains every path edge
};

std::optional<KGraphWitness> find_k_graph_disjoint(const TerminalGraph& g);
void check_k_graph_witness(const TerminalGraph& g, const KGraphWitness& w);

}  // namespace altembed
