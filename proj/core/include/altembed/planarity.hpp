#pragma once

#include <array>
#include <optional>
#include <vector>

#include "altembed/embedding.hpp"
#include "altembed/graph.hpp"

namespace altembed {

enum class KuratowskiKind { K5, K33 };

/// Edge subset of the host graph forming a subdivision of K5 or K3,3.
struct KuratowskiSubdivision {
    KuratowskiKind kind = KuratowskiKind::K5;
    std::vector<Edge> edges;
};

struct PlanarityResult {
    bool planar = false;
    std::optional<RotationEmbedding> embedding;         // when planar
    std::optional<KuratowskiSubdivision> kuratowski;    // when not
};

/// Planarity with a machine-checkable certificate either way: a genus-0
/// embedding, or a Kuratowski subdivision obtained by deleting edges while
/// non-planarity persists.
PlanarityResult is_planar(const Graph& g);

/// Decision only; kernelizes (degree-<=2 reduction, blocks, edge bounds)
/// before searching. Much cheaper than the certificate path.
bool planar_decision(const Graph& g);

/// Checks that `sub.edges` lie in g and suppress to exactly K5 or K3,3.
bool check_kuratowski(const Graph& g, const KuratowskiSubdivision& sub);

/// True iff g has a planar embedding with the cycle c as a face boundary.
/// Implemented by the apex construction: join a new vertex to all of c.
bool disk_embeddable(const Graph& g, const std::vector<int>& c);

struct NonPlanarInput : std::invalid_argument {
    NonPlanarInput() : std::invalid_argument("input graph is not planar") {}
};

/// True iff some planar embedding of g has a face visiting the four distinct
/// vertices in the given cyclic order (either orientation). Decided by a
/// subdivided-wheel gadget and one planarity test. Throws NonPlanarInput.
bool cofacial_in_order(const Graph& g, const std::array<int, 4>& quad);

/// True iff some planar embedding has all given vertices on one face
/// (hub gadget). Throws NonPlanarInput.
bool cofacial_set(const Graph& g, const std::vector<int>& vs);

/// Test oracle: scans planar rotation systems directly instead of using the
/// gadget. Exponential; meant for cross-validation on small inputs.
bool cofacial_in_order_scan(const Graph& g, const std::array<int, 4>& quad);

}  // namespace altembed
