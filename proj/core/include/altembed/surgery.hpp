#pragma once

#include "altembed/genus.hpp"
#include "altembed/graph.hpp"

namespace altembed {

/// A width-2 one-sided curve through x and y, recorded combinatorially:
/// the two faces it runs through and the rotation arcs (gamma-sides) it
/// separates at each vertex.
struct Width2Curve {
    int x = -1, y = -1;
    std::vector<int> side_x;  // darts at x on one side of the curve
    std::vector<int> side_y;
    int face1 = -1, face2 = -1;  // indices into the faces of the reduced embedding
};

struct SurgeryResult {
    RotationEmbedding reduced;
    Width2Curve curve;
};

/// Alternating-face surgery: reverses one rotation arc at x and one at y
/// (switching their signatures), which drops the Euler genus by one and
/// splits the witness face into two faces that both contain x and y; every
/// other face survives unchanged. All postconditions are retraced and
/// checked; throws if the witness is stale.
SurgeryResult surgery_reduce(const RotationEmbedding& emb, const AlternatingWitness& w);

struct CutAlongResult {
    RotationEmbedding emb;  // embedding of the cut graph, signatures normalized
    int x1 = -1, x2 = -1, y1 = -1, y2 = -1;
    int face = -1;  // face where x1, y1, x2, y2 appear interlaced
};

/// Cuts the graph at x and y along the curve: the gamma-side darts move to
/// new vertices x2 and y2. For an orientizing curve the result is orientable
/// with Euler genus one lower and the four cut vertices interlaced on a
/// common face; otherwise this throws.
CutAlongResult cut_along(const RotationEmbedding& emb, const Width2Curve& curve);

/// Embeds g2 into a face of emb incident with the edge xy (emb must embed
/// plus_xy(g1) orientably, with x, y the terminals named by g1). Requires
/// plus_xy(g2) planar. The result embeds the union graph, xy edge included,
/// in the same surface.
struct PatchResult {
    RotationEmbedding emb;
    TerminalGraph graph;  // xy-sum of plus_xy(g1) and g2, terminals 0 and 1
};
PatchResult extend_with_planar_patch(const RotationEmbedding& emb, const TerminalGraph& g1,
                                     const TerminalGraph& g2);

/// Given an embedding of G - vw where the triangle uvw has deg_G(u) = 3,
/// routes vw alongside the path v,u,w. The surface does not change.
RotationEmbedding triangle_extend(const RotationEmbedding& emb, int u, int v, int w);

}  // namespace altembed
