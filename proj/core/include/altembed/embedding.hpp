#pragma once

#include <cstdint>
#include <vector>

#include "altembed/graph.hpp"

namespace altembed {

/// Darts: edge i yields darts 2i (u -> v, with u < v) and 2i+1 (v -> u).
inline int dart_edge(int d) { return d >> 1; }
inline int dart_twin(int d) { return d ^ 1; }

int dart_tail(const MultiGraph& g, int d);
int dart_head(const MultiGraph& g, int d);

/// Combinatorial embedding: a cyclic order of darts around every vertex plus
/// a +1/-1 signature per edge. Signatures matter only on non-orientable
/// surfaces; all-positive systems describe orientable embeddings.
struct RotationEmbedding {
    MultiGraph host;
    std::vector<std::vector<int>> rotation;  // per vertex, darts with that tail
    std::vector<int8_t> signature;           // per edge

    static RotationEmbedding with_default_rotation(const MultiGraph& g);
    void validate() const;  // throws on malformed rotation/signature
};

/// Closed facial walk. Entry i records the dart traversed and the tracing
/// sign in effect while traversing it; tail(darts[i]) is the i-th vertex of
/// the walk.
struct FaceWalk {
    std::vector<int> darts;
    std::vector<int8_t> signs;

    int length() const { return static_cast<int>(darts.size()); }
    std::vector<int> vertices(const MultiGraph& g) const;
};

std::vector<FaceWalk> trace_faces(const RotationEmbedding& emb);

/// Euler genus from the Euler formula; edgeless components count one face.
int euler_genus(const RotationEmbedding& emb);
bool is_orientable(const RotationEmbedding& emb);
int genus(const RotationEmbedding& emb);  // orientable embeddings only

/// Switch vertices so that a spanning forest gets all-positive signatures;
/// for orientable embeddings the result is all-positive. Switching a vertex
/// reverses its rotation and flips the signature of its incident edges.
RotationEmbedding normalize_signatures(const RotationEmbedding& emb);

/// Canonical identity of a facial walk as an undirected cyclic edge sequence
/// (minimal rotation of the edge-id cycle, over both directions). Used to
/// diff face multisets across an operation.
std::string face_edge_cycle_key(const FaceWalk& w);

/// The same embedding on renamed vertices: new_of_old maps old ids to new
/// ids (a bijection onto 0..n-1).
RotationEmbedding relabel_embedding(const RotationEmbedding& emb,
                                    const std::vector<int>& new_of_old);

}  // namespace altembed
