#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "altembed/genus.hpp"
#include "altembed/graph.hpp"
#include "altembed/planarity.hpp"

namespace altembed {

inline constexpr uint8_t kLabelX = 1;
inline constexpr uint8_t kLabelY = 2;

/// H = G - x - y with each vertex labelled by the terminals it neighbors;
/// the xy_edge flag carries whether G had the edge xy.
struct XYLabelledGraph {
    Graph h;
    std::vector<uint8_t> labels;  // bitmask of kLabelX / kLabelY per vertex
    bool xy_edge = false;
};

XYLabelledGraph to_labelled(const TerminalGraph& g);
TerminalGraph to_terminal(const XYLabelledGraph& h);  // x = h.n, y = h.n + 1

/// The multigraph H-hat: H plus a vertex v_xy carrying one labelled edge per
/// label of each vertex. Equals identify_terminals(to_terminal(h)).
struct HatGraph {
    MultiGraph graph;
    int vxy = -1;
    std::vector<uint8_t> edge_label;  // per edge: 0, kLabelX or kLabelY
};
HatGraph hat_of(const XYLabelledGraph& h);

/// Cyclic sequences over {X, Y}: the transition count tau and the
/// k-alternating predicate tau == 2k.
using LabelSequence = std::vector<uint8_t>;
int transitions(const LabelSequence& s);
bool is_k_alternating(const LabelSequence& s, int k);

/// Label sequence read off the rotation at v_xy of a planar embedding of
/// H-hat.
LabelSequence label_sequence_of(const RotationEmbedding& emb, const HatGraph& hat);

struct MinAlternationResult {
    SearchStatus status = SearchStatus::Decided;
    int min_tau = -1;
    std::optional<RotationEmbedding> witness;  // embedding of H-hat attaining min_tau

    // H counts as k-alternating whenever an embedding with tau <= 2k exists;
    // tau is monotone above the minimum in this sense.
    bool realizable(int k) const { return min_tau >= 0 && min_tau <= 2 * k; }
};

/// Minimum transition count over all planar embeddings of H-hat.
/// Throws NonPlanarInput when H-hat is not planar.
MinAlternationResult min_alternation(const XYLabelledGraph& h, Budget& budget);

/// Finds a planar embedding of H-hat whose label sequence has exactly the
/// requested transition count, if one exists.
std::optional<RotationEmbedding> embedding_with_tau(const XYLabelledGraph& h, int tau,
                                                    Budget& budget);

/// Boundaries of H: the facial walk of H surrounding v_xy, one per planar
/// embedding of H-hat, deduplicated cyclically. H must be connected.
std::vector<std::vector<int>> boundaries_of(const XYLabelledGraph& h, Budget& budget);

/// All A-labelled vertices occur inside at most two blocks of the boundary
/// whose interiors are free of the other label.
bool covered_by_two_blocks(const std::vector<int>& boundary, const std::vector<uint8_t>& labels,
                           uint8_t label);

/// Vertex of a cyclic sequence of labelled, distinct vertices.
struct LabelledVertex {
    int id;
    uint8_t labels;  // non-empty mask
};

/// Distinct vertices realizing the cyclic pattern X,Y,X,Y,X,Y (either
/// orientation), if present.
std::optional<std::array<int, 6>> find_xyxyxy(const std::vector<LabelledVertex>& r);
bool contains_xyxyxy(const std::vector<LabelledVertex>& r);

/// Arrangement of all labels in the order of r (a vertex's two labels stay
/// adjacent, in either order) minimizing the transition count.
struct ArrangementResult {
    std::optional<LabelSequence> arrangement;   // set iff min tau <= 4
    int min_tau = -1;
    std::optional<std::array<int, 6>> pattern;  // an XYXYXY witness if present
};
ArrangementResult arrange_2_alternating(const std::vector<LabelledVertex>& r);

/// Cut assignments at the terminals: edges listed move to the second copy.
struct CutAssignment {
    std::vector<Edge> x_side2;
    std::vector<Edge> y_side2;
};

struct CutGraphResult {
    Graph graph;
    int x1 = -1, x2 = -1, y1 = -1, y2 = -1;
};
CutGraphResult apply_cut(const TerminalGraph& g, const CutAssignment& cut);

enum class MembershipDecider { Cut, Oracle, GStar };

struct MembershipVerdict {
    SearchStatus status = SearchStatus::Decided;
    bool member = false;
    MembershipDecider decider = MembershipDecider::Cut;

    // exactly one witness field is populated for members
    std::optional<RotationEmbedding> planar_embedding;
    std::optional<CutAssignment> cut;
    std::optional<RotationEmbedding> cut_embedding;  // of the cut graph
    int cut_face = -1;                               // face with the interlaced pattern
    std::optional<AlternatingWitness> alternating;
    std::optional<RotationEmbedding> gstar_embedding;  // genus-1 embedding of G*
};

/// Production decider: planar, or some cut at x and y is planar with the
/// four cut vertices interlaced on a common face.
MembershipVerdict membership_A1(const TerminalGraph& g);

/// Definition-level decider: planar, or genus 1 with an xy-alternating face.
MembershipVerdict membership_oracle(const TerminalGraph& g, Budget& budget);

/// Third route: G* embeds in the torus.
MembershipVerdict membership_via_gstar(const TerminalGraph& g, Budget& budget);

/// Re-checks the witness carried by a verdict; throws on any inconsistency.
void check_membership_witness(const TerminalGraph& g, const MembershipVerdict& v);

/// Genus-1 embedding of to_terminal(h) built from a 3-alternating planar
/// embedding of H-hat by adding one handle. Throws if no planar embedding
/// with tau == 6 exists.
RotationEmbedding torus_from_3_alternating(const XYLabelledGraph& h, Budget& budget);

}  // namespace altembed
