#pragma once

#include <functional>
#include <optional>
#include <stdexcept>

#include "altembed/embedding.hpp"
#include "altembed/graph.hpp"

namespace altembed {

/// Deterministic search budget measured in node expansions, never wall-clock.
struct BudgetExceeded : std::runtime_error {
    BudgetExceeded() : std::runtime_error("search budget exceeded") {}
};

struct Budget {
    long long limit = -1;  // negative = unlimited
    long long used = 0;

    void charge(long long k = 1) {
        used += k;
        if (limit >= 0 && used > limit) throw BudgetExceeded();
    }
    static Budget unlimited() { return Budget{-1, 0}; }
    static Budget capped(long long n) { return Budget{n, 0}; }
};

/// Default budget for CLI-level operations; override with ALTEMBED_BUDGET.
long long default_budget_limit();

struct RotationSearchOptions {
    int target_faces = 0;      // prune branches that cannot reach this many
    bool exact_faces = false;  // report only leaves with exactly target_faces
    // when both are set, branches that can no longer produce a face visiting
    // alt_x, alt_y, alt_x, alt_y are cut
    int alt_x = -1;
    int alt_y = -1;
    // restricted mode: the first face starts at start_dart and must visit
    // alt_x, alt_y alternately, which turns the face search into
    // candidate-alternating-face enumeration plus completion
    int start_dart = -1;
    bool first_face_must_alternate = false;
};

/// Enumerates all-positive rotation systems of a connected multigraph by
/// building facial walks corner by corner. A branch dies when
/// faces_closed + 1 + floor(remaining_darts / min_face_length), adjusted to
/// the parity of the Euler formula, cannot reach target_faces.
/// The callback receives the rotation and its face count and returns true to
/// keep searching. Returns false if the callback stopped the search.
bool enumerate_rotations(const MultiGraph& g, const RotationSearchOptions& opt, Budget& budget,
                         const std::function<bool(const std::vector<std::vector<int>>&, int)>& cb);

enum class SearchStatus { Decided, Exceeded };

struct GenusResult {
    SearchStatus status = SearchStatus::Decided;
    int genus = -1;
    std::optional<RotationEmbedding> witness;  // embeds the simplified graph
};

/// Exact minimum orientable genus. Works blockwise (genus is additive over
/// blocks) and by iterative deepening on the per-block face target.
GenusResult min_genus(const Graph& g, Budget& budget);
GenusResult min_genus(const MultiGraph& g, Budget& budget);

/// Lower bound from the Euler formula with girth-3 faces, per block.
int genus_lower_bound(const Graph& g);

/// Decide whether genus(g) <= k, with a witness embedding on success.
struct GenusDecision {
    SearchStatus status = SearchStatus::Decided;
    bool embeddable = false;
    std::optional<RotationEmbedding> witness;
};
GenusDecision embeds_in_genus(const Graph& g, int k, Budget& budget);

/// A face of `emb` where x and y appear in the cyclic pattern x,y,x,y.
struct AlternatingWitness {
    RotationEmbedding emb;
    int face_index = -1;
    FaceWalk face;
    int i1 = -1, i2 = -1, i3 = -1, i4 = -1;  // visits of x, y, x, y
    int claimed_genus = -1;
};

struct AlternatingResult {
    SearchStatus status = SearchStatus::Decided;
    std::optional<AlternatingWitness> witness;
};

/// Searches genus-k embeddings of g for one with an xy-alternating face.
/// Exhaustive over rotation systems (with pruning); a Decided result with no
/// witness means no genus-k embedding of g has such a face.
AlternatingResult find_alternating_embedding(const TerminalGraph& g, int k, Budget& budget);

/// Locates an alternating pattern of x and y in a face walk, if present.
std::optional<std::array<int, 4>> alternating_indices(const MultiGraph& host, const FaceWalk& w,
                                                      int x, int y);

/// Verifies an AlternatingWitness by retracing; throws on any mismatch.
void check_alternating_witness(const TerminalGraph& g, const AlternatingWitness& w);

}  // namespace altembed
