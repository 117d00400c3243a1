#pragma once

#include <string>

#include "altembed/alternation.hpp"
#include "altembed/canonical.hpp"

namespace altembed {

enum class ObstructionClass {
    SplitKuratowski,
    KuratowskiPlusIsolated,
    SumOfKuratowskis,
    LabelledType,
    Unclassified,
};

enum class HConnectivity { NotApplicable, Disconnected, One, TwoConnected };

std::string to_string(ObstructionClass c);
std::string to_string(HConnectivity h);

struct MinorTableEntry {
    MinorStep step;          // a representative step producing this class
    TerminalGraph minor;
    bool member = false;
};

struct ObstructionVerdict {
    bool member = false;
    bool is_obstruction = false;
    std::vector<MinorTableEntry> minor_table;  // canonical classes of one-step minors
};

/// Runs the production membership decider on g and on every one-step minor.
ObstructionVerdict verify_obstruction(const TerminalGraph& g);

/// Classification per the structural families; call on verified obstructions.
struct Classification {
    ObstructionClass cls = ObstructionClass::Unclassified;
    HConnectivity h_class = HConnectivity::NotApplicable;
};
Classification classify(const TerminalGraph& g);

enum class ForbType { G, GPlus, GStar };

struct ForbTypeResult {
    SearchStatus status = SearchStatus::Decided;
    ForbType type = ForbType::G;
    int genus_g = -1, genus_gplus = -1, genus_gstar = -1;
    // whether the named graph was confirmed as a topological obstruction for
    // the torus (not embeddable, deletion-minimal at the genus-2 threshold);
    // degenerate isolated-terminal entries can fail this honestly
    bool forb_membership_verified = false;
};
ForbTypeResult forb_type(const TerminalGraph& g, Budget& budget);

struct CatalogEntry {
    TerminalGraph graph;  // canonically relabelled, terminals 0 and 1
    std::string name;     // tentative names for figure graphs
    ObstructionClass classification = ObstructionClass::Unclassified;
    HConnectivity h_class = HConnectivity::NotApplicable;
};

struct Catalog {
    std::vector<CatalogEntry> entries;
    bool complete = true;  // false when a search ran out of budget
};

struct SearchConstraints {
    int max_n = 8;
    bool require_xy_edge = false;
    int min_nonterminal_degree = 3;
    std::optional<HConnectivity> h_class_filter;
};

/// Exhaustive generation of terminal graphs within the constraints followed
/// by full minimal-obstruction verification. Deterministic output order:
/// (n, edge count, canonical form).
Catalog search_obstructions(const SearchConstraints& c, Budget& budget);

/// The built-in catalog: splits/cuts of Kuratowski graphs that verify,
/// Kuratowski graphs with isolated terminals, the six two-sums, plus the
/// labelled-type entries pinned from the search (currently up to 8 vertices).
Catalog builtin_catalog();

/// Pinned labelled-type records (graph6, terminals, name); see io.hpp for
/// the record format.
const std::vector<std::string>& labelled_catalog_records();

/// A verified genus-1 embedding for a catalog entry; type (iii) entries go
/// through the 3-alternating handle construction, the rest through search.
struct TorusWitnessResult {
    SearchStatus status = SearchStatus::Decided;
    std::optional<RotationEmbedding> emb;
    bool via_alternating_construction = false;
};
TorusWitnessResult torus_witness(const CatalogEntry& e, Budget& budget);

/// Checks the genus-jump hypothesis on an input: an obstruction not
/// embeddable in the torus would have to avoid the xy edge, be alternating
/// one surface up, and be a torus obstruction outright.
struct AltJumpReport {
    bool hypothesis_applies = false;  // g in F1 with genus > 1
    bool is_obstruction = false;
    int genus = -1;
    bool xy_edge_absent = false;
    bool alternating_on_s2 = false;
    bool torus_obstruction = false;
    SearchStatus status = SearchStatus::Decided;
};
AltJumpReport alt_jump_check(const TerminalGraph& g, Budget& budget);

/// Catalog-wide form: returns true ("vacuous") when no entry has genus > 1.
bool alt_jump_vacuous(const Catalog& catalog, Budget& budget);

}  // namespace altembed
