#include "altembed/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>

namespace altembed {

namespace {

// Canonical labeling by ordered-partition refinement plus backtracking.
// Positions are filled left to right; the encoding minimized is the sequence
// of adjacency rows row_k = bits of adjacency between position k and
// positions 0..k-1. Works for n <= 62.
class CanonSearch {
  public:
    CanonSearch(int n, const std::vector<Edge>& edges, int x, int y) : n_(n), adj_(n, 0) {
        for (const Edge& e : edges) {
            adj_[e.u] |= 1ull << e.v;
            adj_[e.v] |= 1ull << e.u;
        }
        std::vector<std::vector<int>> cells;
        if (x >= 0) {
            cells.push_back({std::min(x, y), std::max(x, y)});
            std::vector<int> others;
            for (int v = 0; v < n; ++v)
                if (v != x && v != y) others.push_back(v);
            if (!others.empty()) cells.push_back(std::move(others));
        } else {
            std::vector<int> all(n);
            for (int v = 0; v < n; ++v) all[v] = v;
            if (n > 0) cells.push_back(std::move(all));
        }
        refine(cells);
        perm_.reserve(n);
        rows_.assign(n, 0);
        search(cells);
    }

    const std::vector<int>& labeling() const { return best_perm_; }  // position -> vertex

  private:
    using Cells = std::vector<std::vector<int>>;

    void refine(Cells& cells) {
        bool changed = true;
        while (changed) {
            changed = false;
            // Signature of v: neighbor count per current cell.
            std::vector<int> cell_of(n_, -1);
            for (size_t c = 0; c < cells.size(); ++c)
                for (int v : cells[c]) cell_of[v] = static_cast<int>(c);
            Cells next;
            for (const auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::map<std::vector<int>, std::vector<int>> groups;
                for (int v : cell) {
                    std::vector<int> sig(cells.size(), 0);
                    uint64_t a = adj_[v];
                    while (a) {
                        int w = std::countr_zero(a);
                        a &= a - 1;
                        ++sig[cell_of[w]];
                    }
                    groups[sig].push_back(v);
                }
                if (groups.size() > 1) changed = true;
                for (auto& [sig, verts] : groups) next.push_back(std::move(verts));
            }
            cells = std::move(next);
        }
    }

    // Returns -1 if the partial encoding is already worse than best,
    // 0 if equal so far, +1 if strictly better.
    int compare_prefix(size_t k) const {
        if (best_perm_.empty()) return 1;
        for (size_t i = 1; i <= k; ++i) {
            if (rows_[i] != best_rows_[i]) return rows_[i] < best_rows_[i] ? 1 : -1;
        }
        return 0;
    }

    void search(const Cells& cells) {
        size_t k = perm_.size();
        if (k == static_cast<size_t>(n_)) {
            int cmp = n_ > 1 ? compare_prefix(n_ - 1) : (best_perm_.empty() ? 1 : 0);
            if (cmp > 0) {
                best_rows_ = rows_;
                best_perm_ = perm_;
            }
            return;
        }
        // First unconsumed cell: cells are kept aligned with perm_, so the
        // cell containing position k is the first one whose front is unplaced.
        size_t ci = 0;
        size_t seen = 0;
        while (seen + cells[ci].size() <= k) {
            seen += cells[ci].size();
            ++ci;
        }
        const std::vector<int>& cell = cells[ci];
        if (cell.size() == 1) {
            place(cell[0], cells, ci);
            return;
        }
        for (int v : cell) {
            // Individualize v: split its cell into {v} + rest, re-refine.
            Cells split;
            split.reserve(cells.size() + 1);
            for (size_t i = 0; i < ci; ++i) split.push_back(cells[i]);
            split.push_back({v});
            std::vector<int> rest;
            for (int w : cell)
                if (w != v) rest.push_back(w);
            split.push_back(std::move(rest));
            for (size_t i = ci + 1; i < cells.size(); ++i) split.push_back(cells[i]);
            refine_suffix(split, ci);
            place(v, split, ci);
        }
    }

    void place(int v, const Cells& cells, size_t /*ci*/) {
        size_t k = perm_.size();
        uint64_t row = 0;
        for (size_t i = 0; i < k; ++i)
            if (adj_[v] >> perm_[i] & 1) row |= 1ull << i;
        perm_.push_back(v);
        rows_[k] = row;
        if (k >= 1 && compare_prefix(k) < 0) {
            perm_.pop_back();
            return;
        }
        search(cells);
        perm_.pop_back();
    }

    // Refinement that leaves the already-placed singleton prefix untouched.
    void refine_suffix(Cells& cells, size_t from) {
        (void)from;
        refine(cells);  // placed vertices are singletons; refine keeps them so
    }

    int n_;
    std::vector<uint64_t> adj_;
    std::vector<int> perm_;
    std::vector<uint64_t> rows_;
    std::vector<int> best_perm_;
    std::vector<uint64_t> best_rows_;
};

std::vector<Edge> relabel_edges(const std::vector<Edge>& edges, const std::vector<int>& pos_of) {
    std::vector<Edge> out;
    out.reserve(edges.size());
    for (const Edge& e : edges) out.emplace_back(pos_of[e.u], pos_of[e.v]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> invert(const std::vector<int>& perm) {
    std::vector<int> inv(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
    return inv;
}

std::string encode_key(int n, const std::vector<Edge>& edges) {
    std::string s;
    s.reserve(2 + edges.size() * 2);
    s.push_back(static_cast<char>('0' + n / 10));
    s.push_back(static_cast<char>('0' + n % 10));
    for (const Edge& e : edges) {
        s.push_back(static_cast<char>('A' + e.u));
        s.push_back(static_cast<char>('A' + e.v));
    }
    return s;
}

}  // namespace

std::string CanonicalForm::key() const { return encode_key(n, edges); }

CanonicalForm canonical_form(const TerminalGraph& g) {
    if (g.n() > 62) throw std::invalid_argument("canonical_form: graph too large");
    CanonSearch cs(g.n(), g.edges(), g.x(), g.y());
    std::vector<int> pos_of = invert(cs.labeling());
    CanonicalForm cf;
    cf.n = g.n();
    cf.edges = relabel_edges(g.edges(), pos_of);
    cf.terminals_swapped = (pos_of[g.y()] == 0);
    return cf;
}

TerminalGraph canonical_relabel(const TerminalGraph& g) {
    CanonicalForm cf = canonical_form(g);
    return TerminalGraph(cf.n, cf.edges, 0, 1);
}

bool is_isomorphic(const TerminalGraph& a, const TerminalGraph& b) {
    if (a.n() != b.n() || a.edges().size() != b.edges().size()) return false;
    CanonicalForm ca = canonical_form(a);
    CanonicalForm cb = canonical_form(b);
    return ca.n == cb.n && ca.edges == cb.edges;
}

std::string plain_canonical_key(const Graph& g) {
    if (g.n > 62) throw std::invalid_argument("plain_canonical_key: graph too large");
    CanonSearch cs(g.n, g.edges, -1, -1);
    std::vector<int> pos_of = invert(cs.labeling());
    return encode_key(g.n, relabel_edges(g.edges, pos_of));
}

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
    return plain_canonical_key(a) == plain_canonical_key(b);
}

std::vector<TerminalGraph> dedup_canonical(std::vector<TerminalGraph> graphs) {
    std::map<std::string, TerminalGraph> by_key;
    for (auto& g : graphs) {
        std::string k = canonical_form(g).key();
        by_key.emplace(std::move(k), std::move(g));
    }
    std::vector<TerminalGraph> out;
    out.reserve(by_key.size());
    for (auto& [k, g] : by_key) out.push_back(std::move(g));
    return out;
}

std::vector<TerminalGraph> one_step_minors(const TerminalGraph& g) {
    std::vector<TerminalGraph> minors;
    for (const MinorStep& step : legal_minor_steps(g)) minors.push_back(apply_minor(g, step));
    return dedup_canonical(std::move(minors));
}

std::vector<TerminalGraph> splits_of(const Graph& g, int v) {
    return dedup_canonical(vertex_splits_raw(g, v, true));
}

std::vector<TerminalGraph> cuts_of(const Graph& g, int v) {
    return dedup_canonical(vertex_splits_raw(g, v, false));
}

}  // namespace altembed
