#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "zkmorse/face_set.hpp"

namespace zkmorse {

/// Undirected simple graph on vertex set [m]; adjacency stored as bitmasks.
struct Graph {
    int m = 0;
    std::vector<FaceSet> adj; // adj[v-1] = neighbours of v

    explicit Graph(int m_) : m(m_), adj(static_cast<std::size_t>(m_)) {}

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("Graph: loops not allowed");
        if (u < 1 || u > m || v < 1 || v > m)
            throw std::invalid_argument("Graph: vertex out of range");
        adj[u - 1].insert(v);
        adj[v - 1].insert(u);
    }
    bool has_edge(int u, int v) const { return adj[u - 1].contains(v); }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 1; u <= m; ++u)
            for (int v : adj[u - 1].vertices())
                if (u < v) out.emplace_back(u, v);
        return out;
    }
};

/// A finite simplicial complex on ground set [m], stored as its facet
/// antichain. The void complex (no faces at all) and the irrelevant
/// complex {∅} are distinct values.
class SimplicialComplex {
public:
    /// Facets become the inclusion-maximal elements of `faces`; duplicates
    /// are removed. With an empty face list the result is {∅} unless
    /// `make_void` is set.
    static SimplicialComplex from_facets(int m, std::vector<FaceSet> faces,
                                         bool make_void = false);

    static SimplicialComplex void_complex(int m) { return from_facets(m, {}, true); }
    static SimplicialComplex irrelevant(int m) { return from_facets(m, {}); }
    static SimplicialComplex full_simplex(int m) { return from_facets(m, {FaceSet::full(m)}); }

    int ground_set_size() const { return m_; }
    bool is_void() const { return void_; }
    const std::vector<FaceSet>& facets() const { return facets_; }

    bool contains(FaceSet sigma) const;
    bool has_vertex(int v) const { return contains(FaceSet{}.with(v)); }

    /// Downward closure of the facets (cached). Empty for the void complex;
    /// otherwise always includes ∅. Sorted by (size, bits).
    const std::vector<FaceSet>& all_faces() const;

    /// True when the complex equals 2^F for a single face F (the void
    /// complex does not count, {∅} does).
    bool is_simplex() const { return !void_ && facets_.size() == 1; }
    bool is_full_simplex() const {
        return is_simplex() && facets_[0] == FaceSet::full(m_);
    }

    int dimension() const; // -1 for {∅}; throws on void

    bool operator==(const SimplicialComplex& o) const {
        return m_ == o.m_ && void_ == o.void_ && facets_ == o.facets_;
    }

    /// Canonical key for memo tables: (m, void, sorted facet bitmasks).
    std::vector<std::uint32_t> key() const;

private:
    SimplicialComplex(int m, bool make_void, std::vector<FaceSet> facets)
        : m_(m), void_(make_void), facets_(std::move(facets)),
          cache_(std::make_shared<FaceCache>()) {}

    struct FaceCache {
        std::once_flag once;
        std::vector<FaceSet> faces;
    };

    int m_ = 0;
    bool void_ = false;
    std::vector<FaceSet> facets_; // sorted by (size, bits); antichain
    std::shared_ptr<FaceCache> cache_;
};

// Combinatorial operations (all pure; inputs immutable).

SimplicialComplex alexander_dual(const SimplicialComplex& k);
std::vector<FaceSet> minimal_nonfaces(const SimplicialComplex& k);

/// Faces of K contained in M; ambient ground set is kept.
SimplicialComplex restriction(const SimplicialComplex& k, FaceSet m_set);

/// Link/deletion live on ground set [m]\{v}, renumbered to [m-1] preserving
/// order; `drop_vertex_labels` gives the renumbering map (new label ->
/// original vertex).
SimplicialComplex link(const SimplicialComplex& k, int v);
SimplicialComplex deletion(const SimplicialComplex& k, int v);
std::vector<int> drop_vertex_labels(int m, int v);

/// link_K(A) = {σ : σ∩A = ∅, σ∪A ∈ K}; ambient ground set is kept.
SimplicialComplex link_face(const SimplicialComplex& k, FaceSet a);

/// Closed star of v; ambient ground set is kept.
SimplicialComplex star(const SimplicialComplex& k, int v);

/// Join; k2 is relabelled onto {m1+1,...,m1+m2}.
SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2);

/// K|[j] as a complex on ground set [j] (identity relabelling).
SimplicialComplex prefix(const SimplicialComplex& k, int j);

Graph one_skeleton(const SimplicialComplex& k);
bool is_flag(const SimplicialComplex& k);
bool is_chordal(const Graph& g);
bool is_shifted(const SimplicialComplex& k);

} // namespace zkmorse
