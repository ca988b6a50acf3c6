#pragma once

#include <map>

#include "zkmorse/cells.hpp"
#include "zkmorse/gf.hpp"

namespace zkmorse {

/// Graded homology ranks over GF(p); dimensions with rank 0 are omitted.
/// Reduced simplicial homology may carry a rank at dimension -1.
struct BettiTable {
    int p = 2;
    std::map<int, long> ranks;

    long at(int d) const {
        auto it = ranks.find(d);
        return it == ranks.end() ? 0 : it->second;
    }
    bool same_ranks(const BettiTable& o) const { return ranks == o.ranks; }
};

/// Chain complex over GF(p) built from an explicit cell list. Cells are
/// grouped by dimension (starting at `min_dim`); boundaries[d] maps cells
/// of dimension min_dim+d to cells of dimension min_dim+d-1.
struct ChainComplex {
    int p = 2;
    int min_dim = 0;
    std::vector<long> cells_per_dim;
    std::vector<std::vector<SparseColumn>> boundaries;

    BettiTable betti() const;
    long euler() const; // sum of (-1)^d #cells_d
};

/// Chain complex of an arbitrary set of product cells (a subcomplex of the
/// full model); ∂∘∂ = 0 is asserted at construction.
ChainComplex cw_chain_complex(const CellModel& model, int p);

/// Unreduced Betti numbers of Z_K(D^n, S^{n-1}) over GF(p).
BettiTable betti_moment_angle(const SimplicialComplex& k, int n, int p,
                              std::size_t budget = kDefaultCellBudget);

/// Reduced simplicial Betti numbers of the restriction K_M over GF(p);
/// {∅} has rank 1 in dimension -1, the void complex is identically zero.
BettiTable simplicial_betti(const SimplicialComplex& k, FaceSet m_set, int p);

/// Sphere counts of the wedge formula: count(i) = sum over non-faces M of
/// the reduced rank of K_M in dimension i - (n-1)#M - 1.
std::map<int, long> wedge_formula(const SimplicialComplex& k, int n, int p);

/// True when the inclusion of one cell model into a larger one (every cell
/// of `a` must also be a cell of `b`) induces the zero map on GF(p)
/// homology in every positive degree, i.e. each positive-degree cycle of
/// `a` bounds in `b`.
bool inclusion_homology_trivial(const CellModel& a, const CellModel& b, int p);

/// Set identity behind the complement decomposition: for every I ⊆ [m],
/// "I contains the complement of a face of K°" and "I meets the complement
/// of every face of K" are both equivalent to [m]\I ∉ K.
bool support_partition_check(const SimplicialComplex& k);

} // namespace zkmorse
