#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "zkmorse/simplicial_complex.hpp"
#include "zkmorse/vertex_decomp.hpp" // budget_exceeded

namespace zkmorse {

/// Cells of the minimal regular CW structure on D^n, encoded as small
/// integers: Minus(i) = 2i, Plus(i) = 2i+1 for 0 <= i <= n-1, and the top
/// cell Bullet = 2n.
using DiskCell = std::uint8_t;

inline constexpr DiskCell disk_minus(int i) { return static_cast<DiskCell>(2 * i); }
inline constexpr DiskCell disk_plus(int i) { return static_cast<DiskCell>(2 * i + 1); }
inline constexpr DiskCell disk_bullet(int n) { return static_cast<DiskCell>(2 * n); }

inline constexpr bool is_bullet(DiskCell c, int n) { return c == 2 * n; }
inline constexpr bool is_plus(DiskCell c, int n) { return c != 2 * n && (c & 1); }
inline constexpr bool is_minus(DiskCell c, int n) { return c != 2 * n && !(c & 1); }
inline constexpr int disk_dim(DiskCell c, int n) { return c == 2 * n ? n : c / 2; }

/// ∂Minus(i) = ∂Plus(i) = Plus(i-1) - Minus(i-1) for i >= 1;
/// ∂Bullet = Plus(n-1) - Minus(n-1); dimension-0 cells have no boundary.
std::vector<std::pair<DiskCell, int>> disk_boundary(DiskCell c, int n);

/// A cell of the product (D^n)^m: one disk cell per coordinate.
struct ProductCell {
    std::vector<DiskCell> coords;

    int dim(int n) const {
        int d = 0;
        for (DiskCell c : coords) d += disk_dim(c, n);
        return d;
    }
    FaceSet supp(int n) const {
        FaceSet s;
        for (std::size_t i = 0; i < coords.size(); ++i)
            if (is_bullet(coords[i], n)) s.insert(static_cast<int>(i) + 1);
        return s;
    }
    std::uint64_t key() const {
        std::uint64_t k = 0;
        for (std::size_t i = 0; i < coords.size(); ++i)
            k |= static_cast<std::uint64_t>(coords[i]) << (5 * i);
        return k;
    }
    auto operator<=>(const ProductCell&) const = default;
};

/// The cells of Z_K(D^n, S^{n-1}): all product cells with supp in K,
/// ordered by (dimension, lexicographic coordinate tuple).
struct CellModel {
    int m = 0;
    int n = 0;
    std::vector<ProductCell> cells;                     // sorted
    std::unordered_map<std::uint64_t, std::size_t> index; // cell key -> position

    bool contains(const ProductCell& c) const { return index.count(c.key()) != 0; }
    std::size_t at(const ProductCell& c) const { return index.at(c.key()); }
};

inline constexpr std::size_t kDefaultCellBudget = 5'000'000;

/// Closed-form cell count: sum over faces of (2n)^(m-|σ|).
std::uint64_t cell_count(const SimplicialComplex& k, int n);

CellModel enumerate_cells(const SimplicialComplex& k, int n,
                          std::size_t budget = kDefaultCellBudget);

/// Signed boundary via the Leibniz rule with sign (-1)^(dim of prefix).
std::vector<std::pair<ProductCell, int>> product_boundary(const ProductCell& c, int n);

/// Hasse-diagram lower covers of c within the full product (callers filter
/// by model membership).
std::vector<ProductCell> lower_covers(const ProductCell& c, int n);

/// ℓ(c): total dimension plus the number of plus coordinates.
int l_value(const ProductCell& c, int n);

} // namespace zkmorse
