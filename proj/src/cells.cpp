#include "zkmorse/cells.hpp"

#include <algorithm>
#include <stdexcept>

namespace zkmorse {

std::vector<std::pair<DiskCell, int>> disk_boundary(DiskCell c, int n) {
    const int d = disk_dim(c, n);
    if (d == 0) return {};
    return {{disk_plus(d - 1), 1}, {disk_minus(d - 1), -1}};
}

std::uint64_t cell_count(const SimplicialComplex& k, int n) {
    const int m = k.ground_set_size();
    std::uint64_t total = 0;
    for (FaceSet sigma : k.all_faces()) {
        std::uint64_t term = 1;
        for (int i = 0; i < m - sigma.size(); ++i) term *= static_cast<std::uint64_t>(2 * n);
        total += term;
    }
    return total;
}

CellModel enumerate_cells(const SimplicialComplex& k, int n, std::size_t budget) {
    if (n < 1) throw std::invalid_argument("enumerate_cells: need n >= 1");
    const int m = k.ground_set_size();
    if (m > 12 || 2 * n > 31)
        throw budget_exceeded("enumerate_cells: model too large to index");
    if (static_cast<std::uint64_t>(n) * m > 64)
        throw budget_exceeded("enumerate_cells: dimension bound nm <= 64 violated");
    const std::uint64_t count = cell_count(k, n);
    if (count > budget) throw budget_exceeded("enumerate_cells: cell budget exceeded");

    CellModel model;
    model.m = m;
    model.n = n;
    model.cells.reserve(count);
    const DiskCell sphere_top = static_cast<DiskCell>(2 * n - 1);
    for (FaceSet sigma : k.all_faces()) {
        ProductCell c;
        c.coords.assign(static_cast<std::size_t>(m), 0);
        for (int v : sigma.vertices()) c.coords[v - 1] = disk_bullet(n);
        // odometer over the sphere coordinates
        std::vector<int> free_pos;
        for (int i = 0; i < m; ++i)
            if (!sigma.contains(i + 1)) free_pos.push_back(i);
        while (true) {
            model.cells.push_back(c);
            int j = static_cast<int>(free_pos.size()) - 1;
            while (j >= 0 && c.coords[free_pos[j]] == sphere_top) {
                c.coords[free_pos[j]] = 0;
                --j;
            }
            if (j < 0) break;
            ++c.coords[free_pos[j]];
        }
    }
    std::sort(model.cells.begin(), model.cells.end(),
              [n](const ProductCell& a, const ProductCell& b) {
                  const int da = a.dim(n), db = b.dim(n);
                  if (da != db) return da < db;
                  return a.coords < b.coords;
              });
    model.index.reserve(model.cells.size());
    for (std::size_t i = 0; i < model.cells.size(); ++i)
        model.index.emplace(model.cells[i].key(), i);
    return model;
}

std::vector<std::pair<ProductCell, int>> product_boundary(const ProductCell& c, int n) {
    std::vector<std::pair<ProductCell, int>> out;
    int prefix_dim = 0;
    for (std::size_t i = 0; i < c.coords.size(); ++i) {
        const int sign = (prefix_dim % 2 == 0) ? 1 : -1;
        for (auto [d, coef] : disk_boundary(c.coords[i], n)) {
            ProductCell b = c;
            b.coords[i] = d;
            out.emplace_back(std::move(b), sign * coef);
        }
        prefix_dim += disk_dim(c.coords[i], n);
    }
    return out;
}

std::vector<ProductCell> lower_covers(const ProductCell& c, int n) {
    std::vector<ProductCell> out;
    for (std::size_t i = 0; i < c.coords.size(); ++i) {
        const int d = disk_dim(c.coords[i], n);
        if (d == 0) continue;
        for (DiskCell lower : {disk_minus(d - 1), disk_plus(d - 1)}) {
            ProductCell b = c;
            b.coords[i] = lower;
            out.push_back(std::move(b));
        }
    }
    return out;
}

int l_value(const ProductCell& c, int n) {
    int l = 0;
    for (DiskCell d : c.coords) {
        l += disk_dim(d, n);
        if (is_plus(d, n)) ++l;
    }
    return l;
}

} // namespace zkmorse
