#include "zkmorse/chain_complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace zkmorse {

BettiTable ChainComplex::betti() const {
    BettiTable b;
    b.p = p;
    const int top = static_cast<int>(cells_per_dim.size());
    std::vector<long> rank_bd(static_cast<std::size_t>(top) + 1, 0);
    for (int d = 0; d < top; ++d)
        if (d < static_cast<int>(boundaries.size()))
            rank_bd[d] = gf_rank(boundaries[d], p);
    for (int d = 0; d < top; ++d) {
        const long r = cells_per_dim[d] - rank_bd[d] - (d + 1 < top ? rank_bd[d + 1] : 0);
        if (r != 0) b.ranks[min_dim + d] = r;
    }
    return b;
}

long ChainComplex::euler() const {
    long chi = 0;
    for (std::size_t d = 0; d < cells_per_dim.size(); ++d) {
        const int dim = min_dim + static_cast<int>(d);
        chi += (dim % 2 == 0 ? 1 : -1) * cells_per_dim[d];
    }
    return chi;
}

ChainComplex cw_chain_complex(const CellModel& model, int p) {
    if (!is_prime(p)) throw std::invalid_argument("cw_chain_complex: p must be prime");
    ChainComplex cc;
    cc.p = p;
    cc.min_dim = 0;
    if (model.cells.empty()) return cc;

    const int n = model.n;
    const int top = model.cells[0].dim(n) == 0
                        ? model.cells.back().dim(n)
                        : model.cells.back().dim(n); // cells sorted by dim
    cc.cells_per_dim.assign(static_cast<std::size_t>(top) + 1, 0);
    // position of each cell within its dimension group
    std::vector<long> pos(model.cells.size());
    for (std::size_t i = 0; i < model.cells.size(); ++i) {
        const int d = model.cells[i].dim(n);
        pos[i] = cc.cells_per_dim[static_cast<std::size_t>(d)]++;
    }

    cc.boundaries.resize(static_cast<std::size_t>(top) + 1);
    for (int d = 1; d <= top; ++d)
        cc.boundaries[static_cast<std::size_t>(d)].resize(
            static_cast<std::size_t>(cc.cells_per_dim[static_cast<std::size_t>(d)]));

    for (std::size_t i = 0; i < model.cells.size(); ++i) {
        const ProductCell& c = model.cells[i];
        const int d = c.dim(n);
        if (d == 0) continue;
        SparseColumn col;
        for (const auto& [face, coef] : product_boundary(c, n)) {
            auto it = model.index.find(face.key());
            if (it == model.index.end())
                throw std::invalid_argument("cw_chain_complex: cell set is not a subcomplex");
            const int v = gf_normalize(coef, p);
            if (v != 0) col.emplace_back(static_cast<int>(pos[it->second]), v);
        }
        std::sort(col.begin(), col.end());
        cc.boundaries[static_cast<std::size_t>(d)][static_cast<std::size_t>(pos[i])] =
            std::move(col);
    }

    // ∂∘∂ = 0, over the integers (hence over GF(p)).
    for (const ProductCell& c : model.cells) {
        if (c.dim(n) < 2) continue;
        std::unordered_map<std::uint64_t, long> acc;
        for (const auto& [face, coef] : product_boundary(c, n))
            for (const auto& [face2, coef2] : product_boundary(face, n))
                acc[face2.key()] += static_cast<long>(coef) * coef2;
        for (const auto& [key, v] : acc)
            if (v != 0) throw std::logic_error("cw_chain_complex: boundary squared nonzero");
    }
    return cc;
}

BettiTable betti_moment_angle(const SimplicialComplex& k, int n, int p, std::size_t budget) {
    const CellModel model = enumerate_cells(k, n, budget);
    return cw_chain_complex(model, p).betti();
}

BettiTable simplicial_betti(const SimplicialComplex& k, FaceSet m_set, int p) {
    if (!is_prime(p)) throw std::invalid_argument("simplicial_betti: p must be prime");
    BettiTable b;
    b.p = p;
    if (k.is_void()) return b;

    std::vector<FaceSet> faces;
    for (FaceSet f : k.all_faces())
        if (f.subset_of(m_set)) faces.push_back(f);
    // faces are sorted by (size, bits) already
    const int top = faces.back().size() - 1;

    ChainComplex cc;
    cc.p = p;
    cc.min_dim = -1;
    cc.cells_per_dim.assign(static_cast<std::size_t>(top) + 2, 0);
    std::unordered_map<std::uint32_t, long> pos;
    for (FaceSet f : faces)
        pos[f.bits()] = cc.cells_per_dim[static_cast<std::size_t>(f.size())]++;

    cc.boundaries.resize(static_cast<std::size_t>(top) + 2);
    for (int d = 1; d <= top + 1; ++d)
        cc.boundaries[static_cast<std::size_t>(d)].resize(
            static_cast<std::size_t>(cc.cells_per_dim[static_cast<std::size_t>(d)]));
    for (FaceSet f : faces) {
        if (f.empty()) continue;
        SparseColumn col;
        const auto vs = f.vertices();
        for (std::size_t j = 0; j < vs.size(); ++j) {
            const int coef = (j % 2 == 0) ? 1 : p - 1;
            col.emplace_back(static_cast<int>(pos.at(f.without(vs[j]).bits())),
                             gf_normalize(coef, p));
        }
        std::sort(col.begin(), col.end());
        auto& slot = cc.boundaries[static_cast<std::size_t>(f.size())]
                                  [static_cast<std::size_t>(pos.at(f.bits()))];
        slot.clear();
        for (auto [r, v] : col)
            if (v != 0) slot.emplace_back(r, v);
    }
    return cc.betti();
}

std::map<int, long> wedge_formula(const SimplicialComplex& k, int n, int p) {
    if (n < 1) throw std::invalid_argument("wedge_formula: need n >= 1");
    const int m = k.ground_set_size();
    std::map<int, long> counts;
    const std::uint32_t limit = FaceSet::full(m).bits();
    for (std::uint32_t bits = 0; bits <= limit; ++bits) {
        FaceSet m_set(bits);
        if (k.contains(m_set)) continue;
        const BettiTable bt = simplicial_betti(k, m_set, p);
        for (const auto& [j, r] : bt.ranks) {
            const int i = j + (n - 1) * m_set.size() + 1;
            counts[i] += r;
        }
    }
    std::erase_if(counts, [](const auto& kv) { return kv.second == 0; });
    return counts;
}

bool inclusion_homology_trivial(const CellModel& a, const CellModel& b, int p) {
    const ChainComplex ca = cw_chain_complex(a, p);
    const ChainComplex cb = cw_chain_complex(b, p);
    if (a.n != b.n) throw std::invalid_argument("inclusion_homology_trivial: n mismatch");
    const int n = a.n;

    // position of each cell within its dimension group, as cw_chain_complex
    // assigns them
    auto positions = [n](const CellModel& model) {
        std::vector<long> pos(model.cells.size());
        std::vector<long> count;
        for (std::size_t i = 0; i < model.cells.size(); ++i) {
            const std::size_t d = static_cast<std::size_t>(model.cells[i].dim(n));
            if (count.size() <= d) count.resize(d + 1, 0);
            pos[i] = count[d]++;
        }
        return pos;
    };
    const std::vector<long> pos_a = positions(a);
    const std::vector<long> pos_b = positions(b);

    // a2b[d][j] = row index in b of the j-th d-cell of a
    std::vector<std::vector<long>> a2b(ca.cells_per_dim.size());
    for (std::size_t d = 0; d < a2b.size(); ++d)
        a2b[d].resize(static_cast<std::size_t>(ca.cells_per_dim[d]));
    for (std::size_t i = 0; i < a.cells.size(); ++i) {
        auto it = b.index.find(a.cells[i].key());
        if (it == b.index.end())
            throw std::invalid_argument("inclusion_homology_trivial: a is not inside b");
        a2b[static_cast<std::size_t>(a.cells[i].dim(n))][static_cast<std::size_t>(pos_a[i])] =
            pos_b[it->second];
    }

    for (std::size_t d = 1; d < ca.cells_per_dim.size(); ++d) {
        std::vector<SparseColumn> cycles =
            d < ca.boundaries.size() && !ca.boundaries[d].empty()
                ? gf_kernel(ca.boundaries[d], p)
                : [&] {
                      // no boundary matrix recorded: every d-cell is a cycle
                      std::vector<SparseColumn> all;
                      for (long j = 0; j < ca.cells_per_dim[d]; ++j)
                          all.push_back({{static_cast<int>(j), 1}});
                      return all;
                  }();
        if (cycles.empty()) continue;

        std::vector<SparseColumn> cols =
            d + 1 < cb.boundaries.size() ? cb.boundaries[d + 1] : std::vector<SparseColumn>{};
        const long boundary_rank = gf_rank(cols, p);
        for (const SparseColumn& z : cycles) {
            SparseColumn mapped;
            for (const auto& [row, v] : z)
                mapped.emplace_back(static_cast<int>(a2b[d][static_cast<std::size_t>(row)]), v);
            std::sort(mapped.begin(), mapped.end());
            cols.push_back(std::move(mapped));
        }
        if (gf_rank(cols, p) != boundary_rank) return false;
    }
    return true;
}

bool support_partition_check(const SimplicialComplex& k) {
    const int m = k.ground_set_size();
    const SimplicialComplex dual = alexander_dual(k);
    const std::uint32_t limit = FaceSet::full(m).bits();
    for (std::uint32_t bits = 0; bits <= limit; ++bits) {
        const FaceSet i_set(bits);
        const bool lhs = dual.contains(i_set.complement(m));
        bool rhs = true; // I meets the complement of every face of K
        if (!k.is_void())
            for (FaceSet f : k.facets())
                if (!i_set.intersects(f.complement(m)) ) { rhs = false; break; }
        const bool ref = !k.contains(i_set);
        if (lhs != ref || rhs != ref) return false;
    }
    return true;
}

} // namespace zkmorse
