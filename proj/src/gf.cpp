#include "zkmorse/gf.hpp"

#include <unordered_map>

namespace zkmorse {

SparseColumn gf_axpy(const SparseColumn& dst, const SparseColumn& src, int scale, int p) {
    SparseColumn out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
        if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
            out.push_back(dst[i++]);
        } else if (i == dst.size() || src[j].first < dst[i].first) {
            int c = gf_normalize(static_cast<long long>(src[j].second) * scale, p);
            if (c != 0) out.emplace_back(src[j].first, c);
            ++j;
        } else {
            int c = gf_normalize(dst[i].second + static_cast<long long>(src[j].second) * scale, p);
            if (c != 0) out.emplace_back(dst[i].first, c);
            ++i;
            ++j;
        }
    }
    return out;
}

long gf_rank(std::vector<SparseColumn> cols, int p) {
    if (!is_prime(p)) throw std::invalid_argument("gf_rank: p must be prime");
    // Column reduction with pivot = largest row index.
    std::unordered_map<int, std::size_t> pivot_owner;
    long rank = 0;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        SparseColumn& col = cols[c];
        while (!col.empty()) {
            const int pivot = col.back().first;
            auto it = pivot_owner.find(pivot);
            if (it == pivot_owner.end()) break;
            const SparseColumn& owner = cols[it->second];
            const int scale =
                gf_normalize(-static_cast<long long>(col.back().second) *
                                 gf_inverse(owner.back().second, p),
                             p);
            col = gf_axpy(col, owner, scale, p);
        }
        if (!col.empty()) {
            pivot_owner.emplace(col.back().first, c);
            ++rank;
        }
    }
    return rank;
}

std::vector<SparseColumn> gf_kernel(std::vector<SparseColumn> cols, int p) {
    if (!is_prime(p)) throw std::invalid_argument("gf_kernel: p must be prime");
    // Same reduction as gf_rank, but tracking the combination of original
    // columns that produced each reduced column.
    std::unordered_map<int, std::size_t> pivot_owner;
    std::vector<SparseColumn> combos(cols.size());
    std::vector<SparseColumn> kernel;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        SparseColumn& col = cols[c];
        combos[c] = {{static_cast<int>(c), 1}};
        while (!col.empty()) {
            const int pivot = col.back().first;
            auto it = pivot_owner.find(pivot);
            if (it == pivot_owner.end()) break;
            const std::size_t o = it->second;
            const int scale =
                gf_normalize(-static_cast<long long>(col.back().second) *
                                 gf_inverse(cols[o].back().second, p),
                             p);
            col = gf_axpy(col, cols[o], scale, p);
            combos[c] = gf_axpy(combos[c], combos[o], scale, p);
        }
        if (col.empty())
            kernel.push_back(combos[c]);
        else
            pivot_owner.emplace(col.back().first, c);
    }
    return kernel;
}

} // namespace zkmorse
