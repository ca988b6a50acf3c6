#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace zkmorse {

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline int gf_normalize(long long a, int p) {
    long long r = a % p;
    return static_cast<int>(r < 0 ? r + p : r);
}

inline int gf_inverse(int a, int p) {
    a = gf_normalize(a, p);
    for (int x = 1; x < p; ++x)
        if (a * x % p == 1) return x;
    throw std::invalid_argument("gf_inverse: zero has no inverse");
}

/// Sparse column over GF(p): (row, coefficient) pairs, rows ascending,
/// coefficients in (0, p).
using SparseColumn = std::vector<std::pair<int, int>>;

/// dst += scale * src (mod p).
SparseColumn gf_axpy(const SparseColumn& dst, const SparseColumn& src, int scale, int p);

/// Rank of a sparse matrix over GF(p); the columns are consumed.
long gf_rank(std::vector<SparseColumn> cols, int p);

/// Basis of the kernel of a sparse matrix over GF(p), expressed as
/// combinations of the input columns (row index = column position in the
/// input); the columns are consumed.
std::vector<SparseColumn> gf_kernel(std::vector<SparseColumn> cols, int p);

} // namespace zkmorse
