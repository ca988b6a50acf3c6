#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "zkmorse/simplicial_complex.hpp"

namespace zkmorse {

struct budget_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Full recursive witness for vertex decomposability. A null node stands
/// for the base case (simplex, {∅} or void); vertices are labels of the
/// complex the node was computed for.
struct ShedNode {
    int vertex = 0;
    std::shared_ptr<const ShedNode> del;  // witness for K \ v
    std::shared_ptr<const ShedNode> link; // witness for link_K(v)
};

struct SheddingCertificate {
    /// Shedding sequence (v_1,...,v_l) in original labels: v_k is a
    /// shedding vertex of K\v_l\...\v_{k+1} and the final deletion is a
    /// simplex. Taken from the deletion spine of the tree.
    std::vector<int> order;
    std::shared_ptr<const ShedNode> tree;
};

struct VdOptions {
    /// Abort after this many evaluated (non-memoized) recursion nodes;
    /// 0 picks the default of 4^m.
    std::uint64_t budget_nodes = 0;
};

bool is_shedding_vertex(const SimplicialComplex& k, int v);

bool is_vertex_decomposable(const SimplicialComplex& k, const VdOptions& opt = {});

std::optional<SheddingCertificate> shedding_sequence(const SimplicialComplex& k,
                                                     const VdOptions& opt = {});

/// Replay a certificate with no search.
bool verify_certificate(const SimplicialComplex& k, const SheddingCertificate& cert);

/// Decomposability with the shedding order forced to descend from the top
/// label: unless the complex is already a simplex or void, the largest
/// ground-set element must be a shedding vertex, and both its deletion and
/// its link must again be ordered-decomposable. Strictly stronger than
/// is_vertex_decomposable plus a (m, m-1, ...) deletion chain, because the
/// link branches are constrained too.
bool is_ordered_decomposable(const SimplicialComplex& k);

/// Check the literal shedding-sequence definition. In strict mode (the
/// default) the last vertex v_l must also be a shedding vertex of K itself;
/// lax mode quantifies k = 1,...,l-1 only.
bool verify_shedding_sequence(const SimplicialComplex& k, const std::vector<int>& order,
                              bool strict = true);

} // namespace zkmorse
