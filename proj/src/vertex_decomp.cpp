#include "zkmorse/vertex_decomp.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace zkmorse {

namespace {

bool terminal(const SimplicialComplex& k) {
    // Base cases of the recursion: a simplex (2^F for one face, which
    // covers {∅}) or the void complex. Void counts as decomposable so
    // that duals of full simplices do not poison recursions.
    return k.is_void() || k.is_simplex();
}

struct Search {
    using Memo = std::map<std::vector<std::uint32_t>, std::optional<std::shared_ptr<const ShedNode>>>;
    Memo memo;
    std::uint64_t nodes = 0;
    std::uint64_t budget = 0;

    std::optional<std::shared_ptr<const ShedNode>> solve(const SimplicialComplex& k) {
        if (terminal(k)) return std::shared_ptr<const ShedNode>{};
        auto key = k.key();
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        if (++nodes > budget)
            throw budget_exceeded("vertex-decomposability search budget exceeded");
        std::optional<std::shared_ptr<const ShedNode>> result;
        for (int v = 1; v <= k.ground_set_size() && !result; ++v) {
            if (!k.has_vertex(v)) continue;
            if (!is_shedding_vertex(k, v)) continue;
            auto del = solve(deletion(k, v));
            if (!del) continue;
            auto lnk = solve(link(k, v));
            if (!lnk) continue;
            auto node = std::make_shared<ShedNode>();
            node->vertex = v;
            node->del = *del;
            node->link = *lnk;
            result = std::shared_ptr<const ShedNode>(std::move(node));
        }
        memo.emplace(std::move(key), result);
        return result;
    }
};

std::uint64_t effective_budget(const SimplicialComplex& k, const VdOptions& opt) {
    if (opt.budget_nodes != 0) return opt.budget_nodes;
    return std::uint64_t{1} << std::min(2 * k.ground_set_size(), 48);
}

} // namespace

bool is_shedding_vertex(const SimplicialComplex& k, int v) {
    if (v < 1 || v > k.ground_set_size()) return false;
    if (!k.has_vertex(v)) return false;
    if (k.ground_set_size() == 1) return false; // link and deletion coincide ({∅})
    const auto lf = link(k, v).facets();
    const auto df = deletion(k, v).facets();
    // both live on [m-1] with the same relabelling
    for (FaceSet f : lf)
        if (std::find(df.begin(), df.end(), f) != df.end()) return false;
    return true;
}

bool is_vertex_decomposable(const SimplicialComplex& k, const VdOptions& opt) {
    Search s;
    s.budget = effective_budget(k, opt);
    return s.solve(k).has_value();
}

std::optional<SheddingCertificate> shedding_sequence(const SimplicialComplex& k,
                                                     const VdOptions& opt) {
    Search s;
    s.budget = effective_budget(k, opt);
    auto tree = s.solve(k);
    if (!tree) return std::nullopt;
    SheddingCertificate cert;
    cert.tree = *tree;
    // Deletion spine in original labels, innermost vertex first.
    std::vector<int> labels(static_cast<std::size_t>(k.ground_set_size()));
    for (int v = 1; v <= k.ground_set_size(); ++v) labels[v - 1] = v;
    std::vector<int> spine;
    for (auto node = *tree; node; node = node->del) {
        spine.push_back(labels[node->vertex - 1]);
        labels.erase(labels.begin() + (node->vertex - 1));
    }
    cert.order.assign(spine.rbegin(), spine.rend());
    return cert;
}

bool verify_certificate(const SimplicialComplex& k, const SheddingCertificate& cert) {
    std::function<bool(const SimplicialComplex&, const std::shared_ptr<const ShedNode>&)> replay =
        [&](const SimplicialComplex& c, const std::shared_ptr<const ShedNode>& node) -> bool {
        if (!node) return terminal(c);
        if (!is_shedding_vertex(c, node->vertex)) return false;
        return replay(deletion(c, node->vertex), node->del) &&
               replay(link(c, node->vertex), node->link);
    };
    return replay(k, cert.tree);
}

bool is_ordered_decomposable(const SimplicialComplex& k) {
    if (terminal(k)) return true;
    const int m = k.ground_set_size();
    if (!is_shedding_vertex(k, m)) return false;
    return is_ordered_decomposable(deletion(k, m)) && is_ordered_decomposable(link(k, m));
}

bool verify_shedding_sequence(const SimplicialComplex& k, const std::vector<int>& order,
                              bool strict) {
    const int m = k.ground_set_size();
    std::vector<bool> seen(static_cast<std::size_t>(m), false);
    for (int v : order) {
        if (v < 1 || v > m) return false;
        if (seen[v - 1]) return false;
        seen[v - 1] = true;
    }
    SimplicialComplex cur = k;
    std::vector<int> labels(static_cast<std::size_t>(m));
    for (int v = 1; v <= m; ++v) labels[v - 1] = v;
    // v_l is consumed first; checks run on the consecutive deletions. Once
    // the current complex is a simplex the sequence conditions hold (every
    // further deletion of a simplex is a simplex).
    for (std::size_t i = order.size(); i-- > 0;) {
        if (terminal(cur)) return true;
        const int orig = order[i];
        auto it = std::find(labels.begin(), labels.end(), orig);
        if (it == labels.end()) return false;
        const int local = static_cast<int>(it - labels.begin()) + 1;
        const bool check = strict || i + 1 != order.size();
        if (check && !is_shedding_vertex(cur, local)) return false;
        cur = deletion(cur, local);
        labels.erase(it);
    }
    return terminal(cur);
}

} // namespace zkmorse
