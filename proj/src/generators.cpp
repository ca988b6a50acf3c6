#include "zkmorse/generators.hpp"

#include <random>
#include <set>
#include <stdexcept>

namespace zkmorse {

SimplicialComplex skeleton_complex(int m, int k) {
    if (k < 1 || k > m) throw std::invalid_argument("skeleton_complex: need 1 <= k <= m");
    std::vector<FaceSet> facets;
    const std::uint32_t limit = FaceSet::full(m).bits();
    for (std::uint32_t bits = 0; bits <= limit; ++bits)
        if (std::popcount(bits) == k) facets.push_back(FaceSet(bits));
    return SimplicialComplex::from_facets(m, std::move(facets));
}

SimplicialComplex flag_of_graph(const Graph& g) {
    std::vector<FaceSet> cliques;
    const std::uint32_t limit = FaceSet::full(g.m).bits();
    for (std::uint32_t bits = 0; bits <= limit; ++bits) {
        FaceSet s(bits);
        bool clique = true;
        auto vs = s.vertices();
        for (std::size_t i = 0; i < vs.size() && clique; ++i)
            for (std::size_t j = i + 1; j < vs.size() && clique; ++j)
                if (!g.has_edge(vs[i], vs[j])) clique = false;
        if (clique) cliques.push_back(s);
    }
    return SimplicialComplex::from_facets(g.m, std::move(cliques));
}

SimplicialComplex random_complex(int m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::uint32_t limit = FaceSet::full(m).bits();
    std::uniform_int_distribution<std::uint32_t> mask(0, limit);
    std::uniform_int_distribution<int> count(1, m + 2);
    std::vector<FaceSet> faces;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) faces.push_back(FaceSet(mask(rng)));
    return SimplicialComplex::from_facets(m, std::move(faces));
}

SimplicialComplex shifted_random(int m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::uint32_t limit = FaceSet::full(m).bits();
    std::uniform_int_distribution<std::uint32_t> mask(0, limit);
    std::uniform_int_distribution<int> count(1, m);
    std::set<FaceSet> faces;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) faces.insert(FaceSet(mask(rng)));
    faces.insert(FaceSet{});
    // close under subsets and under replacing a vertex by a smaller one
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<FaceSet> current(faces.begin(), faces.end());
        for (FaceSet f : current) {
            for (int v : f.vertices()) {
                if (faces.insert(f.without(v)).second) changed = true;
                for (int u = 1; u < v; ++u)
                    if (!f.contains(u) && faces.insert(f.without(v).with(u)).second)
                        changed = true;
            }
        }
    }
    return SimplicialComplex::from_facets(m, {faces.begin(), faces.end()});
}

void enumerate_complexes(int m, bool all_singletons,
                         const std::function<void(const SimplicialComplex&)>& visit) {
    if (m > 6) throw std::invalid_argument("enumerate_complexes: m too large");
    const std::uint32_t nsub = 1u << m;
    // Free subsets ordered by size so that every proper subset of a face
    // precedes it; forced subsets are always present.
    std::vector<std::uint32_t> free_subs;
    for (int sz = all_singletons ? 2 : 0; sz <= m; ++sz)
        for (std::uint32_t bits = 0; bits < nsub; ++bits)
            if (std::popcount(bits) == sz) free_subs.push_back(bits);

    std::vector<char> in(nsub, 0);
    if (all_singletons) {
        in[0] = 1;
        for (int v = 0; v < m; ++v) in[1u << v] = 1;
    }

    auto emit = [&] {
        std::vector<FaceSet> faces;
        for (std::uint32_t bits = 0; bits < nsub; ++bits)
            if (in[bits]) faces.push_back(FaceSet(bits));
        if (faces.empty()) {
            if (!all_singletons) visit(SimplicialComplex::void_complex(m));
            return;
        }
        visit(SimplicialComplex::from_facets(m, std::move(faces)));
    };

    // DFS over down-closed families.
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == free_subs.size()) { emit(); return; }
        const std::uint32_t s = free_subs[i];
        rec(i + 1); // exclude s (and implicitly its supersets later)
        bool can_include = true;
        for (std::uint32_t b = s; b != 0 && can_include; b &= b - 1)
            if (!in[s & ~(b & (~b + 1))]) can_include = false;
        if (can_include) {
            in[s] = 1;
            rec(i + 1);
            in[s] = 0;
        }
    };
    rec(0);
}

void enumerate_graphs(int m, const std::function<void(const Graph&)>& visit) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 1; u <= m; ++u)
        for (int v = u + 1; v <= m; ++v) pairs.emplace_back(u, v);
    if (pairs.size() > 20) throw std::invalid_argument("enumerate_graphs: m too large");
    const std::uint32_t total = 1u << pairs.size();
    for (std::uint32_t mask = 0; mask < total; ++mask) {
        Graph g(m);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((mask >> i) & 1u) g.add_edge(pairs[i].first, pairs[i].second);
        visit(g);
    }
}

} // namespace zkmorse
