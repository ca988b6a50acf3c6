#include "zkmorse/simplicial_complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace zkmorse {

namespace {

bool face_order(FaceSet a, FaceSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
}

std::vector<FaceSet> maximal_elements(std::vector<FaceSet> faces) {
    std::sort(faces.begin(), faces.end(), face_order);
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    std::vector<FaceSet> out;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = i + 1; j < faces.size() && !dominated; ++j)
            if (faces[i].subset_of(faces[j]) && faces[i] != faces[j]) dominated = true;
        if (!dominated) out.push_back(faces[i]);
    }
    return out;
}

} // namespace

SimplicialComplex SimplicialComplex::from_facets(int m, std::vector<FaceSet> faces,
                                                 bool make_void) {
    if (m <= 0 || m > kMaxGroundSet)
        throw std::invalid_argument("SimplicialComplex: ground set size must be in [1,24]");
    FaceSet universe = FaceSet::full(m);
    for (FaceSet f : faces)
        if (!f.subset_of(universe))
            throw std::invalid_argument("SimplicialComplex: vertex out of range");
    if (make_void) {
        if (!faces.empty())
            throw std::invalid_argument("SimplicialComplex: void complex has no faces");
        return SimplicialComplex(m, true, {});
    }
    if (faces.empty()) faces.push_back(FaceSet{}); // the irrelevant complex {∅}
    return SimplicialComplex(m, false, maximal_elements(std::move(faces)));
}

bool SimplicialComplex::contains(FaceSet sigma) const {
    if (void_) return false;
    for (FaceSet f : facets_)
        if (sigma.subset_of(f)) return true;
    return false;
}

const std::vector<FaceSet>& SimplicialComplex::all_faces() const {
    std::call_once(cache_->once, [this] {
        if (void_) return;
        std::set<FaceSet> seen;
        for (FaceSet f : facets_) {
            // enumerate the subsets of each facet
            std::uint32_t fb = f.bits();
            std::uint32_t sub = fb;
            while (true) {
                seen.insert(FaceSet(sub));
                if (sub == 0) break;
                sub = (sub - 1) & fb;
            }
        }
        cache_->faces.assign(seen.begin(), seen.end());
        std::sort(cache_->faces.begin(), cache_->faces.end(), face_order);
    });
    return cache_->faces;
}

int SimplicialComplex::dimension() const {
    if (void_) throw std::logic_error("dimension of the void complex is undefined");
    int d = -1;
    for (FaceSet f : facets_) d = std::max(d, f.size() - 1);
    return d;
}

std::vector<std::uint32_t> SimplicialComplex::key() const {
    std::vector<std::uint32_t> k;
    k.reserve(facets_.size() + 2);
    k.push_back(static_cast<std::uint32_t>(m_));
    k.push_back(void_ ? 1u : 0u);
    for (FaceSet f : facets_) k.push_back(f.bits());
    return k;
}

std::vector<FaceSet> minimal_nonfaces(const SimplicialComplex& k) {
    const int m = k.ground_set_size();
    // N is a minimal non-face iff N ∉ K and N \ {v} ∈ K for every v ∈ N.
    // The void complex has ∅ as its unique minimal non-face.
    if (k.is_void()) return {FaceSet{}};
    std::vector<FaceSet> out;
    const std::uint32_t limit = FaceSet::full(m).bits();
    for (std::uint32_t bits = 0; bits <= limit; ++bits) {
        FaceSet n(bits);
        if (k.contains(n)) continue;
        bool minimal = true;
        for (int v : n.vertices())
            if (!k.contains(n.without(v))) { minimal = false; break; }
        if (minimal) out.push_back(n);
    }
    std::sort(out.begin(), out.end(), face_order);
    return out;
}

SimplicialComplex alexander_dual(const SimplicialComplex& k) {
    const int m = k.ground_set_size();
    std::vector<FaceSet> dual_facets;
    for (FaceSet n : minimal_nonfaces(k)) dual_facets.push_back(n.complement(m));
    if (dual_facets.empty()) return SimplicialComplex::void_complex(m);
    return SimplicialComplex::from_facets(m, std::move(dual_facets));
}

SimplicialComplex restriction(const SimplicialComplex& k, FaceSet m_set) {
    const int m = k.ground_set_size();
    if (k.is_void()) return SimplicialComplex::void_complex(m);
    std::vector<FaceSet> faces;
    for (FaceSet f : k.facets()) faces.push_back(f & m_set);
    return SimplicialComplex::from_facets(m, std::move(faces));
}

std::vector<int> drop_vertex_labels(int m, int v) {
    std::vector<int> labels;
    for (int u = 1; u <= m; ++u)
        if (u != v) labels.push_back(u);
    return labels;
}

SimplicialComplex link(const SimplicialComplex& k, int v) {
    const int m = k.ground_set_size();
    if (v < 1 || v > m) throw std::invalid_argument("link: vertex out of range");
    if (m == 1) throw std::invalid_argument("link: ground set would become empty");
    if (!k.has_vertex(v)) return SimplicialComplex::void_complex(m - 1);
    std::vector<FaceSet> faces;
    for (FaceSet f : k.facets())
        if (f.contains(v)) faces.push_back(f.without(v).drop_and_shift(v));
    return SimplicialComplex::from_facets(m - 1, std::move(faces));
}

SimplicialComplex deletion(const SimplicialComplex& k, int v) {
    const int m = k.ground_set_size();
    if (v < 1 || v > m) throw std::invalid_argument("deletion: vertex out of range");
    if (m == 1) throw std::invalid_argument("deletion: ground set would become empty");
    if (k.is_void()) return SimplicialComplex::void_complex(m - 1);
    std::vector<FaceSet> faces;
    for (FaceSet f : k.facets()) faces.push_back(f.without(v).drop_and_shift(v));
    return SimplicialComplex::from_facets(m - 1, std::move(faces));
}

SimplicialComplex link_face(const SimplicialComplex& k, FaceSet a) {
    const int m = k.ground_set_size();
    if (a.empty()) return k;
    if (!k.contains(a)) return SimplicialComplex::void_complex(m);
    std::vector<FaceSet> faces;
    for (FaceSet f : k.facets())
        if (a.subset_of(f)) faces.push_back(f - a);
    return SimplicialComplex::from_facets(m, std::move(faces));
}

SimplicialComplex star(const SimplicialComplex& k, int v) {
    const int m = k.ground_set_size();
    if (!k.has_vertex(v)) return SimplicialComplex::void_complex(m);
    std::vector<FaceSet> faces;
    for (FaceSet f : k.facets())
        if (f.contains(v)) faces.push_back(f);
    return SimplicialComplex::from_facets(m, std::move(faces));
}

SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2) {
    const int m1 = k1.ground_set_size();
    const int m2 = k2.ground_set_size();
    if (m1 + m2 > kMaxGroundSet)
        throw std::invalid_argument("join: combined ground set exceeds 24");
    if (k1.is_void() || k2.is_void())
        return SimplicialComplex::void_complex(m1 + m2);
    std::vector<FaceSet> faces;
    for (FaceSet f1 : k1.facets())
        for (FaceSet f2 : k2.facets())
            faces.push_back(f1 | FaceSet(f2.bits() << m1));
    return SimplicialComplex::from_facets(m1 + m2, std::move(faces));
}

SimplicialComplex prefix(const SimplicialComplex& k, int j) {
    const int m = k.ground_set_size();
    if (j < 1 || j > m) throw std::invalid_argument("prefix: bad length");
    if (k.is_void()) return SimplicialComplex::void_complex(j);
    FaceSet window = FaceSet::full(j);
    std::vector<FaceSet> faces;
    for (FaceSet f : k.facets()) faces.push_back(f & window);
    return SimplicialComplex::from_facets(j, std::move(faces));
}

Graph one_skeleton(const SimplicialComplex& k) {
    const int m = k.ground_set_size();
    Graph g(m);
    for (int u = 1; u <= m; ++u)
        for (int v = u + 1; v <= m; ++v)
            if (k.contains(FaceSet{u, v})) g.add_edge(u, v);
    return g;
}

bool is_flag(const SimplicialComplex& k) {
    for (FaceSet n : minimal_nonfaces(k))
        if (n.size() != 2) return false;
    return true;
}

bool is_chordal(const Graph& g) {
    // Greedy perfect-elimination-ordering search; ties broken by smallest
    // vertex index. A chordal graph always has a simplicial vertex and
    // stays chordal after removing one.
    std::vector<bool> alive(static_cast<std::size_t>(g.m), true);
    FaceSet alive_mask = FaceSet::full(g.m);
    for (int step = 0; step < g.m; ++step) {
        int pick = -1;
        for (int v = 1; v <= g.m && pick < 0; ++v) {
            if (!alive[v - 1]) continue;
            FaceSet nb = g.adj[v - 1] & alive_mask;
            bool simplicial = true;
            auto nbv = nb.vertices();
            for (std::size_t i = 0; i < nbv.size() && simplicial; ++i)
                for (std::size_t j = i + 1; j < nbv.size() && simplicial; ++j)
                    if (!g.has_edge(nbv[i], nbv[j])) simplicial = false;
            if (simplicial) pick = v;
        }
        if (pick < 0) return false;
        alive[pick - 1] = false;
        alive_mask.erase(pick);
    }
    return true;
}

bool is_shifted(const SimplicialComplex& k) {
    if (k.is_void()) return true;
    for (FaceSet sigma : k.all_faces())
        for (int v : sigma.vertices())
            for (int u = 1; u < v; ++u)
                if (!sigma.contains(u) && !k.contains(sigma.without(v).with(u)))
                    return false;
    return true;
}

} // namespace zkmorse
