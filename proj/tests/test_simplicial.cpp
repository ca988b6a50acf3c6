#include <doctest.h>

#include <set>

#include "zkmorse/generators.hpp"
#include "zkmorse/json_io.hpp"
#include "zkmorse/simplicial_complex.hpp"

using namespace zkmorse;

namespace {

FaceSet fs(std::initializer_list<int> vs) {
    FaceSet f;
    for (int v : vs) f.insert(v);
    return f;
}

SimplicialComplex make(int m, std::initializer_list<std::initializer_list<int>> facets) {
    std::vector<FaceSet> fv;
    for (auto f : facets) fv.push_back(fs(f));
    return SimplicialComplex::from_facets(m, fv);
}

} // namespace

TEST_CASE("FaceSet basics") {
    FaceSet f = fs({1, 3, 4});
    CHECK(f.size() == 3);
    CHECK(f.contains(3));
    CHECK(!f.contains(2));
    CHECK(f.complement(4) == fs({2}));
    CHECK(fs({1, 3}).subset_of(f));
    CHECK(!f.subset_of(fs({1, 3})));
    CHECK(f.intersects(fs({2, 4})));
    CHECK(!f.intersects(fs({2})));

    // deleting vertex 3 renumbers 4 -> 3
    CHECK(f.drop_and_shift(3) == fs({1, 3}));
    CHECK(fs({1, 3}).lift_at(3) == fs({1, 4}));
    CHECK(f.drop_and_shift(2) == fs({1, 2, 3}));
}

TEST_CASE("from_facets keeps only maximal faces") {
    const auto k = SimplicialComplex::from_facets(
        3, {fs({1}), fs({1, 2}), fs({1, 2}), fs({3})});
    REQUIRE(k.facets().size() == 2);
    CHECK(k.contains(fs({1, 2})));
    CHECK(k.contains(fs({3})));
    CHECK(k.contains(fs({})));
    CHECK(!k.contains(fs({1, 3})));
}

TEST_CASE("void vs irrelevant") {
    const auto v = SimplicialComplex::void_complex(2);
    const auto e = SimplicialComplex::irrelevant(2);
    CHECK(v.is_void());
    CHECK(!e.is_void());
    CHECK(!v.contains(fs({})));
    CHECK(e.contains(fs({})));
    CHECK(v.all_faces().empty());
    CHECK(e.all_faces().size() == 1);
    CHECK(!(v == e));
    CHECK(e.is_simplex());
    CHECK(!v.is_simplex());
}

TEST_CASE("all_faces of the 4-gon") {
    const auto k = make(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CHECK(k.all_faces().size() == 1 + 4 + 4);
    CHECK(k.dimension() == 1);
}

TEST_CASE("minimal non-faces of the 4-gon are the diagonals") {
    const auto k = make(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
    const auto nf = minimal_nonfaces(k);
    CHECK(std::set<FaceSet>(nf.begin(), nf.end()) ==
          std::set<FaceSet>{fs({1, 2}), fs({3, 4})});
}

TEST_CASE("Alexander dual golden example") {
    const auto k = make(4, {{1, 3}, {2, 4}});
    const auto d = alexander_dual(k);
    CHECK(std::set<FaceSet>(d.facets().begin(), d.facets().end()) ==
          std::set<FaceSet>{fs({1, 2}), fs({1, 4}), fs({2, 3}), fs({3, 4})});
}

TEST_CASE("Alexander duality is an involution and swaps nonfaces/facets") {
    int checked = 0;
    enumerate_complexes(4, false, [&](const SimplicialComplex& k) {
        const auto d = alexander_dual(k);
        CHECK(alexander_dual(d) == k);
        // complements of minimal non-faces of K are the facets of K°
        std::set<FaceSet> expect;
        for (FaceSet n : minimal_nonfaces(k)) expect.insert(n.complement(4));
        if (d.is_void())
            CHECK(expect.empty());
        else if (!(expect.empty() && d.facets().size() == 1))
            CHECK(std::set<FaceSet>(d.facets().begin(), d.facets().end()) == expect);
        ++checked;
    });
    CHECK(checked > 100);
}

TEST_CASE("link and deletion renumber the ground set") {
    const auto k = make(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
    const auto lk = link(k, 3); // {1},{2} on the renumbered [3]
    CHECK(lk.ground_set_size() == 3);
    CHECK(lk.contains(fs({1})));
    CHECK(lk.contains(fs({2})));
    CHECK(!lk.contains(fs({3}))); // old vertex 4
    CHECK(!lk.contains(fs({1, 2})));

    const auto del = deletion(k, 1); // edges {13},{14},{23},{24} minus vertex 1
    CHECK(del.ground_set_size() == 3);
    CHECK(del.contains(fs({1, 2}))); // old {2,3}
    CHECK(del.contains(fs({1, 3}))); // old {2,4}
    CHECK(!del.contains(fs({2, 3})));

    CHECK(link(k, 3) == link(k, 4));
    CHECK(link(make(2, {{1}}), 2).is_void()); // 2 is not a vertex
}

TEST_CASE("prefix, restriction, star, link_face keep their contracts") {
    const auto k = make(4, {{1, 2, 3}, {3, 4}});
    const auto p = prefix(k, 3);
    CHECK(p.ground_set_size() == 3);
    CHECK(p.contains(fs({1, 2, 3})));
    CHECK(!p.contains(fs({3, 4})));

    const auto r = restriction(k, fs({3, 4}));
    CHECK(r.ground_set_size() == 4);
    CHECK(r.contains(fs({3, 4})));
    CHECK(!r.contains(fs({1})));

    const auto s = star(k, 4);
    CHECK(s.facets() == std::vector<FaceSet>{fs({3, 4})});

    CHECK(link_face(k, fs({1, 2})).contains(fs({3})));
    CHECK(link_face(k, fs({1, 4})).is_void());
}

TEST_CASE("join relabels the second factor") {
    const auto a = make(2, {{1}, {2}});
    const auto b = make(1, {{1}});
    const auto j = join(a, b);
    CHECK(j.ground_set_size() == 3);
    CHECK(j.contains(fs({1, 3})));
    CHECK(j.contains(fs({2, 3})));
    CHECK(!j.contains(fs({1, 2})));
    CHECK(join(SimplicialComplex::void_complex(1), b).is_void());
}

TEST_CASE("flag complexes and chordality") {
    Graph c4(4);
    c4.add_edge(1, 2);
    c4.add_edge(2, 3);
    c4.add_edge(3, 4);
    c4.add_edge(1, 4);
    const auto k = flag_of_graph(c4);
    CHECK(k.facets().size() == 4);
    CHECK(k.dimension() == 1);
    CHECK(is_flag(k));
    CHECK(!is_chordal(c4));

    Graph tri(3);
    tri.add_edge(1, 2);
    tri.add_edge(2, 3);
    tri.add_edge(1, 3);
    CHECK(is_chordal(tri));
    CHECK(flag_of_graph(tri).is_full_simplex());

    // the 4-gon as a complex is flag; adding one diagonal as a nonface-break
    const auto hollow = make(3, {{1, 2}, {2, 3}, {1, 3}});
    CHECK(!is_flag(hollow)); // empty triangle
}

TEST_CASE("shifted complexes") {
    CHECK(is_shifted(make(3, {{1, 2}, {1, 3}, {2}})));
    CHECK(!is_shifted(make(3, {{2, 3}})));
    for (std::uint64_t seed = 0; seed < 20; ++seed)
        CHECK(is_shifted(shifted_random(5, seed)));
}

TEST_CASE("skeleton generator") {
    const auto k = skeleton_complex(5, 2);
    CHECK(k.facets().size() == 10);
    CHECK(k.dimension() == 1);
    CHECK(skeleton_complex(3, 3).is_full_simplex());
}

TEST_CASE("complex enumeration counts") {
    int all = 0, with_singletons = 0;
    enumerate_complexes(3, false, [&](const SimplicialComplex&) { ++all; });
    enumerate_complexes(3, true, [&](const SimplicialComplex&) { ++with_singletons; });
    // downsets of 2^[3] (Dedekind), minus the empty downset handled as void
    CHECK(all == 20);
    CHECK(with_singletons == 9);
}

TEST_CASE("json round trip and validation") {
    const auto k = make(4, {{1, 3}, {2, 4}});
    CHECK(complex_from_json(complex_to_json(k)) == k);
    CHECK(complex_from_json(complex_to_json(SimplicialComplex::void_complex(3))) ==
          SimplicialComplex::void_complex(3));
    CHECK(complex_from_json(complex_to_json(SimplicialComplex::irrelevant(3))) ==
          SimplicialComplex::irrelevant(3));

    CHECK_THROWS_AS(complex_from_json(nlohmann::json::parse(R"({"facets":[]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        complex_from_json(nlohmann::json::parse(R"({"m":2,"facets":[[3]]})")),
        std::invalid_argument);
    CHECK_THROWS_AS(
        complex_from_json(nlohmann::json::parse(R"({"m":0,"facets":[]})")),
        std::invalid_argument);
}
