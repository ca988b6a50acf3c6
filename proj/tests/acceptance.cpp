// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <set>
#include <vector>

#include "zkmorse/chain_complex.hpp"
#include "zkmorse/generators.hpp"
#include "zkmorse/morse.hpp"
#include "zkmorse/parallel.hpp"
#include "zkmorse/vertex_decomp.hpp"

using namespace zkmorse;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(const char* name, bool ok, double secs, const char* detail = "") {
    std::printf("%-4s %s (%.2f s)%s%s\n", name, ok ? "PASS" : "FAIL", secs,
                *detail ? " " : "", detail);
    if (!ok) ++failures;
}

SimplicialComplex make(int m, std::initializer_list<std::initializer_list<int>> facets) {
    std::vector<FaceSet> fv;
    for (auto f : facets) fv.push_back(FaceSet::from_vertices(std::vector<int>(f)));
    return SimplicialComplex::from_facets(m, fv);
}

SimplicialComplex boundary_simplex(int m) {
    std::vector<FaceSet> facets;
    for (int v = 1; v <= m; ++v) facets.push_back(FaceSet::full(m).without(v));
    return SimplicialComplex::from_facets(m, facets);
}

std::set<SignVector> parse_all(std::initializer_list<const char*> strs) {
    std::set<SignVector> out;
    for (const char* s : strs) out.insert(SignVector::parse(s));
    return out;
}

const SimplicialComplex fourgon = make(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
const SimplicialComplex moebius =
    make(5, {{1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}});

std::map<int, long> wedge_corrected(const SimplicialComplex& k, int n, int p) {
    std::map<int, long> w = wedge_formula(k, n, p);
    w[0] += 1;
    return w;
}

// ---- criterion 1: golden examples ------------------------------------

void criterion_1a() {
    const auto t0 = Clock::now();
    bool ok = true;

    const auto fig1 = make(4, {{1, 3}, {2, 4}});
    const auto dual = alexander_dual(fig1);
    const std::set<FaceSet> expect{FaceSet{1, 2}, FaceSet{1, 4}, FaceSet{2, 3},
                                   FaceSet{3, 4}};
    ok &= std::set<FaceSet>(dual.facets().begin(), dual.facets().end()) == expect;
    ok &= verify_shedding_sequence(dual, {1, 2, 3, 4});
    ok &= !verify_shedding_sequence(dual, {1, 3, 2, 4});

    const double secs = seconds_since(t0);
    report("1a", ok && secs < 1.0, secs, "duality and shedding sequences");
}

void criterion_1b() {
    const auto t0 = Clock::now();
    bool ok = true;

    const auto expect = parse_all({"----", "--+*", "+*--", "+*+*"});
    ok &= critical_recursive(fourgon) == expect;
    const auto direct = critical_direct(fourgon, 2);
    ok &= std::set<SignVector>(direct.begin(), direct.end()) == expect;
    ok &= betti_moment_angle(fourgon, 2, 2).ranks ==
          std::map<int, long>{{0, 1}, {3, 2}, {6, 1}};

    const double secs = seconds_since(t0);
    report("1b", ok && secs < 5.0, secs, "4-gon critical cells and S^3 x S^3 homology");
}

void criterion_1c() {
    const auto t0 = Clock::now();
    bool ok = true;

    const auto expect =
        parse_all({"-----", "+**--", "+**+-", "+*-*-", "+**-+", "+**++", "+*-*+",
                   "+-*-*", "+-*+*", "-++**", "--+**", "-+-**"});
    const auto crit = critical_recursive(moebius);
    ok &= crit == expect;

    const auto dual = alexander_dual(moebius);
    const std::set<FaceSet> pentagon{FaceSet{1, 2}, FaceSet{1, 3}, FaceSet{2, 4},
                                     FaceSet{3, 5}, FaceSet{4, 5}};
    ok &= std::set<FaceSet>(dual.facets().begin(), dual.facets().end()) == pentagon;
    ok &= is_vertex_decomposable(dual);
    ok &= is_ordered_decomposable(dual);

    for (const SignVector& c : crit) {
        if (c.count(Sign::Bullet) == 0) continue;
        const auto cert = nonface_certificate(moebius, c);
        ok &= cert.hypothesis_met && cert.is_minimal_nonface;
    }

    const double secs = seconds_since(t0);
    report("1c", ok && secs < 10.0, secs,
           "link complex: 12 critical cells, 5-gon dual, nonface certificates");
}

// ---- corpus ------------------------------------------------------------

// Duals that are decomposable with the top label shedding at every stage.
// Plain vertex decomposability of the dual is not enough for the perfect-
// matching statement: the matching consumes coordinates in label order, so
// e.g. the 4-path {1,4},{3,4},{2,3} has a vertex-decomposable dual but one
// extra pair of critical cells.
std::vector<SimplicialComplex> build_vd_corpus() {
    std::vector<SimplicialComplex> corpus;
    for (int m = 1; m <= 5; ++m)
        enumerate_complexes(m, true, [&](const SimplicialComplex& k) {
            if (is_ordered_decomposable(alexander_dual(k))) corpus.push_back(k);
        });
    return corpus;
}

void criterion_2(const std::vector<SimplicialComplex>& corpus) {
    const auto t0 = Clock::now();
    std::atomic<long> bad{0};
    parallel_for(corpus.size(), [&](std::size_t i) {
        const SimplicialComplex& k = corpus[i];
        const auto crit = critical_recursive(k);
        for (int n = 1; n <= 3; ++n) {
            std::map<int, long> morse;
            for (const SignVector& c : crit) ++morse[c.dim(n)];
            for (int p : {2, 3}) {
                if (betti_moment_angle(k, n, p).ranks != morse) ++bad;
                if (wedge_corrected(k, n, p) != morse) ++bad;
            }
        }
    });
    const double secs = seconds_since(t0);
    char detail[128];
    std::snprintf(detail, sizeof detail,
                  "triangle equality on %zu ordered-decomposable-dual complexes",
                  corpus.size());
    report("2", bad == 0 && secs < 600.0, secs, detail);
}

std::vector<SimplicialComplex> build_random_corpus() {
    std::vector<SimplicialComplex> corpus;
    std::uint64_t seed = 0;
    for (int m = 3; m <= 6; ++m)
        for (int i = 0; i < 125; ++i) corpus.push_back(random_complex(m, seed++));
    return corpus;
}

void criterion_3(const std::vector<SimplicialComplex>& corpus) {
    const auto t0 = Clock::now();
    std::atomic<long> bad{0};
    parallel_for(corpus.size(), [&](std::size_t i) {
        const SimplicialComplex& k = corpus[i];
        for (int n = 1; n <= 2; ++n) {
            const auto model = enumerate_cells(k, n);
            const auto mat = build_matching(model);
            if (!verify_acyclic(model, mat)) ++bad;
            if (!verify_l_monotonicity(model, mat)) ++bad;
            std::map<int, long> morse;
            for (std::size_t c : critical_cell_indices(model, mat))
                ++morse[model.cells[c].dim(n)];
            for (int p : {2, 3})
                for (const auto& [d, r] : cw_chain_complex(model, p).betti().ranks)
                    if (morse[d] < r) ++bad;
        }
    });
    const double secs = seconds_since(t0);
    char detail[128];
    std::snprintf(detail, sizeof detail,
                  "acyclicity, l-monotonicity, Morse inequalities on %zu random complexes",
                  corpus.size());
    report("3", bad == 0, secs, detail);
}

void criterion_4(const std::vector<SimplicialComplex>& corpus) {
    const auto t0 = Clock::now();
    std::atomic<long> bad{0};
    parallel_for(corpus.size(), [&](std::size_t i) {
        const SimplicialComplex& k = corpus[i];
        const auto rec = critical_recursive(k);
        for (int n = 1; n <= 2; ++n) {
            const auto direct = critical_direct(k, n);
            if (std::set<SignVector>(direct.begin(), direct.end()) != rec) ++bad;
        }
    });
    report("4", bad == 0, seconds_since(t0), "direct and recursive critical cells agree");
}

void criterion_5() {
    const auto t0 = Clock::now();
    bool ok = true;
    for (int m = 2; m <= 5; ++m)
        for (int n = 1; n <= 3; ++n)
            ok &= betti_moment_angle(boundary_simplex(m), n, 2).ranks ==
                  std::map<int, long>{{0, 1}, {n * m - 1, 1}};
    report("5", ok, seconds_since(t0), "boundary-of-simplex models are spheres");
}

long binom(int a, int b) {
    if (b < 0 || b > a) return 0;
    long r = 1;
    for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
}

void criterion_6() {
    const auto t0 = Clock::now();
    bool ok = true;
    for (int m = 2; m <= 5; ++m) {
        for (int k = 1; k < m; ++k) {
            const auto skel = skeleton_complex(m, k);
            const auto crit = critical_recursive(skel);
            for (int n = 1; n <= 2; ++n) {
                std::map<int, long> morse;
                for (const SignVector& c : crit) ++morse[c.dim(n)];
                ok &= morse == betti_moment_angle(skel, n, 2).ranks;
                ok &= morse == wedge_corrected(skel, n, 2);
                // closed form: C(m, k+j) * C(k+j-1, k) spheres in
                // dimension nk + j(n-1), for j = 1..m-k, plus the point
                std::map<int, long> formula{{0, 1}};
                for (int j = 1; j <= m - k; ++j)
                    formula[n * k + j * (n - 1)] += binom(m, k + j) * binom(k + j - 1, k);
                ok &= morse == formula;
            }
        }
    }
    report("6", ok, seconds_since(t0), "skeleton family multiplicities C(m,k+j)C(k+j-1,k)");
}

void criterion_7(const std::vector<SimplicialComplex>& corpus) {
    const auto t0 = Clock::now();
    std::atomic<long> bad{0};
    parallel_for(corpus.size(), [&](std::size_t i) {
        const SimplicialComplex& k = corpus[i];
        const int m = k.ground_set_size();
        const auto crit = critical_recursive(k);

        for (const SignVector& c : crit) {
            const auto plus = sgn_min(c, Sign::Plus);
            const auto bullet = sgn_min(c, Sign::Bullet);
            if (bullet && (!plus || *plus > *bullet)) ++bad;
            if (!plus && c.count(Sign::Minus) != m) ++bad;
            const FaceSet supp = c.supp();
            // supp ∪ {J(c)} is a non-face (for other plus positions v,
            // supp ∪ {v} can be a face: K = {1, 23} with c = (+,*,+))
            if (plus && k.contains(supp.with(*j_index(c)))) ++bad;
            for (int v = 1; v <= m; ++v) {
                if (c.signs[v - 1] == Sign::Bullet) {
                    bool witness = false;
                    for (int j = 1; j < v && !witness; ++j)
                        witness = c.signs[j - 1] == Sign::Plus &&
                                  !k.contains(supp.with(j)) &&
                                  k.contains(supp.without(v).with(j));
                    if (!witness) ++bad;
                }
            }
            if (!crit.count(tilde(c))) ++bad; // tilde closure
        }

        // simplex-boundary biconditional over every single-plus vector
        for (int plus = 1; plus <= m; ++plus) {
            for (std::uint32_t rest = 0; rest < (1u << (m - 1)); ++rest) {
                SignVector c;
                std::uint32_t bits = rest;
                for (int v = 1; v <= m; ++v) {
                    if (v == plus) {
                        c.signs.push_back(Sign::Plus);
                    } else {
                        c.signs.push_back((bits & 1) ? Sign::Bullet : Sign::Minus);
                        bits >>= 1;
                    }
                }
                if (!simplex_boundary_test(k, c).agree()) ++bad;
            }
        }

        if (m >= 2) {
            const auto split = shedding_split(k);
            if (split.hypothesis_met) {
                if (!split.equals_critical) ++bad;
                // the literal Y closure is only contractible for n = 1; at
                // n >= 2 assert the homology-level triviality of the
                // Z_link inclusion instead
                const auto y1 = contractible_y_check(k, 1);
                if (!y1.subcomplex || y1.critical_cells != 1 || !y1.contractible ||
                    !y1.inclusion_trivial)
                    ++bad;
                const auto y2 = contractible_y_check(k, 2);
                if (!y2.subcomplex || !y2.inclusion_trivial) ++bad;
            }
        }
    });
    report("7", bad == 0, seconds_since(t0),
           "structure theory: critical-cell form, tilde, splits, contractible Y");
}

void criterion_8(const std::vector<SimplicialComplex>& corpus) {
    const auto t0 = Clock::now();
    std::atomic<long> bad{0};
    parallel_for(corpus.size(), [&](std::size_t i) {
        const SimplicialComplex& k = corpus[i];
        if (!betti_moment_angle(k, 2, 2).same_ranks(betti_moment_angle(k, 2, 3))) ++bad;
        const std::uint32_t limit = FaceSet::full(k.ground_set_size()).bits();
        for (std::uint32_t bits = 0; bits <= limit; ++bits)
            if (!simplicial_betti(k, FaceSet(bits), 2)
                     .same_ranks(simplicial_betti(k, FaceSet(bits), 3)))
                ++bad;
    });
    report("8", bad == 0, seconds_since(t0), "GF(2) vs GF(3) on models and restrictions");
}

} // namespace

int main() {
    criterion_1a();
    criterion_1b();
    criterion_1c();

    const auto vd_corpus = build_vd_corpus();
    const auto random_corpus = build_random_corpus();

    criterion_2(vd_corpus);
    criterion_3(random_corpus);
    criterion_4(random_corpus);
    criterion_5();
    criterion_6();
    criterion_7(vd_corpus);
    criterion_8(vd_corpus);

    if (failures != 0) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
