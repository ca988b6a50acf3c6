#include "zkmorse/morse.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "zkmorse/vertex_decomp.hpp"

namespace zkmorse {

ProductCell SignVector::to_cell(int n) const {
    ProductCell c;
    c.coords.reserve(signs.size());
    for (Sign s : signs) {
        switch (s) {
        case Sign::Minus: c.coords.push_back(disk_minus(0)); break;
        case Sign::Plus: c.coords.push_back(disk_plus(n - 1)); break;
        case Sign::Bullet: c.coords.push_back(disk_bullet(n)); break;
        }
    }
    return c;
}

SignVector SignVector::from_cell(const ProductCell& c, int n) {
    SignVector v;
    v.signs.reserve(c.coords.size());
    for (DiskCell d : c.coords) {
        if (d == disk_minus(0))
            v.signs.push_back(Sign::Minus);
        else if (d == disk_plus(n - 1))
            v.signs.push_back(Sign::Plus);
        else if (d == disk_bullet(n))
            v.signs.push_back(Sign::Bullet);
        else
            throw std::invalid_argument("SignVector: cell coordinate is not a sign cell");
    }
    return v;
}

std::string SignVector::str() const {
    std::string s;
    s.reserve(signs.size());
    for (Sign x : signs)
        s.push_back(x == Sign::Minus ? '-' : x == Sign::Plus ? '+' : '*');
    return s;
}

SignVector SignVector::parse(const std::string& s) {
    SignVector v;
    v.signs.reserve(s.size());
    for (char ch : s) {
        switch (ch) {
        case '-': v.signs.push_back(Sign::Minus); break;
        case '+': v.signs.push_back(Sign::Plus); break;
        case '*': v.signs.push_back(Sign::Bullet); break;
        default: throw std::invalid_argument("SignVector: expected one of '-', '+', '*'");
        }
    }
    return v;
}

Matching build_matching(const CellModel& model) {
    Matching mat;
    mat.partner.assign(model.cells.size(), -1);
    for (int k = 0; k < model.m; ++k) {
        for (std::size_t i = 0; i < model.cells.size(); ++i) {
            if (mat.partner[i] != -1) continue;
            const DiskCell code = model.cells[i].coords[static_cast<std::size_t>(k)];
            // sources of the one-disk matching: e_-^{j} (j >= 1) and e_•^n
            if (code < 2 || (code & 1)) continue;
            ProductCell t = model.cells[i];
            t.coords[static_cast<std::size_t>(k)] = static_cast<DiskCell>(code - 1);
            auto it = model.index.find(t.key());
            if (it == model.index.end()) continue;
            const std::size_t j = it->second;
            if (mat.partner[j] != -1) continue;
            mat.partner[i] = static_cast<std::ptrdiff_t>(j);
            mat.partner[j] = static_cast<std::ptrdiff_t>(i);
            mat.edges.push_back({i, j, k + 1});
        }
    }
    return mat;
}

namespace {

// Out-neighbours in G^M: Hasse down-edges except the matched one, plus the
// reversed edge when the cell is matched upward.
std::vector<std::size_t> morse_out(const CellModel& model, const Matching& mat,
                                   std::size_t i) {
    std::vector<std::size_t> out;
    const ProductCell& c = model.cells[i];
    const int n = model.n;
    const std::ptrdiff_t p = mat.partner[i];
    if (p >= 0 && model.cells[static_cast<std::size_t>(p)].dim(n) == c.dim(n) + 1)
        out.push_back(static_cast<std::size_t>(p));
    for (const ProductCell& v : lower_covers(c, n)) {
        auto it = model.index.find(v.key());
        if (it == model.index.end()) continue;
        if (p >= 0 && it->second == static_cast<std::size_t>(p)) continue;
        out.push_back(it->second);
    }
    return out;
}

} // namespace

bool verify_acyclic(const CellModel& model, const Matching& matching) {
    if (matching.partner.size() != model.cells.size())
        throw std::invalid_argument("verify_acyclic: matching does not fit the cell set");
    enum : std::uint8_t { White, Gray, Black };
    std::vector<std::uint8_t> color(model.cells.size(), White);
    struct Frame {
        std::size_t node;
        std::vector<std::size_t> next;
        std::size_t pos;
    };
    std::vector<Frame> stack;
    for (std::size_t s = 0; s < model.cells.size(); ++s) {
        if (color[s] != White) continue;
        color[s] = Gray;
        stack.push_back({s, morse_out(model, matching, s), 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.pos == f.next.size()) {
                color[f.node] = Black;
                stack.pop_back();
                continue;
            }
            const std::size_t w = f.next[f.pos++];
            if (color[w] == Gray) return false;
            if (color[w] == White) {
                color[w] = Gray;
                stack.push_back({w, morse_out(model, matching, w), 0});
            }
        }
    }
    return true;
}

bool verify_l_monotonicity(const CellModel& model, const Matching& matching) {
    const int n = model.n;
    for (std::size_t i = 0; i < model.cells.size(); ++i) {
        const int li = l_value(model.cells[i], n);
        const int di = model.cells[i].dim(n);
        for (std::size_t j : morse_out(model, matching, i)) {
            const int lj = l_value(model.cells[j], n);
            const int dj = model.cells[j].dim(n);
            if (dj == di + 1) {
                // reversed (matched) edge
                if (lj != li) return false;
            } else {
                // down edge; the drop is 0 only for an unmatched
                // minus -> plus flip, which earlier stages can leave behind
                if (li - lj < 0 || li - lj > 2) return false;
            }
        }
    }
    return true;
}

std::vector<std::size_t> critical_cell_indices(const CellModel& model,
                                               const Matching& matching) {
    (void)model;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < matching.partner.size(); ++i)
        if (matching.partner[i] == -1) out.push_back(i);
    return out;
}

std::vector<SignVector> critical_direct(const SimplicialComplex& k, int n,
                                        std::size_t budget) {
    const CellModel model = enumerate_cells(k, n, budget);
    const Matching mat = build_matching(model);
    std::vector<SignVector> out;
    for (std::size_t i : critical_cell_indices(model, mat))
        out.push_back(SignVector::from_cell(model.cells[i], n));
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

using CritMemo = std::map<std::vector<std::uint32_t>, std::set<SignVector>>;

std::set<SignVector> crit_rec(const SimplicialComplex& k, CritMemo& memo) {
    if (k.is_void()) return {};
    const int m = k.ground_set_size();
    if (m == 1) {
        std::set<SignVector> base;
        base.insert(SignVector{{Sign::Minus}});
        if (!k.has_vertex(1)) base.insert(SignVector{{Sign::Plus}});
        return base;
    }
    const auto key = k.key();
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const std::set<SignVector> del = crit_rec(prefix(k, m - 1), memo);
    const std::set<SignVector> lnk = crit_rec(link(k, m), memo);

    std::set<SignVector> out;
    for (const SignVector& c : del) {
        SignVector e = c;
        e.signs.push_back(Sign::Minus);
        out.insert(std::move(e));
        if (!lnk.count(c)) {
            SignVector f = c;
            f.signs.push_back(Sign::Plus);
            out.insert(std::move(f));
        }
    }
    for (const SignVector& c : lnk) {
        if (del.count(c)) continue;
        SignVector e = c;
        e.signs.push_back(Sign::Bullet);
        out.insert(std::move(e));
    }
    memo.emplace(key, out);
    return out;
}

} // namespace

std::set<SignVector> critical_recursive(const SimplicialComplex& k) {
    CritMemo memo;
    return crit_rec(k, memo);
}

std::optional<int> sgn_min(const SignVector& c, Sign s) {
    for (std::size_t i = 0; i < c.signs.size(); ++i)
        if (c.signs[i] == s) return static_cast<int>(i) + 1;
    return std::nullopt;
}

std::optional<int> j_index(const SignVector& c) {
    const auto plus = sgn_min(c, Sign::Plus);
    if (!plus) return std::nullopt;
    const auto bullet = sgn_min(c, Sign::Bullet);
    const int limit = bullet ? *bullet : static_cast<int>(c.signs.size()) + 1;
    std::optional<int> j;
    for (int i = 1; i < limit; ++i)
        if (c.signs[static_cast<std::size_t>(i - 1)] == Sign::Plus) j = i;
    return j;
}

SignVector tilde(const SignVector& c) {
    const auto j = j_index(c);
    SignVector out = c;
    for (std::size_t i = 0; i < out.signs.size(); ++i)
        if (out.signs[i] == Sign::Plus && (!j || static_cast<int>(i) + 1 != *j))
            out.signs[i] = Sign::Minus;
    return out;
}

namespace {

// Relabel K_I (and a sign vector) onto ground set [#I], order preserving.
SimplicialComplex restrict_relabel(const SimplicialComplex& k, FaceSet i_set) {
    SimplicialComplex r = restriction(k, i_set);
    // drop the vertices outside I, largest first so labels stay valid
    const int m = k.ground_set_size();
    for (int v = m; v >= 1; --v)
        if (!i_set.contains(v)) r = deletion(r, v);
    return r;
}

SignVector restrict_signs(const SignVector& c, FaceSet i_set) {
    SignVector out;
    for (int v : i_set.vertices())
        out.signs.push_back(c.signs[static_cast<std::size_t>(v - 1)]);
    return out;
}

bool is_boundary_of_simplex(const SimplicialComplex& k) {
    const int m = k.ground_set_size();
    if (k.is_void()) return false;
    if (m == 1) return !k.has_vertex(1); // {∅} = ∂(point)
    const std::size_t want = static_cast<std::size_t>(m);
    if (k.facets().size() != want) return false;
    for (FaceSet f : k.facets())
        if (f.size() != m - 1) return false;
    return true;
}

} // namespace

SimplexBoundaryTest simplex_boundary_test(const SimplicialComplex& k, const SignVector& c) {
    if (c.count(Sign::Plus) != 1)
        throw std::invalid_argument("simplex_boundary_test: need exactly one plus");
    const int plus = *sgn_min(c, Sign::Plus);
    const FaceSet i_set = c.supp().with(plus);

    SimplexBoundaryTest result;
    result.is_critical = critical_recursive(k).count(c) != 0;

    const SimplicialComplex ki = restrict_relabel(k, i_set);
    if (is_boundary_of_simplex(ki)) {
        const SignVector ci = restrict_signs(c, i_set);
        result.boundary_form = critical_recursive(ki).count(ci) != 0;
    }
    return result;
}

NonfaceCertificate nonface_certificate(const SimplicialComplex& k, const SignVector& c) {
    NonfaceCertificate cert;
    cert.set = c.supp();
    if (const auto j = j_index(c)) cert.set = cert.set.with(*j);

    cert.hypothesis_met = c.count(Sign::Bullet) > 0 &&
                          critical_recursive(k).count(c) != 0 &&
                          is_ordered_decomposable(alexander_dual(k));

    if (!k.contains(cert.set)) {
        cert.is_minimal_nonface = true;
        for (int v : cert.set.vertices())
            if (!k.contains(cert.set.without(v))) {
                cert.is_minimal_nonface = false;
                break;
            }
    }
    return cert;
}

SheddingSplit shedding_split(const SimplicialComplex& k) {
    const int m = k.ground_set_size();
    SheddingSplit split;
    const SimplicialComplex dual = alexander_dual(k);
    split.hypothesis_met =
        m >= 2 && is_shedding_vertex(dual, m) && is_ordered_decomposable(dual);

    const std::set<SignVector> del = critical_recursive(prefix(k, m - 1));
    const std::set<SignVector> lnk = critical_recursive(link(k, m));
    for (const SignVector& c : del) {
        SignVector a = c, b = c;
        a.signs.push_back(Sign::Minus);
        b.signs.push_back(Sign::Plus);
        split.del_minus.insert(std::move(a));
        split.del_plus.insert(std::move(b));
    }
    for (const SignVector& c : lnk) {
        SignVector a = c;
        a.signs.push_back(Sign::Bullet);
        split.link_bullet.insert(std::move(a));
    }

    std::set<SignVector> predicted;
    predicted.insert(split.del_minus.begin(), split.del_minus.end());
    predicted.insert(split.del_plus.begin(), split.del_plus.end());
    predicted.insert(split.link_bullet.begin(), split.link_bullet.end());
    SignVector all_minus_plus, all_minus_bullet;
    all_minus_plus.signs.assign(static_cast<std::size_t>(m), Sign::Minus);
    all_minus_bullet = all_minus_plus;
    all_minus_plus.signs.back() = Sign::Plus;
    all_minus_bullet.signs.back() = Sign::Bullet;
    predicted.erase(all_minus_plus);
    predicted.erase(all_minus_bullet);

    split.equals_critical = predicted == critical_recursive(k);
    return split;
}

std::map<int, long> morse_betti(const SimplicialComplex& k, int n) {
    std::map<int, long> hist;
    for (const SignVector& c : critical_recursive(k)) ++hist[c.dim(n)];
    return hist;
}

ContractibleYCheck contractible_y_check(const SimplicialComplex& k, int n,
                                        std::size_t budget) {
    const int m = k.ground_set_size();
    if (m < 2) throw std::invalid_argument("contractible_y_check: need m >= 2");
    ContractibleYCheck res;

    const SimplicialComplex dual = alexander_dual(k);
    res.hypothesis_met = is_shedding_vertex(dual, m) && is_ordered_decomposable(dual);

    const SimplicialComplex lnk = link(k, m);
    const SimplicialComplex del = prefix(k, m - 1);
    const CellModel link_model = enumerate_cells(lnk, n, budget);

    std::map<std::uint64_t, ProductCell> y;
    for (const ProductCell& c : link_model.cells) y.emplace(c.key(), c);

    SignVector all_minus;
    all_minus.signs.assign(static_cast<std::size_t>(m - 1), Sign::Minus);
    for (const SignVector& c : critical_recursive(lnk)) {
        if (c == all_minus) continue;
        const auto j = j_index(c);
        if (!j) continue; // cannot happen for critical cells with a plus
        SignVector flipped = c;
        flipped.signs[static_cast<std::size_t>(*j - 1)] = Sign::Bullet;
        const ProductCell cell = flipped.to_cell(n);
        y.emplace(cell.key(), cell);
    }

    // close downwards
    std::deque<ProductCell> queue;
    for (const auto& [key, c] : y) queue.push_back(c);
    const std::size_t literal_size = y.size();
    while (!queue.empty()) {
        const ProductCell c = queue.front();
        queue.pop_front();
        for (const ProductCell& v : lower_covers(c, n)) {
            if (y.size() > budget) throw budget_exceeded("contractible_y_check: budget");
            if (y.emplace(v.key(), v).second) queue.push_back(v);
        }
    }
    res.closure_added = y.size() - literal_size;
    res.literal_closed = res.closure_added == 0;

    res.subcomplex = true;
    for (const auto& [key, c] : y)
        if (!del.contains(c.supp(n))) res.subcomplex = false;
    if (!res.subcomplex) return res;

    const CellModel del_model = enumerate_cells(del, n, budget);
    res.inclusion_trivial = inclusion_homology_trivial(link_model, del_model, 2) &&
                            inclusion_homology_trivial(link_model, del_model, 3);

    CellModel ym;
    ym.m = m - 1;
    ym.n = n;
    for (const auto& [key, c] : y) ym.cells.push_back(c);
    std::sort(ym.cells.begin(), ym.cells.end(),
              [n](const ProductCell& a, const ProductCell& b) {
                  const int da = a.dim(n), db = b.dim(n);
                  if (da != db) return da < db;
                  return a.coords < b.coords;
              });
    for (std::size_t i = 0; i < ym.cells.size(); ++i)
        ym.index.emplace(ym.cells[i].key(), i);

    const Matching mat = build_matching(ym);
    res.critical_cells = static_cast<long>(critical_cell_indices(ym, mat).size());

    const BettiTable bt = cw_chain_complex(ym, 2).betti();
    res.contractible = bt.ranks == std::map<int, long>{{0, 1}};
    return res;
}

} // namespace zkmorse
