#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zkmorse/cells.hpp"
#include "zkmorse/chain_complex.hpp"
#include "zkmorse/simplicial_complex.hpp"

namespace zkmorse {

/// Critical cells are products of cells from {e_-^0, e_+^{n-1}, e_•^n};
/// a sign vector records the choice per coordinate.
enum class Sign : std::uint8_t { Minus = 0, Plus = 1, Bullet = 2 };

struct SignVector {
    std::vector<Sign> signs;

    FaceSet supp() const {
        FaceSet s;
        for (std::size_t i = 0; i < signs.size(); ++i)
            if (signs[i] == Sign::Bullet) s.insert(static_cast<int>(i) + 1);
        return s;
    }
    int count(Sign s) const {
        int c = 0;
        for (Sign x : signs)
            if (x == s) ++c;
        return c;
    }
    int dim(int n) const { return (n - 1) * count(Sign::Plus) + n * count(Sign::Bullet); }

    ProductCell to_cell(int n) const;
    static SignVector from_cell(const ProductCell& c, int n); // throws if not a sign cell

    std::string str() const; // '-', '+', '*' with coordinate 1 leftmost
    static SignVector parse(const std::string& s);

    auto operator<=>(const SignVector&) const = default;
};

struct MatchEdge {
    std::size_t source = 0; // index of the higher-dimensional cell
    std::size_t target = 0;
    int coordinate = 0;     // 1-based coordinate where the two cells differ
};

struct Matching {
    std::vector<MatchEdge> edges;
    std::vector<std::ptrdiff_t> partner; // per cell: matched cell index or -1
};

/// The inductive matching M_K, built coordinate by coordinate.
Matching build_matching(const CellModel& model);

/// True iff the Hasse diagram with matched edges reversed is acyclic.
bool verify_acyclic(const CellModel& model, const Matching& matching);

/// ℓ weakly decreases along every edge of the reversed-edge digraph:
/// constant on reversed (matched) edges, dropping by at most 2 otherwise.
/// (A drop of 0 happens on unmatched minus→plus Hasse edges whose canonical
/// pairing was blocked by an earlier stage.)
bool verify_l_monotonicity(const CellModel& model, const Matching& matching);

/// Critical cells straight from the matching.
std::vector<SignVector> critical_direct(const SimplicialComplex& k, int n,
                                        std::size_t budget = kDefaultCellBudget);
std::vector<std::size_t> critical_cell_indices(const CellModel& model,
                                               const Matching& matching);

/// Critical cells by the coordinate recursion on sign vectors (no cell
/// enumeration; the scalable route). The result does not depend on n.
std::set<SignVector> critical_recursive(const SimplicialComplex& k);

std::optional<int> sgn_min(const SignVector& c, Sign s);
std::optional<int> j_index(const SignVector& c);

/// Keep minus/bullet coordinates and the plus at position J(c); all other
/// plus coordinates become minus.
SignVector tilde(const SignVector& c);

struct SimplexBoundaryTest {
    bool is_critical = false;      // c ∈ Crit(K)
    bool boundary_form = false;    // K_I = 2^I \ {I} and c_I ∈ Crit(K_I)
    bool agree() const { return is_critical == boundary_form; }
};
/// c must have exactly one plus coordinate; I = {c(+)} ∪ supp(c).
SimplexBoundaryTest simplex_boundary_test(const SimplicialComplex& k, const SignVector& c);

struct NonfaceCertificate {
    FaceSet set;                // {J(c)} ∪ supp(c)
    bool hypothesis_met = false; // K° ordered-decomposable and c critical
    bool is_minimal_nonface = false;
};
NonfaceCertificate nonface_certificate(const SimplicialComplex& k, const SignVector& c);

struct SheddingSplit {
    bool hypothesis_met = false; // m sheds in K°, K° ordered-decomposable
    std::set<SignVector> del_minus;    // Crit_{m-1}^-
    std::set<SignVector> del_plus;     // Crit_{m-1}^+
    std::set<SignVector> link_bullet;  // Crit_{m-1,•}^•
    bool equals_critical = false; // union minus the two excluded cells == Crit(K)
};
SheddingSplit shedding_split(const SimplicialComplex& k);

/// Histogram of critical-cell dimensions (via the recursion).
std::map<int, long> morse_betti(const SimplicialComplex& k, int n);

struct ContractibleYCheck {
    bool hypothesis_met = false;    // m sheds in K°, K° ordered-decomposable
    bool literal_closed = false;    // the literal cell set is already closed
    std::size_t closure_added = 0;  // extra cells required to close it
    bool subcomplex = false;        // closed set lies inside the K\m model
    bool inclusion_trivial = false; // Z_link -> Z_{K\m} kills GF(2)/GF(3) homology
    long critical_cells = -1;       // critical cells of the induced matching
    bool contractible = false;      // GF(2) Betti numbers of Y are a point
};
/// Candidate contractible subcomplex Y of the K\m model swallowing the
/// Z_{link_K(m)} inclusion: Z_link plus, for each critical c of the link
/// other than (-,...,-), the cell obtained by flipping position J(c) to a
/// bullet; closed downwards. For n = 1 the closure is contractible with a
/// single critical cell; for n >= 2 it need not be (lowering a coordinate
/// other than J(c) leaves the added bullet in place and the closure picks
/// up cells over non-faces of the link), so only the homology-level
/// triviality of the inclusion itself is asserted there.
ContractibleYCheck contractible_y_check(const SimplicialComplex& k, int n,
                                        std::size_t budget = kDefaultCellBudget);

} // namespace zkmorse
