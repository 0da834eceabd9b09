/**
 * Finite cubical sets with normalized chains.
 *
 * Only nondegenerate cells are stored; a face value is either a nondegenerate
 * cell one dimension down or a degeneracy expression (a lower cell with the
 * degeneracy operators applied). Degenerate faces contribute zero to chains.
 *
 * Degeneracy lists are kept in the normal form with strictly decreasing
 * indices, using eps_i eps_j = eps_{j+1} eps_i for i <= j, and faces move
 * through them by d_i eps_j = eps_{j-1} d_i (i < j), identity (i = j),
 * eps_j d_{i-1} (i > j).
 */

#ifndef CGT_CUBICAL_HPP
#define CGT_CUBICAL_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cgt/abelian.hpp"
#include "cgt/int_matrix.hpp"
#include "cgt/smith.hpp"
#include "cgt/verdict.hpp"

namespace cgt {

struct FaceValue {
    long long cell = 0;
    std::vector<std::size_t> degeneracies;  // outermost first, value eps_{d0}(eps_{d1}(...cell))

    bool is_degenerate() const { return !degeneracies.empty(); }
    bool operator==(const FaceValue& o) const {
        return cell == o.cell && degeneracies == o.degeneracies;
    }
};

inline FaceValue fv(long long cell) { return FaceValue{cell, {}}; }
inline FaceValue deg(long long cell, std::vector<std::size_t> idx) {
    return FaceValue{cell, std::move(idx)};
}

/// A cell expression during face computations: base cell of dimension
/// dim - degeneracies.size(), with degeneracies applied outermost first.
struct CubExpr {
    long long cell = 0;
    std::size_t dim = 0;
    std::vector<std::size_t> eps;

    bool operator==(const CubExpr& o) const {
        return cell == o.cell && dim == o.dim && eps == o.eps;
    }
};

inline void normalise_degeneracies(std::vector<std::size_t>& eps) {
    // bubble to strictly decreasing: eps_i eps_j = eps_{j+1} eps_i for i <= j
    for (bool moved = true; moved;) {
        moved = false;
        for (std::size_t k = 0; k + 1 < eps.size(); ++k)
            if (eps[k] <= eps[k + 1]) {
                std::size_t i = eps[k], j = eps[k + 1];
                eps[k] = j + 1;
                eps[k + 1] = i;
                moved = true;
            }
    }
}

class CubicalSet {
public:
    CubicalSet() { cells_.emplace_back(); }

    /// cells[n] lists the nondegenerate n-cells; faces[n] maps
    /// (cell, slot) -> face value, where slot = 2*(i-1) + (0 for -, 1 for +).
    CubicalSet(std::vector<std::vector<long long>> cells,
               std::vector<std::map<std::pair<long long, std::size_t>, FaceValue>> faces)
        : cells_(std::move(cells)), faces_(std::move(faces)) {
        if (cells_.empty()) cells_.emplace_back();
        faces_.resize(cells_.size());
        index_.assign(cells_.size(), {});
        for (std::size_t n = 0; n < cells_.size(); ++n) {
            std::vector<long long> sorted = cells_[n];
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw std::invalid_argument("CubicalSet: duplicate cell id in dimension " +
                                            std::to_string(n));
            for (std::size_t idx = 0; idx < cells_[n].size(); ++idx)
                index_[n][cells_[n][idx]] = idx;
        }
        for (auto& fm : faces_)
            for (auto& [key, val] : fm) normalise_degeneracies(val.degeneracies);
    }

    std::size_t dimension() const {
        std::size_t d = 0;
        for (std::size_t n = 0; n < cells_.size(); ++n)
            if (!cells_[n].empty()) d = n;
        return d;
    }

    std::size_t cell_count(std::size_t n) const {
        return n < cells_.size() ? cells_[n].size() : 0;
    }
    const std::vector<long long>& cells(std::size_t n) const {
        static const std::vector<long long> empty;
        return n < cells_.size() ? cells_[n] : empty;
    }
    bool has_cell(std::size_t n, long long id) const {
        return n < index_.size() && index_[n].count(id);
    }
    std::size_t index_of(std::size_t n, long long id) const {
        if (!has_cell(n, id))
            throw std::invalid_argument("CubicalSet: unknown " + std::to_string(n) +
                                        "-cell " + std::to_string(id));
        return index_[n].at(id);
    }

    static std::size_t slot(std::size_t i, bool plus) { return 2 * (i - 1) + (plus ? 1 : 0); }

    /// The stored face d_i^(plus?) of an n-cell.
    const FaceValue& face(std::size_t n, long long cell, std::size_t i, bool plus) const {
        if (n == 0 || n >= faces_.size())
            throw std::invalid_argument("CubicalSet: face of a 0-cell");
        auto it = faces_[n].find({cell, slot(i, plus)});
        if (it == faces_[n].end())
            throw std::invalid_argument("CubicalSet: missing face " + std::to_string(i) +
                                        (plus ? "+" : "-") + " of cell " +
                                        std::to_string(cell));
        return it->second;
    }

    CubExpr expr_of(const FaceValue& v, std::size_t dim) const {
        CubExpr e{v.cell, dim, v.degeneracies};
        normalise_degeneracies(e.eps);
        return e;
    }

    /// d_i^(plus?) of a cell expression, pushed through the degeneracies.
    CubExpr face_of(const CubExpr& e, std::size_t i, bool plus) const {
        if (i < 1 || i > e.dim)
            throw std::invalid_argument("face_of: direction out of range");
        if (e.eps.empty()) return expr_of(face(e.dim, e.cell, i, plus), e.dim - 1);
        std::size_t j = e.eps.front();
        CubExpr rest{e.cell, e.dim - 1,
                     std::vector<std::size_t>(e.eps.begin() + 1, e.eps.end())};
        if (i == j) return rest;
        CubExpr r = face_of(rest, i < j ? i : i - 1, plus);
        r.eps.insert(r.eps.begin(), i < j ? j - 1 : j);
        r.dim += 1;
        normalise_degeneracies(r.eps);
        return r;
    }

    /// All 0-cells reachable by iterated faces.
    std::set<long long> corners(std::size_t n, long long cell) const {
        std::set<long long> out;
        std::vector<CubExpr> stack{CubExpr{cell, n, {}}};
        while (!stack.empty()) {
            CubExpr e = stack.back();
            stack.pop_back();
            if (e.dim == 0) {
                out.insert(e.cell);
                continue;
            }
            for (std::size_t i = 1; i <= e.dim; ++i) {
                stack.push_back(face_of(e, i, false));
                stack.push_back(face_of(e, i, true));
            }
        }
        return out;
    }

    /// Structural soundness, the cubical face identities, and corner
    /// well-definedness, with witnesses.
    Verdict validate() const {
        Verdict v;
        for (std::size_t n = 1; n < cells_.size(); ++n)
            for (long long c : cells_[n])
                for (std::size_t i = 1; i <= n; ++i)
                    for (bool plus : {false, true}) {
                        auto it = faces_[n].find({c, slot(i, plus)});
                        if (it == faces_[n].end()) {
                            v.fail("cell " + std::to_string(c) + " (dim " +
                                   std::to_string(n) + ") lacks face " +
                                   std::to_string(i) + (plus ? "+" : "-"));
                            continue;
                        }
                        const FaceValue& f = it->second;
                        std::size_t base_dim = n - 1 - f.degeneracies.size();
                        if (f.degeneracies.size() > n - 1 || !has_cell(base_dim, f.cell))
                            v.fail("cell " + std::to_string(c) + " face " +
                                   std::to_string(i) + (plus ? "+" : "-") +
                                   " refers to a missing cell");
                    }
        if (!v.ok) return v;
        for (std::size_t n = 2; n < cells_.size(); ++n)
            for (long long c : cells_[n]) {
                CubExpr e{c, n, {}};
                for (std::size_t i = 1; i < n; ++i)
                    for (std::size_t j = i + 1; j <= n; ++j)
                        for (bool a : {false, true})
                            for (bool b : {false, true})
                                if (!(face_of(face_of(e, j, b), i, a) ==
                                      face_of(face_of(e, i, a), j - 1, b)))
                                    v.fail("face identity d" + std::to_string(i) +
                                           (a ? "+" : "-") + " d" + std::to_string(j) +
                                           (b ? "+" : "-") + " fails on cell " +
                                           std::to_string(c));
            }
        if (!v.ok) return v;
        for (std::size_t n = 1; n < cells_.size(); ++n)
            for (long long c : cells_[n]) corners(n, c);
        return v;
    }

    /// Matrix of the normalized boundary in dimension n: rows are n-cells,
    /// columns (n-1)-cells, with d = sum_i (-1)^i (d_i^- - d_i^+) and
    /// degenerate faces contributing zero.
    IntMatrix boundary_matrix(std::size_t n) const {
        if (n < 1 || n > dimension())
            throw std::invalid_argument("boundary_matrix: dimension out of range");
        IntMatrix m(cell_count(n), cell_count(n - 1));
        for (std::size_t r = 0; r < cells_[n].size(); ++r) {
            long long c = cells_[n][r];
            for (std::size_t i = 1; i <= n; ++i) {
                Int sign = (i % 2 == 1) ? -1 : 1;
                const FaceValue& lo = face(n, c, i, false);
                const FaceValue& hi = face(n, c, i, true);
                if (!lo.is_degenerate()) m(r, index_of(n - 1, lo.cell)) += sign;
                if (!hi.is_degenerate()) m(r, index_of(n - 1, hi.cell)) -= sign;
            }
        }
        return m;
    }

private:
    std::vector<std::vector<long long>> cells_;
    std::vector<std::map<std::pair<long long, std::size_t>, FaceValue>> faces_;
    std::vector<std::map<long long, std::size_t>> index_ =
        std::vector<std::map<long long, std::size_t>>(1);
};

/// Convenience construction for low-dimensional complexes.
class CubicalSetBuilder {
public:
    CubicalSetBuilder& vertex(long long id) {
        grow(0);
        cells_[0].push_back(id);
        return *this;
    }
    CubicalSetBuilder& edge(long long id, FaceValue lo, FaceValue hi) {
        grow(1);
        cells_[1].push_back(id);
        faces_[1][{id, CubicalSet::slot(1, false)}] = std::move(lo);
        faces_[1][{id, CubicalSet::slot(1, true)}] = std::move(hi);
        return *this;
    }
    CubicalSetBuilder& square(long long id, FaceValue m1, FaceValue p1, FaceValue m2,
                              FaceValue p2) {
        grow(2);
        cells_[2].push_back(id);
        faces_[2][{id, CubicalSet::slot(1, false)}] = std::move(m1);
        faces_[2][{id, CubicalSet::slot(1, true)}] = std::move(p1);
        faces_[2][{id, CubicalSet::slot(2, false)}] = std::move(m2);
        faces_[2][{id, CubicalSet::slot(2, true)}] = std::move(p2);
        return *this;
    }
    CubicalSetBuilder& cell(std::size_t n, long long id, std::vector<FaceValue> fs) {
        grow(n);
        cells_[n].push_back(id);
        for (std::size_t s = 0; s < fs.size(); ++s) faces_[n][{id, s}] = std::move(fs[s]);
        return *this;
    }
    CubicalSet build() const { return CubicalSet(cells_, faces_); }

private:
    void grow(std::size_t n) {
        if (cells_.size() <= n) {
            cells_.resize(n + 1);
            faces_.resize(n + 1);
        }
    }
    std::vector<std::vector<long long>> cells_;
    std::vector<std::map<std::pair<long long, std::size_t>, FaceValue>> faces_;
};

/// A chain complex on explicit bases: sizes[n] = rank of C_n, boundaries[n]
/// (n >= 1) the matrix C_n -> C_{n-1} with rows indexed by n-cells.
struct ChainComplex {
    std::vector<std::size_t> sizes;
    std::vector<IntMatrix> boundaries;  // boundaries[0] unused

    Verdict validate() const {
        Verdict v;
        for (std::size_t n = 2; n < boundaries.size(); ++n) {
            IntMatrix sq = boundaries[n] * boundaries[n - 1];
            for (std::size_t i = 0; i < sq.rows(); ++i)
                for (std::size_t j = 0; j < sq.cols(); ++j)
                    if (sq(i, j) != 0)
                        v.fail("dd != 0 at dimension " + std::to_string(n) +
                               ", entry (" + std::to_string(i) + "," +
                               std::to_string(j) + ")");
        }
        return v;
    }
};

inline ChainComplex chain_complex(const CubicalSet& k) {
    ChainComplex c;
    std::size_t d = k.dimension();
    c.sizes.resize(d + 1);
    c.boundaries.resize(d + 1, IntMatrix(0, 0));
    for (std::size_t n = 0; n <= d; ++n) c.sizes[n] = k.cell_count(n);
    for (std::size_t n = 1; n <= d; ++n) c.boundaries[n] = k.boundary_matrix(n);
    return c;
}

/// H_n of a chain complex together with the cycle basis, so classes of
/// explicit cycles can be read off.
struct HomologyComputation {
    IntMatrix cycle_basis;  // rows span ker d_n inside C_n
    FPAbelianGroup group;   // generated by the cycle basis rows

    /// Coordinates of a cycle's class in the group's generators.
    std::vector<Int> class_of(const std::vector<Int>& cycle) const {
        auto x = solve_left(cycle_basis, cycle);
        if (!x) throw std::invalid_argument("class_of: chain is not a cycle");
        return *x;
    }
};

inline HomologyComputation homology_computation(const ChainComplex& c, std::size_t n) {
    HomologyComputation h;
    if (n >= c.sizes.size()) {
        h.cycle_basis = IntMatrix(0, 0);
        h.group = FPAbelianGroup(0, IntMatrix(0, 0));
        return h;
    }
    std::size_t cn = c.sizes[n];
    if (n == 0 || c.boundaries.size() <= n || c.boundaries[n].rows() == 0 ||
        c.boundaries[n].cols() == 0) {
        // no boundary below (or it is the zero map): every chain is a cycle
        h.cycle_basis = IntMatrix::identity(cn);
    } else {
        h.cycle_basis = kernel_row_basis(c.boundaries[n]);
    }
    IntMatrix rel(0, h.cycle_basis.rows());
    if (n + 1 < c.boundaries.size() && c.boundaries[n + 1].rows() > 0) {
        const IntMatrix& b = c.boundaries[n + 1];
        rel = IntMatrix(b.rows(), h.cycle_basis.rows());
        for (std::size_t i = 0; i < b.rows(); ++i) {
            auto x = solve_left(h.cycle_basis, b.row(i));
            if (!x) throw std::logic_error("homology: boundary is not a cycle");
            rel.set_row(i, *x);
        }
    }
    h.group = FPAbelianGroup(h.cycle_basis.rows(), rel);
    return h;
}

inline FPAbelianGroup homology(const CubicalSet& k, std::size_t n) {
    return homology_computation(chain_complex(k), n).group;
}

/// The quotient complex C(X)/C(A) for a discrete A given by vertex ids:
/// dimension 0 drops the A-vertices, higher chain groups are unchanged.
/// Returns the complex plus the surviving cell ids per dimension.
struct SubquotientComplex {
    ChainComplex complex;
    std::vector<std::vector<long long>> basis_cells;
};

inline SubquotientComplex relative_complex(const CubicalSet& x,
                                           const std::set<long long>& a_vertices) {
    for (long long v : a_vertices)
        if (!x.has_cell(0, v))
            throw std::invalid_argument("relative_complex: unknown vertex " +
                                        std::to_string(v));
    SubquotientComplex q;
    std::size_t d = x.dimension();
    q.basis_cells.resize(d + 1);
    for (long long v : x.cells(0))
        if (!a_vertices.count(v)) q.basis_cells[0].push_back(v);
    for (std::size_t n = 1; n <= d; ++n) q.basis_cells[n] = x.cells(n);

    std::map<long long, std::size_t> v_index;
    for (std::size_t i = 0; i < q.basis_cells[0].size(); ++i)
        v_index[q.basis_cells[0][i]] = i;

    q.complex.sizes.resize(d + 1);
    q.complex.boundaries.resize(d + 1, IntMatrix(0, 0));
    for (std::size_t n = 0; n <= d; ++n) q.complex.sizes[n] = q.basis_cells[n].size();
    for (std::size_t n = 1; n <= d; ++n) {
        IntMatrix full = x.boundary_matrix(n);
        if (n == 1) {
            IntMatrix m(full.rows(), q.basis_cells[0].size());
            for (std::size_t r = 0; r < full.rows(); ++r)
                for (std::size_t cidx = 0; cidx < x.cell_count(0); ++cidx) {
                    long long v = x.cells(0)[cidx];
                    if (v_index.count(v)) m(r, v_index[v]) = full(r, cidx);
                }
            q.complex.boundaries[1] = m;
        } else {
            q.complex.boundaries[n] = full;
        }
    }
    return q;
}

inline FPAbelianGroup relative_homology(const CubicalSet& x,
                                        const std::set<long long>& a_vertices,
                                        std::size_t n) {
    return homology_computation(relative_complex(x, a_vertices).complex, n).group;
}

/// The rel_0 complex: C_0 = 0 and C_n (n >= 1) spanned by the cells all of
/// whose corners lie in A.
inline SubquotientComplex rel0_complex(const CubicalSet& x,
                                       const std::set<long long>& a_vertices) {
    for (long long v : a_vertices)
        if (!x.has_cell(0, v))
            throw std::invalid_argument("rel0_complex: unknown vertex " +
                                        std::to_string(v));
    SubquotientComplex q;
    std::size_t d = x.dimension();
    q.basis_cells.resize(d + 1);
    for (std::size_t n = 1; n <= d; ++n)
        for (long long c : x.cells(n)) {
            std::set<long long> cs = x.corners(n, c);
            bool inside = true;
            for (long long v : cs)
                if (!a_vertices.count(v)) inside = false;
            if (inside) q.basis_cells[n].push_back(c);
        }
    q.complex.sizes.resize(d + 1);
    q.complex.boundaries.resize(d + 1, IntMatrix(0, 0));
    for (std::size_t n = 1; n <= d; ++n) q.complex.sizes[n] = q.basis_cells[n].size();
    for (std::size_t n = 2; n <= d; ++n) {
        std::map<long long, std::size_t> lower;
        for (std::size_t i = 0; i < q.basis_cells[n - 1].size(); ++i)
            lower[q.basis_cells[n - 1][i]] = i;
        IntMatrix full = x.boundary_matrix(n);
        IntMatrix m(q.basis_cells[n].size(), q.basis_cells[n - 1].size());
        for (std::size_t r = 0; r < q.basis_cells[n].size(); ++r) {
            std::size_t fr = x.index_of(n, q.basis_cells[n][r]);
            for (std::size_t cidx = 0; cidx < x.cell_count(n - 1); ++cidx) {
                long long id = x.cells(n - 1)[cidx];
                if (full(fr, cidx) == 0) continue;
                auto it = lower.find(id);
                if (it == lower.end())
                    throw std::invalid_argument(
                        "rel0_complex: cells with corners in A have a face outside");
                m(r, it->second) = full(fr, cidx);
            }
        }
        q.complex.boundaries[n] = m;
    }
    // C_1 consists of cycles by construction (C_0 = 0)
    return q;
}

inline FPAbelianGroup rel0_homology(const CubicalSet& x,
                                    const std::set<long long>& a_vertices,
                                    std::size_t n) {
    if (n == 0) return FPAbelianGroup(0, IntMatrix(0, 0));
    return homology_computation(rel0_complex(x, a_vertices).complex, n).group;
}

}  // namespace cgt

#endif
