/**
 * Smith normal form and the lattice toolkit built on it: Hermite row bases,
 * membership tests, integer kernels, and exact linear solving.
 *
 * Pivot rule: smallest absolute nonzero value, ties by lowest (row, col).
 * This pins the whole decomposition, so golden tests can freeze U, D, V.
 */

#ifndef CGT_SMITH_HPP
#define CGT_SMITH_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cgt/int_matrix.hpp"

namespace cgt {

struct SmithDecomposition {
    IntMatrix U;     // rows x rows, unimodular
    IntMatrix D;     // rows x cols, diagonal, d_i | d_{i+1}, nonnegative
    IntMatrix V;     // cols x cols, unimodular
    IntMatrix Uinv;  // U * Uinv = I
    IntMatrix Vinv;  // V * Vinv = I
    std::size_t rank = 0;

    std::vector<Int> diagonal() const {
        std::vector<Int> d;
        for (std::size_t i = 0; i < rank; ++i) d.push_back(D(i, i));
        return d;
    }
};

namespace detail {

inline Int int_abs(const Int& x) { return x < 0 ? Int(-x) : x; }

// Row/col elementary operations applied jointly to (D, U, Uinv) or (D, V, Vinv)
// so that U*m*V == D stays true after every step.
struct SnfWork {
    IntMatrix D, U, V, Uinv, Vinv;

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < D.cols(); ++j) std::swap(D(a, j), D(b, j));
        for (std::size_t j = 0; j < U.cols(); ++j) std::swap(U(a, j), U(b, j));
        for (std::size_t i = 0; i < Uinv.rows(); ++i) std::swap(Uinv(i, a), Uinv(i, b));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < D.rows(); ++i) std::swap(D(i, a), D(i, b));
        for (std::size_t i = 0; i < V.rows(); ++i) std::swap(V(i, a), V(i, b));
        for (std::size_t j = 0; j < Vinv.cols(); ++j) std::swap(Vinv(a, j), Vinv(b, j));
    }
    // row a += c * row b
    void add_row(std::size_t a, std::size_t b, const Int& c) {
        if (c == 0) return;
        for (std::size_t j = 0; j < D.cols(); ++j) D(a, j) += c * D(b, j);
        for (std::size_t j = 0; j < U.cols(); ++j) U(a, j) += c * U(b, j);
        for (std::size_t i = 0; i < Uinv.rows(); ++i) Uinv(i, b) -= c * Uinv(i, a);
    }
    // col a += c * col b
    void add_col(std::size_t a, std::size_t b, const Int& c) {
        if (c == 0) return;
        for (std::size_t i = 0; i < D.rows(); ++i) D(i, a) += c * D(i, b);
        for (std::size_t i = 0; i < V.rows(); ++i) V(i, a) += c * V(i, b);
        for (std::size_t j = 0; j < Vinv.cols(); ++j) Vinv(b, j) -= c * Vinv(a, j);
    }
    void negate_row(std::size_t a) {
        for (std::size_t j = 0; j < D.cols(); ++j) D(a, j) = -D(a, j);
        for (std::size_t j = 0; j < U.cols(); ++j) U(a, j) = -U(a, j);
        for (std::size_t i = 0; i < Uinv.rows(); ++i) Uinv(i, a) = -Uinv(i, a);
    }
};

}  // namespace detail

/// U*m*V = D with U, V unimodular and D diagonal satisfying d_i | d_{i+1}.
inline SmithDecomposition smith_normal_form(const IntMatrix& m) {
    using detail::int_abs;
    const std::size_t nr = m.rows(), nc = m.cols();
    detail::SnfWork w{m, IntMatrix::identity(nr), IntMatrix::identity(nc),
                      IntMatrix::identity(nr), IntMatrix::identity(nc)};

    std::size_t t = 0;
    while (t < nr && t < nc) {
        bool found = true;
        for (;;) {
            // pick pivot: min |value| over the trailing submatrix, lowest
            // (row, col); reselected after every sweep so quotients stay
            // small and entries cannot snowball
            std::size_t pr = 0, pc = 0;
            found = false;
            for (std::size_t i = t; i < nr; ++i)
                for (std::size_t j = t; j < nc; ++j) {
                    if (w.D(i, j) == 0) continue;
                    if (!found || int_abs(w.D(i, j)) < int_abs(w.D(pr, pc))) {
                        pr = i; pc = j; found = true;
                    }
                }
            if (!found) break;
            w.swap_rows(t, pr);
            w.swap_cols(t, pc);

            // one reduction sweep; leftover remainders become the next,
            // strictly smaller pivot
            bool dirty = false;
            for (std::size_t i = t + 1; i < nr; ++i) {
                if (w.D(i, t) == 0) continue;
                w.add_row(i, t, -Int(w.D(i, t) / w.D(t, t)));
                if (w.D(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < nc; ++j) {
                if (w.D(t, j) == 0) continue;
                w.add_col(j, t, -Int(w.D(t, j) / w.D(t, t)));
                if (w.D(t, j) != 0) dirty = true;
            }
            if (dirty) continue;
            // pivot must divide the whole trailing block
            bool divides = true;
            for (std::size_t i = t + 1; i < nr && divides; ++i)
                for (std::size_t j = t + 1; j < nc && divides; ++j)
                    if (w.D(i, j) % w.D(t, t) != 0) {
                        w.add_row(t, i, Int(1));
                        divides = false;
                    }
            if (divides) break;
        }
        if (!found) break;
        if (w.D(t, t) < 0) w.negate_row(t);
        ++t;
    }

    SmithDecomposition s;
    s.U = std::move(w.U);
    s.D = std::move(w.D);
    s.V = std::move(w.V);
    s.Uinv = std::move(w.Uinv);
    s.Vinv = std::move(w.Vinv);
    s.rank = t;
    return s;
}

/// Canonical Hermite row basis of the lattice spanned by the rows of m.
/// Echelon with positive pivots, entries above each pivot reduced into
/// [0, pivot); zero rows dropped. Two row sets span the same lattice iff
/// their bases are identical.
inline IntMatrix hermite_row_basis(const IntMatrix& m) {
    std::vector<std::vector<Int>> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    const std::size_t nc = m.cols();
    std::vector<std::vector<Int>> basis;  // echelon rows, pivot cols increasing
    for (auto& r : rows) {
        std::vector<Int> v = r;
        // reduce against existing basis rows / merge via gcd steps
        bool absorbed = false;
        while (!absorbed) {
            std::size_t lead = nc;
            for (std::size_t j = 0; j < nc; ++j)
                if (v[j] != 0) { lead = j; break; }
            if (lead == nc) { absorbed = true; break; }
            // find basis row with same pivot column
            std::size_t bi = basis.size();
            for (std::size_t k = 0; k < basis.size(); ++k) {
                std::size_t bl = nc;
                for (std::size_t j = 0; j < nc; ++j)
                    if (basis[k][j] != 0) { bl = j; break; }
                if (bl == lead) { bi = k; break; }
            }
            if (bi == basis.size()) {
                if (v[lead] < 0)
                    for (auto& x : v) x = -x;
                basis.push_back(v);
                absorbed = true;
            } else {
                // gcd combine v with basis[bi] on the pivot column
                std::vector<Int>& b = basis[bi];
                while (v[lead] != 0) {
                    Int q = b[lead] / v[lead];
                    for (std::size_t j = 0; j < nc; ++j) b[j] -= q * v[j];
                    std::swap(b, v);
                }
                if (b[lead] < 0)
                    for (auto& x : b) x = -x;
                // v now has a later pivot (or is zero); loop again
            }
        }
    }
    // sort by pivot column, then reduce above-pivot entries
    std::vector<std::pair<std::size_t, std::size_t>> order;  // (pivot col, idx)
    for (std::size_t k = 0; k < basis.size(); ++k) {
        std::size_t bl = nc;
        for (std::size_t j = 0; j < nc; ++j)
            if (basis[k][j] != 0) { bl = j; break; }
        order.emplace_back(bl, k);
    }
    std::sort(order.begin(), order.end());
    IntMatrix out(basis.size(), nc);
    for (std::size_t k = 0; k < order.size(); ++k)
        out.set_row(k, basis[order[k].second]);
    // normalise entries above each pivot into [0, pivot)
    for (std::size_t k = out.rows(); k-- > 0;) {
        std::size_t lead = nc;
        for (std::size_t j = 0; j < nc; ++j)
            if (out(k, j) != 0) { lead = j; break; }
        for (std::size_t i = 0; i < k; ++i) {
            Int q = out(i, lead) / out(k, lead);
            if (out(i, lead) - q * out(k, lead) < 0) q -= 1;  // floor division
            if (q == 0) continue;
            for (std::size_t j = 0; j < nc; ++j) out(i, j) -= q * out(k, j);
        }
    }
    return out;
}

/// Does v lie in the lattice spanned by the rows of `hnf_basis`
/// (as produced by hermite_row_basis)?
inline bool in_row_lattice(std::vector<Int> v, const IntMatrix& hnf_basis) {
    const std::size_t nc = hnf_basis.cols();
    if (v.size() != nc) throw std::invalid_argument("in_row_lattice: length mismatch");
    for (std::size_t k = 0; k < hnf_basis.rows(); ++k) {
        std::size_t lead = nc;
        for (std::size_t j = 0; j < nc; ++j)
            if (hnf_basis(k, j) != 0) { lead = j; break; }
        if (lead == nc) continue;
        // truncated quotient; a non-divisible leading entry leaves a residue
        // that no later row can clear, so the final zero test catches it
        Int q = v[lead] / hnf_basis(k, lead);
        for (std::size_t j = 0; j < nc; ++j) v[j] -= q * hnf_basis(k, j);
    }
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

/// Basis (rows) of the lattice { v : v * m = 0 }; saturated by construction.
inline IntMatrix kernel_row_basis(const IntMatrix& m) {
    SmithDecomposition s = smith_normal_form(m);
    std::size_t n = m.rows();
    IntMatrix k(n - s.rank, n);
    for (std::size_t i = s.rank; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) k(i - s.rank, j) = s.U(i, j);
    return k;
}

/// One integer solution x of x * m = v, if any.
inline std::optional<std::vector<Int>> solve_left(const IntMatrix& m,
                                                  const std::vector<Int>& v) {
    SmithDecomposition s = smith_normal_form(m);
    std::vector<Int> rhs = v * s.V;  // (x*Uinv) * D = v*V
    std::vector<Int> w(m.rows(), Int(0));
    for (std::size_t i = 0; i < rhs.size(); ++i) {
        if (i < s.rank) {
            if (rhs[i] % s.D(i, i) != 0) return std::nullopt;
            w[i] = rhs[i] / s.D(i, i);
        } else if (rhs[i] != 0) {
            return std::nullopt;
        }
    }
    return w * s.U;
}

}  // namespace cgt

#endif
