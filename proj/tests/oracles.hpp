// Independent oracles used by the test suites. These deliberately avoid the
// library's own Smith/Hermite code paths.

#ifndef CGT_TESTS_ORACLES_HPP
#define CGT_TESTS_ORACLES_HPP

#include <cstddef>
#include <random>
#include <vector>

#include "cgt/int_matrix.hpp"

namespace oracles {

using cgt::Int;
using cgt::IntMatrix;

inline Int gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Exact determinant by cofactor expansion (small matrices only).
inline Int det_cofactor(const IntMatrix& m) {
    std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Int d = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(i - 1, cc++) = m(i, c);
            }
        }
        Int term = m(0, j) * det_cofactor(minor);
        d += (j % 2 == 0) ? term : -term;
    }
    return d;
}

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
    std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] + (k - i) < n) {
            ++idx[i];
            for (std::size_t t = i + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
            return true;
        }
    }
    return false;
}

// Determinantal-divisor oracle for Smith invariant factors:
// d_k = D_k / D_{k-1} where D_k is the gcd of all k x k minors.
// Returns the full diagonal (including 1s, excluding trailing zeros).
inline std::vector<Int> smith_diagonal_by_minors(const IntMatrix& m) {
    std::size_t r = m.rows(), c = m.cols();
    std::size_t kmax = r < c ? r : c;
    std::vector<Int> divisors;  // D_1, D_2, ...
    for (std::size_t k = 1; k <= kmax; ++k) {
        std::vector<std::size_t> ri(k);
        for (std::size_t i = 0; i < k; ++i) ri[i] = i;
        Int g = 0;
        do {
            std::vector<std::size_t> ci(k);
            for (std::size_t i = 0; i < k; ++i) ci[i] = i;
            do {
                IntMatrix sub(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(ri[i], ci[j]);
                g = gcd(g, det_cofactor(sub));
            } while (next_combination(ci, c));
        } while (next_combination(ri, r));
        if (g == 0) break;  // all larger minors vanish too
        divisors.push_back(g);
    }
    std::vector<Int> diag;
    Int prev = 1;
    for (const Int& d : divisors) {
        diag.push_back(d / prev);
        prev = d;
    }
    return diag;
}

// Random small matrix with entries in [-bound, bound].
inline IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c,
                               int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

// Random unimodular matrix: product of elementary row operations on I.
inline IntMatrix random_unimodular(std::mt19937& rng, std::size_t n, int steps) {
    IntMatrix m = IntMatrix::identity(n);
    if (n < 2) return m;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int s = 0; s < steps; ++s) {
        std::size_t a = pick(rng), b = pick(rng);
        if (a == b) continue;
        Int c = coef(rng);
        for (std::size_t j = 0; j < n; ++j) m(a, j) += c * m(b, j);
    }
    return m;
}

}  // namespace oracles

#endif
