/**
 * Finite groups as explicit multiplication tables, plus the small factory
 * set used throughout the test corpus (cyclic, Klein, symmetric, dihedral).
 */

#ifndef CGT_FIN_GROUP_HPP
#define CGT_FIN_GROUP_HPP

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace cgt {

using Elt = std::size_t;  // index into the element list

class FinGroup {
public:
    /// table[g][h] = g*h, with element 0 the identity. Group axioms are
    /// validated exhaustively on construction.
    FinGroup(std::vector<std::string> names, std::vector<std::vector<Elt>> table)
        : names_(std::move(names)), table_(std::move(table)) {
        const std::size_t n = names_.size();
        if (table_.size() != n)
            throw std::invalid_argument("FinGroup: table size mismatch");
        for (const auto& row : table_)
            if (row.size() != n)
                throw std::invalid_argument("FinGroup: table row size mismatch");
        for (Elt g = 0; g < n; ++g)
            if (table_[0][g] != g || table_[g][0] != g)
                throw std::invalid_argument("FinGroup: element 0 is not an identity");
        inv_.assign(n, n);
        for (Elt g = 0; g < n; ++g) {
            for (Elt h = 0; h < n; ++h)
                if (table_[g][h] == 0) {
                    inv_[g] = h;
                    break;
                }
            if (inv_[g] == n)
                throw std::invalid_argument("FinGroup: element " + names_[g] +
                                            " has no inverse");
        }
        for (Elt g = 0; g < n; ++g)
            for (Elt h = 0; h < n; ++h)
                for (Elt k = 0; k < n; ++k)
                    if (table_[table_[g][h]][k] != table_[g][table_[h][k]])
                        throw std::invalid_argument("FinGroup: associativity fails");
    }

    std::size_t order() const { return names_.size(); }
    Elt identity() const { return 0; }
    Elt mul(Elt g, Elt h) const { return table_[g][h]; }
    Elt inv(Elt g) const { return inv_[g]; }
    const std::string& name(Elt g) const { return names_[g]; }
    const std::vector<std::vector<Elt>>& table() const { return table_; }

    Elt element_by_name(const std::string& s) const {
        for (Elt g = 0; g < names_.size(); ++g)
            if (names_[g] == s) return g;
        throw std::invalid_argument("FinGroup: unknown element " + s);
    }

    /// Closure of a subset under multiplication and inverses.
    std::set<Elt> generated_subgroup(const std::vector<Elt>& gens) const {
        std::set<Elt> sub{identity()};
        bool grew = true;
        while (grew) {
            grew = false;
            std::set<Elt> cur = sub;
            for (Elt a : cur)
                for (Elt b : gens) {
                    if (sub.insert(mul(a, b)).second) grew = true;
                    if (sub.insert(mul(a, inv(b))).second) grew = true;
                }
        }
        return sub;
    }

    bool is_subgroup(const std::set<Elt>& s) const {
        if (!s.count(identity())) return false;
        for (Elt a : s)
            for (Elt b : s)
                if (!s.count(mul(a, b))) return false;
        for (Elt a : s)
            if (!s.count(inv(a))) return false;
        return true;
    }

    static FinGroup trivial() { return FinGroup({"1"}, {{0}}); }

    static FinGroup cyclic(std::size_t n) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i)
            names.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g" + std::to_string(i)));
        std::vector<std::vector<Elt>> t(n, std::vector<Elt>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
        return FinGroup(std::move(names), std::move(t));
    }

    /// Klein 4-group C2 x C2, elements 1, a, b, ab.
    static FinGroup klein() {
        std::vector<std::string> names{"1", "a", "b", "ab"};
        auto x = [](Elt g, Elt h) { return g ^ h; };  // bitmask model
        std::vector<std::vector<Elt>> t(4, std::vector<Elt>(4));
        for (Elt g = 0; g < 4; ++g)
            for (Elt h = 0; h < 4; ++h) t[g][h] = x(g, h);
        return FinGroup(std::move(names), std::move(t));
    }

    /// Symmetric group on 3 letters; generators s=(12), r=(123).
    static FinGroup symmetric3() {
        // permutations as arrays; composition left-to-right: (pq)(x) = q(p(x))
        std::vector<std::vector<int>> perms = {
            {0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
        std::vector<std::string> names{"1", "s", "t", "u", "r", "r2"};
        std::size_t n = perms.size();
        std::vector<std::vector<Elt>> t(n, std::vector<Elt>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<int> c(3);
                for (int x = 0; x < 3; ++x) c[x] = perms[j][perms[i][x]];
                for (std::size_t k = 0; k < n; ++k)
                    if (perms[k] == c) t[i][j] = k;
            }
        return FinGroup(std::move(names), std::move(t));
    }

    /// Dihedral group of order 2n; elements r^i and r^i s, s r = r^-1 s.
    static FinGroup dihedral(std::size_t n) {
        std::size_t N = 2 * n;
        std::vector<std::string> names;
        for (std::size_t i = 0; i < n; ++i)
            names.push_back(i == 0 ? "1" : "r" + std::to_string(i));
        for (std::size_t i = 0; i < n; ++i)
            names.push_back(i == 0 ? "s" : "r" + std::to_string(i) + "s");
        // encode g = (i, f): rotation i, flip f; (i,f)*(j,e): left-to-right
        // product as group elements g*h with standard presentation
        auto enc = [n](std::size_t i, int f) { return i + (f ? n : 0); };
        std::vector<std::vector<Elt>> t(N, std::vector<Elt>(N));
        for (std::size_t i = 0; i < n; ++i)
            for (int f = 0; f < 2; ++f)
                for (std::size_t j = 0; j < n; ++j)
                    for (int e = 0; e < 2; ++e) {
                        // (r^i s^f)(r^j s^e) = r^(i + j or i - j) s^(f+e)
                        std::size_t rot = f ? (i + n - j % n) % n : (i + j) % n;
                        t[enc(i, f)][enc(j, e)] = enc(rot, f ^ e);
                    }
        return FinGroup(std::move(names), std::move(t));
    }

private:
    std::vector<std::string> names_;
    std::vector<std::vector<Elt>> table_;
    std::vector<Elt> inv_;
};

}  // namespace cgt

#endif
