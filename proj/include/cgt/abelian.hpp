/**
 * Finitely presented abelian groups and maps between them.
 *
 * A group is a cokernel Z^n / rowlattice(relations). The Smith form of the
 * relation matrix gives canonical coordinates, so element equality, kernels,
 * images and exactness checks are all exact lattice computations.
 */

#ifndef CGT_ABELIAN_HPP
#define CGT_ABELIAN_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cgt/int_matrix.hpp"
#include "cgt/smith.hpp"

namespace cgt {

/// Invariant-factor normal form: torsion coefficients (each >= 2, dividing
/// the next) plus free rank. Equal normal forms == isomorphic groups.
struct AbelianInvariants {
    std::vector<Int> torsion;
    std::size_t free_rank = 0;

    bool operator==(const AbelianInvariants& o) const {
        return torsion == o.torsion && free_rank == o.free_rank;
    }
    bool operator!=(const AbelianInvariants& o) const { return !(*this == o); }

    std::string to_string() const {
        std::string s = "([";
        for (std::size_t i = 0; i < torsion.size(); ++i) {
            if (i) s += ",";
            s += torsion[i].str();
        }
        s += "], " + std::to_string(free_rank) + ")";
        return s;
    }
};

class FPAbelianGroup {
public:
    FPAbelianGroup() : FPAbelianGroup(0, IntMatrix(0, 0)) {}

    FPAbelianGroup(std::size_t generator_count, IntMatrix relations)
        : gens_(generator_count), relations_(std::move(relations)) {
        if (relations_.cols() != gens_ && relations_.rows() != 0)
            throw std::invalid_argument("FPAbelianGroup: relation width mismatch");
        if (relations_.rows() == 0) relations_ = IntMatrix(0, gens_);
        snf_ = smith_normal_form(relations_);
        for (std::size_t i = 0; i < snf_.rank; ++i)
            if (snf_.D(i, i) >= 2) inv_.torsion.push_back(snf_.D(i, i));
        inv_.free_rank = gens_ - snf_.rank;
        relation_hnf_ = hermite_row_basis(relations_);
    }

    static FPAbelianGroup free_abelian(std::size_t rank) {
        return FPAbelianGroup(rank, IntMatrix(0, rank));
    }

    static FPAbelianGroup cyclic(long long n) {
        IntMatrix r(1, 1);
        r(0, 0) = n;
        return FPAbelianGroup(1, r);
    }

    std::size_t generator_count() const { return gens_; }
    const IntMatrix& relations() const { return relations_; }
    const IntMatrix& relation_hnf() const { return relation_hnf_; }
    const AbelianInvariants& invariants() const { return inv_; }
    const SmithDecomposition& snf() const { return snf_; }

    bool is_trivial() const { return inv_.torsion.empty() && inv_.free_rank == 0; }

    /// Finite order, or 0 if the group is infinite.
    Int order() const {
        if (inv_.free_rank > 0) return 0;
        Int n = 1;
        for (const Int& d : inv_.torsion) n *= d;
        return n;
    }

    /// Canonical coordinates of an element given in generator coordinates:
    /// v mapsto v*V reduced modulo the Smith diagonal. Equal canonical
    /// coordinates == equal group elements.
    std::vector<Int> canonical_coords(const std::vector<Int>& v) const {
        if (v.size() != gens_)
            throw std::invalid_argument("canonical_coords: length mismatch");
        std::vector<Int> c = v * snf_.V;
        for (std::size_t i = 0; i < snf_.rank; ++i) {
            const Int& d = snf_.D(i, i);
            c[i] %= d;
            if (c[i] < 0) c[i] += d;
        }
        return c;
    }

    bool is_zero_element(const std::vector<Int>& v) const {
        for (const Int& x : canonical_coords(v))
            if (x != 0) return false;
        return true;
    }

    bool elements_equal(const std::vector<Int>& a, const std::vector<Int>& b) const {
        return canonical_coords(a) == canonical_coords(b);
    }

    /// Representative in generator coordinates of the element with the given
    /// canonical coordinates (inverse of the V change of basis).
    std::vector<Int> from_canonical(const std::vector<Int>& c) const {
        if (c.size() != gens_)
            throw std::invalid_argument("from_canonical: length mismatch");
        return c * snf_.Vinv;
    }

    /// Direct sum; generators of `o` are appended after ours.
    FPAbelianGroup direct_sum(const FPAbelianGroup& o) const {
        std::size_t g = gens_ + o.gens_;
        IntMatrix r(relations_.rows() + o.relations_.rows(), g);
        for (std::size_t i = 0; i < relations_.rows(); ++i)
            for (std::size_t j = 0; j < gens_; ++j) r(i, j) = relations_(i, j);
        for (std::size_t i = 0; i < o.relations_.rows(); ++i)
            for (std::size_t j = 0; j < o.gens_; ++j)
                r(relations_.rows() + i, gens_ + j) = o.relations_(i, j);
        return FPAbelianGroup(g, r);
    }

private:
    std::size_t gens_;
    IntMatrix relations_;
    IntMatrix relation_hnf_;
    SmithDecomposition snf_;
    AbelianInvariants inv_;
};

/// invariants(g): the canonical comparison form.
inline AbelianInvariants invariants(const FPAbelianGroup& g) { return g.invariants(); }

class AbelianMap {
public:
    /// matrix: rows = source generators, cols = target generators; an element
    /// given as a row vector v maps to v*matrix. Well-definedness (relations
    /// land in the target relation lattice) is checked, not assumed.
    AbelianMap(FPAbelianGroup source, FPAbelianGroup target, IntMatrix matrix)
        : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
        if (matrix_.rows() != source_.generator_count() ||
            matrix_.cols() != target_.generator_count())
            throw std::invalid_argument("AbelianMap: matrix shape mismatch");
        const IntMatrix& rel = source_.relations();
        for (std::size_t i = 0; i < rel.rows(); ++i)
            if (!in_row_lattice(rel.row(i) * matrix_, target_.relation_hnf()))
                throw std::invalid_argument(
                    "AbelianMap: source relation " + std::to_string(i) +
                    " does not map into the target relation lattice");
    }

    static AbelianMap zero(FPAbelianGroup source, FPAbelianGroup target) {
        IntMatrix z(source.generator_count(), target.generator_count());
        return AbelianMap(std::move(source), std::move(target), std::move(z));
    }

    const FPAbelianGroup& source() const { return source_; }
    const FPAbelianGroup& target() const { return target_; }
    const IntMatrix& matrix() const { return matrix_; }

    std::vector<Int> apply(const std::vector<Int>& v) const { return v * matrix_; }

    /// Lattice in Z^(target gens) generated by the image together with the
    /// target relations: the image subgroup, written upstairs.
    IntMatrix image_lattice() const {
        return hermite_row_basis(matrix_.stack(target_.relations()));
    }

    /// Lattice of v in Z^(source gens) mapping into the target relation
    /// lattice: the kernel subgroup, written upstairs. Contains the source
    /// relations.
    IntMatrix kernel_lattice() const {
        // v*M in rowlattice(R_t)  <=>  (v,w) in ker of the stacked matrix
        IntMatrix stacked = matrix_.stack(target_.relations());
        IntMatrix k = kernel_row_basis(stacked);
        std::size_t sg = source_.generator_count();
        IntMatrix proj(k.rows() + source_.relations().rows(), sg);
        for (std::size_t i = 0; i < k.rows(); ++i)
            for (std::size_t j = 0; j < sg; ++j) proj(i, j) = k(i, j);
        for (std::size_t i = 0; i < source_.relations().rows(); ++i)
            for (std::size_t j = 0; j < sg; ++j)
                proj(k.rows() + i, j) = source_.relations()(i, j);
        return hermite_row_basis(proj);
    }

    bool is_injective() const {
        IntMatrix k = kernel_lattice();
        for (std::size_t i = 0; i < k.rows(); ++i)
            if (!in_row_lattice(k.row(i), source_.relation_hnf())) return false;
        return true;
    }

    bool is_surjective() const {
        return image_lattice() == hermite_row_basis(
            IntMatrix::identity(target_.generator_count()));
    }

    bool is_isomorphism() const { return is_injective() && is_surjective(); }

    /// Composition: first this, then g.
    AbelianMap then(const AbelianMap& g) const {
        if (g.source().generator_count() != target_.generator_count())
            throw std::invalid_argument("AbelianMap::then: middle mismatch");
        return AbelianMap(source_, g.target(), matrix_ * g.matrix());
    }

private:
    FPAbelianGroup source_, target_;
    IntMatrix matrix_;
};

struct ExactnessVerdict {
    bool middle_exact = false;   // image(f) == kernel(g)
    bool f_injective = false;
    bool g_surjective = false;

    bool short_exact() const { return middle_exact && f_injective && g_surjective; }
};

/// Is image(f) == kernel(g) inside the middle group? Also reports injectivity
/// of f and surjectivity of g so 0 -> A -> B -> C -> 0 can be asserted.
inline ExactnessVerdict check_exactness(const AbelianMap& f, const AbelianMap& g) {
    if (f.target().generator_count() != g.source().generator_count() ||
        f.target().relation_hnf() != g.source().relation_hnf())
        throw std::invalid_argument("check_exactness: target(f) != source(g)");
    ExactnessVerdict v;
    v.middle_exact = f.image_lattice() == g.kernel_lattice();
    v.f_injective = f.is_injective();
    v.g_surjective = g.is_surjective();
    return v;
}

}  // namespace cgt

#endif
