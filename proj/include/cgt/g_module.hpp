/**
 * Finitely presented right G-modules over the integral group ring of a finite
 * group, phi-derivations, augmentation ideals and derived modules.
 *
 * Module elements are stored in restriction coordinates: a vector of length
 * generators * |G| whose (i, g) slot (index i*|G| + g) is the integer
 * coefficient of generator_i . g. The right translate by k sends slot (i, g)
 * to (i, gk), so every ZG-relation expands to |G| abelian relations.
 */

#ifndef CGT_G_MODULE_HPP
#define CGT_G_MODULE_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cgt/abelian.hpp"
#include "cgt/fin_group.hpp"
#include "cgt/group_morphism.hpp"
#include "cgt/int_matrix.hpp"
#include "cgt/word.hpp"

namespace cgt {

using ModuleElement = std::vector<Int>;

inline ModuleElement translate(const ModuleElement& v, const FinGroup& G, Elt k) {
    const std::size_t n = G.order();
    if (v.size() % n != 0)
        throw std::invalid_argument("translate: length not a multiple of |G|");
    ModuleElement out(v.size());
    for (std::size_t i = 0; i < v.size() / n; ++i)
        for (Elt g = 0; g < n; ++g) out[i * n + G.mul(g, k)] = v[i * n + g];
    return out;
}

inline ModuleElement& add_into(ModuleElement& a, const ModuleElement& b) {
    if (a.size() != b.size()) throw std::invalid_argument("add_into: length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

class GModulePresentation {
public:
    GModulePresentation(FinGroup group, std::size_t generator_count,
                        std::vector<ModuleElement> relations)
        : group_(std::move(group)), gens_(generator_count),
          relations_(std::move(relations)) {
        const std::size_t w = gens_ * group_.order();
        for (const ModuleElement& r : relations_)
            if (r.size() != w)
                throw std::invalid_argument("GModulePresentation: relation width mismatch");
        IntMatrix rel(relations_.size() * group_.order(), w);
        std::size_t row = 0;
        for (const ModuleElement& r : relations_)
            for (Elt k = 0; k < group_.order(); ++k)
                rel.set_row(row++, translate(r, group_, k));
        restriction_ = FPAbelianGroup(w, rel);
    }

    const FinGroup& group() const { return group_; }
    std::size_t generator_count() const { return gens_; }
    const std::vector<ModuleElement>& relations() const { return relations_; }
    const FPAbelianGroup& restriction() const { return restriction_; }

    std::size_t slot(std::size_t gen, Elt g) const {
        return gen * group_.order() + g;
    }

    /// The basis element generator_gen . g.
    ModuleElement basis(std::size_t gen, Elt g) const {
        ModuleElement e(gens_ * group_.order());
        e.at(slot(gen, g)) = 1;
        return e;
    }

    ModuleElement zero() const { return ModuleElement(gens_ * group_.order()); }

private:
    FinGroup group_;
    std::size_t gens_;
    std::vector<ModuleElement> relations_;
    FPAbelianGroup restriction_;
};

/// The augmentation ideal IG: generators g-1 for g != 1 (generator index
/// g-1), relations (hg-1) - (h-1).g - (g-1) for all g,h != 1, with the
/// (hg-1) term dropped when hg = 1. Free abelian of rank |G|-1.
inline GModulePresentation augmentation_ideal(const FinGroup& G) {
    const std::size_t n = G.order();
    const std::size_t gens = n - 1;
    std::vector<ModuleElement> relations;
    for (Elt h = 1; h < n; ++h)
        for (Elt g = 1; g < n; ++g) {
            ModuleElement r(gens * n);
            Elt hg = G.mul(h, g);
            if (hg != G.identity()) r[(hg - 1) * n + G.identity()] += 1;
            r[(h - 1) * n + g] -= 1;
            r[(g - 1) * n + G.identity()] -= 1;
            relations.push_back(std::move(r));
        }
    return GModulePresentation(G, gens, std::move(relations));
}

class Derivation;

/// Fold of the derivation law d(uv) = d(u)^phi(v) + d(v) over a word, with
/// d(s^-1) = -d(s)^phi(s)^-1 forced by d(1) = 0. Letter values are supplied
/// so the universal derivation can be evaluated before its module exists.
inline ModuleElement evaluate_derivation_raw(const GroupMorphismToFin& phi,
                                             const FinGroup& G,
                                             const std::vector<ModuleElement>& values,
                                             std::size_t width, const Word& w) {
    ModuleElement acc(width);
    for (Letter l : w) {
        std::size_t s = letter_gen(l);
        if (s >= values.size())
            throw std::invalid_argument("evaluate_derivation: unknown generator");
        Elt img = phi.image(s);
        ModuleElement dl;
        if (!letter_inverted(l)) {
            dl = values[s];
            acc = translate(acc, G, img);
        } else {
            dl = translate(values[s], G, G.inv(img));
            for (Int& x : dl) x = -x;
            acc = translate(acc, G, G.inv(img));
        }
        add_into(acc, dl);
    }
    return acc;
}

/// A phi-derivation F -> M given by its values on the generators of F.
class Derivation {
public:
    Derivation(GroupMorphismToFin phi, GModulePresentation target,
               std::vector<ModuleElement> values)
        : phi_(std::move(phi)), target_(std::move(target)), values_(std::move(values)) {
        if (values_.size() != phi_.domain().rank())
            throw std::invalid_argument("Derivation: one value per generator required");
        const std::size_t w = target_.generator_count() * target_.group().order();
        for (const ModuleElement& v : values_)
            if (v.size() != w)
                throw std::invalid_argument("Derivation: value width mismatch");
        // well-definedness on the relators of F, at restriction level
        for (const Word& r : phi_.domain().relators)
            if (!target_.restriction().is_zero_element(evaluate(r)))
                throw std::invalid_argument(
                    "Derivation: relator image is nonzero in the module");
    }

    const GroupMorphismToFin& phi() const { return phi_; }
    const GModulePresentation& target() const { return target_; }
    const ModuleElement& value(std::size_t gen) const { return values_.at(gen); }

    ModuleElement evaluate(const Word& w) const {
        return evaluate_derivation_raw(phi_, target_.group(), values_,
                                       target_.generator_count() * target_.group().order(),
                                       w);
    }

private:
    GroupMorphismToFin phi_;
    GModulePresentation target_;
    std::vector<ModuleElement> values_;
};

inline ModuleElement evaluate_derivation(const Derivation& d, const Word& w) {
    return d.evaluate(w);
}

/// The derived module D_phi with its universal derivation: one generator ds
/// per generator s of F, one ZG-relation per relator of F, obtained by
/// evaluating the universal derivation on the relator.
inline std::pair<GModulePresentation, Derivation> derived_module(
    const GroupMorphismToFin& phi) {
    const FinGroup& G = phi.codomain();
    const GroupPresentation& F = phi.domain();
    const std::size_t width = F.rank() * G.order();

    std::vector<ModuleElement> values;
    for (std::size_t s = 0; s < F.rank(); ++s) {
        ModuleElement e(width);
        e[s * G.order() + G.identity()] = 1;
        values.push_back(std::move(e));
    }
    std::vector<ModuleElement> relations;
    for (const Word& r : F.relators)
        relations.push_back(evaluate_derivation_raw(phi, G, values, width, r));

    GModulePresentation d(G, F.rank(), std::move(relations));
    Derivation universal(phi, d, std::move(values));
    return {std::move(d), std::move(universal)};
}

/// A G-equivariant map between presented modules, given on generators and
/// extended linearly over translates. Well-definedness on relations is
/// delegated to the induced AbelianMap of restrictions.
class ModuleMap {
public:
    ModuleMap(GModulePresentation source, GModulePresentation target,
              std::vector<ModuleElement> images)
        : source_(std::move(source)), target_(std::move(target)),
          images_(std::move(images)) {
        if (images_.size() != source_.generator_count())
            throw std::invalid_argument("ModuleMap: one image per generator required");
        const std::size_t w = target_.generator_count() * target_.group().order();
        for (const ModuleElement& v : images_)
            if (v.size() != w)
                throw std::invalid_argument("ModuleMap: image width mismatch");
    }

    const GModulePresentation& source() const { return source_; }
    const GModulePresentation& target() const { return target_; }

    ModuleElement apply(const ModuleElement& v) const {
        const FinGroup& G = source_.group();
        ModuleElement out(target_.generator_count() * G.order());
        for (std::size_t i = 0; i < source_.generator_count(); ++i)
            for (Elt g = 0; g < G.order(); ++g) {
                const Int& c = v.at(i * G.order() + g);
                if (c == 0) continue;
                ModuleElement t = translate(images_[i], G, g);
                for (std::size_t j = 0; j < out.size(); ++j) out[j] += c * t[j];
            }
        return out;
    }

    /// The induced map of restrictions; construction verifies that source
    /// relations land in the target relation lattice.
    AbelianMap to_abelian_map() const {
        const FinGroup& G = source_.group();
        const std::size_t sw = source_.generator_count() * G.order();
        IntMatrix m(sw, target_.generator_count() * G.order());
        for (std::size_t i = 0; i < source_.generator_count(); ++i)
            for (Elt g = 0; g < G.order(); ++g)
                m.set_row(i * G.order() + g, translate(images_[i], G, g));
        return AbelianMap(source_.restriction(), target_.restriction(), m);
    }

private:
    GModulePresentation source_, target_;
    std::vector<ModuleElement> images_;
};

}  // namespace cgt

#endif
