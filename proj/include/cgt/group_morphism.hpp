/**
 * Morphisms from a finitely presented group into a finite group, given by
 * generator images; relators are checked to die in the target.
 */

#ifndef CGT_GROUP_MORPHISM_HPP
#define CGT_GROUP_MORPHISM_HPP

#include <set>
#include <stdexcept>
#include <vector>

#include "cgt/fin_group.hpp"
#include "cgt/presentation.hpp"
#include "cgt/word.hpp"

namespace cgt {

class GroupMorphismToFin {
public:
    GroupMorphismToFin(GroupPresentation domain, FinGroup codomain,
                       std::vector<Elt> images)
        : domain_(std::move(domain)), codomain_(std::move(codomain)),
          images_(std::move(images)) {
        if (images_.size() != domain_.rank())
            throw std::invalid_argument("morphism: one image per generator required");
        for (Elt e : images_)
            if (e >= codomain_.order())
                throw std::invalid_argument("morphism: image out of range");
        for (const Word& r : domain_.relators)
            if (eval(r) != codomain_.identity())
                throw std::invalid_argument(
                    "morphism: relator does not map to the identity");
    }

    const GroupPresentation& domain() const { return domain_; }
    const FinGroup& codomain() const { return codomain_; }
    Elt image(std::size_t gen) const { return images_.at(gen); }

    Elt eval(const Word& w) const {
        Elt e = codomain_.identity();
        for (Letter l : w) {
            Elt x = images_.at(letter_gen(l));
            e = codomain_.mul(e, letter_inverted(l) ? codomain_.inv(x) : x);
        }
        return e;
    }

    bool is_surjective() const {
        return codomain_.generated_subgroup(images_).size() == codomain_.order();
    }

private:
    GroupPresentation domain_;
    FinGroup codomain_;
    std::vector<Elt> images_;
};

}  // namespace cgt

#endif
