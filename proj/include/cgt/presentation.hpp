/**
 * Finitely presented groups: named generators plus reduced relator words.
 */

#ifndef CGT_PRESENTATION_HPP
#define CGT_PRESENTATION_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cgt/abelian.hpp"
#include "cgt/word.hpp"

namespace cgt {

struct GroupPresentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;  // reduced words over the generators

    GroupPresentation() = default;
    GroupPresentation(std::vector<std::string> gens, std::vector<Word> rels)
        : generators(std::move(gens)) {
        relators.reserve(rels.size());
        for (const Word& r : rels) {
            for (Letter l : r)
                if (letter_gen(l) >= generators.size())
                    throw std::invalid_argument("GroupPresentation: relator letter out of range");
            relators.push_back(reduce(r));
        }
    }

    static GroupPresentation free_group(std::vector<std::string> gens) {
        return GroupPresentation(std::move(gens), {});
    }

    std::size_t rank() const { return generators.size(); }

    /// Abelianisation: cokernel of the relator exponent-sum matrix.
    FPAbelianGroup abelianisation() const {
        IntMatrix rel(relators.size(), generators.size());
        for (std::size_t i = 0; i < relators.size(); ++i)
            rel.set_row(i, exponent_vector<Int>(relators[i], generators.size()));
        return FPAbelianGroup(generators.size(), rel);
    }
};

}  // namespace cgt

#endif
