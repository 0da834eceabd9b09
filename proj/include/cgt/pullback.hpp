/**
 * The pullback groupoid of phi: F -> G along the universal cover of G,
 * presented on the Cayley graph of G for the phi-images of F's generators.
 *
 * Vertices are the elements of G; the edge (s, g) runs phi(s)g -> g, one per
 * generator s of F and g in G. Each relator of F lifts to one relation at
 * every vertex.
 */

#ifndef CGT_PULLBACK_HPP
#define CGT_PULLBACK_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "cgt/group_morphism.hpp"
#include "cgt/presented_groupoid.hpp"

namespace cgt {

struct PullbackGroupoid {
    PresentedGroupoid groupoid;
    std::size_t group_order = 0;
    std::size_t generator_count = 0;
    bool connected = false;

    std::size_t edge_index(std::size_t gen, Elt g) const {
        return gen * group_order + g;
    }
    std::size_t edge_generator(std::size_t edge) const { return edge / group_order; }
    Elt edge_sheet(std::size_t edge) const { return edge % group_order; }
};

/// Lift a word of F to the edge-word of its unique lift ending at `anchor`.
inline Word lift_word(const GroupMorphismToFin& phi, const PullbackGroupoid& pb,
                      const Word& w, Elt anchor) {
    const FinGroup& G = phi.codomain();
    Word out(w.size());
    Elt at = anchor;
    for (std::size_t i = w.size(); i-- > 0;) {
        Letter l = w[i];
        Elt img = phi.image(letter_gen(l));
        if (!letter_inverted(l)) {
            out[i] = letter(pb.edge_index(letter_gen(l), at));
            at = G.mul(img, at);
        } else {
            Elt prev = G.mul(G.inv(img), at);
            out[i] = letter(pb.edge_index(letter_gen(l), prev), true);
            at = prev;
        }
    }
    return out;
}

inline PullbackGroupoid pullback_groupoid(const GroupMorphismToFin& phi) {
    const FinGroup& G = phi.codomain();
    const GroupPresentation& F = phi.domain();
    const std::size_t n = G.order();

    PullbackGroupoid pb;
    pb.group_order = n;
    pb.generator_count = F.rank();

    std::vector<long long> vertices;
    for (Elt g = 0; g < n; ++g) vertices.push_back(g);
    std::vector<GraphEdge> edges;
    for (std::size_t si = 0; si < F.rank(); ++si)
        for (Elt g = 0; g < n; ++g)
            edges.push_back({F.generators[si] + "@" + G.name(g),
                             static_cast<long long>(G.mul(phi.image(si), g)),
                             static_cast<long long>(g)});

    std::vector<GroupoidRelation> relations;
    for (const Word& r : F.relators)
        for (Elt g = 0; g < n; ++g)
            relations.push_back({lift_word(phi, pb, r, g), {}});

    pb.groupoid = PresentedGroupoid(vertices, edges, relations);
    pb.connected = pb.groupoid.is_connected();
    return pb;
}

}  // namespace cgt

#endif
