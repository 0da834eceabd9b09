/**
 * Covering cubical complexes built from a morphism of the fundamental group
 * to a finite group, and the verifier comparing the covering groupoid's
 * totab, the relative homology of the cover, and the derived module.
 *
 * Cells of the cover are pairs (cell, sheet); ids are cell*|G| + sheet. Tree
 * edges carry weight 1 and a non-tree edge its generator image, so the edge
 * (e, g) runs from (src e, w(e) g) to (tgt e, g).
 */

#ifndef CGT_COVERING_COMPLEX_HPP
#define CGT_COVERING_COMPLEX_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cgt/crowell.hpp"
#include "cgt/cubical.hpp"
#include "cgt/pi1.hpp"

namespace cgt {

struct CoveringComplex {
    CubicalSet base;
    FinGroup group;
    CubicalSet total;
    // projection per dimension: total cell id -> base cell id
    std::vector<std::map<long long, long long>> projection;
    std::vector<long long> fiber_over_basepoint;
    std::vector<Elt> edge_weights;  // per base 1-cell, in base edge order

    long long sheet_id(long long base_cell, Elt g) const {
        return base_cell * static_cast<long long>(group.order()) +
               static_cast<long long>(g);
    }
};

/// phi_images: one group element per vertex-group generator of the base
/// (the non-tree edges of the spanning tree, in edge order).
inline CoveringComplex build_covering_complex(const CubicalSet& x, long long basepoint,
                                              const FinGroup& G,
                                              const std::vector<Elt>& phi_images) {
    if (x.dimension() > 2)
        throw std::invalid_argument("build_covering_complex: dimension exceeds 2");
    if (!x.has_cell(0, basepoint))
        throw std::invalid_argument("build_covering_complex: unknown basepoint");
    PresentedGroupoid pg = pi1_presentation(x, {basepoint});
    if (!pg.is_connected())
        throw std::invalid_argument("build_covering_complex: base is not connected");
    GroupPresentation vg = pg.vertex_group(basepoint);
    if (phi_images.size() != vg.rank())
        throw std::invalid_argument(
            "build_covering_complex: one image per vertex-group generator required");
    GroupMorphismToFin phi(GroupPresentation::free_group(vg.generators), G, phi_images);
    for (const Word& r : vg.relators)
        if (phi.eval(r) != G.identity())
            throw std::invalid_argument(
                "build_covering_complex: phi does not kill a square relator");

    // edge weights: tree edges 1, non-tree edges their generator image
    SpanningForest forest = pg.spanning_forest();
    std::vector<bool> in_tree(pg.edges().size(), false);
    for (std::size_t ei : forest.tree_edges[0]) in_tree[ei] = true;
    std::vector<Elt> weight(pg.edges().size(), G.identity());
    {
        std::size_t gen = 0;
        for (std::size_t ei = 0; ei < pg.edges().size(); ++ei)
            if (!in_tree[ei]) weight[ei] = phi_images.at(gen++);
    }

    CoveringComplex cc{x, G, CubicalSet(), {}, {}, weight};
    const long long n = static_cast<long long>(G.order());
    std::map<long long, std::size_t> eidx;
    for (std::size_t i = 0; i < x.cells(1).size(); ++i) eidx[x.cells(1)[i]] = i;
    // weight of a face value: identity for degenerate (constant) edges
    auto face_weight = [&](const FaceValue& f) {
        return f.is_degenerate() ? G.identity() : weight[eidx.at(f.cell)];
    };
    auto lift_vertex = [&](const FaceValue& f, Elt g) -> FaceValue {
        return FaceValue{cc.sheet_id(f.cell, g), f.degeneracies};
    };

    CubicalSetBuilder b;
    cc.projection.assign(x.dimension() + 1, {});
    for (long long v : x.cells(0))
        for (Elt g = 0; g < G.order(); ++g) {
            b.vertex(cc.sheet_id(v, g));
            cc.projection[0][cc.sheet_id(v, g)] = v;
        }
    for (long long e : x.cells(1))
        for (Elt g = 0; g < G.order(); ++g) {
            const FaceValue& lo = x.face(1, e, 1, false);
            const FaceValue& hi = x.face(1, e, 1, true);
            Elt w = weight[eidx.at(e)];
            b.edge(cc.sheet_id(e, g), lift_vertex(lo, G.mul(w, g)), lift_vertex(hi, g));
            cc.projection[1][cc.sheet_id(e, g)] = e;
        }
    for (long long s : x.cells(2))
        for (Elt g = 0; g < G.order(); ++g) {
            const FaceValue& m1 = x.face(2, s, 1, false);
            const FaceValue& p1 = x.face(2, s, 1, true);
            const FaceValue& m2 = x.face(2, s, 2, false);
            const FaceValue& p2 = x.face(2, s, 2, true);
            // sheet bookkeeping around the square, anchored at the (1,1)
            // corner on sheet g
            FaceValue lm1{cc.sheet_id(m1.cell, G.mul(face_weight(p2), g)), m1.degeneracies};
            FaceValue lp1{cc.sheet_id(p1.cell, g), p1.degeneracies};
            FaceValue lm2{cc.sheet_id(m2.cell, G.mul(face_weight(p1), g)), m2.degeneracies};
            FaceValue lp2{cc.sheet_id(p2.cell, g), p2.degeneracies};
            b.square(cc.sheet_id(s, g), lm1, lp1, lm2, lp2);
            cc.projection[2][cc.sheet_id(s, g)] = s;
        }
    cc.total = b.build();
    for (Elt g = 0; g < G.order(); ++g)
        cc.fiber_over_basepoint.push_back(cc.sheet_id(basepoint, g));

    Verdict v = cc.total.validate();
    if (!v.ok)
        throw std::logic_error("build_covering_complex: invalid cover: " +
                               v.issues.front());
    // Euler characteristic multiplies by the sheet count
    long long chi_base = 0, chi_total = 0, sign = 1;
    for (std::size_t d = 0; d <= x.dimension(); ++d, sign = -sign) {
        chi_base += sign * static_cast<long long>(x.cell_count(d));
        chi_total += sign * static_cast<long long>(cc.total.cell_count(d));
    }
    if (chi_total != n * chi_base)
        throw std::logic_error("build_covering_complex: Euler characteristic mismatch");
    return cc;
}

struct Theorem55Report {
    CoveringComplex cover;
    GroupPresentation base_group;      // pi_1(X, basepoint) via the tree
    FPAbelianGroup fhat_totab;         // totab of the pullback groupoid
    FPAbelianGroup relative_h1;        // H_1 of (cover, fiber over basepoint)
    FPAbelianGroup dphi_restriction;   // restriction of D_phi
    IntMatrix derivation_matrix;       // pi_1 generators -> H_1 classes
    std::vector<std::string> issues;
    bool ok = false;
};

inline Theorem55Report verify_theorem55(const CubicalSet& x, long long basepoint,
                                        const FinGroup& G,
                                        const std::vector<Elt>& phi_images) {
    CoveringComplex cover = build_covering_complex(x, basepoint, G, phi_images);
    PresentedGroupoid pg = pi1_presentation(x, {basepoint});
    GroupPresentation vg = pg.vertex_group(basepoint);
    GroupMorphismToFin phi(vg, G, phi_images);
    if (!phi.is_surjective())
        throw std::invalid_argument("verify_theorem55: phi is not surjective");

    FPAbelianGroup fhat = pullback_groupoid(phi).groupoid.totab();
    std::set<long long> fiber(cover.fiber_over_basepoint.begin(),
                              cover.fiber_over_basepoint.end());
    SubquotientComplex rc = relative_complex(cover.total, fiber);
    HomologyComputation h = homology_computation(rc.complex, 1);
    auto [dphi, universal] = derived_module(phi);

    Theorem55Report rep{std::move(cover), vg,          std::move(fhat),
                        h.group,          dphi.restriction(),
                        IntMatrix(0, 0),  {},          false};

    if (rep.fhat_totab.invariants() != rep.relative_h1.invariants())
        rep.issues.push_back("totab of the covering groupoid differs from H_1");
    if (rep.fhat_totab.invariants() != rep.dphi_restriction.invariants())
        rep.issues.push_back("totab differs from the derived module restriction");

    // the universal derivation realised on chains: each pi_1 generator's loop
    // lifts to a 1-chain of the cover ending in the basepoint fiber
    SpanningForest forest = pg.spanning_forest();
    std::map<long long, std::size_t> eidx;
    for (std::size_t i = 0; i < x.cells(1).size(); ++i) eidx[x.cells(1)[i]] = i;
    std::vector<bool> in_tree(pg.edges().size(), false);
    for (std::size_t ei : forest.tree_edges[0]) in_tree[ei] = true;
    std::vector<std::size_t> gen_edge;
    for (std::size_t ei = 0; ei < pg.edges().size(); ++ei)
        if (!in_tree[ei]) gen_edge.push_back(ei);

    Word to_base = pg.tree_path_from_root(forest, basepoint);
    IntMatrix dm(vg.rank(), rep.relative_h1.generator_count());
    std::map<long long, std::size_t> cidx;  // cover edge id -> chain column
    for (std::size_t i = 0; i < rep.cover.total.cells(1).size(); ++i)
        cidx[rep.cover.total.cells(1)[i]] = i;
    for (std::size_t gi = 0; gi < vg.rank(); ++gi) {
        std::size_t ei = gen_edge[gi];
        Word loop = reduce(concat(
            concat(inverse(to_base),
                   concat(concat(pg.tree_path_from_root(forest, pg.edges()[ei].src),
                                 Word{letter(ei)}),
                          inverse(pg.tree_path_from_root(forest, pg.edges()[ei].tgt)))),
            to_base));
        // lift the loop so it ends on the identity sheet, right to left
        std::vector<Int> chain(rep.cover.total.cell_count(1));
        Elt at = G.identity();
        for (std::size_t i = loop.size(); i-- > 0;) {
            std::size_t e = letter_gen(loop[i]);
            long long base_edge = x.cells(1)[e];
            if (!letter_inverted(loop[i])) {
                chain[cidx.at(rep.cover.sheet_id(base_edge, at))] += 1;
                at = G.mul(rep.cover.edge_weights[e], at);
            } else {
                Elt prev = G.mul(G.inv(rep.cover.edge_weights[e]), at);
                chain[cidx.at(rep.cover.sheet_id(base_edge, prev))] -= 1;
                at = prev;
            }
        }
        dm.set_row(gi, h.class_of(chain));
    }
    rep.derivation_matrix = dm;

    rep.ok = rep.issues.empty();
    return rep;
}

}  // namespace cgt

#endif
