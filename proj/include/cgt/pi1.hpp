/**
 * Fundamental groupoid presentations of cubical 2-complexes and the
 * dimension-1 Hurewicz comparison between pi_1(X, A) totab and H_1.
 *
 * Edges run from the 1- face to the 1+ face; each square contributes the
 * parallel-word relation d2-(s) d1+(s) = d1-(s) d2+(s), degenerate faces
 * contributing the empty word. That orientation makes the relation's
 * exponent-sum vector equal to the normalized boundary of the square.
 */

#ifndef CGT_PI1_HPP
#define CGT_PI1_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cgt/cubical.hpp"
#include "cgt/presented_groupoid.hpp"

namespace cgt {

inline PresentedGroupoid pi1_presentation(const CubicalSet& x,
                                          const std::set<long long>& base_points) {
    if (x.dimension() > 2)
        throw std::invalid_argument("pi1_presentation: dimension exceeds 2");
    std::vector<long long> vertices = x.cells(0);
    std::vector<GraphEdge> edges;
    for (long long e : x.cells(1)) {
        const FaceValue& lo = x.face(1, e, 1, false);
        const FaceValue& hi = x.face(1, e, 1, true);
        edges.push_back({"e" + std::to_string(e), lo.cell, hi.cell});
    }
    std::map<long long, std::size_t> eidx;
    for (std::size_t i = 0; i < x.cells(1).size(); ++i) eidx[x.cells(1)[i]] = i;

    auto side = [&](long long s, std::size_t i, bool plus) -> Word {
        const FaceValue& f = x.face(2, s, i, plus);
        if (f.is_degenerate()) return {};
        return {letter(eidx.at(f.cell))};
    };
    std::vector<GroupoidRelation> relations;
    for (long long s : x.cells(2))
        relations.push_back({concat(side(s, 2, false), side(s, 1, true)),
                             concat(side(s, 1, false), side(s, 2, true))});

    PresentedGroupoid pg(vertices, edges, relations);
    for (const auto& comp : pg.components()) {
        bool met = false;
        for (long long v : comp)
            if (base_points.count(v)) met = true;
        if (!met)
            throw std::invalid_argument(
                "pi1_presentation: base points miss the component of vertex " +
                std::to_string(comp.front()));
    }
    for (long long a : base_points)
        if (!x.has_cell(0, a))
            throw std::invalid_argument("pi1_presentation: unknown base point " +
                                        std::to_string(a));
    return pg;
}

struct HurewiczReport {
    PresentedGroupoid groupoid;
    FPAbelianGroup groupoid_side;       // pi_1(X, A) totab
    FPAbelianGroup homology_side;       // H_1(X, A)
    IntMatrix comparison_matrix;        // omega' on the chosen generators
    bool rel0_applicable = false;       // every positive cell has corners in A
    FPAbelianGroup rel0_side;           // H_1(X rel_0 A) when applicable
    bool invariants_match = false;
    bool comparison_iso = false;
    bool rel0_mutually_inverse = false;  // omega' and eta inverse on classes
    std::vector<std::string> issues;
    bool verdict = false;
};

inline HurewiczReport hurewicz_compare(const CubicalSet& x,
                                       const std::set<long long>& base_points) {
    HurewiczReport rep;
    rep.groupoid = pi1_presentation(x, base_points);
    const PresentedGroupoid& pg = rep.groupoid;
    SpanningForest forest = pg.spanning_forest();

    // pi_1(X, A) totab: per component, the vertex abelianisation plus one
    // free generator for each extra base point in the component.
    // Generator order: component by component, vertex-group generators first,
    // then the extra base points in increasing id order, measured from the
    // least base point of the component.
    struct GenSource {
        bool is_edge;      // vertex-group generator (a non-tree edge)
        std::size_t edge;  // edge index when is_edge
        long long point;   // the extra base point otherwise
        long long anchor;  // least base point of the component
    };
    std::vector<GenSource> gens;
    FPAbelianGroup side(0, IntMatrix(0, 0));
    auto comps = pg.components();
    for (const auto& comp : comps) {
        long long root = forest.component_root.at(comp.front());
        std::vector<long long> in_a;
        for (long long v : comp)
            if (base_points.count(v)) in_a.push_back(v);
        long long anchor = in_a.front();
        FPAbelianGroup vab = pg.vertex_abelianisation(root);
        std::size_t ci = 0;
        for (; ci < forest.roots.size(); ++ci)
            if (forest.roots[ci] == root) break;
        std::vector<bool> in_tree(pg.edges().size(), false);
        for (std::size_t ei : forest.tree_edges[ci]) in_tree[ei] = true;
        for (std::size_t ei = 0; ei < pg.edges().size(); ++ei)
            if (!in_tree[ei] && forest.component_root.at(pg.edges()[ei].src) == root)
                gens.push_back({true, ei, 0, anchor});
        for (std::size_t i = 1; i < in_a.size(); ++i)
            gens.push_back({false, 0, in_a[i], anchor});
        side = side.direct_sum(vab).direct_sum(
            FPAbelianGroup::free_abelian(in_a.size() - 1));
    }
    rep.groupoid_side = side;

    // homology side: H_1(X, A) of the quotient complex
    SubquotientComplex rc = relative_complex(
        x, std::set<long long>(base_points.begin(), base_points.end()));
    HomologyComputation h = homology_computation(rc.complex, 1);
    rep.homology_side = h.group;

    // omega': vertex-group generator |-> chain class of its loop through the
    // tree; extra base point |-> chain class of the tree path from the anchor
    auto chain_of = [&](const Word& w) {
        return exponent_vector<Int>(w, pg.edges().size());
    };
    IntMatrix omega(gens.size(), rep.homology_side.generator_count());
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        Word w;
        if (gens[gi].is_edge) {
            std::size_t ei = gens[gi].edge;
            Word to_anchor = pg.tree_path_from_root(forest, gens[gi].anchor);
            w = concat(
                concat(inverse(to_anchor),
                       concat(concat(pg.tree_path_from_root(forest, pg.edges()[ei].src),
                                     Word{letter(ei)}),
                              inverse(pg.tree_path_from_root(forest, pg.edges()[ei].tgt)))),
                to_anchor);
        } else {
            w = concat(inverse(pg.tree_path_from_root(forest, gens[gi].anchor)),
                       pg.tree_path_from_root(forest, gens[gi].point));
        }
        omega.set_row(gi, h.class_of(chain_of(reduce(w))));
    }
    rep.comparison_matrix = omega;

    AbelianMap omega_map(rep.groupoid_side, rep.homology_side, omega);
    rep.invariants_match =
        rep.groupoid_side.invariants() == rep.homology_side.invariants();
    rep.comparison_iso = omega_map.is_isomorphism();
    if (!rep.invariants_match) rep.issues.push_back("invariants differ");
    if (!rep.comparison_iso) rep.issues.push_back("omega' is not an isomorphism");

    // rel_0 route, when every positive-dimensional cell has corners in A
    rep.rel0_applicable = true;
    for (std::size_t n = 1; n <= x.dimension() && rep.rel0_applicable; ++n)
        for (long long c : x.cells(n))
            for (long long v : x.corners(n, c))
                if (!base_points.count(v)) rep.rel0_applicable = false;
    if (rep.rel0_applicable) {
        // every 1-chain is a cycle: present H_1 rel_0 directly on the edges
        IntMatrix rel =
            x.dimension() >= 2 ? x.boundary_matrix(2) : IntMatrix(0, pg.edges().size());
        FPAbelianGroup rel0(pg.edges().size(), rel);
        rep.rel0_side = rel0;
        if (rep.groupoid_side.invariants() != rel0.invariants()) {
            rep.issues.push_back("rel_0 invariants differ");
        } else {
            IntMatrix om0(gens.size(), pg.edges().size());
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                Word w;
                if (gens[gi].is_edge) {
                    std::size_t ei = gens[gi].edge;
                    w = concat(concat(pg.tree_path_from_root(forest, pg.edges()[ei].src),
                                      Word{letter(ei)}),
                               inverse(pg.tree_path_from_root(forest, pg.edges()[ei].tgt)));
                } else {
                    w = concat(inverse(pg.tree_path_from_root(forest, gens[gi].anchor)),
                               pg.tree_path_from_root(forest, gens[gi].point));
                }
                om0.set_row(gi, chain_of(reduce(w)));
            }
            // eta: an edge a -> b maps to its vertex-generator class plus the
            // base-point difference b - a (anchors count as zero)
            std::map<long long, std::size_t> point_gen;
            for (std::size_t gi = 0; gi < gens.size(); ++gi)
                if (!gens[gi].is_edge) point_gen[gens[gi].point] = gi;
            std::map<std::size_t, std::size_t> edge_gen;
            for (std::size_t gi = 0; gi < gens.size(); ++gi)
                if (gens[gi].is_edge) edge_gen[gens[gi].edge] = gi;
            IntMatrix eta(pg.edges().size(), gens.size());
            for (std::size_t ei = 0; ei < pg.edges().size(); ++ei) {
                if (edge_gen.count(ei)) eta(ei, edge_gen[ei]) += 1;
                long long a = pg.edges()[ei].src, b = pg.edges()[ei].tgt;
                if (point_gen.count(b)) eta(ei, point_gen[b]) += 1;
                if (point_gen.count(a)) eta(ei, point_gen[a]) -= 1;
            }
            AbelianMap om0_map(rep.groupoid_side, rel0, om0);
            AbelianMap eta_map(rel0, rep.groupoid_side, eta);
            rep.rel0_mutually_inverse = true;
            IntMatrix oe = om0 * eta;
            for (std::size_t i = 0; i < gens.size(); ++i)
                if (!rep.groupoid_side.elements_equal(
                        oe.row(i), IntMatrix::identity(gens.size()).row(i)))
                    rep.rel0_mutually_inverse = false;
            IntMatrix eo = eta * om0;
            for (std::size_t i = 0; i < pg.edges().size(); ++i)
                if (!rel0.elements_equal(
                        eo.row(i), IntMatrix::identity(pg.edges().size()).row(i)))
                    rep.rel0_mutually_inverse = false;
            if (!rep.rel0_mutually_inverse)
                rep.issues.push_back("omega' and eta are not mutually inverse");
        }
    }

    rep.verdict = rep.invariants_match && rep.comparison_iso &&
                  (!rep.rel0_applicable ||
                   (rep.issues.empty() && rep.rel0_mutually_inverse));
    return rep;
}

}  // namespace cgt

#endif
