/**
 * Reidemeister-Schreier kernel presentations through the pullback groupoid,
 * the Crowell exact sequence 0 -> N^ab -> D_phi -> IG -> 0, and the verifier
 * comparing it with the totab row of the covering groupoid.
 */

#ifndef CGT_CROWELL_HPP
#define CGT_CROWELL_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cgt/action.hpp"
#include "cgt/convert.hpp"
#include "cgt/g_module.hpp"
#include "cgt/pullback.hpp"

namespace cgt {

/// Map an edge-word of the pullback groupoid to the word in F it covers.
inline Word f_word_of_edge_word(const PullbackGroupoid& pb, const Word& w) {
    Word out;
    for (Letter l : w)
        out.push_back(letter(pb.edge_generator(letter_gen(l)), letter_inverted(l)));
    return reduce(out);
}

/// N = ker phi presented as the vertex group of the pullback groupoid at the
/// identity, with Schreier generator words in F, their loop edge-words, and
/// the conjugation action of G on N^ab.
struct KernelPresentation {
    PullbackGroupoid pullback;
    SpanningForest forest;
    GroupPresentation group;          // presentation of N
    FPAbelianGroup nab;               // its abelianisation
    std::vector<std::size_t> schreier_edges;  // non-tree edge per generator
    std::vector<Word> schreier_loops;         // loop edge-words at the root
    std::vector<Word> schreier_words;         // the same loops as words in F
    std::vector<AbelianMap> action;           // right G-action on N^ab, per element
};

inline KernelPresentation kernel_presentation(const GroupMorphismToFin& phi) {
    if (!phi.is_surjective())
        throw std::invalid_argument("kernel_presentation: phi is not surjective");
    KernelPresentation k;
    k.pullback = pullback_groupoid(phi);
    const PresentedGroupoid& pg = k.pullback.groupoid;
    k.forest = pg.spanning_forest();
    k.group = pg.vertex_group(0);
    k.nab = k.group.abelianisation();

    std::vector<bool> in_tree(pg.edges().size(), false);
    std::map<std::size_t, std::size_t> gen_of_edge;
    for (std::size_t ei : k.forest.tree_edges[0]) in_tree[ei] = true;
    for (std::size_t ei = 0; ei < pg.edges().size(); ++ei) {
        if (in_tree[ei]) continue;
        gen_of_edge[ei] = k.schreier_edges.size();
        k.schreier_edges.push_back(ei);
        Word loop = concat(
            concat(pg.tree_path_from_root(k.forest, pg.edges()[ei].src),
                   Word{letter(ei)}),
            inverse(pg.tree_path_from_root(k.forest, pg.edges()[ei].tgt)));
        k.schreier_loops.push_back(loop);
        k.schreier_words.push_back(f_word_of_edge_word(k.pullback, loop));
    }

    // Conjugation by k in G: a transversal word u with phi(u) = k is the
    // F-word of the tree path from vertex k down to the root; n |-> u^-1 n u.
    const FinGroup& G = phi.codomain();
    for (Elt c = 0; c < G.order(); ++c) {
        Word u = f_word_of_edge_word(
            k.pullback, inverse(pg.tree_path_from_root(k.forest, c)));
        IntMatrix m(k.group.rank(), k.group.rank());
        for (std::size_t i = 0; i < k.group.rank(); ++i) {
            Word conj = reduce(concat(concat(inverse(u), k.schreier_words[i]), u));
            Word lifted = lift_word(phi, k.pullback, conj, 0);
            Word rewritten = pg.rewrite_through_tree(k.forest, lifted, gen_of_edge);
            m.set_row(i, exponent_vector<Int>(rewritten, k.group.rank()));
        }
        k.action.emplace_back(k.nab, k.nab, m);
    }
    return k;
}

struct CrowellSequence {
    KernelPresentation kernel;
    GModulePresentation dphi;
    Derivation universal;
    GModulePresentation ig;
    AbelianMap left;   // N^ab -> D_phi restriction
    AbelianMap right;  // D_phi restriction -> IG restriction
    ExactnessVerdict verdict;
};

inline CrowellSequence crowell_sequence(const GroupMorphismToFin& phi) {
    KernelPresentation kernel = kernel_presentation(phi);
    auto [dphi, universal] = derived_module(phi);
    const FinGroup& G = phi.codomain();
    GModulePresentation ig = augmentation_ideal(G);

    IntMatrix lm(kernel.nab.generator_count(), dphi.restriction().generator_count());
    for (std::size_t i = 0; i < kernel.schreier_words.size(); ++i)
        lm.set_row(i, universal.evaluate(kernel.schreier_words[i]));
    AbelianMap left(kernel.nab, dphi.restriction(), lm);

    // ds . g |-> (phi(s) - 1) . g, zero when phi(s) = 1
    IntMatrix rm(dphi.restriction().generator_count(),
                 ig.restriction().generator_count());
    for (std::size_t s = 0; s < dphi.generator_count(); ++s) {
        Elt img = phi.image(s);
        if (img == G.identity()) continue;
        for (Elt g = 0; g < G.order(); ++g)
            rm(s * G.order() + g, (img - 1) * G.order() + g) = 1;
    }
    AbelianMap right(dphi.restriction(), ig.restriction(), rm);

    ExactnessVerdict verdict = check_exactness(left, right);
    return {std::move(kernel), std::move(dphi),     std::move(universal),
            std::move(ig),     std::move(left),     std::move(right),
            verdict};
}

struct Theorem41Report {
    CrowellSequence top;
    FPAbelianGroup fhat_totab;    // middle of the bottom row
    FPAbelianGroup gtilde_totab;  // right of the bottom row
    AbelianMap bottom_left;       // N^ab -> F-hat totab
    AbelianMap bottom_right;      // F-hat totab -> G-tilde totab
    AbelianMap left_vertical;     // identity on N^ab
    AbelianMap eta;               // D_phi restriction -> F-hat totab
    AbelianMap xi;                // IG restriction -> G-tilde totab
    ExactnessVerdict top_exact, bottom_exact;
    bool left_iso = false, eta_iso = false, xi_iso = false;
    bool squares_commute = false;
    std::vector<std::string> issues;
    bool ok = false;
};

inline Theorem41Report verify_theorem41(const GroupMorphismToFin& phi) {
    CrowellSequence top = crowell_sequence(phi);
    const FinGroup& G = phi.codomain();
    const PresentedGroupoid& pg = top.kernel.pullback.groupoid;
    const std::size_t n = G.order();

    FPAbelianGroup fhat = pg.totab();
    PresentedGroupoid gt = to_presented(universal_cover_of_group(G).groupoid);
    FPAbelianGroup gtab = gt.totab();

    IntMatrix bl(top.kernel.nab.generator_count(), pg.edges().size());
    for (std::size_t i = 0; i < top.kernel.schreier_loops.size(); ++i)
        bl.set_row(i, exponent_vector<Int>(top.kernel.schreier_loops[i],
                                           pg.edges().size()));
    AbelianMap bottom_left(top.kernel.nab, fhat, bl);

    // the edge (s, g) of F-hat covers the arrow (phi(s), g) of G-tilde
    IntMatrix br(pg.edges().size(), n * n);
    for (std::size_t s = 0; s < top.kernel.pullback.generator_count; ++s)
        for (Elt g = 0; g < n; ++g)
            br(top.kernel.pullback.edge_index(s, g), phi.image(s) * n + g) = 1;
    AbelianMap bottom_right(fhat, gtab, br);

    AbelianMap left_vertical(top.kernel.nab, top.kernel.nab,
                             IntMatrix::identity(top.kernel.nab.generator_count()));
    // ds . g and the edge (s, g) share the index s*|G| + g
    AbelianMap eta(top.dphi.restriction(), fhat,
                   IntMatrix::identity(pg.edges().size()));
    IntMatrix xm(top.ig.restriction().generator_count(), n * n);
    for (Elt h = 1; h < n; ++h)
        for (Elt g = 0; g < n; ++g) xm((h - 1) * n + g, h * n + g) = 1;
    AbelianMap xi(top.ig.restriction(), gtab, xm);

    Theorem41Report r{std::move(top),         std::move(fhat),
                      std::move(gtab),        std::move(bottom_left),
                      std::move(bottom_right), std::move(left_vertical),
                      std::move(eta),         std::move(xi),
                      {},                     {},
                      false,                  false,
                      false,                  false,
                      {},                     false};

    r.top_exact = r.top.verdict;
    if (!r.top_exact.short_exact()) r.issues.push_back("top row is not short exact");
    r.bottom_exact = check_exactness(r.bottom_left, r.bottom_right);
    if (!r.bottom_exact.short_exact())
        r.issues.push_back("bottom row is not short exact");
    r.left_iso = r.left_vertical.is_isomorphism();
    r.eta_iso = r.eta.is_isomorphism();
    r.xi_iso = r.xi.is_isomorphism();
    if (!r.left_iso) r.issues.push_back("left vertical map is not an isomorphism");
    if (!r.eta_iso) r.issues.push_back("eta is not an isomorphism");
    if (!r.xi_iso) r.issues.push_back("xi is not an isomorphism");

    r.squares_commute = true;
    IntMatrix ls1 = r.top.left.matrix() * r.eta.matrix();
    IntMatrix ls2 = r.left_vertical.matrix() * r.bottom_left.matrix();
    for (std::size_t i = 0; i < ls1.rows(); ++i)
        if (!r.fhat_totab.elements_equal(ls1.row(i), ls2.row(i))) {
            r.squares_commute = false;
            r.issues.push_back("left square fails at N^ab generator " +
                               std::to_string(i));
        }
    IntMatrix rs1 = r.top.right.matrix() * r.xi.matrix();
    IntMatrix rs2 = r.eta.matrix() * r.bottom_right.matrix();
    for (std::size_t i = 0; i < rs1.rows(); ++i)
        if (!r.gtilde_totab.elements_equal(rs1.row(i), rs2.row(i))) {
            r.squares_commute = false;
            r.issues.push_back("right square fails at D_phi generator " +
                               std::to_string(i));
        }

    r.ok = r.top_exact.short_exact() && r.bottom_exact.short_exact() &&
           r.left_iso && r.eta_iso && r.xi_iso && r.squares_commute;
    return r;
}

}  // namespace cgt

#endif
