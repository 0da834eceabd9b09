// End-to-end acceptance checks, one line of output per criterion.

#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cgt/covering_complex.hpp"
#include "cgt/crowell.hpp"
#include "cgt/cubical.hpp"
#include "cgt/pi1.hpp"

using namespace cgt;

namespace {

int failures = 0;
std::vector<std::string> notes;

void report(int n, const char* what, bool ok) {
    std::printf("criterion %d (%s): %s\n", n, what, ok ? "PASS" : "FAIL");
    if (!ok) {
        ++failures;
        for (const std::string& s : notes) std::printf("  %s\n", s.c_str());
    }
    notes.clear();
}

bool expect(bool cond, const std::string& why) {
    if (!cond) notes.push_back(why);
    return cond;
}

AbelianInvariants inv(std::vector<Int> torsion, std::size_t rank) {
    return AbelianInvariants{std::move(torsion), rank};
}

// ---- criterion 1: the Klein 4-group universal cover ----

bool criterion1() {
    FinGroup K = FinGroup::klein();
    UniversalCoverOfGroup uc = universal_cover_of_group(K);
    bool ok = expect(uc.groupoid.objects().size() == 4, "object count");
    ok &= expect(uc.groupoid.arrows().size() == 16, "arrow count");

    Elt a = K.element_by_name("a"), b = K.element_by_name("b"),
        ab = K.element_by_name("ab");
    const Arrow& ar = uc.groupoid.arrow(uc.arrow_id(a, ab));
    ok &= expect(ar.src == static_cast<ObjId>(b) && ar.tgt == static_cast<ObjId>(ab),
                 "(a,ab) runs b -> ab");

    // the relation t = b^-1 a^-1 b a lifts to a closed loop at every object
    ExplicitGroupoid base = group_as_groupoid(K);
    std::vector<ArrowId> word{base.inverse(b), base.inverse(a),
                              static_cast<ArrowId>(b), static_cast<ArrowId>(a)};
    for (ObjId h : uc.groupoid.objects()) {
        std::vector<ArrowId> lift = uc.projection.lift_sequence(word, h);
        ObjId start = uc.groupoid.arrow(lift.front()).src;
        ObjId end = uc.groupoid.arrow(lift.back()).tgt;
        ok &= expect(start == h && end == h,
                     "lift at object " + std::to_string(h) + " is not closed");
    }
    return ok;
}

// ---- corpus for criteria 2 and 3 ----

struct CorpusCase {
    GroupMorphismToFin phi;
    bool free_domain;
};

std::vector<CorpusCase> corpus() {
    std::vector<FinGroup> groups{FinGroup::cyclic(2),  FinGroup::cyclic(3),
                                 FinGroup::cyclic(4),  FinGroup::klein(),
                                 FinGroup::symmetric3(), FinGroup::dihedral(4)};
    std::vector<CorpusCase> out;
    for (const FinGroup& G : groups) {
        // free domains of rank 1..3: first surjective image tuple in
        // lexicographic order
        for (std::size_t rank = 1; rank <= 3; ++rank) {
            std::vector<std::string> names;
            for (std::size_t i = 0; i < rank; ++i) names.push_back("s" + std::to_string(i));
            std::vector<Elt> images(rank, 0);
            bool found = false;
            while (!found) {
                if (G.generated_subgroup(images).size() == G.order()) {
                    found = true;
                    break;
                }
                std::size_t i = rank;
                while (i-- > 0) {
                    if (++images[i] < G.order()) break;
                    images[i] = 0;
                    if (i == 0) goto next_rank;
                }
            }
            if (found)
                out.push_back({GroupMorphismToFin(GroupPresentation::free_group(names),
                                                  G, images),
                               true});
        next_rank:;
        }
        // <a | a^2>: needs a generating involution
        for (Elt g = 1; g < G.order(); ++g)
            if (G.mul(g, g) == G.identity() &&
                G.generated_subgroup({g}).size() == G.order()) {
                out.push_back({GroupMorphismToFin(
                                   GroupPresentation({"a"}, {Word{1, 1}}), G, {g}),
                               false});
                break;
            }
        // <a, b | [a,b]>: needs a commuting generating pair
        bool done = false;
        for (Elt g = 0; g < G.order() && !done; ++g)
            for (Elt h = 0; h < G.order() && !done; ++h)
                if (G.mul(g, h) == G.mul(h, g) &&
                    G.generated_subgroup({g, h}).size() == G.order()) {
                    out.push_back({GroupMorphismToFin(
                                       GroupPresentation({"a", "b"},
                                                         {Word{1, 2, -1, -2}}),
                                       G, {g, h}),
                                   false});
                    done = true;
                }
    }
    return out;
}

bool criterion2(const std::vector<CorpusCase>& cases) {
    bool ok = true;
    for (const CorpusCase& c : cases) {
        Theorem41Report r = verify_theorem41(c.phi);
        ok &= expect(r.ok, "theorem 4.1 fails for |G| = " +
                               std::to_string(c.phi.codomain().order()) +
                               ", rank " + std::to_string(c.phi.domain().rank()));
        if (c.free_domain && c.phi.domain().rank() == 2) {
            if (c.phi.codomain().order() == 4 &&
                c.phi.codomain().name(1) == "a") {  // Klein
                ok &= expect(r.fhat_totab.invariants() == inv({}, 8), "K middle");
                ok &= expect(r.top.kernel.nab.invariants() == inv({}, 5), "K nab");
                ok &= expect(r.top.ig.restriction().invariants() == inv({}, 3), "K ig");
            }
            if (c.phi.codomain().order() == 6) {  // S3
                ok &= expect(r.fhat_totab.invariants() == inv({}, 12), "S3 middle");
                ok &= expect(r.top.kernel.nab.invariants() == inv({}, 7), "S3 nab");
                ok &= expect(r.top.ig.restriction().invariants() == inv({}, 5), "S3 ig");
            }
        }
    }
    return ok;
}

bool criterion3(const std::vector<CorpusCase>& cases) {
    bool ok = true;
    for (const CorpusCase& c : cases) {
        CrowellSequence cs = crowell_sequence(c.phi);
        ok &= expect(cs.verdict.short_exact(), "not short exact");
        if (c.free_domain) {
            std::size_t n = c.phi.codomain().order(), r = c.phi.domain().rank();
            ok &= expect(cs.dphi.restriction().invariants() == inv({}, r * n),
                         "dphi rank");
            ok &= expect(cs.kernel.nab.invariants() == inv({}, n * (r - 1) + 1),
                         "Nielsen-Schreier rank");
            ok &= expect(cs.ig.restriction().invariants() == inv({}, n - 1), "IG rank");
            ok &= expect(r * n == (n * (r - 1) + 1) + (n - 1), "rank identity");
        }
    }
    return ok;
}

// ---- model complexes for criteria 4 and 5 ----

CubicalSet circle() {
    return CubicalSetBuilder().vertex(0).edge(0, fv(0), fv(0)).build();
}
CubicalSet two_vertex_circle() {
    return CubicalSetBuilder()
        .vertex(0).vertex(1)
        .edge(0, fv(0), fv(1)).edge(1, fv(0), fv(1))
        .build();
}
CubicalSet torus() {
    return CubicalSetBuilder()
        .vertex(0)
        .edge(0, fv(0), fv(0)).edge(1, fv(0), fv(0))
        .square(0, fv(0), fv(0), fv(1), fv(1))
        .build();
}
CubicalSet pseudo_projective_plane() {
    return CubicalSetBuilder()
        .vertex(0)
        .edge(0, fv(0), fv(0))
        .square(0, deg(0, {1}), fv(0), fv(0), deg(0, {1}))
        .build();
}
CubicalSet wedge() {
    return CubicalSetBuilder()
        .vertex(0)
        .edge(0, fv(0), fv(0)).edge(1, fv(0), fv(0))
        .build();
}
CubicalSet circle_plus_torus() {
    return CubicalSetBuilder()
        .vertex(0).edge(0, fv(0), fv(0))
        .vertex(10).edge(10, fv(10), fv(10)).edge(11, fv(10), fv(10))
        .square(10, fv(10), fv(10), fv(11), fv(11))
        .build();
}

bool criterion4() {
    struct Case {
        CubicalSet x;
        std::set<long long> a;
        AbelianInvariants expect_inv;
        const char* name;
    };
    std::vector<Case> cases{
        {circle(), {0}, inv({}, 1), "circle"},
        {two_vertex_circle(), {0, 1}, inv({}, 2), "two-vertex circle"},
        {torus(), {0}, inv({}, 2), "torus"},
        {pseudo_projective_plane(), {0}, inv({2}, 0), "pseudo projective plane"},
        {wedge(), {0}, inv({}, 2), "wedge"},
        {circle_plus_torus(), {0, 10}, inv({}, 3), "circle + torus"},
    };
    bool ok = true;
    for (const Case& c : cases) {
        HurewiczReport r = hurewicz_compare(c.x, c.a);
        ok &= expect(r.verdict, std::string(c.name) + ": verdict");
        ok &= expect(r.groupoid_side.invariants() == c.expect_inv,
                     std::string(c.name) + ": groupoid side");
        ok &= expect(r.homology_side.invariants() == c.expect_inv,
                     std::string(c.name) + ": homology side");
    }
    return ok;
}

bool criterion5() {
    bool ok = true;
    Theorem55Report rc = verify_theorem55(circle(), 0, FinGroup::cyclic(3), {1});
    ok &= expect(rc.ok, "circle over C3");
    ok &= expect(rc.fhat_totab.invariants() == inv({}, 3), "circle fhat");
    ok &= expect(rc.relative_h1.invariants() == inv({}, 3), "circle H1");
    ok &= expect(rc.dphi_restriction.invariants() == inv({}, 3), "circle dphi");

    Theorem55Report rt = verify_theorem55(torus(), 0, FinGroup::cyclic(2), {1, 0});
    ok &= expect(rt.ok, "torus over C2");
    ok &= expect(rt.fhat_totab.invariants() == rt.relative_h1.invariants(),
                 "torus invariants");

    // Euler characteristic multiplies by the sheet count in every built cover
    struct BC {
        CubicalSet x;
        FinGroup g;
        std::vector<Elt> images;
    };
    std::vector<BC> covers{{circle(), FinGroup::cyclic(4), {1}},
                           {torus(), FinGroup::cyclic(2), {1, 1}},
                           {wedge(), FinGroup::klein(), {1, 2}},
                           {pseudo_projective_plane(), FinGroup::cyclic(2), {1}}};
    for (const BC& c : covers) {
        CoveringComplex cc = build_covering_complex(c.x, 0, c.g, c.images);
        long long chi_base = 0, chi_total = 0, sign = 1;
        for (std::size_t d = 0; d <= c.x.dimension(); ++d, sign = -sign) {
            chi_base += sign * static_cast<long long>(c.x.cell_count(d));
            chi_total += sign * static_cast<long long>(cc.total.cell_count(d));
        }
        ok &= expect(chi_total ==
                         static_cast<long long>(c.g.order()) * chi_base,
                     "Euler characteristic");
    }
    return ok;
}

// ---- criterion 6: property suites ----

CubicalSet random_complex(std::mt19937& rng) {
    CubicalSetBuilder b;
    std::size_t nv = 1 + rng() % 4;
    for (std::size_t v = 0; v < nv; ++v) b.vertex(v);
    struct E { long long id, s, t; };
    std::vector<E> edges;
    std::size_t ne = 1 + rng() % 7;
    for (std::size_t e = 0; e < ne; ++e) {
        long long s = rng() % nv, t = rng() % nv;
        b.edge(e, fv(s), fv(t));
        edges.push_back({static_cast<long long>(e), s, t});
    }
    std::size_t ns = rng() % 4;
    long long sid = 0;
    for (std::size_t s = 0; s < ns; ++s) {
        std::vector<std::array<long long, 4>> options;
        for (const E& m2 : edges)
            for (const E& p1 : edges) {
                if (p1.s != m2.t) continue;
                for (const E& m1 : edges) {
                    if (m1.s != m2.s) continue;
                    for (const E& p2 : edges)
                        if (p2.s == m1.t && p2.t == p1.t)
                            options.push_back({m1.id, p1.id, m2.id, p2.id});
                }
            }
        if (options.empty()) break;
        auto o = options[rng() % options.size()];
        b.square(sid++, fv(o[0]), fv(o[1]), fv(o[2]), fv(o[3]));
    }
    return b.build();
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t maxdim, int spread) {
    std::size_t r = 1 + rng() % maxdim, c = 1 + rng() % maxdim;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = static_cast<int>(rng() % (2 * spread + 1)) - spread;
    return m;
}

bool snf_contract(const IntMatrix& m) {
    SmithDecomposition s = smith_normal_form(m);
    if (s.U * m * s.V != s.D) return false;
    if (s.U * s.Uinv != IntMatrix::identity(m.rows())) return false;
    if (s.V * s.Vinv != IntMatrix::identity(m.cols())) return false;
    for (std::size_t i = 0; i < s.rank; ++i) {
        if (s.D(i, i) <= 0) return false;
        if (i + 1 < s.rank && s.D(i + 1, i + 1) % s.D(i, i) != 0) return false;
    }
    for (std::size_t i = 0; i < s.D.rows(); ++i)
        for (std::size_t j = 0; j < s.D.cols(); ++j)
            if (i != j && s.D(i, j) != 0) return false;
    return true;
}

bool criterion6() {
    bool ok = true;
    std::mt19937 rng(20260824);

    // boundary of a boundary vanishes
    for (int it = 0; it < 220 && ok; ++it) {
        CubicalSet k = random_complex(rng);
        ok &= expect(k.validate().ok && chain_complex(k).validate().ok,
                     "dd = 0 at iteration " + std::to_string(it));
    }

    // SNF decomposition identity, divisibility, and unimodular invariance
    for (int it = 0; it < 200 && ok; ++it)
        ok &= expect(snf_contract(random_matrix(rng, 5, 9)),
                     "SNF contract at iteration " + std::to_string(it));
    for (int it = 0; it < 200 && ok; ++it) {
        IntMatrix m = random_matrix(rng, 4, 6);
        IntMatrix u = IntMatrix::identity(m.rows()), v = IntMatrix::identity(m.cols());
        for (int step = 0; step < 6; ++step) {
            std::size_t a = rng() % m.rows(), b = rng() % m.rows();
            int c = static_cast<int>(rng() % 5) - 2;
            if (a != b)
                for (std::size_t j = 0; j < m.rows(); ++j) u(a, j) += c * u(b, j);
            a = rng() % m.cols(), b = rng() % m.cols();
            c = static_cast<int>(rng() % 5) - 2;
            if (a != b)
                for (std::size_t i = 0; i < m.cols(); ++i) v(i, a) += c * v(i, b);
        }
        ok &= expect(smith_normal_form(m).D.is_zero()
                         ? smith_normal_form(u * m * v).D.is_zero()
                         : smith_normal_form(u * m * v).diagonal() ==
                               smith_normal_form(m).diagonal(),
                     "unimodular invariance at iteration " + std::to_string(it));
    }

    // action-groupoid projections are coverings
    std::vector<FinGroup> groups{FinGroup::cyclic(4), FinGroup::klein(),
                                 FinGroup::symmetric3(), FinGroup::dihedral(4)};
    for (int it = 0; it < 200 && ok; ++it) {
        const FinGroup& G = groups[rng() % groups.size()];
        std::vector<Elt> gens;
        for (std::size_t i = 0, n = 1 + rng() % 2; i < n; ++i)
            gens.push_back(rng() % G.order());
        std::set<Elt> sub = G.generated_subgroup(gens);
        std::set<ArrowId> arrows;
        for (Elt e : sub) arrows.insert(static_cast<ArrowId>(e));
        ActionGroupoidResult cover =
            cover_from_subgroup(group_as_groupoid(G), 0, arrows);
        ok &= expect(cover.projection.is_covering().ok,
                     "coset cover at iteration " + std::to_string(it));
    }

    // unique lifting, by exhaustive search over the covering's arrows
    int lift_checks = 0;
    for (const FinGroup& G : {FinGroup::cyclic(4), FinGroup::klein(),
                              FinGroup::symmetric3()}) {
        UniversalCoverOfGroup uc = universal_cover_of_group(G);
        const ExplicitGroupoid& base = uc.projection.target();
        for (int it = 0; it < 80; ++it) {
            std::size_t len = 1 + rng() % 3;
            std::vector<ArrowId> word;
            for (std::size_t i = 0; i < len; ++i)
                word.push_back(static_cast<ArrowId>(rng() % G.order()));
            ObjId end = static_cast<ObjId>(rng() % G.order());
            std::vector<ArrowId> lift = uc.projection.lift_sequence(word, end);
            // count all composable lifts ending at `end` by brute force
            std::vector<std::vector<ArrowId>> partial{{}};
            for (std::size_t i = len; i-- > 0;) {
                std::vector<std::vector<ArrowId>> next;
                for (const auto& tail : partial) {
                    ObjId at = tail.empty() ? end
                                            : uc.groupoid.arrow(tail.front()).src;
                    for (const Arrow& a : uc.groupoid.arrows())
                        if (a.tgt == at && uc.projection.map_arrow(a.id) == word[i]) {
                            std::vector<ArrowId> w{a.id};
                            w.insert(w.end(), tail.begin(), tail.end());
                            next.push_back(std::move(w));
                        }
                }
                partial = std::move(next);
            }
            ok &= expect(partial.size() == 1 && partial.front() == lift,
                         "lift uniqueness at iteration " + std::to_string(it));
            ++lift_checks;
            if (!ok) break;
        }
    }
    ok &= expect(lift_checks >= 200, "lift check volume");

    // the derivation law d(uv) = d(u)^{phi v} + d(v)
    std::vector<FinGroup> small{FinGroup::cyclic(2), FinGroup::cyclic(3),
                                FinGroup::klein(), FinGroup::symmetric3()};
    for (int it = 0; it < 200 && ok; ++it) {
        const FinGroup& G = small[rng() % small.size()];
        std::size_t rank = 1 + rng() % 3;
        std::vector<std::string> names;
        std::vector<Elt> images;
        for (std::size_t i = 0; i < rank; ++i) {
            names.push_back("s" + std::to_string(i));
            images.push_back(rng() % G.order());
        }
        GroupMorphismToFin phi(GroupPresentation::free_group(names), G, images);
        auto [dphi, d] = derived_module(phi);
        auto rand_word = [&] {
            Word w;
            for (std::size_t i = 0, len = rng() % 6; i < len; ++i)
                w.push_back(letter(rng() % rank, rng() % 2 == 0));
            return w;
        };
        Word u = rand_word(), v = rand_word();
        ModuleElement lhs = d.evaluate(concat(u, v));
        ModuleElement rhs = translate(d.evaluate(u), G, phi.eval(v));
        add_into(rhs, d.evaluate(v));
        ok &= expect(dphi.restriction().elements_equal(lhs, rhs),
                     "derivation law at iteration " + std::to_string(it));
    }

    // totab of a connected presentation = vertex abelianisation + Z^(V-1)
    for (int it = 0; it < 200 && ok; ++it) {
        std::size_t nv = 1 + rng() % 5;
        std::vector<long long> vertices;
        for (std::size_t v = 0; v < nv; ++v) vertices.push_back(v);
        std::vector<GraphEdge> edges;
        for (std::size_t v = 1; v < nv; ++v)  // spanning path keeps it connected
            edges.push_back({"t" + std::to_string(v), static_cast<long long>(v - 1),
                             static_cast<long long>(v)});
        for (std::size_t e = 0, n = rng() % 4; e < n; ++e)
            edges.push_back({"x" + std::to_string(e),
                             static_cast<long long>(rng() % nv),
                             static_cast<long long>(rng() % nv)});
        PresentedGroupoid free_pg(vertices, edges, {});
        SpanningForest f = free_pg.spanning_forest();
        std::vector<GroupoidRelation> relations;
        for (std::size_t r = 0, n = edges.empty() ? 0 : rng() % 3; r < n; ++r) {
            // random walk closed up through the tree
            Word w;
            long long at = static_cast<long long>(rng() % nv), start = at;
            for (std::size_t step = 0, len = 1 + rng() % 3; step < len; ++step) {
                std::size_t ei = rng() % edges.size();
                bool fwd = edges[ei].src == at;
                bool bwd = edges[ei].tgt == at;
                if (!fwd && !bwd) continue;
                if (fwd && bwd) fwd = rng() % 2 == 0;
                w.push_back(letter(ei, !fwd));
                at = fwd ? edges[ei].tgt : edges[ei].src;
            }
            Word back = concat(inverse(free_pg.tree_path_from_root(f, at)),
                               free_pg.tree_path_from_root(f, start));
            relations.push_back({reduce(concat(w, back)), {}});
        }
        PresentedGroupoid pg(vertices, edges, relations);
        AbelianInvariants lhs = pg.totab().invariants();
        AbelianInvariants rhs = pg.vertex_abelianisation(0)
                                    .direct_sum(FPAbelianGroup::free_abelian(nv - 1))
                                    .invariants();
        ok &= expect(lhs == rhs, "totab split at iteration " + std::to_string(it));
    }

    // homology of a point
    CubicalSet pt = CubicalSetBuilder().vertex(0).build();
    ok &= expect(homology(pt, 0).invariants() == inv({}, 1), "point H_0");
    for (std::size_t n = 1; n <= 200 && ok; ++n)
        ok &= expect(homology(pt, n).invariants() == inv({}, 0),
                     "point H_" + std::to_string(n));

    return ok;
}

}  // namespace

int main() {
    report(1, "Klein universal cover and relation lifts", criterion1());
    std::vector<CorpusCase> cases = corpus();
    report(2, "two-row comparison over the corpus", criterion2(cases));
    report(3, "exact sequence and rank identity", criterion3(cases));
    report(4, "dimension-1 Hurewicz comparison", criterion4());
    report(5, "covering-complex invariants", criterion5());
    report(6, "randomised property suites", criterion6());
    return failures == 0 ? 0 : 1;
}
