/**
 * cgt: command-line verifier for the groupoid/covering/derived-module toolkit.
 *
 * One verb per library operation. The JSON report goes to stdout (or --out);
 * a one-line human summary goes to stderr. Exit 0 on pass, 2 when a verified
 * property fails, 1 on malformed input.
 */

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cgt/covering_complex.hpp"
#include "cgt/crowell.hpp"
#include "cgt/json_io.hpp"
#include "cgt/pi1.hpp"
#include "cgt/smith.hpp"

using namespace cgt;

namespace {

struct Output {
    std::string out_path;
    std::string format = "json";
};

int emit(const Output& o, const Json& report, const std::string& summary, bool pass) {
    std::string body = o.format == "text" ? summary + "\n" : report.dump(2) + "\n";
    if (o.out_path.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(o.out_path);
        if (!f) throw std::invalid_argument("cannot write " + o.out_path);
        f << body;
    }
    std::cerr << summary << "\n";
    return pass ? 0 : 2;
}

Json exactness_to_json(const ExactnessVerdict& v) {
    return Json{{"f_injective", v.f_injective},
                {"middle_exact", v.middle_exact},
                {"g_surjective", v.g_surjective},
                {"short_exact", v.short_exact()}};
}

Json verdict_issues(const std::vector<std::string>& issues) {
    Json a = Json::array();
    for (const std::string& s : issues) a.push_back(s);
    return a;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(tok);
    return out;
}

std::set<long long> parse_vertex_set(const std::string& s) {
    std::set<long long> out;
    for (const std::string& t : split_commas(s)) out.insert(std::stoll(t));
    return out;
}

/// A groupoid file is presented ("vertices") or explicit ("objects");
/// explicit ones are converted for presentation-level operations.
PresentedGroupoid load_presented(const std::string& path) {
    Json j = load_json_file(path);
    if (j.contains("vertices")) return presented_groupoid_from_json(j);
    if (j.contains("objects")) return to_presented(explicit_groupoid_from_json(j));
    throw std::invalid_argument(path + ": expected \"vertices\" or \"objects\"");
}

/// phi on the pi1 vertex group of a complex: images keyed by generator name.
std::vector<Elt> images_by_name(const Json& phi_json, const GroupPresentation& vg,
                                const FinGroup& G) {
    const Json& im = phi_json.at("images");
    std::vector<Elt> images;
    for (const std::string& gen : vg.generators) {
        if (!im.contains(gen))
            throw std::invalid_argument("phi: no image for generator " + gen);
        images.push_back(G.element_by_name(im.at(gen).get<std::string>()));
    }
    return images;
}

FinGroup group_of_phi_file(const Json& j, const std::string& phi_path) {
    std::string gpath = j.at("group").get<std::string>();
    if (!gpath.empty() && gpath[0] != '/')
        gpath = dirname_of(phi_path) + "/" + gpath;
    return group_from_json(load_json_file(gpath));
}

std::string inv_str(const AbelianInvariants& i) { return i.to_string(); }

int run_snf(const std::string& path, const Output& o) {
    IntMatrix m = matrix_from_json(load_json_file(path));
    SmithDecomposition s = smith_normal_form(m);
    Json diag = Json::array();
    for (const Int& d : s.diagonal()) diag.push_back(d.str());
    Json report{{"rank", s.rank},
                {"diagonal", std::move(diag)},
                {"U", matrix_to_json(s.U)},
                {"D", matrix_to_json(s.D)},
                {"V", matrix_to_json(s.V)}};
    std::string summary = "snf: rank " + std::to_string(s.rank);
    return emit(o, report, summary, true);
}

int run_abelianise(const std::string& path, long long basepoint, const Output& o) {
    PresentedGroupoid pg = load_presented(path);
    FPAbelianGroup ab = pg.vertex_abelianisation(basepoint);
    return emit(o, invariants_to_json(ab.invariants()),
                "abelianise: vertex group at " + std::to_string(basepoint) + " -> " +
                    inv_str(ab.invariants()),
                true);
}

int run_totab(const std::string& path, const Output& o) {
    PresentedGroupoid pg = load_presented(path);
    FPAbelianGroup ab = pg.totab();
    return emit(o, invariants_to_json(ab.invariants()),
                "totab: " + inv_str(ab.invariants()), true);
}

ActionGroupoidResult load_action_groupoid(const std::string& groupoid_path,
                                          const std::string& action_path) {
    ExplicitGroupoid base = explicit_groupoid_from_json(load_json_file(groupoid_path));
    Verdict bv = base.validate();
    if (!bv.ok)
        throw std::invalid_argument("base groupoid invalid: " + bv.issues.front());
    GroupoidAction action = action_from_json(load_json_file(action_path), base);
    return action_groupoid(action);
}

int run_cover_check(const std::string& groupoid_path, const std::string& action_path,
                    const Output& o) {
    ActionGroupoidResult ag = load_action_groupoid(groupoid_path, action_path);
    Verdict morph = ag.projection.validate();
    Verdict cov = ag.projection.is_covering();
    Verdict fib = ag.projection.is_fibration();
    Json report{{"morphism_ok", morph.ok},
                {"covering", cov.ok},
                {"fibration", fib.ok},
                {"issues", verdict_issues(cov.issues)}};
    bool pass = morph.ok && cov.ok;
    return emit(o, report,
                std::string("cover-check: ") + (pass ? "covering" : "not a covering"),
                pass);
}

int run_cover_build(const std::string& groupoid_path, const std::string& action_path,
                    const Output& o) {
    ActionGroupoidResult ag = load_action_groupoid(groupoid_path, action_path);
    Json obj_map = Json::object();
    for (ObjId a : ag.groupoid.objects())
        obj_map[std::to_string(a)] = ag.projection.map_object(a);
    Json arr_map = Json::object();
    for (const Arrow& a : ag.groupoid.arrows())
        arr_map[std::to_string(a.id)] = ag.projection.map_arrow(a.id);
    Json report{{"total", explicit_groupoid_to_json(ag.groupoid)},
                {"projection", Json{{"objects", std::move(obj_map)},
                                    {"arrows", std::move(arr_map)}}}};
    return emit(o, report,
                "cover-build: " + std::to_string(ag.groupoid.objects().size()) +
                    " objects, " + std::to_string(ag.groupoid.arrows().size()) +
                    " arrows",
                true);
}

int run_lift(const std::string& phi_path, const std::string& word_arg,
             const std::string& anchor_name, const Output& o) {
    Json pj = load_json_file(phi_path);
    GroupMorphismToFin phi = phi_from_json(pj, phi_path);
    const FinGroup& G = phi.codomain();
    Json toks = Json::array();
    for (const std::string& t : split_commas(word_arg)) toks.push_back(t);
    Word w = word_from_json(toks, phi.domain().generators);
    Elt anchor = anchor_name.empty() ? G.identity() : G.element_by_name(anchor_name);

    PullbackGroupoid pb = pullback_groupoid(phi);
    Word lifted = lift_word(phi, pb, w, anchor);
    std::vector<std::string> names;
    for (const GraphEdge& e : pb.groupoid.edges()) names.push_back(e.name);
    Elt start = G.mul(phi.eval(w), anchor);
    Json report{{"word", word_to_json(w, phi.domain().generators)},
                {"anchor", G.name(anchor)},
                {"lift", word_to_json(lifted, names)},
                {"start", G.name(start)},
                {"end", G.name(anchor)}};
    return emit(o, report,
                "lift: " + G.name(start) + " -> " + G.name(anchor) + " through " +
                    std::to_string(lifted.size()) + " edges",
                true);
}

int run_derived_module(const std::string& phi_path, const Output& o) {
    GroupMorphismToFin phi = phi_from_json(load_json_file(phi_path), phi_path);
    auto [dphi, universal] = derived_module(phi);
    Json report{{"generators", dphi.generator_count()},
                {"group_order", phi.codomain().order()},
                {"restriction", invariants_to_json(dphi.restriction().invariants())},
                {"relations", matrix_to_json(dphi.restriction().relations())}};
    return emit(o, report,
                "derived-module: restriction " +
                    inv_str(dphi.restriction().invariants()),
                true);
}

int run_crowell(const std::string& phi_path, const Output& o) {
    GroupMorphismToFin phi = phi_from_json(load_json_file(phi_path), phi_path);
    CrowellSequence cs = crowell_sequence(phi);
    Json report{{"nab", invariants_to_json(cs.kernel.nab.invariants())},
                {"dphi", invariants_to_json(cs.dphi.restriction().invariants())},
                {"ig", invariants_to_json(cs.ig.restriction().invariants())},
                {"exactness", exactness_to_json(cs.verdict)}};
    bool pass = cs.verdict.short_exact();
    return emit(o, report,
                std::string("crowell: ") + (pass ? "short exact" : "NOT short exact"),
                pass);
}

int run_verify_thm41(const std::string& phi_path, const Output& o) {
    GroupMorphismToFin phi = phi_from_json(load_json_file(phi_path), phi_path);
    Theorem41Report r = verify_theorem41(phi);
    Json report{
        {"rows",
         Json{{"top",
               Json{{"nab", invariants_to_json(r.top.kernel.nab.invariants())},
                    {"dphi", invariants_to_json(r.top.dphi.restriction().invariants())},
                    {"ig", invariants_to_json(r.top.ig.restriction().invariants())}}},
              {"bottom",
               Json{{"nab", invariants_to_json(r.top.kernel.nab.invariants())},
                    {"fhat_totab", invariants_to_json(r.fhat_totab.invariants())},
                    {"gtilde_totab", invariants_to_json(r.gtilde_totab.invariants())}}}}},
        {"exactness", Json{{"top", exactness_to_json(r.top_exact)},
                           {"bottom", exactness_to_json(r.bottom_exact)}}},
        {"vertical_isos",
         Json{{"left", r.left_iso}, {"eta", r.eta_iso}, {"xi", r.xi_iso}}},
        {"squares_commute", r.squares_commute},
        {"invariants", Json{{"middle", invariants_to_json(r.fhat_totab.invariants())}}},
        {"issues", verdict_issues(r.issues)},
        {"ok", r.ok}};
    return emit(o, report,
                std::string("verify-thm41: ") + (r.ok ? "ok" : "FAILED") +
                    ", middle " + inv_str(r.fhat_totab.invariants()),
                r.ok);
}

int run_homology(const std::string& complex_path, std::size_t dim,
                 const std::string& vertices, const Output& o) {
    CubicalSet x = cubical_set_from_json(load_json_file(complex_path));
    Verdict v = x.validate();
    if (!v.ok) throw std::invalid_argument("complex invalid: " + v.issues.front());
    FPAbelianGroup h = vertices.empty()
                           ? homology(x, dim)
                           : relative_homology(x, parse_vertex_set(vertices), dim);
    return emit(o, invariants_to_json(h.invariants()),
                "homology: H_" + std::to_string(dim) + " = " + inv_str(h.invariants()),
                true);
}

int run_hurewicz(const std::string& complex_path, const std::string& vertices,
                 const Output& o) {
    CubicalSet x = cubical_set_from_json(load_json_file(complex_path));
    Verdict v = x.validate();
    if (!v.ok) throw std::invalid_argument("complex invalid: " + v.issues.front());
    HurewiczReport r = hurewicz_compare(x, parse_vertex_set(vertices));
    Json report{{"groupoid_side", invariants_to_json(r.groupoid_side.invariants())},
                {"homology_side", invariants_to_json(r.homology_side.invariants())},
                {"comparison_matrix", matrix_to_json(r.comparison_matrix)},
                {"invariants_match", r.invariants_match},
                {"comparison_iso", r.comparison_iso},
                {"rel0_applicable", r.rel0_applicable},
                {"rel0_side", r.rel0_applicable
                                  ? invariants_to_json(r.rel0_side.invariants())
                                  : Json(nullptr)},
                {"rel0_mutually_inverse", r.rel0_mutually_inverse},
                {"issues", verdict_issues(r.issues)},
                {"verdict", r.verdict}};
    return emit(o, report,
                std::string("hurewicz: ") + (r.verdict ? "ok" : "FAILED") + ", both " +
                    inv_str(r.groupoid_side.invariants()),
                r.verdict);
}

int run_build_cover(const std::string& complex_path, long long basepoint,
                    const std::string& phi_path, const Output& o) {
    CubicalSet x = cubical_set_from_json(load_json_file(complex_path));
    Verdict v = x.validate();
    if (!v.ok) throw std::invalid_argument("complex invalid: " + v.issues.front());
    Json pj = load_json_file(phi_path);
    FinGroup G = group_of_phi_file(pj, phi_path);
    GroupPresentation vg = pi1_presentation(x, {basepoint}).vertex_group(basepoint);
    std::vector<Elt> images = images_by_name(pj, vg, G);
    CoveringComplex cc = build_covering_complex(x, basepoint, G, images);
    Json proj = Json::object();
    for (std::size_t n = 0; n < cc.projection.size(); ++n) {
        Json m = Json::object();
        for (const auto& [up, down] : cc.projection[n]) m[std::to_string(up)] = down;
        proj[std::to_string(n)] = std::move(m);
    }
    Json report{{"group_order", G.order()},
                {"total", cubical_set_to_json(cc.total)},
                {"projection", std::move(proj)},
                {"fiber_over_basepoint", cc.fiber_over_basepoint}};
    return emit(o, report,
                "build-cover: " + std::to_string(G.order()) + " sheets, " +
                    std::to_string(cc.total.cell_count(0)) + " vertices",
                true);
}

int run_verify_thm55(const std::string& complex_path, long long basepoint,
                     const std::string& phi_path, const Output& o) {
    CubicalSet x = cubical_set_from_json(load_json_file(complex_path));
    Verdict v = x.validate();
    if (!v.ok) throw std::invalid_argument("complex invalid: " + v.issues.front());
    Json pj = load_json_file(phi_path);
    FinGroup G = group_of_phi_file(pj, phi_path);
    GroupPresentation vg = pi1_presentation(x, {basepoint}).vertex_group(basepoint);
    std::vector<Elt> images = images_by_name(pj, vg, G);
    Theorem55Report r = verify_theorem55(x, basepoint, G, images);
    Json report{{"fhat_totab", invariants_to_json(r.fhat_totab.invariants())},
                {"relative_h1", invariants_to_json(r.relative_h1.invariants())},
                {"dphi_restriction",
                 invariants_to_json(r.dphi_restriction.invariants())},
                {"derivation_matrix", matrix_to_json(r.derivation_matrix)},
                {"issues", verdict_issues(r.issues)},
                {"ok", r.ok}};
    return emit(o, report,
                std::string("verify-thm55: ") + (r.ok ? "ok" : "FAILED") + ", all " +
                    inv_str(r.fhat_totab.invariants()),
                r.ok);
}

int run_validate(const std::string& complex_path, const std::string& groupoid_path,
                 const Output& o) {
    Verdict v;
    std::string what;
    if (!complex_path.empty()) {
        what = "complex";
        v = cubical_set_from_json(load_json_file(complex_path)).validate();
    } else {
        what = "groupoid";
        Json j = load_json_file(groupoid_path);
        if (j.contains("objects"))
            v = explicit_groupoid_from_json(j).validate();
        else
            presented_groupoid_from_json(j);  // construction validates
    }
    Json report{{"ok", v.ok}, {"issues", verdict_issues(v.issues)}};
    std::string summary = "validate: " + what + (v.ok ? " ok" : " INVALID");
    if (!v.ok) {
        // invalid input is an input error, not a failed verification
        std::string body = o.format == "text" ? summary : report.dump(2);
        if (o.out_path.empty())
            std::cout << body << "\n";
        else
            std::ofstream(o.out_path) << body << "\n";
        std::cerr << summary;
        for (const std::string& s : v.issues) std::cerr << "\n  " << s;
        std::cerr << "\n";
        return 1;
    }
    return emit(o, report, summary, true);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"groupoid covering/derived-module verifier"};
    app.require_subcommand(1);

    Output out;
    std::string matrix_path, groupoid_path, action_path, phi_path, complex_path;
    std::string word_arg, anchor, vertices;
    long long basepoint = 0;
    std::size_t dim = 0;

    auto common = [&](CLI::App* c) {
        c->add_option("--out", out.out_path, "write the report to this path");
        c->add_option("--format", out.format, "json or text")
            ->check(CLI::IsMember({"json", "text"}));
        return c;
    };

    auto* c_snf = common(app.add_subcommand("snf", "Smith normal form of a matrix"));
    c_snf->add_option("matrix", matrix_path, "matrix JSON file")->required();

    auto* c_ab = common(app.add_subcommand("abelianise", "vertex abelianisation"));
    c_ab->add_option("--groupoid", groupoid_path)->required();
    c_ab->add_option("--basepoint", basepoint)->required();

    auto* c_totab = common(app.add_subcommand("totab", "universal abelianisation"));
    c_totab->add_option("--groupoid", groupoid_path)->required();

    auto* c_cc = common(app.add_subcommand("cover-check",
                                           "is the action groupoid a covering"));
    c_cc->add_option("--groupoid", groupoid_path)->required();
    c_cc->add_option("--action", action_path)->required();

    auto* c_cb = common(app.add_subcommand("cover-build",
                                           "build the action-groupoid cover"));
    c_cb->add_option("--groupoid", groupoid_path)->required();
    c_cb->add_option("--action", action_path)->required();

    auto* c_lift = common(app.add_subcommand("lift", "lift a word through a cover"));
    c_lift->add_option("--phi", phi_path)->required();
    c_lift->add_option("--word", word_arg, "comma-separated letters, ~ inverts")
        ->required();
    c_lift->add_option("--basepoint", anchor, "anchor element (default identity)");

    auto* c_dm = common(app.add_subcommand("derived-module", "derived module of phi"));
    c_dm->add_option("--phi", phi_path)->required();

    auto* c_cr = common(app.add_subcommand("crowell", "exact sequence of phi"));
    c_cr->add_option("--phi", phi_path)->required();

    auto* c_41 = common(app.add_subcommand("verify-thm41", "two-row comparison"));
    c_41->add_option("--phi", phi_path)->required();

    auto* c_h = common(app.add_subcommand("homology", "homology of a complex"));
    c_h->add_option("--complex", complex_path)->required();
    c_h->add_option("--dim", dim)->required();
    c_h->add_option("--vertices", vertices, "relative to these vertices");

    auto* c_hw = common(app.add_subcommand("hurewicz", "dimension-1 comparison"));
    c_hw->add_option("--complex", complex_path)->required();
    c_hw->add_option("--vertices", vertices)->required();

    auto* c_bc = common(app.add_subcommand("build-cover", "covering complex of phi"));
    c_bc->add_option("--complex", complex_path)->required();
    c_bc->add_option("--basepoint", basepoint)->required();
    c_bc->add_option("--phi", phi_path)->required();

    auto* c_55 = common(app.add_subcommand("verify-thm55", "three-invariant check"));
    c_55->add_option("--complex", complex_path)->required();
    c_55->add_option("--basepoint", basepoint)->required();
    c_55->add_option("--phi", phi_path)->required();

    auto* c_val = common(app.add_subcommand("validate", "structural validation"));
    c_val->add_option("--complex", complex_path);
    c_val->add_option("--groupoid", groupoid_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;  // any command-line problem is an input error
    }

    try {
        if (c_snf->parsed()) return run_snf(matrix_path, out);
        if (c_ab->parsed()) return run_abelianise(groupoid_path, basepoint, out);
        if (c_totab->parsed()) return run_totab(groupoid_path, out);
        if (c_cc->parsed()) return run_cover_check(groupoid_path, action_path, out);
        if (c_cb->parsed()) return run_cover_build(groupoid_path, action_path, out);
        if (c_lift->parsed()) return run_lift(phi_path, word_arg, anchor, out);
        if (c_dm->parsed()) return run_derived_module(phi_path, out);
        if (c_cr->parsed()) return run_crowell(phi_path, out);
        if (c_41->parsed()) return run_verify_thm41(phi_path, out);
        if (c_h->parsed()) return run_homology(complex_path, dim, vertices, out);
        if (c_hw->parsed()) return run_hurewicz(complex_path, vertices, out);
        if (c_bc->parsed()) return run_build_cover(complex_path, basepoint, phi_path, out);
        if (c_55->parsed()) return run_verify_thm55(complex_path, basepoint, phi_path, out);
        if (c_val->parsed()) {
            if (complex_path.empty() == groupoid_path.empty())
                throw std::invalid_argument(
                    "validate: exactly one of --complex/--groupoid required");
            return run_validate(complex_path, groupoid_path, out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
