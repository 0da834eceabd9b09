/**
 * JSON schemas for the file formats the CLI consumes and emits.
 *
 * Integers that may exceed machine width (matrix entries, invariant factors)
 * travel as decimal strings. Object keys keep insertion order so reports are
 * byte-deterministic.
 */

#ifndef CGT_JSON_IO_HPP
#define CGT_JSON_IO_HPP

#include <fstream>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cgt/abelian.hpp"
#include "cgt/action.hpp"
#include "cgt/cubical.hpp"
#include "cgt/explicit_groupoid.hpp"
#include "cgt/fin_group.hpp"
#include "cgt/group_morphism.hpp"
#include "cgt/int_matrix.hpp"
#include "cgt/presentation.hpp"
#include "cgt/presented_groupoid.hpp"

namespace cgt {

using Json = nlohmann::ordered_json;

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return Json::parse(in);  // parse_error carries the byte position
}

// ---- matrices ----

inline Json matrix_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).str());
        rows.push_back(std::move(r));
    }
    return rows;
}

inline IntMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix: expected an array of rows");
    std::size_t nr = j.size(), nc = nr ? j.at(0).size() : 0;
    IntMatrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i) {
        const Json& row = j.at(i);
        if (!row.is_array() || row.size() != nc)
            throw std::invalid_argument("matrix: ragged row " + std::to_string(i));
        for (std::size_t k = 0; k < nc; ++k) {
            const Json& e = row.at(k);
            if (e.is_string())
                m(i, k) = Int(e.get<std::string>());
            else if (e.is_number_integer())
                m(i, k) = Int(e.get<long long>());
            else
                throw std::invalid_argument("matrix: entry must be an integer or string");
        }
    }
    return m;
}

inline Json invariants_to_json(const AbelianInvariants& inv) {
    Json t = Json::array();
    for (const Int& d : inv.torsion) t.push_back(d.str());
    return Json{{"invariants", std::move(t)}, {"free_rank", inv.free_rank}};
}

// ---- finite groups ----

inline Json group_to_json(const FinGroup& g) {
    Json elements = Json::array();
    for (Elt e = 0; e < g.order(); ++e) elements.push_back(g.name(e));
    Json table = Json::array();
    for (Elt a = 0; a < g.order(); ++a) {
        Json row = Json::array();
        for (Elt b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
        table.push_back(std::move(row));
    }
    return Json{{"elements", std::move(elements)}, {"table", std::move(table)}};
}

inline FinGroup group_from_json(const Json& j) {
    if (!j.contains("elements") || !j.contains("table"))
        throw std::invalid_argument("group: want {\"elements\":[...],\"table\":[[...]]}");
    std::vector<std::string> names = j.at("elements").get<std::vector<std::string>>();
    std::vector<std::vector<Elt>> table;
    for (const Json& row : j.at("table"))
        table.push_back(row.get<std::vector<Elt>>());
    return FinGroup(std::move(names), std::move(table));
}

// ---- words ----

/// ["a", "~b"] with ~ marking the formal inverse, resolved against `names`.
inline Word word_from_json(const Json& j, const std::vector<std::string>& names) {
    Word w;
    for (const Json& tok : j) {
        std::string s = tok.get<std::string>();
        bool inv = !s.empty() && s[0] == '~';
        if (inv) s = s.substr(1);
        std::size_t gi = names.size();
        for (std::size_t k = 0; k < names.size(); ++k)
            if (names[k] == s) {
                gi = k;
                break;
            }
        if (gi == names.size())
            throw std::invalid_argument("word: unknown generator " + s);
        w.push_back(letter(gi, inv));
    }
    return w;
}

inline Json word_to_json(const Word& w, const std::vector<std::string>& names) {
    Json out = Json::array();
    for (Letter l : w)
        out.push_back((letter_inverted(l) ? "~" : "") + names.at(letter_gen(l)));
    return out;
}

// ---- morphisms into finite groups ----
// {"group": "relative/path.json", "images": {"x": "a", ...},
//  "relators": [["x","x"], ...]}    (relators optional; omitted = free domain)

inline std::string dirname_of(const std::string& path) {
    std::size_t cut = path.find_last_of('/');
    return cut == std::string::npos ? std::string(".") : path.substr(0, cut);
}

inline GroupMorphismToFin phi_from_json(const Json& j, const std::string& phi_path) {
    if (!j.contains("group") || !j.contains("images"))
        throw std::invalid_argument("phi: want {\"group\":file,\"images\":{...}}");
    std::string gpath = j.at("group").get<std::string>();
    if (!gpath.empty() && gpath[0] != '/')
        gpath = dirname_of(phi_path) + "/" + gpath;
    FinGroup G = group_from_json(load_json_file(gpath));

    std::vector<std::string> gens;
    std::vector<Elt> images;
    for (const auto& [name, val] : j.at("images").items()) {
        gens.push_back(name);
        images.push_back(G.element_by_name(val.get<std::string>()));
    }
    std::vector<Word> relators;
    if (j.contains("relators"))
        for (const Json& r : j.at("relators")) relators.push_back(word_from_json(r, gens));
    return GroupMorphismToFin(GroupPresentation(std::move(gens), std::move(relators)),
                              std::move(G), std::move(images));
}

// ---- explicit groupoids ----
// {"objects":[...], "arrows":[{"id","src","tgt"}], "compose":[[g,h,gh],...],
//  "identities":{obj: arrow}, "inverses":{arrow: arrow}}

inline ExplicitGroupoid explicit_groupoid_from_json(const Json& j) {
    for (const char* key : {"objects", "arrows", "compose", "identities", "inverses"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("groupoid: missing \"") + key + "\"");
    std::vector<ObjId> objects = j.at("objects").get<std::vector<ObjId>>();
    std::vector<Arrow> arrows;
    for (const Json& a : j.at("arrows"))
        arrows.push_back({a.at("id").get<ArrowId>(), a.at("src").get<ObjId>(),
                          a.at("tgt").get<ObjId>()});
    std::map<std::pair<ArrowId, ArrowId>, ArrowId> compose;
    for (const Json& t : j.at("compose")) {
        if (t.size() != 3)
            throw std::invalid_argument("groupoid: compose entries are [g,h,gh]");
        compose[{t.at(0).get<ArrowId>(), t.at(1).get<ArrowId>()}] = t.at(2).get<ArrowId>();
    }
    std::map<ObjId, ArrowId> identities;
    for (const auto& [key, val] : j.at("identities").items())
        identities[std::stoll(key)] = val.get<ArrowId>();
    std::map<ArrowId, ArrowId> inverses;
    for (const auto& [key, val] : j.at("inverses").items())
        inverses[std::stoll(key)] = val.get<ArrowId>();
    return ExplicitGroupoid(std::move(objects), std::move(arrows), std::move(compose),
                            std::move(identities), std::move(inverses));
}

inline Json explicit_groupoid_to_json(const ExplicitGroupoid& g) {
    Json arrows = Json::array();
    for (const Arrow& a : g.arrows())
        arrows.push_back(Json{{"id", a.id}, {"src", a.src}, {"tgt", a.tgt}});
    Json compose = Json::array();
    for (const auto& [pair, res] : g.compose_table())
        compose.push_back(Json::array({pair.first, pair.second, res}));
    Json identities = Json::object();
    for (const auto& [o, e] : g.identity_table())
        identities[std::to_string(o)] = e;
    Json inverses = Json::object();
    for (const auto& [a, ai] : g.inverse_table())
        inverses[std::to_string(a)] = ai;
    return Json{{"objects", g.objects()},
                {"arrows", std::move(arrows)},
                {"compose", std::move(compose)},
                {"identities", std::move(identities)},
                {"inverses", std::move(inverses)}};
}

// ---- presented groupoids ----
// {"vertices":[...], "edges":[{"id","src","tgt"}],
//  "relations":[{"left":["a","~b"],"right":["c"]}]}

inline PresentedGroupoid presented_groupoid_from_json(const Json& j) {
    for (const char* key : {"vertices", "edges"})
        if (!j.contains(key))
            throw std::invalid_argument(std::string("groupoid: missing \"") + key + "\"");
    std::vector<long long> vertices = j.at("vertices").get<std::vector<long long>>();
    std::vector<GraphEdge> edges;
    std::vector<std::string> names;
    for (const Json& e : j.at("edges")) {
        edges.push_back({e.at("id").get<std::string>(), e.at("src").get<long long>(),
                         e.at("tgt").get<long long>()});
        names.push_back(edges.back().name);
    }
    std::vector<GroupoidRelation> relations;
    if (j.contains("relations"))
        for (const Json& r : j.at("relations"))
            relations.push_back({word_from_json(r.at("left"), names),
                                 word_from_json(r.at("right"), names)});
    return PresentedGroupoid(std::move(vertices), std::move(edges), std::move(relations));
}

inline Json presented_groupoid_to_json(const PresentedGroupoid& g) {
    std::vector<std::string> names;
    Json edges = Json::array();
    for (const GraphEdge& e : g.edges()) {
        names.push_back(e.name);
        edges.push_back(Json{{"id", e.name}, {"src", e.src}, {"tgt", e.tgt}});
    }
    Json relations = Json::array();
    for (const GroupoidRelation& r : g.relations())
        relations.push_back(Json{{"left", word_to_json(r.left, names)},
                                 {"right", word_to_json(r.right, names)}});
    return Json{{"vertices", g.vertices()},
                {"edges", std::move(edges)},
                {"relations", std::move(relations)}};
}

// ---- cubical sets ----
// {"cells":{"0":[ids], "1":[{"id":..,"faces":{"1-":f,"1+":f}}],
//           "2":[{"id":..,"faces":{"1-":..,"1+":..,"2-":..,"2+":..}}]}}
// A face value is a cell id or {"deg": cell, "idx": [...]}.

inline FaceValue face_value_from_json(const Json& j) {
    if (j.is_number_integer()) return fv(j.get<long long>());
    if (j.is_object() && j.contains("deg"))
        return deg(j.at("deg").get<long long>(),
                   j.value("idx", std::vector<std::size_t>{}));
    throw std::invalid_argument("cubical: face value is a cell id or {\"deg\",\"idx\"}");
}

inline Json face_value_to_json(const FaceValue& f) {
    if (!f.is_degenerate()) return Json(f.cell);
    return Json{{"deg", f.cell}, {"idx", f.degeneracies}};
}

inline CubicalSet cubical_set_from_json(const Json& j) {
    if (!j.contains("cells"))
        throw std::invalid_argument("cubical: missing \"cells\"");
    const Json& cj = j.at("cells");
    std::size_t top = 0;
    for (const auto& [key, val] : cj.items()) {
        std::size_t n = std::stoul(key);
        if (n > top) top = n;
    }
    std::vector<std::vector<long long>> cells(top + 1);
    std::vector<std::map<std::pair<long long, std::size_t>, FaceValue>> faces(top + 1);
    for (const auto& [key, val] : cj.items()) {
        std::size_t n = std::stoul(key);
        for (const Json& c : val) {
            if (n == 0) {
                cells[0].push_back(c.get<long long>());
                continue;
            }
            long long id = c.at("id").get<long long>();
            cells[n].push_back(id);
            const Json& fj = c.at("faces");
            for (std::size_t i = 1; i <= n; ++i)
                for (bool plus : {false, true}) {
                    std::string fk = std::to_string(i) + (plus ? "+" : "-");
                    if (!fj.contains(fk))
                        throw std::invalid_argument("cubical: cell " + std::to_string(id) +
                                                    " lacks face " + fk);
                    faces[n][{id, CubicalSet::slot(i, plus)}] =
                        face_value_from_json(fj.at(fk));
                }
        }
    }
    return CubicalSet(std::move(cells), std::move(faces));
}

inline Json cubical_set_to_json(const CubicalSet& k) {
    Json cj = Json::object();
    for (std::size_t n = 0; n <= k.dimension(); ++n) {
        Json arr = Json::array();
        for (long long c : k.cells(n)) {
            if (n == 0) {
                arr.push_back(c);
                continue;
            }
            Json fj = Json::object();
            for (std::size_t i = 1; i <= n; ++i)
                for (bool plus : {false, true})
                    fj[std::to_string(i) + (plus ? "+" : "-")] =
                        face_value_to_json(k.face(n, c, i, plus));
            arr.push_back(Json{{"id", c}, {"faces", std::move(fj)}});
        }
        cj[std::to_string(n)] = std::move(arr);
    }
    return Json{{"cells", std::move(cj)}};
}

// ---- groupoid actions ----
// {"fibers":{obj:[names]}, "maps":{arrow:{x:y,...}}}; the map of an arrow
// g: p -> q sends the fiber over q into the fiber over p.

inline GroupoidAction action_from_json(const Json& j, const ExplicitGroupoid& base) {
    if (!j.contains("fibers") || !j.contains("maps"))
        throw std::invalid_argument("action: want {\"fibers\":{...},\"maps\":{...}}");
    std::map<ObjId, std::vector<std::string>> fibers;
    std::map<ObjId, std::size_t> sizes;
    for (const auto& [key, val] : j.at("fibers").items()) {
        ObjId p = std::stoll(key);
        fibers[p] = val.get<std::vector<std::string>>();
        sizes[p] = fibers[p].size();
    }
    auto index_in = [&](ObjId p, const std::string& name) {
        const auto& f = fibers.at(p);
        for (std::size_t i = 0; i < f.size(); ++i)
            if (f[i] == name) return i;
        throw std::invalid_argument("action: unknown fiber element " + name +
                                    " over object " + std::to_string(p));
    };
    std::map<ArrowId, std::vector<std::size_t>> maps;
    for (const auto& [key, val] : j.at("maps").items()) {
        ArrowId g = std::stoll(key);
        const Arrow& a = base.arrow(g);
        std::vector<std::size_t> m(fibers.at(a.tgt).size());
        for (const auto& [x, y] : val.items())
            m[index_in(a.tgt, x)] = index_in(a.src, y.get<std::string>());
        if (val.size() != m.size())
            throw std::invalid_argument("action: map of arrow " + std::to_string(g) +
                                        " does not cover the fiber");
        maps[g] = std::move(m);
    }
    return GroupoidAction(base, std::move(sizes), std::move(maps));
}

}  // namespace cgt

#endif
