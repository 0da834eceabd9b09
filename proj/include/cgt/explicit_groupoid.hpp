/**
 * Finite groupoids with full composition data.
 *
 * Composition is written left-to-right: for g: p -> q and h: q -> r the
 * composite gh: p -> r is defined exactly when tgt(g) == src(h).
 */

#ifndef CGT_EXPLICIT_GROUPOID_HPP
#define CGT_EXPLICIT_GROUPOID_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cgt/verdict.hpp"

namespace cgt {

using ObjId = long long;
using ArrowId = long long;

struct Arrow {
    ArrowId id;
    ObjId src;
    ObjId tgt;
};

class ExplicitGroupoid {
public:
    ExplicitGroupoid() = default;

    ExplicitGroupoid(std::vector<ObjId> objects, std::vector<Arrow> arrows,
                     std::map<std::pair<ArrowId, ArrowId>, ArrowId> compose,
                     std::map<ObjId, ArrowId> identities,
                     std::map<ArrowId, ArrowId> inverses)
        : objects_(std::move(objects)),
          arrows_(std::move(arrows)),
          compose_(std::move(compose)),
          identities_(std::move(identities)),
          inverses_(std::move(inverses)) {
        std::sort(objects_.begin(), objects_.end());
        std::sort(arrows_.begin(), arrows_.end(),
                  [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
        for (const Arrow& a : arrows_) by_id_[a.id] = a;
    }

    const std::vector<ObjId>& objects() const { return objects_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    bool has_object(ObjId o) const {
        return std::binary_search(objects_.begin(), objects_.end(), o);
    }
    bool has_arrow(ArrowId a) const { return by_id_.count(a) > 0; }

    const Arrow& arrow(ArrowId a) const {
        auto it = by_id_.find(a);
        if (it == by_id_.end())
            throw std::invalid_argument("groupoid: unknown arrow " + std::to_string(a));
        return it->second;
    }

    ArrowId identity_at(ObjId o) const {
        auto it = identities_.find(o);
        if (it == identities_.end())
            throw std::invalid_argument("groupoid: no identity at object " + std::to_string(o));
        return it->second;
    }

    ArrowId inverse(ArrowId a) const {
        auto it = inverses_.find(a);
        if (it == inverses_.end())
            throw std::invalid_argument("groupoid: no inverse for arrow " + std::to_string(a));
        return it->second;
    }

    bool composable(ArrowId g, ArrowId h) const {
        return compose_.count({g, h}) > 0;
    }

    ArrowId compose(ArrowId g, ArrowId h) const {
        auto it = compose_.find({g, h});
        if (it == compose_.end())
            throw std::invalid_argument("groupoid: (" + std::to_string(g) + "," +
                                        std::to_string(h) + ") not composable");
        return it->second;
    }

    const std::map<std::pair<ArrowId, ArrowId>, ArrowId>& compose_table() const {
        return compose_;
    }
    const std::map<ObjId, ArrowId>& identity_table() const { return identities_; }
    const std::map<ArrowId, ArrowId>& inverse_table() const { return inverses_; }

    /// All arrows with target a (the Costar).
    std::vector<ArrowId> costar(ObjId a) const {
        if (!has_object(a))
            throw std::invalid_argument("costar: unknown object " + std::to_string(a));
        std::vector<ArrowId> out;
        for (const Arrow& g : arrows_)
            if (g.tgt == a) out.push_back(g.id);
        return out;
    }

    /// Exhaustive groupoid-axiom validation.
    Verdict validate() const {
        Verdict v;
        std::set<ObjId> objset(objects_.begin(), objects_.end());
        if (objset.size() != objects_.size()) v.fail("duplicate object id");
        for (const Arrow& a : arrows_) {
            if (!objset.count(a.src))
                v.fail("arrow " + std::to_string(a.id) + " has unknown src");
            if (!objset.count(a.tgt))
                v.fail("arrow " + std::to_string(a.id) + " has unknown tgt");
        }
        // composition defined exactly for tgt(g) == src(h), with correct endpoints
        for (const Arrow& g : arrows_)
            for (const Arrow& h : arrows_) {
                bool should = g.tgt == h.src;
                auto it = compose_.find({g.id, h.id});
                if (should && it == compose_.end())
                    v.fail("missing composite (" + std::to_string(g.id) + "," +
                           std::to_string(h.id) + ")");
                if (!should && it != compose_.end())
                    v.fail("composite (" + std::to_string(g.id) + "," +
                           std::to_string(h.id) + ") defined but tgt(g) != src(h)");
                if (should && it != compose_.end()) {
                    if (!by_id_.count(it->second)) {
                        v.fail("composite of (" + std::to_string(g.id) + "," +
                               std::to_string(h.id) + ") is not an arrow");
                    } else {
                        const Arrow& gh = by_id_.at(it->second);
                        if (gh.src != g.src || gh.tgt != h.tgt)
                            v.fail("composite (" + std::to_string(g.id) + "," +
                                   std::to_string(h.id) + ") has wrong endpoints");
                    }
                }
            }
        if (!v.ok) return v;  // endpoint damage makes the axiom loops unreliable
        // associativity on all composable triples
        for (const Arrow& g : arrows_)
            for (const Arrow& h : arrows_) {
                if (g.tgt != h.src) continue;
                for (const Arrow& k : arrows_) {
                    if (h.tgt != k.src) continue;
                    if (compose(compose(g.id, h.id), k.id) !=
                        compose(g.id, compose(h.id, k.id)))
                        v.fail("associativity fails on (" + std::to_string(g.id) + "," +
                               std::to_string(h.id) + "," + std::to_string(k.id) + ")");
                }
            }
        // identities
        for (ObjId o : objects_) {
            auto it = identities_.find(o);
            if (it == identities_.end()) {
                v.fail("no identity at object " + std::to_string(o));
                continue;
            }
            if (!by_id_.count(it->second)) {
                v.fail("identity at " + std::to_string(o) + " is not an arrow");
                continue;
            }
            const Arrow& e = by_id_.at(it->second);
            if (e.src != o || e.tgt != o)
                v.fail("identity at " + std::to_string(o) + " is not an endoarrow");
        }
        for (const Arrow& g : arrows_) {
            if (identities_.count(g.src) &&
                compose(identities_.at(g.src), g.id) != g.id)
                v.fail("left identity fails at arrow " + std::to_string(g.id));
            if (identities_.count(g.tgt) &&
                compose(g.id, identities_.at(g.tgt)) != g.id)
                v.fail("right identity fails at arrow " + std::to_string(g.id));
        }
        // inverses
        for (const Arrow& g : arrows_) {
            auto it = inverses_.find(g.id);
            if (it == inverses_.end()) {
                v.fail("no inverse for arrow " + std::to_string(g.id));
                continue;
            }
            if (!by_id_.count(it->second)) {
                v.fail("inverse of " + std::to_string(g.id) + " is not an arrow");
                continue;
            }
            const Arrow& gi = by_id_.at(it->second);
            if (gi.src != g.tgt || gi.tgt != g.src) {
                v.fail("inverse of " + std::to_string(g.id) + " has wrong endpoints");
                continue;
            }
            if (identities_.count(g.src) &&
                compose(g.id, gi.id) != identities_.at(g.src))
                v.fail("g g^-1 != id at arrow " + std::to_string(g.id));
            if (identities_.count(g.tgt) &&
                compose(gi.id, g.id) != identities_.at(g.tgt))
                v.fail("g^-1 g != id at arrow " + std::to_string(g.id));
        }
        return v;
    }

    /// Partition of the objects into connected components (by arrows).
    std::vector<std::vector<ObjId>> components() const {
        std::map<ObjId, ObjId> parent;
        for (ObjId o : objects_) parent[o] = o;
        std::function<ObjId(ObjId)> find = [&](ObjId x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const Arrow& a : arrows_) {
            ObjId ra = find(a.src), rb = find(a.tgt);
            if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
        }
        std::map<ObjId, std::vector<ObjId>> comp;
        for (ObjId o : objects_) comp[find(o)].push_back(o);
        std::vector<std::vector<ObjId>> out;
        for (auto& [root, objs] : comp) out.push_back(objs);
        return out;
    }

    bool is_transitive() const { return components().size() <= 1; }

    /// Vertex group at `a` as a one-object groupoid.
    ExplicitGroupoid vertex_group(ObjId a) const {
        if (!has_object(a))
            throw std::invalid_argument("vertex_group: unknown object " + std::to_string(a));
        std::vector<Arrow> loops;
        std::set<ArrowId> keep;
        for (const Arrow& g : arrows_)
            if (g.src == a && g.tgt == a) {
                loops.push_back(g);
                keep.insert(g.id);
            }
        std::map<std::pair<ArrowId, ArrowId>, ArrowId> comp;
        for (const auto& [pair, res] : compose_)
            if (keep.count(pair.first) && keep.count(pair.second)) comp[pair] = res;
        std::map<ObjId, ArrowId> ids{{a, identities_.at(a)}};
        std::map<ArrowId, ArrowId> invs;
        for (ArrowId g : keep) invs[g] = inverses_.at(g);
        return ExplicitGroupoid({a}, loops, comp, ids, invs);
    }

private:
    std::vector<ObjId> objects_;
    std::vector<Arrow> arrows_;
    std::map<std::pair<ArrowId, ArrowId>, ArrowId> compose_;
    std::map<ObjId, ArrowId> identities_;
    std::map<ArrowId, ArrowId> inverses_;
    std::map<ArrowId, Arrow> by_id_;
};

}  // namespace cgt

#endif
