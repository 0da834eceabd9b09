/**
 * Groupoid actions on families of sets, the action-groupoid (semidirect
 * product) construction, coset covers, and the universal cover of a group.
 */

#ifndef CGT_ACTION_HPP
#define CGT_ACTION_HPP

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cgt/explicit_groupoid.hpp"
#include "cgt/fin_group.hpp"
#include "cgt/morphism.hpp"
#include "cgt/verdict.hpp"

namespace cgt {

/// Left operation of a groupoid on sets. For an arrow g: p -> q the action
/// takes X(q) to X(p): in operator notation x in X(q) goes to g.x in X(p),
/// matching the arrow (g, x): g.x -> x of the action groupoid.
class GroupoidAction {
public:
    GroupoidAction(ExplicitGroupoid base, std::map<ObjId, std::size_t> fiber_sizes,
                   std::map<ArrowId, std::vector<std::size_t>> maps)
        : base_(std::move(base)),
          fiber_sizes_(std::move(fiber_sizes)),
          maps_(std::move(maps)) {}

    const ExplicitGroupoid& base() const { return base_; }
    std::size_t fiber_size(ObjId p) const { return fiber_sizes_.at(p); }

    std::size_t act(ArrowId g, std::size_t x) const {
        const auto& m = maps_.at(g);
        if (x >= m.size())
            throw std::invalid_argument("action: fiber element out of range");
        return m[x];
    }

    Verdict validate() const {
        Verdict v;
        for (ObjId p : base_.objects())
            if (!fiber_sizes_.count(p))
                v.fail("no fiber over object " + std::to_string(p));
        if (!v.ok) return v;
        for (const Arrow& g : base_.arrows()) {
            auto it = maps_.find(g.id);
            if (it == maps_.end()) {
                v.fail("no action map for arrow " + std::to_string(g.id));
                continue;
            }
            const auto& m = it->second;
            if (m.size() != fiber_size(g.tgt)) {
                v.fail("action map of arrow " + std::to_string(g.id) + " has wrong domain");
                continue;
            }
            std::set<std::size_t> image(m.begin(), m.end());
            bool in_range = true;
            for (std::size_t y : m)
                if (y >= fiber_size(g.src)) in_range = false;
            if (!in_range || image.size() != m.size() ||
                m.size() != fiber_size(g.src))
                v.fail("action map of arrow " + std::to_string(g.id) +
                       " is not a bijection onto the source fiber");
        }
        if (!v.ok) return v;
        for (ObjId p : base_.objects()) {
            ArrowId e = base_.identity_at(p);
            for (std::size_t x = 0; x < fiber_size(p); ++x)
                if (act(e, x) != x)
                    v.fail("identity at " + std::to_string(p) + " does not act trivially");
        }
        for (const auto& [pair, res] : base_.compose_table()) {
            ArrowId g = pair.first, h = pair.second;  // g: p->q, h: q->r, gh: p->r
            for (std::size_t x = 0; x < fiber_size(base_.arrow(h).tgt); ++x)
                if (act(res, x) != act(g, act(h, x)))
                    v.fail("functoriality fails on (" + std::to_string(g) + "," +
                           std::to_string(h) + ")");
        }
        return v;
    }

private:
    ExplicitGroupoid base_;
    std::map<ObjId, std::size_t> fiber_sizes_;
    std::map<ArrowId, std::vector<std::size_t>> maps_;
};

struct ActionGroupoidResult {
    ExplicitGroupoid groupoid;
    GroupoidMorphism projection;
    std::map<std::pair<ObjId, std::size_t>, ObjId> object_of;    // (p, x) -> object id
    std::map<std::pair<ArrowId, std::size_t>, ArrowId> arrow_of; // (g, x) -> arrow id
};

/// The action groupoid G x| X with its covering projection onto the base.
inline ActionGroupoidResult action_groupoid(const GroupoidAction& a) {
    Verdict v = a.validate();
    if (!v.ok)
        throw std::invalid_argument("action_groupoid: invalid action: " + v.issues.front());
    const ExplicitGroupoid& base = a.base();

    std::map<std::pair<ObjId, std::size_t>, ObjId> object_of;
    std::vector<ObjId> objects;
    std::map<ObjId, ObjId> obj_proj;
    ObjId next_obj = 0;
    for (ObjId p : base.objects())
        for (std::size_t x = 0; x < a.fiber_size(p); ++x) {
            object_of[{p, x}] = next_obj;
            obj_proj[next_obj] = p;
            objects.push_back(next_obj);
            ++next_obj;
        }

    std::map<std::pair<ArrowId, std::size_t>, ArrowId> arrow_of;
    std::vector<Arrow> arrows;
    std::map<ArrowId, ArrowId> arr_proj;
    ArrowId next_arr = 0;
    for (const Arrow& g : base.arrows())
        for (std::size_t x = 0; x < a.fiber_size(g.tgt); ++x) {
            // (g, x): g.x -> x
            ObjId src = object_of.at({g.src, a.act(g.id, x)});
            ObjId tgt = object_of.at({g.tgt, x});
            arrow_of[{g.id, x}] = next_arr;
            arr_proj[next_arr] = g.id;
            arrows.push_back({next_arr, src, tgt});
            ++next_arr;
        }

    std::map<std::pair<ArrowId, ArrowId>, ArrowId> comp;
    for (const auto& [pair, res] : base.compose_table()) {
        ArrowId g1 = pair.first, g2 = pair.second;  // g1 g2 defined, tgt g1 = src g2
        for (std::size_t x = 0; x < a.fiber_size(base.arrow(g2).tgt); ++x) {
            // (g1, g2.x)(g2, x) = (g1 g2, x)
            ArrowId alpha = arrow_of.at({g1, a.act(g2, x)});
            ArrowId beta = arrow_of.at({g2, x});
            comp[{alpha, beta}] = arrow_of.at({res, x});
        }
    }
    std::map<ObjId, ArrowId> ids;
    for (ObjId p : base.objects())
        for (std::size_t x = 0; x < a.fiber_size(p); ++x)
            ids[object_of.at({p, x})] = arrow_of.at({base.identity_at(p), x});
    std::map<ArrowId, ArrowId> invs;
    for (const Arrow& g : base.arrows())
        for (std::size_t x = 0; x < a.fiber_size(g.tgt); ++x)
            invs[arrow_of.at({g.id, x})] =
                arrow_of.at({base.inverse(g.id), a.act(g.id, x)});

    ExplicitGroupoid total(objects, arrows, comp, ids, invs);
    GroupoidMorphism proj(total, base, obj_proj, arr_proj);
    return {std::move(total), std::move(proj), std::move(object_of), std::move(arrow_of)};
}

/// A group as a one-object groupoid; arrow ids are the element indices.
inline ExplicitGroupoid group_as_groupoid(const FinGroup& g) {
    std::vector<Arrow> arrows;
    std::map<std::pair<ArrowId, ArrowId>, ArrowId> comp;
    std::map<ArrowId, ArrowId> invs;
    for (Elt x = 0; x < g.order(); ++x) {
        arrows.push_back({static_cast<ArrowId>(x), 0, 0});
        invs[x] = g.inv(x);
        for (Elt y = 0; y < g.order(); ++y) comp[{x, y}] = g.mul(x, y);
    }
    return ExplicitGroupoid({0}, arrows, comp, {{0, 0}}, invs);
}

/// The cover of a transitive groupoid determined by a subgroup A of the
/// vertex group at a0: the action groupoid of the coset action on
/// { gA : g in Cost(a0) }. Trivial A gives the universal cover at a0.
inline ActionGroupoidResult cover_from_subgroup(const ExplicitGroupoid& g, ObjId a0,
                                                const std::set<ArrowId>& A) {
    if (!g.is_transitive())
        throw std::invalid_argument("cover_from_subgroup: groupoid not transitive");
    // A must be a set of loops at a0 closed under the group operations
    for (ArrowId a : A) {
        const Arrow& ar = g.arrow(a);
        if (ar.src != a0 || ar.tgt != a0)
            throw std::invalid_argument("cover_from_subgroup: arrow " +
                                        std::to_string(a) + " is not a loop at a0");
    }
    std::set<ArrowId> check = A;
    check.insert(g.identity_at(a0));
    for (ArrowId a : A) {
        check.insert(g.inverse(a));
        for (ArrowId b : A) check.insert(g.compose(a, b));
    }
    if (check != A)
        throw std::invalid_argument("cover_from_subgroup: subgroup not closed");

    // cosets xA, x in Cost(a0), keyed by their element sets
    std::vector<ArrowId> cost = g.costar(a0);
    std::map<std::set<ArrowId>, std::size_t> coset_index_global;
    std::vector<std::set<ArrowId>> cosets;
    auto coset_of = [&](ArrowId x) {
        std::set<ArrowId> c;
        for (ArrowId a : A) c.insert(g.compose(x, a));
        return c;
    };
    // per-object fiber: cosets whose representatives start at that object,
    // indexed in order of least arrow id
    std::map<ObjId, std::vector<std::set<ArrowId>>> fiber_cosets;
    for (ArrowId x : cost) {  // costar scan order is arrow-id order
        std::set<ArrowId> c = coset_of(x);
        auto& fc = fiber_cosets[g.arrow(x).src];
        if (std::find(fc.begin(), fc.end(), c) == fc.end()) fc.push_back(c);
    }
    std::map<ObjId, std::size_t> fiber_sizes;
    for (ObjId p : g.objects()) fiber_sizes[p] = fiber_cosets[p].size();

    auto index_in_fiber = [&](ObjId p, const std::set<ArrowId>& c) {
        const auto& fc = fiber_cosets.at(p);
        for (std::size_t i = 0; i < fc.size(); ++i)
            if (fc[i] == c) return i;
        throw std::logic_error("cover_from_subgroup: coset not found");
    };

    // arrow h: b -> a sends the coset xA (x: a -> a0) to (hx)A in the fiber
    // over b
    std::map<ArrowId, std::vector<std::size_t>> maps;
    for (const Arrow& h : g.arrows()) {
        const auto& fc = fiber_cosets.at(h.tgt);
        std::vector<std::size_t> m(fc.size());
        for (std::size_t i = 0; i < fc.size(); ++i) {
            ArrowId rep = *fc[i].begin();
            m[i] = index_in_fiber(h.src, coset_of(g.compose(h.id, rep)));
        }
        maps[h.id] = m;
    }
    return action_groupoid(GroupoidAction(g, fiber_sizes, maps));
}

struct UniversalCoverOfGroup {
    ExplicitGroupoid groupoid;   // objects: elements of G; arrows (g,h): gh -> h
    GroupoidMorphism projection; // (g,h) -> g
    // right action of G by covering transformations: (g,h)^k = (g,hk)
    std::vector<GroupoidMorphism> transformations;  // indexed by k

    // id of the arrow (g, h)
    std::size_t order;
    ArrowId arrow_id(Elt g, Elt h) const {
        return static_cast<ArrowId>(g * order + h);
    }
};

inline UniversalCoverOfGroup universal_cover_of_group(const FinGroup& G) {
    const std::size_t n = G.order();
    auto aid = [n](Elt g, Elt h) { return static_cast<ArrowId>(g * n + h); };
    std::vector<ObjId> objects;
    for (Elt h = 0; h < n; ++h) objects.push_back(h);
    std::vector<Arrow> arrows;
    std::map<ObjId, ArrowId> ids;
    std::map<ArrowId, ArrowId> invs;
    std::map<std::pair<ArrowId, ArrowId>, ArrowId> comp;
    for (Elt g = 0; g < n; ++g)
        for (Elt h = 0; h < n; ++h) {
            arrows.push_back({aid(g, h), static_cast<ObjId>(G.mul(g, h)),
                              static_cast<ObjId>(h)});
            // (g,h)^-1 = (g^-1, gh): gh <- h reversed
            invs[aid(g, h)] = aid(G.inv(g), G.mul(g, h));
        }
    for (Elt h = 0; h < n; ++h) ids[h] = aid(G.identity(), h);
    // (g, hk)(h, k) = (gh, k)
    for (Elt g = 0; g < n; ++g)
        for (Elt h = 0; h < n; ++h)
            for (Elt k = 0; k < n; ++k)
                comp[{aid(g, G.mul(h, k)), aid(h, k)}] = aid(G.mul(g, h), k);
    ExplicitGroupoid total(objects, arrows, comp, ids, invs);

    ExplicitGroupoid base = group_as_groupoid(G);
    std::map<ObjId, ObjId> obj_proj;
    std::map<ArrowId, ArrowId> arr_proj;
    for (Elt h = 0; h < n; ++h) obj_proj[h] = 0;
    for (Elt g = 0; g < n; ++g)
        for (Elt h = 0; h < n; ++h) arr_proj[aid(g, h)] = g;
    GroupoidMorphism proj(total, base, obj_proj, arr_proj);

    std::vector<GroupoidMorphism> transforms;
    for (Elt k = 0; k < n; ++k) {
        std::map<ObjId, ObjId> om;
        std::map<ArrowId, ArrowId> am;
        for (Elt h = 0; h < n; ++h) om[h] = G.mul(h, k);
        for (Elt g = 0; g < n; ++g)
            for (Elt h = 0; h < n; ++h) am[aid(g, h)] = aid(g, G.mul(h, k));
        transforms.emplace_back(total, total, std::move(om), std::move(am));
    }
    return {std::move(total), std::move(proj), std::move(transforms), n};
}

}  // namespace cgt

#endif
