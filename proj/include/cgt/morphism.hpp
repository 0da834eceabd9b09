/**
 * Morphisms of explicit groupoids, the covering/fibration costar criteria,
 * and unique lifting of composable sequences.
 */

#ifndef CGT_MORPHISM_HPP
#define CGT_MORPHISM_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cgt/explicit_groupoid.hpp"
#include "cgt/verdict.hpp"

namespace cgt {

class GroupoidMorphism {
public:
    GroupoidMorphism(ExplicitGroupoid source, ExplicitGroupoid target,
                     std::map<ObjId, ObjId> object_map,
                     std::map<ArrowId, ArrowId> arrow_map)
        : source_(std::move(source)),
          target_(std::move(target)),
          object_map_(std::move(object_map)),
          arrow_map_(std::move(arrow_map)) {}

    const ExplicitGroupoid& source() const { return source_; }
    const ExplicitGroupoid& target() const { return target_; }

    ObjId map_object(ObjId o) const {
        auto it = object_map_.find(o);
        if (it == object_map_.end())
            throw std::invalid_argument("morphism: unmapped object " + std::to_string(o));
        return it->second;
    }

    ArrowId map_arrow(ArrowId a) const {
        auto it = arrow_map_.find(a);
        if (it == arrow_map_.end())
            throw std::invalid_argument("morphism: unmapped arrow " + std::to_string(a));
        return it->second;
    }

    /// Functoriality: endpoints, identities, composition, inverses.
    Verdict validate() const {
        Verdict v;
        for (ObjId o : source_.objects())
            if (!object_map_.count(o) || !target_.has_object(object_map_.at(o)))
                v.fail("object " + std::to_string(o) + " unmapped or maps outside target");
        for (const Arrow& a : source_.arrows()) {
            if (!arrow_map_.count(a.id) || !target_.has_arrow(arrow_map_.at(a.id))) {
                v.fail("arrow " + std::to_string(a.id) + " unmapped or maps outside target");
                continue;
            }
            const Arrow& im = target_.arrow(arrow_map_.at(a.id));
            if (im.src != map_object(a.src) || im.tgt != map_object(a.tgt))
                v.fail("arrow " + std::to_string(a.id) + " image has wrong endpoints");
        }
        if (!v.ok) return v;
        for (ObjId o : source_.objects())
            if (map_arrow(source_.identity_at(o)) != target_.identity_at(map_object(o)))
                v.fail("identity at " + std::to_string(o) + " not preserved");
        for (const auto& [pair, res] : source_.compose_table())
            if (target_.compose(map_arrow(pair.first), map_arrow(pair.second)) !=
                map_arrow(res))
                v.fail("composition not preserved on (" + std::to_string(pair.first) +
                       "," + std::to_string(pair.second) + ")");
        for (const Arrow& a : source_.arrows())
            if (map_arrow(source_.inverse(a.id)) != target_.inverse(map_arrow(a.id)))
                v.fail("inverse not preserved at arrow " + std::to_string(a.id));
        return v;
    }

    /// Covering: every costar restriction is a bijection. Failures name a
    /// witness object (and arrow, for non-injectivity).
    Verdict is_covering() const {
        Verdict v = costar_check(true);
        return v;
    }

    /// Fibration: every costar restriction is surjective.
    Verdict is_fibration() const { return costar_check(false); }

    /// Unique lifting: given a composable sequence (g_1 ... g_n) in the
    /// target and a source object a~ over the target of g_n, produce the
    /// unique lift ending at a~. Constructed right-to-left through costars.
    std::vector<ArrowId> lift_sequence(const std::vector<ArrowId>& gs, ObjId atilde) const {
        if (!is_covering().ok)
            throw std::invalid_argument("lift_sequence: morphism is not a covering");
        if (!source_.has_object(atilde))
            throw std::invalid_argument("lift_sequence: unknown source object");
        if (gs.empty()) return {};
        // composability of the input
        for (std::size_t i = 0; i + 1 < gs.size(); ++i)
            if (target_.arrow(gs[i]).tgt != target_.arrow(gs[i + 1]).src)
                throw std::invalid_argument("lift_sequence: input not composable at " +
                                            std::to_string(i));
        if (map_object(atilde) != target_.arrow(gs.back()).tgt)
            throw std::invalid_argument("lift_sequence: endpoint mismatch");
        std::vector<ArrowId> lift(gs.size());
        ObjId at = atilde;
        for (std::size_t i = gs.size(); i-- > 0;) {
            ArrowId found = -1;
            for (ArrowId c : source_.costar(at))
                if (map_arrow(c) == gs[i]) {
                    found = c;
                    break;
                }
            if (found < 0)
                throw std::logic_error("lift_sequence: costar bijection violated");
            lift[i] = found;
            at = source_.arrow(found).src;
        }
        return lift;
    }

private:
    Verdict costar_check(bool require_injective) const {
        Verdict v;
        for (ObjId at : source_.objects()) {
            std::vector<ArrowId> up = source_.costar(at);
            std::vector<ArrowId> down = target_.costar(map_object(at));
            std::map<ArrowId, int> hit;
            for (ArrowId a : up) hit[map_arrow(a)]++;
            for (ArrowId b : down)
                if (!hit.count(b))
                    v.fail("costar at object " + std::to_string(at) +
                           " misses target arrow " + std::to_string(b));
            if (require_injective)
                for (const auto& [b, n] : hit)
                    if (n > 1)
                        v.fail("costar at object " + std::to_string(at) +
                               " hits target arrow " + std::to_string(b) + " " +
                               std::to_string(n) + " times");
        }
        return v;
    }

    ExplicitGroupoid source_, target_;
    std::map<ObjId, ObjId> object_map_;
    std::map<ArrowId, ArrowId> arrow_map_;
};

}  // namespace cgt

#endif
