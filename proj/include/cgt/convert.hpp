/**
 * Conversion from explicit groupoids to presented ones: one edge per arrow,
 * one relation per entry of the composition table. Identity arrows become
 * trivial automatically (e e = e forces e = 1).
 */

#ifndef CGT_CONVERT_HPP
#define CGT_CONVERT_HPP

#include <map>
#include <string>
#include <vector>

#include "cgt/explicit_groupoid.hpp"
#include "cgt/presented_groupoid.hpp"

namespace cgt {

inline PresentedGroupoid to_presented(const ExplicitGroupoid& g) {
    std::vector<GraphEdge> edges;
    std::map<ArrowId, std::size_t> index_of;
    for (const Arrow& a : g.arrows()) {
        index_of[a.id] = edges.size();
        edges.push_back({"a" + std::to_string(a.id), a.src, a.tgt});
    }
    std::vector<GroupoidRelation> rels;
    for (const auto& [pair, res] : g.compose_table()) {
        Word left{letter(index_of.at(pair.first)), letter(index_of.at(pair.second))};
        Word right{letter(index_of.at(res))};
        rels.push_back({left, right});
    }
    return PresentedGroupoid(g.objects(), edges, rels);
}

}  // namespace cgt

#endif
