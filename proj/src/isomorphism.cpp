#include "fnm/isomorphism.hpp"

#include <algorithm>
#include <limits>

namespace fnm {

namespace {

constexpr VertexId kUnset = std::numeric_limits<VertexId>::max();

bool label_subset(const std::vector<LabelId>& need, const std::vector<LabelId>& have) {
    return std::includes(have.begin(), have.end(), need.begin(), need.end());
}

// Backtracking state for one pattern against one graph; reusable across
// pivot candidates so matches() does not reallocate per vertex.
class Matcher {
public:
    Matcher(const NeighborhoodPattern& p, const LabeledGraph& g)
        : p_(p), g_(g), map_(p.vertex_count(), kUnset), used_(g.vertex_count(), 0) {
        incident_.resize(p_.vertex_count());
        for (const Edge& e : p_.edges()) {
            incident_[e.src].push_back(e);
            incident_[e.dst].push_back(e);
        }
    }

    bool match_at(VertexId v) {
        if (!label_subset(p_.labels_of(NeighborhoodPattern::kPivot), g_.labels_of(v)))
            return false;
        map_[NeighborhoodPattern::kPivot] = v;
        used_[v] = 1;
        bool ok = extend(1);
        map_[NeighborhoodPattern::kPivot] = kUnset;
        used_[v] = 0;
        return ok;
    }

private:
    // All pattern edges between pv and already-mapped vertices must exist in
    // the graph under the tentative assignment pv -> gv.
    bool edges_ok(VertexId pv, VertexId gv) const {
        for (const Edge& e : incident_[pv]) {
            VertexId other = e.src == pv ? e.dst : e.src;
            if (other == pv || map_[other] == kUnset) continue;
            VertexId gs = e.src == pv ? gv : map_[e.src];
            VertexId gd = e.dst == pv ? gv : map_[e.dst];
            if (!g_.has_edge(gs, gd, e.label)) return false;
        }
        return true;
    }

    // Candidate count for extending pv through one of its mapped neighbors.
    // Picks the cheapest (pattern vertex, constraining edge) pair first.
    std::size_t count_candidates(const Edge& e, VertexId pv) const {
        std::size_t n = 0;
        if (e.src == pv) {
            for (const NeighborEntry& ne : g_.in_edges(map_[e.dst]))
                if (ne.label == e.label) ++n;
        } else {
            for (const NeighborEntry& ne : g_.out_edges(map_[e.src]))
                if (ne.label == e.label) ++n;
        }
        return n;
    }

    bool extend(std::size_t depth) {
        if (depth == p_.vertex_count()) return true;

        VertexId best_pv = kUnset;
        const Edge* best_edge = nullptr;
        std::size_t best_count = std::numeric_limits<std::size_t>::max();
        VertexId first_unmapped = kUnset;
        for (VertexId pv = 1; pv < p_.vertex_count(); ++pv) {
            if (map_[pv] != kUnset) continue;
            if (first_unmapped == kUnset) first_unmapped = pv;
            for (const Edge& e : incident_[pv]) {
                VertexId other = e.src == pv ? e.dst : e.src;
                if (map_[other] == kUnset) continue;
                std::size_t c = count_candidates(e, pv);
                if (c < best_count) {
                    best_count = c;
                    best_pv = pv;
                    best_edge = &e;
                }
            }
        }

        if (best_pv != kUnset) {
            const Edge& e = *best_edge;
            const auto& nbrs =
                e.src == best_pv ? g_.in_edges(map_[e.dst]) : g_.out_edges(map_[e.src]);
            for (const NeighborEntry& ne : nbrs) {
                if (ne.label != e.label) continue;
                if (!try_vertex(best_pv, ne.vertex, depth)) continue;
                return true;
            }
            return false;
        }

        // Disconnected fragment: the next vertex has no mapped neighbor, so
        // any unused graph vertex is a candidate.
        for (VertexId gv = 0; gv < g_.vertex_count(); ++gv)
            if (try_vertex(first_unmapped, gv, depth)) return true;
        return false;
    }

    bool try_vertex(VertexId pv, VertexId gv, std::size_t depth) {
        if (used_[gv]) return false;
        if (!label_subset(p_.labels_of(pv), g_.labels_of(gv))) return false;
        if (!edges_ok(pv, gv)) return false;
        map_[pv] = gv;
        used_[gv] = 1;
        bool ok = extend(depth + 1);
        map_[pv] = kUnset;
        used_[gv] = 0;
        return ok;
    }

    const NeighborhoodPattern& p_;
    const LabeledGraph& g_;
    std::vector<VertexId> map_;
    std::vector<char> used_;
    std::vector<std::vector<Edge>> incident_;
};

}  // namespace

bool pivoted_subiso_at(const NeighborhoodPattern& p, const LabeledGraph& g, VertexId v) {
    Matcher m(p, g);
    return m.match_at(v);
}

VidList matches(const NeighborhoodPattern& p, const LabeledGraph& g,
                const VidList& candidates) {
    Matcher m(p, g);
    std::vector<VertexId> out;
    for (VertexId v : candidates.ids())
        if (m.match_at(v)) out.push_back(v);
    return VidList::from_sorted(std::move(out));
}

namespace {

// Exhaustive enumeration, pattern vertices in index order. Fragments may be
// disconnected; isolated unlabeled vertices match any unused target vertex.
void enumerate(const NeighborhoodPattern& p1, const NeighborhoodPattern& p2,
               std::vector<VertexId>& map, std::vector<char>& used, std::size_t depth,
               std::vector<Embedding>& out) {
    if (depth == p1.vertex_count()) {
        out.push_back(map);
        return;
    }
    VertexId pv = static_cast<VertexId>(depth);
    for (VertexId tv = 0; tv < p2.vertex_count(); ++tv) {
        if (used[tv]) continue;
        if (pv == NeighborhoodPattern::kPivot && tv != NeighborhoodPattern::kPivot)
            continue;
        if (pv != NeighborhoodPattern::kPivot && tv == NeighborhoodPattern::kPivot)
            continue;
        if (!label_subset(p1.labels_of(pv), p2.labels_of(tv))) continue;
        bool ok = true;
        for (const Edge& e : p1.edges()) {
            if (e.src != pv && e.dst != pv) continue;
            VertexId other = e.src == pv ? e.dst : e.src;
            if (other > pv || (other == pv)) continue;  // endpoint not yet mapped
            VertexId ts = e.src == pv ? tv : map[e.src];
            VertexId td = e.dst == pv ? tv : map[e.dst];
            if (!p2.has_edge(ts, td, e.label)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        map[pv] = tv;
        used[tv] = 1;
        enumerate(p1, p2, map, used, depth + 1, out);
        used[tv] = 0;
    }
}

}  // namespace

std::vector<Embedding> embeddings_between(const NeighborhoodPattern& p1,
                                          const NeighborhoodPattern& p2) {
    std::vector<Embedding> out;
    if (p1.vertex_count() > p2.vertex_count()) return out;
    std::vector<VertexId> map(p1.vertex_count(), kUnset);
    std::vector<char> used(p2.vertex_count(), 0);
    enumerate(p1, p2, map, used, 0, out);
    return out;
}

}  // namespace fnm
