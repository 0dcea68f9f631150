#include "fnm/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace fnm::oracle {

namespace {

constexpr std::size_t kGuard = 200;
constexpr VertexId kUnset = std::numeric_limits<VertexId>::max();

bool label_subset(const std::vector<LabelId>& need, const std::vector<LabelId>& have) {
    return std::includes(have.begin(), have.end(), need.begin(), need.end());
}

// Assigns pattern vertices in plain index order to any unused graph vertex,
// checking labels and the edges to earlier-assigned vertices.
bool assign(const NeighborhoodPattern& p, const LabeledGraph& g,
            std::vector<VertexId>& map, std::vector<char>& used, std::size_t depth) {
    if (depth == p.vertex_count()) return true;
    VertexId pv = static_cast<VertexId>(depth);
    for (VertexId gv = 0; gv < g.vertex_count(); ++gv) {
        if (used[gv]) continue;
        if (!label_subset(p.labels_of(pv), g.labels_of(gv))) continue;
        bool ok = true;
        for (const Edge& e : p.edges()) {
            if (e.src != pv && e.dst != pv) continue;
            VertexId other = e.src == pv ? e.dst : e.src;
            if (other >= pv) continue;
            VertexId gs = e.src == pv ? gv : map[e.src];
            VertexId gd = e.dst == pv ? gv : map[e.dst];
            if (!g.has_edge(gs, gd, e.label)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        map[pv] = gv;
        used[gv] = 1;
        if (assign(p, g, map, used, depth + 1)) {
            used[gv] = 0;
            map[pv] = kUnset;
            return true;
        }
        used[gv] = 0;
        map[pv] = kUnset;
    }
    return false;
}

bool naive_match_at(const NeighborhoodPattern& p, const LabeledGraph& g, VertexId v) {
    if (!label_subset(p.labels_of(NeighborhoodPattern::kPivot), g.labels_of(v)))
        return false;
    std::vector<VertexId> map(p.vertex_count(), kUnset);
    std::vector<char> used(g.vertex_count(), 0);
    map[NeighborhoodPattern::kPivot] = v;
    used[v] = 1;
    return assign(p, g, map, used, 1);
}

}  // namespace

LabeledGraph toy_db() {
    LabeledGraph g;
    LabelId author = g.vertex_label_vocab().intern("Author");
    LabelId paper = g.vertex_label_vocab().intern("Paper");
    LabelId writes = g.edge_label_vocab().intern("writes");
    LabelId cites = g.edge_label_vocab().intern("cites");
    for (int i = 1; i <= 4; ++i)
        g.add_vertex_label(g.intern_vertex("a" + std::to_string(i)), author);
    for (int i = 1; i <= 8; ++i)
        g.add_vertex_label(g.intern_vertex("p" + std::to_string(i)), paper);
    auto edge = [&](const char* s, const char* d, LabelId l) {
        g.add_edge(*g.find_vertex(s), *g.find_vertex(d), l);
    };
    edge("a1", "p1", writes);
    edge("a1", "p2", writes);
    edge("a1", "p3", writes);
    edge("a2", "p4", writes);
    edge("a2", "p5", writes);
    edge("a3", "p6", writes);
    edge("a3", "p7", writes);
    edge("a4", "p8", writes);
    edge("p2", "p1", cites);
    edge("p5", "p4", cites);
    edge("p7", "p3", cites);
    edge("p8", "p6", cites);
    return g;
}

VidList naive_matches(const NeighborhoodPattern& p, const LabeledGraph& g) {
    if (g.vertex_count() > kGuard)
        throw std::runtime_error("oracle guard: graph exceeds " + std::to_string(kGuard) +
                                 " vertices");
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (naive_match_at(p, g, v)) out.push_back(v);
    return VidList::from_sorted(std::move(out));
}

namespace {

// Every structural way of adding one element to p: a new vertex label, an
// edge between existing vertices, or an edge to a new vertex.
std::vector<NeighborhoodPattern> extensions(const NeighborhoodPattern& p,
                                            std::size_t n_vlabels, std::size_t n_elabels) {
    std::vector<NeighborhoodPattern> out;
    for (VertexId v = 0; v < p.vertex_count(); ++v)
        for (LabelId l = 0; l < n_vlabels; ++l)
            if (!p.has_label(v, l)) {
                NeighborhoodPattern q = p;
                q.add_label(v, l);
                out.push_back(std::move(q));
            }
    for (VertexId u = 0; u < p.vertex_count(); ++u)
        for (VertexId w = 0; w < p.vertex_count(); ++w) {
            if (u == w) continue;
            for (LabelId l = 0; l < n_elabels; ++l)
                if (!p.has_edge(u, w, l)) {
                    NeighborhoodPattern q = p;
                    q.add_edge(u, w, l);
                    out.push_back(std::move(q));
                }
        }
    for (VertexId u = 0; u < p.vertex_count(); ++u)
        for (LabelId l = 0; l < n_elabels; ++l)
            for (int dir = 0; dir < 2; ++dir) {
                NeighborhoodPattern q = p;
                VertexId w = q.add_vertex();
                if (dir == 0) q.add_edge(u, w, l);
                else q.add_edge(w, u, l);
                out.push_back(std::move(q));
            }
    return out;
}

}  // namespace

std::vector<PatternSupport> enumerate_patterns(const LabeledGraph& g,
                                               std::size_t max_size, std::size_t tau,
                                               const VidList& universe) {
    if (g.vertex_count() > kGuard)
        throw std::runtime_error("oracle guard: graph exceeds " + std::to_string(kGuard) +
                                 " vertices");
    std::size_t n_vlabels = g.vertex_label_vocab().size();
    std::size_t n_elabels = g.edge_label_vocab().size();

    auto evaluate = [&](NeighborhoodPattern p) -> std::optional<PatternSupport> {
        VidList m = VidList::intersect(naive_matches(p, g), universe);
        if (m.size() < tau) return std::nullopt;
        std::string key = canonical_key(p);
        return PatternSupport{std::move(p), std::move(key), m.size(), std::move(m)};
    };

    std::vector<PatternSupport> result;
    std::vector<PatternSupport> frontier;
    std::map<std::string, char> seen;

    // Size-1 seeds: one pivot label, or one edge at the pivot.
    std::vector<NeighborhoodPattern> seeds;
    for (LabelId l = 0; l < n_vlabels; ++l) {
        NeighborhoodPattern p;
        p.add_label(NeighborhoodPattern::kPivot, l);
        seeds.push_back(std::move(p));
    }
    for (LabelId l = 0; l < n_elabels; ++l)
        for (int dir = 0; dir < 2; ++dir) {
            NeighborhoodPattern p(2);
            if (dir == 0) p.add_edge(0, 1, l);
            else p.add_edge(1, 0, l);
            seeds.push_back(std::move(p));
        }
    for (NeighborhoodPattern& p : seeds) {
        std::string key = canonical_key(p);
        if (!seen.emplace(key, 1).second) continue;
        if (auto ps = evaluate(std::move(p))) frontier.push_back(std::move(*ps));
    }

    for (std::size_t sz = 1; sz < max_size && !frontier.empty(); ++sz) {
        std::vector<PatternSupport> next;
        for (const PatternSupport& ps : frontier)
            for (NeighborhoodPattern& q : extensions(ps.pattern, n_vlabels, n_elabels)) {
                if (!q.is_connected()) continue;
                std::string key = canonical_key(q);
                if (!seen.emplace(key, 1).second) continue;
                if (auto r = evaluate(std::move(q))) next.push_back(std::move(*r));
            }
        result.insert(result.end(), std::make_move_iterator(frontier.begin()),
                      std::make_move_iterator(frontier.end()));
        frontier = std::move(next);
    }
    result.insert(result.end(), std::make_move_iterator(frontier.begin()),
                  std::make_move_iterator(frontier.end()));
    return result;
}

namespace {

bool subiso_assign(const LabeledGraph& g1, const LabeledGraph& g2,
                   std::vector<VertexId>& map, std::vector<char>& used,
                   std::size_t depth) {
    if (depth == g1.vertex_count()) return true;
    VertexId v1 = static_cast<VertexId>(depth);
    for (VertexId v2 = 0; v2 < g2.vertex_count(); ++v2) {
        if (used[v2]) continue;
        if (!label_subset(g1.labels_of(v1), g2.labels_of(v2))) continue;
        bool ok = true;
        for (const Edge& e : g1.edges()) {
            if (e.src != v1 && e.dst != v1) continue;
            VertexId other = e.src == v1 ? e.dst : e.src;
            if (other >= v1) continue;
            VertexId s = e.src == v1 ? v2 : map[e.src];
            VertexId d = e.dst == v1 ? v2 : map[e.dst];
            if (!g2.has_edge(s, d, e.label)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        map[v1] = v2;
        used[v2] = 1;
        if (subiso_assign(g1, g2, map, used, depth + 1)) return true;
        used[v2] = 0;
        map[v1] = kUnset;
    }
    return false;
}

}  // namespace

bool naive_subgraph_iso(const LabeledGraph& g1, const LabeledGraph& g2) {
    if (g1.vertex_count() > g2.vertex_count()) return false;
    std::vector<VertexId> map(g1.vertex_count(), kUnset);
    std::vector<char> used(g2.vertex_count(), 0);
    return subiso_assign(g1, g2, map, used, 0);
}

ReducedInstance reduce_subiso(const LabeledGraph& g1, const LabeledGraph& g2) {
    ReducedInstance inst;
    // Left side: pattern with the fresh pivot at index 0, original vertices
    // shifted by one, pivot edges to every original vertex.
    NeighborhoodPattern lhs(g1.vertex_count() + 1);
    for (const Edge& e : g1.edges()) lhs.add_edge(e.src + 1, e.dst + 1, e.label);
    for (VertexId v = 0; v < g1.vertex_count(); ++v)
        lhs.add_edge(NeighborhoodPattern::kPivot, v + 1, 0);
    inst.lhs = std::move(lhs);

    LabeledGraph rhs = g2;
    if (rhs.edge_label_vocab().size() == 0) rhs.edge_label_vocab().intern("e");
    VertexId pivot = rhs.intern_vertex("__pivot__");
    for (VertexId v = 0; v < pivot; ++v) rhs.add_edge(pivot, v, 0);
    inst.rhs = std::move(rhs);
    inst.rhs_pivot = pivot;
    return inst;
}

}  // namespace fnm::oracle
