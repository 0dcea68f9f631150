#include "fnm/builder.hpp"

#include <deque>
#include <map>
#include <stdexcept>

namespace fnm {

PathPattern PathPattern::append(PathStep s) const {
    if (terminated())
        throw std::invalid_argument("cannot extend a label-terminated path");
    PathPattern p = *this;
    p.steps.push_back(s);
    return p;
}

NeighborhoodPattern PathPattern::to_pattern() const {
    std::size_t edge_steps = steps.size() - (terminated() ? 1 : 0);
    NeighborhoodPattern p(edge_steps + 1);
    VertexId cur = NeighborhoodPattern::kPivot;
    for (const PathStep& s : steps) {
        switch (s.kind) {
            case PathStep::Kind::OutEdge:
                p.add_edge(cur, cur + 1, s.label);
                ++cur;
                break;
            case PathStep::Kind::InEdge:
                p.add_edge(cur + 1, cur, s.label);
                ++cur;
                break;
            case PathStep::Kind::VertexLabel:
                p.add_label(cur, s.label);
                break;
        }
    }
    return p;
}

namespace {

// Walks the remaining edge steps injectively; at each walk endpoint records
// every available next step.
void walk(const LabeledGraph& g, const PathPattern& path, std::size_t pos, VertexId cur,
          std::vector<char>& visited, std::set<PathStep>& out) {
    if (pos == path.steps.size()) {
        for (const NeighborEntry& ne : g.out_edges(cur))
            if (!visited[ne.vertex]) out.insert(PathStep::out_edge(ne.label));
        for (const NeighborEntry& ne : g.in_edges(cur))
            if (!visited[ne.vertex]) out.insert(PathStep::in_edge(ne.label));
        for (LabelId l : g.labels_of(cur)) out.insert(PathStep::vertex_label(l));
        return;
    }
    const PathStep& s = path.steps[pos];
    const auto& nbrs =
        s.kind == PathStep::Kind::OutEdge ? g.out_edges(cur) : g.in_edges(cur);
    for (const NeighborEntry& ne : nbrs) {
        if (ne.label != s.label || visited[ne.vertex]) continue;
        visited[ne.vertex] = 1;
        walk(g, path, pos + 1, ne.vertex, visited, out);
        visited[ne.vertex] = 0;
    }
}

}  // namespace

std::set<PathStep> traverse_next_steps(const LabeledGraph& g, VertexId start,
                                       const PathPattern& path) {
    if (path.terminated())
        throw std::invalid_argument("path already ends with a vertex label");
    std::set<PathStep> out;
    std::vector<char> visited(g.vertex_count(), 0);
    visited[start] = 1;
    walk(g, path, 0, start, visited, out);
    return out;
}

std::vector<FrequentPath> frequent_paths(const LabeledGraph& g, std::size_t tau,
                                         std::size_t max_size, const VidList& start_set,
                                         bool use_vid) {
    if (tau < 1) throw std::invalid_argument("tau must be >= 1");
    std::vector<FrequentPath> result;
    std::deque<FrequentPath> queue;
    queue.push_back({PathPattern{}, start_set});
    while (!queue.empty()) {
        FrequentPath item = std::move(queue.front());
        queue.pop_front();
        // Next-step counters, de-duplicated per starting vertex by the set
        // returned from traverse_next_steps.
        std::map<PathStep, std::vector<VertexId>> counts;
        const VidList& scan = use_vid ? item.vids : start_set;
        for (VertexId v : scan.ids())
            for (const PathStep& s : traverse_next_steps(g, v, item.path))
                counts[s].push_back(v);
        for (auto& [step, vids] : counts) {
            if (vids.size() < tau) continue;
            FrequentPath next{item.path.append(step), VidList::from_sorted(std::move(vids))};
            if (step.is_edge_step() && next.path.size() < max_size)
                queue.push_back(next);
            result.push_back(std::move(next));
        }
    }
    return result;
}

}  // namespace fnm
