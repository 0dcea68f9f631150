#ifndef FNM_BUILDER_HPP
#define FNM_BUILDER_HPP

#include <set>
#include <vector>

#include "fnm/graph.hpp"
#include "fnm/pattern.hpp"

namespace fnm {

/// One traversal step of a path pattern: follow an edge (by direction and
/// label) or terminate with a vertex label on the far end.
struct PathStep {
    enum class Kind : std::uint8_t { OutEdge, InEdge, VertexLabel };
    Kind kind{Kind::OutEdge};
    LabelId label{};

    static PathStep out_edge(LabelId l) { return {Kind::OutEdge, l}; }
    static PathStep in_edge(LabelId l) { return {Kind::InEdge, l}; }
    static PathStep vertex_label(LabelId l) { return {Kind::VertexLabel, l}; }
    bool is_edge_step() const { return kind != Kind::VertexLabel; }
    auto operator<=>(const PathStep&) const = default;
};

/// Step-sequence form of a path pattern, starting at the pivot. A
/// VertexLabel step may only appear last.
struct PathPattern {
    std::vector<PathStep> steps;

    std::size_t size() const { return steps.size(); }
    bool terminated() const { return !steps.empty() && !steps.back().is_edge_step(); }
    PathPattern append(PathStep s) const;
    /// Renders the chain as a NeighborhoodPattern (vertex 0 = pivot).
    NeighborhoodPattern to_pattern() const;
};

/// All possible next steps over every injective walk of `path` starting at
/// `start`. Each distinct step appears once regardless of multiplicity.
std::set<PathStep> traverse_next_steps(const LabeledGraph& g, VertexId start,
                                       const PathPattern& path);

struct FrequentPath {
    PathPattern path;
    VidList vids;
};

/// BFS construction of all frequent path patterns of size <= max_size whose
/// support within start_set is >= tau. With use_vid each extension scans
/// only the parent path's VidList instead of the whole start set.
std::vector<FrequentPath> frequent_paths(const LabeledGraph& g, std::size_t tau,
                                         std::size_t max_size, const VidList& start_set,
                                         bool use_vid);

}  // namespace fnm

#endif
