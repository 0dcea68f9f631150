#ifndef FNM_PATTERN_HPP
#define FNM_PATTERN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fnm/graph.hpp"

namespace fnm {

/// A vertex label or a labeled edge of a pattern.
struct PatternElement {
    enum class Kind : std::uint8_t { VertexLabel, Edge };
    Kind kind{Kind::VertexLabel};
    VertexId vertex{};        // VertexLabel only
    VertexId src{}, dst{};    // Edge only
    LabelId label{};

    static PatternElement vertex_label(VertexId v, LabelId l) {
        PatternElement e;
        e.kind = Kind::VertexLabel;
        e.vertex = v;
        e.label = l;
        return e;
    }
    static PatternElement edge(VertexId src, VertexId dst, LabelId l) {
        PatternElement e;
        e.kind = Kind::Edge;
        e.src = src;
        e.dst = dst;
        e.label = l;
        return e;
    }
    auto operator<=>(const PatternElement&) const = default;
};

/// A pivoted pattern graph. Local vertex 0 is always the pivot; the pivot
/// is never deleted. Patterns are values; all operations below are pure.
class NeighborhoodPattern {
public:
    static constexpr VertexId kPivot = 0;

    /// A lone pivot with no elements (the empty pattern).
    NeighborhoodPattern() : labels_(1) {}
    explicit NeighborhoodPattern(std::size_t vertex_count) : labels_(vertex_count) {}

    VertexId add_vertex() {
        labels_.emplace_back();
        return static_cast<VertexId>(labels_.size() - 1);
    }
    void add_label(VertexId v, LabelId label);
    /// Throws ValidationError on a loop; duplicate edges are ignored.
    void add_edge(VertexId src, VertexId dst, LabelId label);

    std::size_t vertex_count() const { return labels_.size(); }
    const std::vector<LabelId>& labels_of(VertexId v) const { return labels_.at(v); }
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_label(VertexId v, LabelId label) const;
    bool has_edge(VertexId src, VertexId dst, LabelId label) const;

    /// Number of elements: total vertex labels plus edges.
    std::size_t size() const;
    bool empty() const { return size() == 0; }
    std::size_t label_count() const;
    /// Incident edge count, directions ignored.
    std::size_t degree(VertexId v) const;

    /// Labels first (by vertex, label), then edges (sorted).
    std::vector<PatternElement> elements() const;
    bool contains(const PatternElement& e) const;

    /// Every vertex reachable from the pivot, edges treated as undirected.
    bool is_connected() const;

    friend bool operator==(const NeighborhoodPattern&, const NeighborhoodPattern&) = default;

private:
    std::vector<std::vector<LabelId>> labels_;  // sorted per vertex
    std::vector<Edge> edges_;                   // sorted, unique
};

/// Result of removing one element: the (possibly disconnected) remainder
/// and the old->new vertex index map. Vertices deleted by isolated-vertex
/// cleanup map to nullopt; the pivot always survives.
struct Removal {
    NeighborhoodPattern pattern;
    std::vector<std::optional<VertexId>> old_to_new;
};

Removal remove_element(const NeighborhoodPattern& p, const PatternElement& e);

/// All (element, sub-pattern) pairs whose removal leaves a connected
/// pattern one element smaller. The pattern is decomposable iff >= 2.
std::vector<std::pair<PatternElement, NeighborhoodPattern>> decompositions(
    const NeighborhoodPattern& p);

/// True iff p is an undirected simple path rooted at the pivot with at
/// most one vertex label, placed on the far end.
bool is_path_pattern(const NeighborhoodPattern& p);

/// Canonical vertex permutation: result[i] = old index of canonical vertex i
/// (result[0] == pivot). Lexicographically minimal serialization over all
/// permutations of the non-pivot vertices.
std::vector<VertexId> canonical_order(const NeighborhoodPattern& p);

/// Equal iff the two patterns are pivoted-isomorphic.
std::string canonical_key(const NeighborhoodPattern& p);

/// Hash of the pivot's labels, its incident (direction, label) multiset,
/// and the pattern size. Invariant under pivoted isomorphism.
std::uint64_t coarse_hash(const NeighborhoodPattern& p);

/// Line-oriented serialization in canonical vertex order, using label
/// names: "P <size> <support>", then "L <vertex> <label>" lines, then
/// "E <src> <dst> <label>" lines.
std::string serialize_pattern(const NeighborhoodPattern& p, std::size_t support,
                              const LabelVocab& vertex_vocab,
                              const LabelVocab& edge_vocab);

}  // namespace fnm

#endif
