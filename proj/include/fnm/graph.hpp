#ifndef FNM_GRAPH_HPP
#define FNM_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace fnm {

using VertexId = std::uint32_t;
using LabelId = std::uint32_t;

/// A directed labeled edge. Inside a pattern the endpoints are local
/// vertex indices; inside the database they are dense vertex IDs.
struct Edge {
    VertexId src{};
    VertexId dst{};
    LabelId label{};
    auto operator<=>(const Edge&) const = default;
};

/// Strictly ascending, duplicate-free list of database vertex IDs.
/// Materializes M_G(P) for a pattern P.
class VidList {
public:
    VidList() = default;
    /// Sorts and removes duplicates.
    explicit VidList(std::vector<VertexId> ids);
    /// Adopts an already sorted, duplicate-free vector.
    static VidList from_sorted(std::vector<VertexId> ids);

    const std::vector<VertexId>& ids() const { return ids_; }
    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    bool contains(VertexId v) const;
    /// True when every id of `other` is present in *this.
    bool contains_all(const VidList& other) const;

    friend bool operator==(const VidList&, const VidList&) = default;

    /// Linear-time sorted intersection.
    static VidList intersect(const VidList& a, const VidList& b);

private:
    std::vector<VertexId> ids_;
};

/// Bidirectional name <-> id table for vertex or edge label names.
class LabelVocab {
public:
    LabelId intern(std::string_view name);
    std::optional<LabelId> find(std::string_view name) const;
    const std::string& name(LabelId id) const { return names_.at(id); }
    std::size_t size() const { return names_.size(); }

    friend bool operator==(const LabelVocab& a, const LabelVocab& b) {
        return a.names_ == b.names_;
    }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, LabelId> index_;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t line_no)
        : std::runtime_error(msg), line(line_no) {}
    std::size_t line;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NeighborEntry {
    VertexId vertex{};
    LabelId label{};
    auto operator<=>(const NeighborEntry&) const = default;
};

/// The single-graph database. Vertices are dense IDs 0..n-1 assigned in
/// first-appearance order of their external names. Immutable once loaded;
/// safe for concurrent reads.
class LabeledGraph {
public:
    LabeledGraph() = default;
    /// n anonymous vertices named v0..v{n-1}.
    static LabeledGraph with_vertices(std::size_t n);

    VertexId intern_vertex(std::string_view name);
    std::optional<VertexId> find_vertex(std::string_view name) const;
    const std::string& vertex_name(VertexId v) const { return names_.at(v); }

    void add_vertex_label(VertexId v, LabelId label);
    /// Returns false when the edge already exists. Throws ValidationError
    /// on a loop (src == dst).
    bool add_edge(VertexId src, VertexId dst, LabelId label);

    std::size_t vertex_count() const { return names_.size(); }
    /// |L_V| + |E|, the number of elements.
    std::size_t size() const;

    const std::vector<LabelId>& labels_of(VertexId v) const { return labels_.at(v); }
    bool has_label(VertexId v, LabelId label) const;
    bool has_edge(VertexId src, VertexId dst, LabelId label) const;
    const std::set<Edge>& edges() const { return edges_; }
    const std::vector<NeighborEntry>& out_edges(VertexId v) const { return out_.at(v); }
    const std::vector<NeighborEntry>& in_edges(VertexId v) const { return in_.at(v); }

    /// Sorted list of vertices carrying the label; empty for unknown ids.
    VidList vertices_with_label(LabelId label) const;
    VidList vertices_with_label(std::string_view name) const;
    VidList all_vertices() const;

    LabelVocab& vertex_label_vocab() { return vvocab_; }
    const LabelVocab& vertex_label_vocab() const { return vvocab_; }
    LabelVocab& edge_label_vocab() { return evocab_; }
    const LabelVocab& edge_label_vocab() const { return evocab_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, VertexId> name_index_;
    std::vector<std::vector<LabelId>> labels_;           // sorted per vertex
    std::set<Edge> edges_;
    std::vector<std::vector<NeighborEntry>> out_, in_;
    std::vector<std::vector<VertexId>> label_index_;     // sorted per label
    LabelVocab vvocab_, evocab_;
};

/// Reads the two TSV streams (vertex labels, edges). Lines beginning '#'
/// and blank lines are ignored; duplicate lines collapse.
LabeledGraph load_graph(std::istream& vertex_label_src, std::istream& edge_src);

/// Writes the graph back in the same TSV formats, deterministically.
void save_graph(const LabeledGraph& g, std::ostream& vertex_label_out,
                std::ostream& edge_out);

}  // namespace fnm

#endif
