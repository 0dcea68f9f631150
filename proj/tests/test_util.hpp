#ifndef FNM_TEST_UTIL_HPP
#define FNM_TEST_UTIL_HPP

#include <random>
#include <string>
#include <vector>

#include "fnm/graph.hpp"
#include "fnm/pattern.hpp"

namespace fnm::testutil {

inline VertexId vid(const LabeledGraph& g, const std::string& name) {
    return *g.find_vertex(name);
}

inline VidList vids(const LabeledGraph& g, const std::vector<std::string>& names) {
    std::vector<VertexId> ids;
    for (const auto& n : names) ids.push_back(vid(g, n));
    return VidList(std::move(ids));
}

inline LabelId writes_label(const LabeledGraph& g) {
    return *g.edge_label_vocab().find("writes");
}
inline LabelId cites_label(const LabeledGraph& g) {
    return *g.edge_label_vocab().find("cites");
}

/// Pivot with two written papers (the "at least two papers" shape).
inline NeighborhoodPattern two_paper_pattern(const LabeledGraph& g) {
    NeighborhoodPattern p(3);
    p.add_edge(0, 1, writes_label(g));
    p.add_edge(0, 2, writes_label(g));
    return p;
}

/// Pivot writes two papers, one citing the other (the self-cite shape).
inline NeighborhoodPattern self_cite_pattern(const LabeledGraph& g) {
    NeighborhoodPattern p(3);
    p.add_edge(0, 1, writes_label(g));
    p.add_edge(0, 2, writes_label(g));
    p.add_edge(2, 1, cites_label(g));
    return p;
}

/// Pivot writes a paper that some other paper cites.
inline NeighborhoodPattern has_cited_paper_pattern(const LabeledGraph& g) {
    NeighborhoodPattern p(3);
    p.add_edge(0, 1, writes_label(g));
    p.add_edge(2, 1, cites_label(g));
    return p;
}

/// Pivot writes a paper that cites some other paper.
inline NeighborhoodPattern paper_citing_another_pattern(const LabeledGraph& g) {
    NeighborhoodPattern p(3);
    p.add_edge(0, 1, writes_label(g));
    p.add_edge(1, 2, cites_label(g));
    return p;
}

/// Random labeled multigraph: n vertices, up to m edges (loops and
/// duplicates dropped), labels drawn from small vocabularies.
inline LabeledGraph random_graph(std::mt19937& rng, std::size_t n, std::size_t m,
                                 std::size_t n_vlabels, std::size_t n_elabels,
                                 double label_prob = 0.5) {
    LabeledGraph g = LabeledGraph::with_vertices(n);
    for (std::size_t i = 0; i < n_vlabels; ++i)
        g.vertex_label_vocab().intern("L" + std::to_string(i));
    for (std::size_t i = 0; i < n_elabels; ++i)
        g.edge_label_vocab().intern("e" + std::to_string(i));
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (VertexId v = 0; v < n; ++v)
        for (LabelId l = 0; l < n_vlabels; ++l)
            if (coin(rng) < label_prob) g.add_vertex_label(v, l);
    if (n < 2) return g;
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
    std::uniform_int_distribution<LabelId> elab(0, static_cast<LabelId>(n_elabels - 1));
    for (std::size_t i = 0; i < m; ++i) {
        VertexId s = pick(rng), d = pick(rng);
        if (s == d) continue;
        g.add_edge(s, d, elab(rng));
    }
    return g;
}

/// Structural enumeration of all connected patterns of size <= max_size
/// over the given label alphabet, de-duplicated by canonical key.
std::vector<NeighborhoodPattern> all_connected_patterns(std::size_t max_size,
                                                        std::size_t n_vlabels,
                                                        std::size_t n_elabels);

}  // namespace fnm::testutil

#endif
