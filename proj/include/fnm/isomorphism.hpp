#ifndef FNM_ISOMORPHISM_HPP
#define FNM_ISOMORPHISM_HPP

#include <vector>

#include "fnm/graph.hpp"
#include "fnm/pattern.hpp"

namespace fnm {

/// Injective pivot-preserving map: pattern vertex index -> target vertex.
using Embedding = std::vector<VertexId>;

/// True iff an embedding of p into <g, v> exists with pivot -> v.
/// Depth-first backtracking guided by the graph's label and adjacency
/// indexes; stops at the first embedding.
bool pivoted_subiso_at(const NeighborhoodPattern& p, const LabeledGraph& g, VertexId v);

/// Sorted sublist of `candidates` at which p matches. |result| is the
/// support of p within the candidate universe.
VidList matches(const NeighborhoodPattern& p, const LabeledGraph& g,
                const VidList& candidates);

/// All injective pivot-preserving label/edge-preserving maps from p1
/// (which may be a disconnected post-deletion fragment) into p2.
std::vector<Embedding> embeddings_between(const NeighborhoodPattern& p1,
                                          const NeighborhoodPattern& p2);

}  // namespace fnm

#endif
