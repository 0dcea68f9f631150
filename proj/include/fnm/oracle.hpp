#ifndef FNM_ORACLE_HPP
#define FNM_ORACLE_HPP

#include <string>
#include <vector>

#include "fnm/graph.hpp"
#include "fnm/pattern.hpp"

// Brute-force reference implementations for testing. These share only the
// graph/pattern data types with the mining engine, never its search logic.
namespace fnm::oracle {

/// Fixed citation fixture: authors a1..a4 (Author), papers p1..p8 (Paper);
/// writes a1->{p1,p2,p3}, a2->{p4,p5}, a3->{p6,p7}, a4->{p8};
/// cites p2->p1, p5->p4, p7->p3, p8->p6.
LabeledGraph toy_db();

/// Exhaustive try-all-assignments evaluation of the match definition at
/// every vertex. Refuses graphs above the guard (200 vertices).
VidList naive_matches(const NeighborhoodPattern& p, const LabeledGraph& g);

struct PatternSupport {
    NeighborhoodPattern pattern;
    std::string key;
    std::size_t support{};
    VidList vids;
};

/// All connected loop-free pivoted patterns of size <= max_size whose naive
/// support within `universe` is >= tau, built by exhaustive element-wise
/// growth and de-duplicated by canonical key.
std::vector<PatternSupport> enumerate_patterns(const LabeledGraph& g,
                                               std::size_t max_size, std::size_t tau,
                                               const VidList& universe);

/// Classical subgraph isomorphism by exhaustive backtracking: does an
/// injective label/edge-preserving map g1 -> g2 exist?
bool naive_subgraph_iso(const LabeledGraph& g1, const LabeledGraph& g2);

/// The pivoted instance pair of the NP-completeness reduction: a fresh
/// pivot is attached to every vertex of each graph; g1 is subgraph
/// isomorphic to g2 iff lhs is pivoted subgraph isomorphic to
/// <rhs, rhs_pivot>.
struct ReducedInstance {
    NeighborhoodPattern lhs;
    LabeledGraph rhs;
    VertexId rhs_pivot{};
};

ReducedInstance reduce_subiso(const LabeledGraph& g1, const LabeledGraph& g2);

}  // namespace fnm::oracle

#endif
