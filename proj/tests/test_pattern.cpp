#include <doctest.h>

#include <algorithm>
#include <set>

#include "fnm/oracle.hpp"
#include "fnm/pattern.hpp"
#include "test_util.hpp"

using namespace fnm;
using namespace fnm::testutil;

namespace {

// Fig. 3 shapes: a two-edge path from the pivot, optionally labeled at the
// far end.
NeighborhoodPattern two_edge_path(const LabeledGraph& g) {
    NeighborhoodPattern p(3);
    p.add_edge(0, 1, writes_label(g));
    p.add_edge(2, 1, cites_label(g));
    return p;
}

NeighborhoodPattern two_edge_path_labeled(const LabeledGraph& g) {
    NeighborhoodPattern p = two_edge_path(g);
    p.add_label(2, *g.vertex_label_vocab().find("Paper"));
    return p;
}

}  // namespace

TEST_CASE("pattern size counts elements") {
    LabeledGraph g = oracle::toy_db();
    NeighborhoodPattern single;
    single.add_label(0, *g.vertex_label_vocab().find("Author"));
    CHECK(single.size() == 1);
    CHECK(two_edge_path(g).size() == 2);
    CHECK(two_edge_path_labeled(g).size() == 3);
    CHECK(self_cite_pattern(g).size() == 3);
}

TEST_CASE("remove_element: far label yields the unlabeled path") {
    LabeledGraph g = oracle::toy_db();
    NeighborhoodPattern labeled = two_edge_path_labeled(g);
    auto e = PatternElement::vertex_label(2, *g.vertex_label_vocab().find("Paper"));
    Removal r = remove_element(labeled, e);
    CHECK(canonical_key(r.pattern) == canonical_key(two_edge_path(g)));
}

TEST_CASE("remove_element: deleting the writes edge leaves a disconnected fragment") {
    LabeledGraph g = oracle::toy_db();
    NeighborhoodPattern p = has_cited_paper_pattern(g);
    Removal r = remove_element(p, PatternElement::edge(0, 1, writes_label(g)));
    CHECK(r.pattern.vertex_count() == 3);  // both paper vertices retained
    CHECK_FALSE(r.pattern.is_connected());
    CHECK(r.pattern.edges().size() == 1);
}

TEST_CASE("remove_element: dangling endpoint is deleted and indices compact") {
    LabeledGraph g = oracle::toy_db();
    NeighborhoodPattern p = has_cited_paper_pattern(g);
    Removal r = remove_element(p, PatternElement::edge(2, 1, cites_label(g)));
    CHECK(r.pattern.vertex_count() == 2);
    CHECK(r.pattern.is_connected());
    CHECK_FALSE(r.old_to_new[2].has_value());
    CHECK(r.old_to_new[0] == 0);
    CHECK(r.old_to_new[1] == 1);
}

TEST_CASE("remove_element: last element of a size-1 pattern flags empty") {
    NeighborhoodPattern p;
    p.add_label(0, 0);
    Removal r = remove_element(p, PatternElement::vertex_label(0, 0));
    CHECK(r.pattern.empty());
    CHECK(r.pattern.vertex_count() == 1);  // the pivot itself survives
}

TEST_CASE("decompositions: path patterns have exactly one") {
    LabeledGraph g = oracle::toy_db();
    CHECK(decompositions(two_edge_path(g)).size() == 1);
    CHECK(decompositions(two_edge_path_labeled(g)).size() == 1);
}

TEST_CASE("decompositions: cycles and multi-label patterns are decomposable") {
    LabeledGraph g = oracle::toy_db();
    CHECK(decompositions(self_cite_pattern(g)).size() >= 2);

    NeighborhoodPattern two_labels(2);
    two_labels.add_edge(0, 1, writes_label(g));
    two_labels.add_label(0, 0);
    two_labels.add_label(1, 1);
    CHECK(decompositions(two_labels).size() >= 2);
}

TEST_CASE("is_path_pattern") {
    LabeledGraph g = oracle::toy_db();
    CHECK(is_path_pattern(two_edge_path(g)));
    CHECK(is_path_pattern(two_edge_path_labeled(g)));
    CHECK_FALSE(is_path_pattern(two_paper_pattern(g)));  // fork at the pivot
    NeighborhoodPattern single;
    single.add_label(0, 0);
    CHECK(is_path_pattern(single));
    // Label anywhere but the far end disqualifies.
    NeighborhoodPattern mid = two_edge_path(g);
    mid.add_label(1, 0);
    CHECK_FALSE(is_path_pattern(mid));
    NeighborhoodPattern on_pivot = two_edge_path(g);
    on_pivot.add_label(0, 0);
    CHECK_FALSE(is_path_pattern(on_pivot));
}

TEST_CASE("canonical_key: invariant under renumbering, separates shapes") {
    LabeledGraph g = oracle::toy_db();
    NeighborhoodPattern t1 = self_cite_pattern(g);
    // Same triangle with the two paper vertices swapped.
    NeighborhoodPattern t2(3);
    t2.add_edge(0, 2, writes_label(g));
    t2.add_edge(0, 1, writes_label(g));
    t2.add_edge(1, 2, cites_label(g));
    CHECK(canonical_key(t1) == canonical_key(t2));

    CHECK(canonical_key(two_edge_path(g)) != canonical_key(two_paper_pattern(g)));
    CHECK(canonical_key(has_cited_paper_pattern(g)) !=
          canonical_key(paper_citing_another_pattern(g)));
}

TEST_CASE("coarse_hash: pivot-local invariant") {
    LabeledGraph g = oracle::toy_db();
    NeighborhoodPattern t1 = self_cite_pattern(g);
    NeighborhoodPattern t2(3);
    t2.add_edge(0, 2, writes_label(g));
    t2.add_edge(0, 1, writes_label(g));
    t2.add_edge(1, 2, cites_label(g));
    CHECK(coarse_hash(t1) == coarse_hash(t2));

    // Far-end variations are allowed to collide: the hash only inspects the
    // pivot's vicinity and the size.
    NeighborhoodPattern a = two_edge_path_labeled(g);
    NeighborhoodPattern b = two_edge_path(g);
    b.add_label(1, *g.vertex_label_vocab().find("Paper"));
    CHECK(coarse_hash(a) == coarse_hash(b));

    CHECK(coarse_hash(two_paper_pattern(g)) != coarse_hash(two_edge_path(g)));
}

TEST_CASE("theorem-3 characterization over all small patterns") {
    // Every connected pattern of size >= 2 has at least one decomposition,
    // and exactly one iff it is a path pattern.
    auto patterns = all_connected_patterns(4, 1, 2);
    CHECK(patterns.size() > 100);
    for (const NeighborhoodPattern& p : patterns) {
        if (p.size() < 2) continue;
        auto d = decompositions(p);
        CHECK(d.size() >= 1);
        CHECK((d.size() == 1) == is_path_pattern(p));
    }
}

TEST_CASE("remove_element never strands a labeled or connected vertex") {
    auto patterns = all_connected_patterns(3, 2, 1);
    for (const NeighborhoodPattern& p : patterns)
        for (const PatternElement& e : p.elements()) {
            Removal r = remove_element(p, e);
            for (VertexId v = 1; v < r.pattern.vertex_count(); ++v) {
                bool isolated = r.pattern.degree(v) == 0 && r.pattern.labels_of(v).empty();
                CHECK_FALSE(isolated);
            }
        }
}

TEST_CASE("canonical_key equality is mutual pivoted embeddability") {
    // For same-size patterns, equal keys must coincide with bidirectional
    // pivoted subgraph isomorphism; spot-check over the small universe.
    auto patterns = all_connected_patterns(3, 1, 1);
    for (std::size_t i = 0; i < patterns.size(); ++i)
        for (std::size_t j = i + 1; j < patterns.size(); ++j) {
            if (patterns[i].size() != patterns[j].size()) continue;
            // Distinct survivors of canonical dedup must differ.
            CHECK(canonical_key(patterns[i]) != canonical_key(patterns[j]));
        }
}
