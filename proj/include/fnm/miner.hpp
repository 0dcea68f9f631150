#ifndef FNM_MINER_HPP
#define FNM_MINER_HPP

#include <optional>
#include <string>
#include <vector>

#include "fnm/builder.hpp"
#include "fnm/graph.hpp"
#include "fnm/pattern.hpp"

namespace fnm {

struct MiningConfig {
    /// Exactly one of min_support / min_ratio must be set.
    std::optional<std::size_t> min_support;
    std::optional<double> min_ratio;
    /// Restricts the pivot universe to vertices carrying this label.
    /// Required when min_ratio is set together with a label-relative
    /// interpretation; optional otherwise.
    std::optional<std::string> pivot_label;
    std::size_t max_size = 4;
    bool use_vid = true;
    bool retain_vidlists = false;
};

struct FoundPattern {
    NeighborhoodPattern pattern;
    std::size_t support{};
    std::string key;
    std::optional<VidList> vids;
};

struct LevelStats {
    std::size_t level{};
    std::size_t pairs_considered{};
    std::size_t pairs_pruned{};
    std::size_t candidates_generated{};
    std::size_t candidates_unique{};
    std::size_t verified{};
    std::size_t frequent{};
    double millis{};
};

struct MiningResult {
    /// levels[k-1] holds the frequent patterns of size k, sorted by
    /// (support desc, canonical key).
    std::vector<std::vector<FoundPattern>> levels;
    std::vector<LevelStats> stats;
    std::size_t universe_size{};
    std::size_t tau{};

    const FoundPattern* find(const std::string& key) const;
    std::size_t total_patterns() const;
};

/// Apriori join: for every element of p1, delete it, embed the remainder
/// into p2 every possible way, and re-insert the element mapped through the
/// embedding. Dangling edges re-attach to every free p2 vertex and to one
/// fresh vertex. Results are connected, loop-free, and de-duplicated by
/// canonical key (key-sorted).
std::vector<NeighborhoodPattern> join(const NeighborhoodPattern& p1,
                                      const NeighborhoodPattern& p2);

/// Intersection if it reaches tau, otherwise nullopt (the pair need not be
/// joined).
std::optional<VidList> vid_prune(const VidList& a, const VidList& b, std::size_t tau);

/// Level-wise mining of all frequent neighborhood patterns of size <=
/// cfg.max_size.
MiningResult mine(const LabeledGraph& g, const MiningConfig& cfg);

}  // namespace fnm

#endif
