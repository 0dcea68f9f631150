#include "fnm/miner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "fnm/isomorphism.hpp"

namespace fnm {

const FoundPattern* MiningResult::find(const std::string& key) const {
    for (const auto& level : levels)
        for (const auto& fp : level)
            if (fp.key == key) return &fp;
    return nullptr;
}

std::size_t MiningResult::total_patterns() const {
    std::size_t n = 0;
    for (const auto& level : levels) n += level.size();
    return n;
}

std::optional<VidList> vid_prune(const VidList& a, const VidList& b, std::size_t tau) {
    VidList inter = VidList::intersect(a, b);
    if (inter.size() < tau) return std::nullopt;
    return inter;
}

namespace {

void consider(std::map<std::string, NeighborhoodPattern>& out, NeighborhoodPattern cand) {
    if (!cand.is_connected()) return;
    std::string key = canonical_key(cand);
    out.emplace(std::move(key), std::move(cand));
}

}  // namespace

std::vector<NeighborhoodPattern> join(const NeighborhoodPattern& p1,
                                      const NeighborhoodPattern& p2) {
    if (p1.size() != p2.size() || p1.size() < 1)
        throw std::invalid_argument("join requires two patterns of equal size >= 1");
    std::map<std::string, NeighborhoodPattern> out;
    for (const PatternElement& e : p1.elements()) {
        Removal rem = remove_element(p1, e);
        for (const Embedding& f : embeddings_between(rem.pattern, p2)) {
            if (e.kind == PatternElement::Kind::VertexLabel) {
                auto nv = rem.old_to_new[e.vertex];
                if (!nv) continue;  // cannot happen for a valid pattern
                VertexId tv = f[*nv];
                if (p2.has_label(tv, e.label)) continue;
                NeighborhoodPattern cand = p2;
                cand.add_label(tv, e.label);
                consider(out, std::move(cand));
                continue;
            }
            auto ns = rem.old_to_new[e.src];
            auto nd = rem.old_to_new[e.dst];
            if (ns && nd) {
                VertexId ts = f[*ns], td = f[*nd];
                if (ts == td || p2.has_edge(ts, td, e.label)) continue;
                NeighborhoodPattern cand = p2;
                cand.add_edge(ts, td, e.label);
                consider(out, std::move(cand));
            } else if (ns || nd) {
                // Dangling edge: its removed endpoint was deleted as
                // isolated. The free endpoint ranges over every p2 vertex
                // outside the embedding's image plus one fresh vertex;
                // image vertices are excluded so the candidate always
                // contains p1 and the parents' match-list intersection
                // stays a sound verification set.
                bool missing_src = !ns;
                VertexId fixed = ns ? f[*ns] : f[*nd];
                std::vector<bool> in_image(p2.vertex_count(), false);
                for (VertexId img : f) in_image[img] = true;
                for (VertexId t = 0; t <= p2.vertex_count(); ++t) {
                    if (t < p2.vertex_count() && in_image[t]) continue;
                    NeighborhoodPattern cand = p2;
                    VertexId free_end =
                        t == p2.vertex_count() ? cand.add_vertex() : t;
                    if (free_end == fixed) continue;
                    VertexId ts = missing_src ? free_end : fixed;
                    VertexId td = missing_src ? fixed : free_end;
                    if (cand.has_edge(ts, td, e.label)) continue;
                    cand.add_edge(ts, td, e.label);
                    consider(out, std::move(cand));
                }
            }
        }
    }
    std::vector<NeighborhoodPattern> result;
    result.reserve(out.size());
    for (auto& [key, p] : out) result.push_back(std::move(p));
    return result;
}

namespace {

struct Candidate {
    NeighborhoodPattern pattern;
    std::string key;
    VidList verify_set;
};

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

MiningResult mine(const LabeledGraph& g, const MiningConfig& cfg) {
    if (cfg.min_support.has_value() == cfg.min_ratio.has_value())
        throw std::invalid_argument("exactly one of min_support / min_ratio required");
    if (cfg.max_size < 1) throw std::invalid_argument("max_size must be >= 1");
    if (cfg.min_ratio && (*cfg.min_ratio <= 0.0 || *cfg.min_ratio > 1.0))
        throw std::invalid_argument("min_ratio must be in (0, 1]");

    VidList universe;
    if (cfg.pivot_label) {
        auto id = g.vertex_label_vocab().find(*cfg.pivot_label);
        if (!id) {
            if (cfg.min_ratio)
                throw std::invalid_argument("unknown pivot label '" + *cfg.pivot_label + "'");
            // Absolute threshold with an unknown label: empty universe,
            // nothing can be frequent.
        } else {
            universe = g.vertices_with_label(*id);
        }
    } else {
        universe = g.all_vertices();
    }

    std::size_t tau;
    if (cfg.min_support) {
        tau = *cfg.min_support;
        if (tau < 1) throw std::invalid_argument("min_support must be >= 1");
    } else {
        tau = static_cast<std::size_t>(
            std::ceil(*cfg.min_ratio * static_cast<double>(universe.size())));
        tau = std::max<std::size_t>(tau, 1);
    }

    MiningResult result;
    result.universe_size = universe.size();
    result.tau = tau;
    result.levels.resize(cfg.max_size);
    result.stats.resize(cfg.max_size);

    auto t0 = std::chrono::steady_clock::now();
    auto paths = frequent_paths(g, tau, cfg.max_size, universe, cfg.use_vid);
    std::vector<std::vector<FoundPattern>> paths_by_size(cfg.max_size + 1);
    for (FrequentPath& fp : paths) {
        std::size_t sz = fp.path.size();
        NeighborhoodPattern p = fp.path.to_pattern();
        std::string key = canonical_key(p);
        paths_by_size[sz].push_back(
            FoundPattern{std::move(p), fp.vids.size(), std::move(key), std::move(fp.vids)});
    }

    auto sort_level = [](std::vector<FoundPattern>& level) {
        std::sort(level.begin(), level.end(), [](const FoundPattern& a, const FoundPattern& b) {
            if (a.support != b.support) return a.support > b.support;
            return a.key < b.key;
        });
    };

    result.levels[0] = std::move(paths_by_size[1]);
    sort_level(result.levels[0]);
    result.stats[0] =
        LevelStats{1, 0, 0, 0, 0, 0, result.levels[0].size(), elapsed_ms(t0)};

    for (std::size_t k = 2; k <= cfg.max_size; ++k) {
        auto tk = std::chrono::steady_clock::now();
        LevelStats& st = result.stats[k - 1];
        st.level = k;
        const auto& prev = result.levels[k - 2];

        // Candidate generation with coarse-hash buckets in front of the
        // exact canonical-key comparison.
        std::vector<Candidate> cands;
        std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
        for (std::size_t i = 0; i < prev.size(); ++i) {
            for (std::size_t j = i; j < prev.size(); ++j) {
                ++st.pairs_considered;
                VidList verify_set;
                if (cfg.use_vid) {
                    auto inter = vid_prune(*prev[i].vids, *prev[j].vids, tau);
                    if (!inter) {
                        ++st.pairs_pruned;
                        continue;
                    }
                    verify_set = std::move(*inter);
                } else {
                    verify_set = universe;
                }
                for (NeighborhoodPattern& cand : join(prev[i].pattern, prev[j].pattern)) {
                    ++st.candidates_generated;
                    std::uint64_t h = coarse_hash(cand);
                    std::string key = canonical_key(cand);
                    auto& bucket = buckets[h];
                    bool dup = false;
                    for (std::size_t idx : bucket)
                        if (cands[idx].key == key) {
                            dup = true;
                            break;
                        }
                    if (dup) continue;
                    bucket.push_back(cands.size());
                    cands.push_back(Candidate{std::move(cand), std::move(key), verify_set});
                }
            }
        }
        st.candidates_unique = cands.size();

        std::sort(cands.begin(), cands.end(),
                  [](const Candidate& a, const Candidate& b) { return a.key < b.key; });

        std::vector<FoundPattern> level;
        std::unordered_set<std::string> level_keys;
        for (Candidate& c : cands) {
            ++st.verified;
            VidList vl = matches(c.pattern, g, c.verify_set);
            if (vl.size() < tau) continue;
            level_keys.insert(c.key);
            level.push_back(
                FoundPattern{std::move(c.pattern), vl.size(), std::move(c.key), std::move(vl)});
        }
        // Path patterns of this size are building blocks, not join results;
        // union them in with canonical-key dedup.
        for (FoundPattern& fp : paths_by_size[k])
            if (!level_keys.count(fp.key)) {
                level_keys.insert(fp.key);
                level.push_back(std::move(fp));
            }
        sort_level(level);
        st.frequent = level.size();
        st.millis = elapsed_ms(tk);
        result.levels[k - 1] = std::move(level);
    }

    if (!cfg.retain_vidlists)
        for (auto& level : result.levels)
            for (FoundPattern& fp : level) fp.vids.reset();
    return result;
}

}  // namespace fnm
