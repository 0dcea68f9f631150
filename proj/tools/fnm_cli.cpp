#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>

#include "fnm/miner.hpp"

namespace {

enum class PatternType { Path, Tree, Cyclic };

PatternType classify(const fnm::NeighborhoodPattern& p) {
    if (p.edges().size() >= p.vertex_count()) return PatternType::Cyclic;
    if (fnm::is_path_pattern(p)) return PatternType::Path;
    return PatternType::Tree;
}

struct OutputStream {
    std::ofstream file;
    std::ostream* os = &std::cout;
    bool open(const std::string& path) {
        if (path.empty()) return true;
        file.open(path);
        if (!file) return false;
        os = &file;
        return true;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frequent neighborhood pattern miner for labeled graphs"};

    std::string vertex_label_path, edge_path, pivot_label, output_path, stats_path;
    std::string vid = "on", mode = "full";
    std::size_t max_size = 4;
    std::optional<std::size_t> min_support;
    std::optional<double> min_ratio;

    app.add_option("--vertex-labels", vertex_label_path,
                   "TSV file: vertex_id<TAB>label_name")
        ->required();
    app.add_option("--edges", edge_path, "TSV file: src_id<TAB>dst_id<TAB>edge_label")
        ->required();
    app.add_option("--min-support", min_support, "absolute support threshold");
    app.add_option("--min-ratio", min_ratio, "support ratio threshold in (0,1]");
    app.add_option("--pivot-label", pivot_label,
                   "restrict pivots to vertices with this label");
    app.add_option("--max-size", max_size, "maximum pattern size")->default_val(4);
    app.add_option("--vid", vid, "VID-list pruning: on|off")
        ->check(CLI::IsMember({"on", "off"}))
        ->default_val("on");
    app.add_option("--mode", mode, "paths: frequent path patterns only; full: all")
        ->check(CLI::IsMember({"paths", "full"}))
        ->default_val("full");
    app.add_option("--output", output_path, "pattern output file (default stdout)");
    app.add_option("--stats", stats_path, "stats output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (min_support.has_value() == min_ratio.has_value()) {
        std::cerr << "error: exactly one of --min-support / --min-ratio is required\n";
        return 2;
    }
    if (max_size < 1) {
        std::cerr << "error: --max-size must be >= 1\n";
        return 2;
    }

    std::ifstream vfile(vertex_label_path), efile(edge_path);
    if (!vfile) {
        std::cerr << "error: cannot open " << vertex_label_path << '\n';
        return 1;
    }
    if (!efile) {
        std::cerr << "error: cannot open " << edge_path << '\n';
        return 1;
    }

    try {
        fnm::LabeledGraph g = fnm::load_graph(vfile, efile);

        fnm::MiningConfig cfg;
        cfg.min_support = min_support;
        cfg.min_ratio = min_ratio;
        if (!pivot_label.empty()) cfg.pivot_label = pivot_label;
        cfg.max_size = max_size;
        cfg.use_vid = vid == "on";

        OutputStream out, stats;
        if (!out.open(output_path)) {
            std::cerr << "error: cannot write " << output_path << '\n';
            return 1;
        }
        if (!stats.open(stats_path)) {
            std::cerr << "error: cannot write " << stats_path << '\n';
            return 1;
        }

        const auto& vvocab = g.vertex_label_vocab();
        const auto& evocab = g.edge_label_vocab();
        std::size_t n_path = 0, n_tree = 0, n_cyclic = 0;
        auto emit = [&](const fnm::NeighborhoodPattern& p, std::size_t support,
                        std::size_t universe) {
            *out.os << fnm::serialize_pattern(p, support, vvocab, evocab);
            if (min_ratio && universe > 0) {
                char buf[32];
                std::snprintf(buf, sizeof(buf), "%.3f",
                              static_cast<double>(support) / static_cast<double>(universe));
                *out.os << "# ratio=" << buf << '\n';
            }
            *out.os << '\n';
            switch (classify(p)) {
                case PatternType::Path: ++n_path; break;
                case PatternType::Tree: ++n_tree; break;
                case PatternType::Cyclic: ++n_cyclic; break;
            }
        };

        if (mode == "paths") {
            fnm::VidList universe = pivot_label.empty()
                                        ? g.all_vertices()
                                        : g.vertices_with_label(pivot_label);
            std::size_t tau = min_support
                                  ? *min_support
                                  : std::max<std::size_t>(
                                        1, static_cast<std::size_t>(std::ceil(
                                               *min_ratio * universe.size())));
            auto t0 = std::chrono::steady_clock::now();
            auto paths = fnm::frequent_paths(g, tau, max_size, universe, cfg.use_vid);
            double ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
            // Deterministic order: (size, support desc, canonical key).
            std::vector<std::tuple<std::size_t, std::size_t, std::string,
                                   fnm::NeighborhoodPattern>>
                rows;
            for (const auto& fp : paths)
                rows.emplace_back(fp.path.size(), fp.vids.size(),
                                  fnm::canonical_key(fp.path.to_pattern()),
                                  fp.path.to_pattern());
            std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
                if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
                if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) > std::get<1>(b);
                return std::get<2>(a) < std::get<2>(b);
            });
            for (const auto& [sz, support, key, p] : rows) emit(p, support, universe.size());
            *stats.os << "universe=" << universe.size() << " tau=" << tau << '\n';
            *stats.os << "paths=" << rows.size() << " millis=" << ms << '\n';
            *stats.os << "types path=" << n_path << " tree=" << n_tree
                      << " cyclic=" << n_cyclic << '\n';
            return 0;
        }

        fnm::MiningResult result = fnm::mine(g, cfg);
        for (const auto& level : result.levels)
            for (const auto& fp : level) emit(fp.pattern, fp.support, result.universe_size);
        *stats.os << "universe=" << result.universe_size << " tau=" << result.tau << '\n';
        for (const auto& st : result.stats)
            *stats.os << "level=" << st.level << " candidates=" << st.candidates_generated
                      << " pruned=" << st.pairs_pruned << " verified=" << st.verified
                      << " frequent=" << st.frequent << " millis=" << st.millis << '\n';
        *stats.os << "types path=" << n_path << " tree=" << n_tree
                  << " cyclic=" << n_cyclic << '\n';
        return 0;
    } catch (const fnm::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 1;
    } catch (const fnm::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
