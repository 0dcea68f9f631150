#include "fnm/pattern.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <map>
#include <sstream>

namespace fnm {

void NeighborhoodPattern::add_label(VertexId v, LabelId label) {
    auto& ls = labels_.at(v);
    auto it = std::lower_bound(ls.begin(), ls.end(), label);
    if (it != ls.end() && *it == label) return;
    ls.insert(it, label);
}

void NeighborhoodPattern::add_edge(VertexId src, VertexId dst, LabelId label) {
    if (src == dst) throw ValidationError("loop edge in pattern");
    labels_.at(src);
    labels_.at(dst);
    Edge e{src, dst, label};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) return;
    edges_.insert(it, e);
}

bool NeighborhoodPattern::has_label(VertexId v, LabelId label) const {
    const auto& ls = labels_.at(v);
    return std::binary_search(ls.begin(), ls.end(), label);
}

bool NeighborhoodPattern::has_edge(VertexId src, VertexId dst, LabelId label) const {
    Edge e{src, dst, label};
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::size_t NeighborhoodPattern::size() const {
    return label_count() + edges_.size();
}

std::size_t NeighborhoodPattern::label_count() const {
    std::size_t n = 0;
    for (const auto& ls : labels_) n += ls.size();
    return n;
}

std::size_t NeighborhoodPattern::degree(VertexId v) const {
    std::size_t n = 0;
    for (const Edge& e : edges_)
        if (e.src == v || e.dst == v) ++n;
    return n;
}

std::vector<PatternElement> NeighborhoodPattern::elements() const {
    std::vector<PatternElement> out;
    out.reserve(size());
    for (VertexId v = 0; v < labels_.size(); ++v)
        for (LabelId l : labels_[v]) out.push_back(PatternElement::vertex_label(v, l));
    for (const Edge& e : edges_) out.push_back(PatternElement::edge(e.src, e.dst, e.label));
    return out;
}

bool NeighborhoodPattern::contains(const PatternElement& e) const {
    if (e.kind == PatternElement::Kind::VertexLabel)
        return e.vertex < vertex_count() && has_label(e.vertex, e.label);
    return e.src < vertex_count() && e.dst < vertex_count() &&
           has_edge(e.src, e.dst, e.label);
}

bool NeighborhoodPattern::is_connected() const {
    std::size_t n = vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{kPivot};
    seen[kPivot] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (const Edge& e : edges_) {
            VertexId other;
            if (e.src == v) other = e.dst;
            else if (e.dst == v) other = e.src;
            else continue;
            if (!seen[other]) {
                seen[other] = 1;
                ++reached;
                stack.push_back(other);
            }
        }
    }
    return reached == n;
}

Removal remove_element(const NeighborhoodPattern& p, const PatternElement& e) {
    assert(p.contains(e));
    std::size_t n = p.vertex_count();

    // Copy minus the element.
    std::vector<std::vector<LabelId>> labels(n);
    for (VertexId v = 0; v < n; ++v) labels[v] = p.labels_of(v);
    std::vector<Edge> edges = p.edges();
    if (e.kind == PatternElement::Kind::VertexLabel) {
        auto& ls = labels[e.vertex];
        ls.erase(std::find(ls.begin(), ls.end(), e.label));
    } else {
        edges.erase(std::find(edges.begin(), edges.end(), Edge{e.src, e.dst, e.label}));
    }

    // Isolated-vertex cleanup: drop non-pivot vertices with no label and no
    // incident edge, then compact indices.
    std::vector<std::optional<VertexId>> old_to_new(n);
    VertexId next = 0;
    for (VertexId v = 0; v < n; ++v) {
        bool keep = v == NeighborhoodPattern::kPivot || !labels[v].empty();
        if (!keep)
            for (const Edge& ed : edges)
                if (ed.src == v || ed.dst == v) {
                    keep = true;
                    break;
                }
        if (keep) old_to_new[v] = next++;
    }

    NeighborhoodPattern out(next);
    for (VertexId v = 0; v < n; ++v)
        if (old_to_new[v])
            for (LabelId l : labels[v]) out.add_label(*old_to_new[v], l);
    for (const Edge& ed : edges)
        out.add_edge(*old_to_new[ed.src], *old_to_new[ed.dst], ed.label);
    return Removal{std::move(out), std::move(old_to_new)};
}

std::vector<std::pair<PatternElement, NeighborhoodPattern>> decompositions(
    const NeighborhoodPattern& p) {
    std::vector<std::pair<PatternElement, NeighborhoodPattern>> out;
    for (const PatternElement& e : p.elements()) {
        Removal r = remove_element(p, e);
        if (!r.pattern.empty() && r.pattern.is_connected())
            out.emplace_back(e, std::move(r.pattern));
    }
    return out;
}

bool is_path_pattern(const NeighborhoodPattern& p) {
    std::size_t n = p.vertex_count();
    std::size_t nlabels = p.label_count();
    if (nlabels > 1) return false;
    if (n == 1) return p.edges().empty() && nlabels == 1;
    if (p.edges().size() != n - 1) return false;
    if (!p.is_connected()) return false;
    // At most one edge per undirected vertex pair.
    std::map<std::pair<VertexId, VertexId>, int> pairs;
    for (const Edge& e : p.edges()) {
        auto key = std::minmax(e.src, e.dst);
        if (++pairs[{key.first, key.second}] > 1) return false;
    }
    // A tree is a path with the pivot at one end iff the pivot has degree 1
    // and no vertex exceeds degree 2.
    if (p.degree(NeighborhoodPattern::kPivot) != 1) return false;
    VertexId far_end = NeighborhoodPattern::kPivot;
    for (VertexId v = 0; v < n; ++v) {
        std::size_t d = p.degree(v);
        if (d > 2) return false;
        if (d == 1 && v != NeighborhoodPattern::kPivot) far_end = v;
    }
    if (nlabels == 1) {
        // The single label must sit on the far end.
        for (VertexId v = 0; v < n; ++v)
            if (!p.labels_of(v).empty() && v != far_end) return false;
    }
    return true;
}

namespace {

// Order-preserving numeric encoding of a pattern under a vertex relabeling
// perm (old index -> new index). Labels sort before edges via the top bit.
std::vector<std::uint64_t> encode(const NeighborhoodPattern& p,
                                  const std::vector<VertexId>& perm) {
    std::vector<std::uint64_t> code;
    code.reserve(1 + p.size());
    code.push_back(p.vertex_count());
    std::vector<std::uint64_t> items;
    for (VertexId v = 0; v < p.vertex_count(); ++v)
        for (LabelId l : p.labels_of(v))
            items.push_back((static_cast<std::uint64_t>(perm[v]) << 32) | l);
    for (const Edge& e : p.edges())
        items.push_back((1ULL << 63) | (static_cast<std::uint64_t>(perm[e.src]) << 42) |
                        (static_cast<std::uint64_t>(perm[e.dst]) << 21) | e.label);
    std::sort(items.begin(), items.end());
    code.insert(code.end(), items.begin(), items.end());
    return code;
}

std::vector<std::uint64_t> minimal_encoding(const NeighborhoodPattern& p,
                                            std::vector<VertexId>* best_perm_out) {
    std::size_t n = p.vertex_count();
    std::vector<VertexId> perm(n);
    for (VertexId v = 0; v < n; ++v) perm[v] = v;
    std::vector<std::uint64_t> best = encode(p, perm);
    std::vector<VertexId> best_perm = perm;
    if (n > 2) {
        std::vector<VertexId> imgs(n - 1);
        for (std::size_t i = 0; i < n - 1; ++i) imgs[i] = static_cast<VertexId>(i + 1);
        while (std::next_permutation(imgs.begin(), imgs.end())) {
            for (std::size_t i = 0; i < n - 1; ++i) perm[i + 1] = imgs[i];
            auto code = encode(p, perm);
            if (code < best) {
                best = std::move(code);
                best_perm = perm;
            }
        }
    }
    if (best_perm_out) *best_perm_out = std::move(best_perm);
    return best;
}

}  // namespace

std::vector<VertexId> canonical_order(const NeighborhoodPattern& p) {
    std::vector<VertexId> old_to_new;
    minimal_encoding(p, &old_to_new);
    std::vector<VertexId> new_to_old(p.vertex_count());
    for (VertexId v = 0; v < p.vertex_count(); ++v) new_to_old[old_to_new[v]] = v;
    return new_to_old;
}

std::string canonical_key(const NeighborhoodPattern& p) {
    auto code = minimal_encoding(p, nullptr);
    std::string key;
    key.reserve(code.size() * 17);
    char buf[17];
    for (std::uint64_t word : code) {
        auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), word, 16);
        (void)ec;
        key.append(buf, end);
        key.push_back(',');
    }
    return key;
}

std::uint64_t coarse_hash(const NeighborhoodPattern& p) {
    constexpr std::uint64_t kPrime = 1099511628211ULL;
    std::uint64_t h = 14695981039346656037ULL;
    auto mix = [&](std::uint64_t x) {
        h ^= x;
        h *= kPrime;
    };
    for (LabelId l : p.labels_of(NeighborhoodPattern::kPivot)) mix(0x100000000ULL | l);
    std::vector<std::uint64_t> incident;
    for (const Edge& e : p.edges()) {
        if (e.src == NeighborhoodPattern::kPivot)
            incident.push_back(0x200000000ULL | e.label);
        if (e.dst == NeighborhoodPattern::kPivot)
            incident.push_back(0x300000000ULL | e.label);
    }
    std::sort(incident.begin(), incident.end());
    for (std::uint64_t x : incident) mix(x);
    mix(p.size());
    return h;
}

std::string serialize_pattern(const NeighborhoodPattern& p, std::size_t support,
                              const LabelVocab& vertex_vocab,
                              const LabelVocab& edge_vocab) {
    std::vector<VertexId> new_to_old = canonical_order(p);
    std::vector<VertexId> old_to_new(p.vertex_count());
    for (VertexId v = 0; v < p.vertex_count(); ++v) old_to_new[new_to_old[v]] = v;

    std::ostringstream os;
    os << "P " << p.size() << ' ' << support << '\n';
    std::vector<std::pair<VertexId, std::string>> labels;
    for (VertexId v = 0; v < p.vertex_count(); ++v)
        for (LabelId l : p.labels_of(v)) labels.emplace_back(old_to_new[v], vertex_vocab.name(l));
    std::sort(labels.begin(), labels.end());
    for (const auto& [v, name] : labels) os << "L " << v << ' ' << name << '\n';
    std::vector<std::tuple<VertexId, VertexId, std::string>> edges;
    for (const Edge& e : p.edges())
        edges.emplace_back(old_to_new[e.src], old_to_new[e.dst], edge_vocab.name(e.label));
    std::sort(edges.begin(), edges.end());
    for (const auto& [s, d, name] : edges) os << "E " << s << ' ' << d << ' ' << name << '\n';
    return os.str();
}

}  // namespace fnm
