#include "fnm/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <tuple>

namespace fnm {

VidList::VidList(std::vector<VertexId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VidList VidList::from_sorted(std::vector<VertexId> ids) {
    VidList v;
    v.ids_ = std::move(ids);
    return v;
}

bool VidList::contains(VertexId v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

bool VidList::contains_all(const VidList& other) const {
    return std::includes(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end());
}

VidList VidList::intersect(const VidList& a, const VidList& b) {
    std::vector<VertexId> out;
    out.reserve(std::min(a.size(), b.size()));
    std::set_intersection(a.ids_.begin(), a.ids_.end(), b.ids_.begin(), b.ids_.end(),
                          std::back_inserter(out));
    return VidList::from_sorted(std::move(out));
}

LabelId LabelVocab::intern(std::string_view name) {
    auto it = index_.find(std::string(name));
    if (it != index_.end()) return it->second;
    LabelId id = static_cast<LabelId>(names_.size());
    names_.emplace_back(name);
    index_.emplace(names_.back(), id);
    return id;
}

std::optional<LabelId> LabelVocab::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

LabeledGraph LabeledGraph::with_vertices(std::size_t n) {
    LabeledGraph g;
    for (std::size_t i = 0; i < n; ++i) g.intern_vertex("v" + std::to_string(i));
    return g;
}

VertexId LabeledGraph::intern_vertex(std::string_view name) {
    auto it = name_index_.find(std::string(name));
    if (it != name_index_.end()) return it->second;
    VertexId id = static_cast<VertexId>(names_.size());
    names_.emplace_back(name);
    name_index_.emplace(names_.back(), id);
    labels_.emplace_back();
    out_.emplace_back();
    in_.emplace_back();
    return id;
}

std::optional<VertexId> LabeledGraph::find_vertex(std::string_view name) const {
    auto it = name_index_.find(std::string(name));
    if (it == name_index_.end()) return std::nullopt;
    return it->second;
}

void LabeledGraph::add_vertex_label(VertexId v, LabelId label) {
    auto& ls = labels_.at(v);
    auto it = std::lower_bound(ls.begin(), ls.end(), label);
    if (it != ls.end() && *it == label) return;
    ls.insert(it, label);
    if (label_index_.size() <= label) label_index_.resize(label + 1);
    auto& idx = label_index_[label];
    auto vit = std::lower_bound(idx.begin(), idx.end(), v);
    if (vit == idx.end() || *vit != v) idx.insert(vit, v);
}

bool LabeledGraph::add_edge(VertexId src, VertexId dst, LabelId label) {
    if (src == dst)
        throw ValidationError("loop edge not allowed at vertex '" + names_.at(src) + "'");
    if (!edges_.insert(Edge{src, dst, label}).second) return false;
    out_.at(src).push_back({dst, label});
    in_.at(dst).push_back({src, label});
    return true;
}

std::size_t LabeledGraph::size() const {
    std::size_t n = edges_.size();
    for (const auto& ls : labels_) n += ls.size();
    return n;
}

bool LabeledGraph::has_label(VertexId v, LabelId label) const {
    const auto& ls = labels_.at(v);
    return std::binary_search(ls.begin(), ls.end(), label);
}

bool LabeledGraph::has_edge(VertexId src, VertexId dst, LabelId label) const {
    return edges_.count(Edge{src, dst, label}) > 0;
}

VidList LabeledGraph::vertices_with_label(LabelId label) const {
    if (label >= label_index_.size()) return {};
    return VidList::from_sorted(label_index_[label]);
}

VidList LabeledGraph::vertices_with_label(std::string_view name) const {
    auto id = vvocab_.find(name);
    if (!id) return {};
    return vertices_with_label(*id);
}

VidList LabeledGraph::all_vertices() const {
    std::vector<VertexId> ids(vertex_count());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<VertexId>(i);
    return VidList::from_sorted(std::move(ids));
}

namespace {

// Splits a TSV line; returns false for comment/blank lines.
bool split_fields(const std::string& line, std::vector<std::string>& fields) {
    if (line.empty() || line[0] == '#') return false;
    fields.clear();
    std::size_t start = 0;
    while (true) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
    if (fields.size() == 1 && fields[0].empty()) return false;
    return true;
}

std::string strip_cr(std::string s) {
    if (!s.empty() && s.back() == '\r') s.pop_back();
    return s;
}

}  // namespace

LabeledGraph load_graph(std::istream& vertex_label_src, std::istream& edge_src) {
    LabeledGraph g;
    std::vector<std::string> fields;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(vertex_label_src, line)) {
        ++line_no;
        if (!split_fields(strip_cr(line), fields)) continue;
        if (fields.size() != 2)
            throw ParseError("vertex-label line " + std::to_string(line_no) +
                                 ": expected 2 tab-separated fields, got " +
                                 std::to_string(fields.size()),
                             line_no);
        if (fields[0].empty())
            throw ParseError("vertex-label line " + std::to_string(line_no) +
                                 ": empty vertex id",
                             line_no);
        if (fields[1].empty())
            throw ValidationError("vertex-label line " + std::to_string(line_no) +
                                  ": empty label name");
        VertexId v = g.intern_vertex(fields[0]);
        g.add_vertex_label(v, g.vertex_label_vocab().intern(fields[1]));
    }
    line_no = 0;
    while (std::getline(edge_src, line)) {
        ++line_no;
        if (!split_fields(strip_cr(line), fields)) continue;
        if (fields.size() != 3)
            throw ParseError("edge line " + std::to_string(line_no) +
                                 ": expected 3 tab-separated fields, got " +
                                 std::to_string(fields.size()),
                             line_no);
        if (fields[0].empty() || fields[1].empty())
            throw ParseError("edge line " + std::to_string(line_no) + ": empty vertex id",
                             line_no);
        if (fields[2].empty())
            throw ValidationError("edge line " + std::to_string(line_no) +
                                  ": empty edge label");
        VertexId s = g.intern_vertex(fields[0]);
        VertexId d = g.intern_vertex(fields[1]);
        if (s == d)
            throw ValidationError("edge line " + std::to_string(line_no) +
                                  ": loop edge on vertex '" + fields[0] + "'");
        g.add_edge(s, d, g.edge_label_vocab().intern(fields[2]));
    }
    return g;
}

void save_graph(const LabeledGraph& g, std::ostream& vertex_label_out,
                std::ostream& edge_out) {
    // Rows are ordered by names, not internal ids, so that saving a reloaded
    // graph reproduces the file byte for byte.
    std::vector<std::pair<std::string, std::string>> label_rows;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (LabelId l : g.labels_of(v))
            label_rows.emplace_back(g.vertex_name(v), g.vertex_label_vocab().name(l));
    std::sort(label_rows.begin(), label_rows.end());
    for (const auto& [v, l] : label_rows) vertex_label_out << v << '\t' << l << '\n';

    std::vector<std::tuple<std::string, std::string, std::string>> edge_rows;
    for (const Edge& e : g.edges())
        edge_rows.emplace_back(g.vertex_name(e.src), g.vertex_name(e.dst),
                               g.edge_label_vocab().name(e.label));
    std::sort(edge_rows.begin(), edge_rows.end());
    for (const auto& [s, d, l] : edge_rows)
        edge_out << s << '\t' << d << '\t' << l << '\n';
}

}  // namespace fnm
