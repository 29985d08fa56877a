#include <gwemb/error.hpp>
#include <gwemb/graph.hpp>

#include <algorithm>
#include <unordered_set>

namespace gwemb {

auto Graph::build(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels) -> Graph
{
    Graph g;
    g.neighbours_.resize(n);
    g.rows_.assign(n, Bitset(n));
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw InputError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v) +
                " with " + std::to_string(n) + " vertices");
        if (u == v)
            throw InputError("self-loop at vertex " + std::to_string(u));
        if (g.rows_[u].test(v))
            continue;
        g.rows_[u].set(v);
        g.rows_[v].set(u);
        g.neighbours_[u].push_back(v);
        g.neighbours_[v].push_back(u);
        ++g.edge_count_;
    }
    for (auto & adj : g.neighbours_)
        std::sort(adj.begin(), adj.end());

    if (! labels.empty()) {
        if (labels.size() != n)
            throw InputError("label count " + std::to_string(labels.size()) + " does not match vertex count " +
                std::to_string(n));
        std::unordered_set<std::string> seen;
        for (auto & l : labels)
            if (! seen.insert(l).second)
                throw InputError("duplicate label '" + l + "'");
        g.labels_ = std::move(labels);
    }
    return g;
}

auto Graph::neighbours(VertexId v) const -> std::span<const VertexId>
{
    if (v >= neighbours_.size())
        throw InputError("vertex id " + std::to_string(v) + " out of range");
    return neighbours_[v];
}

auto Graph::edges() const -> std::vector<Edge>
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < neighbours_.size(); ++u)
        for (auto v : neighbours_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

auto Graph::label(VertexId v) const -> std::string
{
    return labels_.empty() ? std::to_string(v) : labels_.at(v);
}

auto Graph::find_label(const std::string & label) const -> std::optional<VertexId>
{
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
        return std::nullopt;
    return static_cast<VertexId>(it - labels_.begin());
}

auto adjacency(const Graph & g, VertexId v) -> std::vector<VertexId>
{
    auto n = g.neighbours(v);
    return {n.begin(), n.end()};
}

auto induced_subgraph(const Graph & g, std::span<const VertexId> keep) -> Graph
{
    std::vector<std::optional<VertexId>> local(g.vertex_count());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] >= g.vertex_count())
            throw InputError("vertex id " + std::to_string(keep[i]) + " out of range");
        if (local[keep[i]])
            throw InputError("duplicate vertex " + std::to_string(keep[i]) + " in induced subgraph");
        local[keep[i]] = static_cast<VertexId>(i);
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (local[u] && local[v])
            edges.emplace_back(*local[u], *local[v]);
    std::vector<std::string> labels;
    if (g.has_labels())
        for (auto v : keep)
            labels.push_back(g.labels()[v]);
    return Graph::build(keep.size(), edges, std::move(labels));
}

auto remove_vertices(const Graph & g, std::span<const VertexId> removed) -> Restriction
{
    std::vector<bool> gone(g.vertex_count(), false);
    for (auto v : removed) {
        if (v >= g.vertex_count())
            throw InputError("vertex id " + std::to_string(v) + " out of range");
        gone[v] = true;
    }
    Restriction r;
    r.local.resize(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (! gone[v]) {
            r.local[v] = static_cast<VertexId>(r.original.size());
            r.original.push_back(v);
        }
    r.graph = induced_subgraph(g, r.original);
    return r;
}

auto VertexMap::is_injective() const -> bool
{
    std::vector<VertexId> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

auto VertexMap::is_surjective(std::size_t codomain_size) const -> bool
{
    std::vector<bool> hit(codomain_size, false);
    std::size_t covered = 0;
    for (auto w : image)
        if (w < codomain_size && ! hit[w]) {
            hit[w] = true;
            ++covered;
        }
    return covered == codomain_size;
}

void Coloring::validate(std::size_t target_size, std::size_t pattern_size) const
{
    if (color_of.size() != target_size)
        throw InputError("coloring covers " + std::to_string(color_of.size()) + " vertices, target has " +
            std::to_string(target_size));
    for (std::size_t v = 0; v < color_of.size(); ++v)
        if (color_of[v] >= pattern_size)
            throw InputError("color " + std::to_string(color_of[v]) + " of target vertex " + std::to_string(v) +
                " is not a pattern vertex");
}

auto Coloring::class_of(VertexId c) const -> std::vector<VertexId>
{
    std::vector<VertexId> out;
    for (VertexId v = 0; v < color_of.size(); ++v)
        if (color_of[v] == c)
            out.push_back(v);
    return out;
}

} // namespace gwemb
