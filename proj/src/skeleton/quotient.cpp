#include <gwemb/error.hpp>
#include <gwemb/skeleton.hpp>

#include <algorithm>

namespace gwemb {

namespace {

auto sorted(std::span<const VertexId> s) -> std::vector<VertexId>
{
    std::vector<VertexId> v(s.begin(), s.end());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

auto quotient(const Graph & g, std::span<const VertexId> frame, std::span<const VertexId> contracted)
    -> QuotientResult
{
    std::size_t n = g.vertex_count();
    auto f = sorted(frame);
    auto d = sorted(contracted);
    std::vector<char> role(n, 0); // 1 frame, 2 contracted
    for (auto v : f) {
        if (v >= n)
            throw InputError("frame vertex " + std::to_string(v) + " out of range");
        role[v] = 1;
    }
    for (auto v : d) {
        if (v >= n)
            throw InputError("contracted vertex " + std::to_string(v) + " out of range");
        if (role[v] == 1)
            throw InputError("vertex " + g.label(v) + " is both framed and contracted");
        role[v] = 2;
    }

    auto host = remove_vertices(g, f);
    std::vector<VertexId> d_host;
    for (auto v : d)
        d_host.push_back(*host.local[v]);
    auto assoc_host = associate(host.graph, d_host);

    QuotientResult out;
    out.removed_frame = f;
    out.local.assign(n, std::nullopt);
    std::vector<std::string> labels;
    for (VertexId v = 0; v < n; ++v)
        if (role[v] == 0) {
            out.local[v] = static_cast<VertexId>(out.original.size());
            out.original.push_back(v);
            if (g.has_labels())
                labels.push_back(g.label(v));
        }

    out.association.vertices = d;
    for (std::size_t i = 0; i < d.size(); ++i) {
        auto tag = assoc_host.tags[i];
        tag.a = host.original[tag.a];
        tag.b = host.original[tag.b];
        if (tag.kind == AssociationKind::Edge && tag.a > tag.b)
            std::swap(tag.a, tag.b);
        if (tag.kind == AssociationKind::None)
            tag.a = tag.b = 0;
        out.association.tags.push_back(tag);
    }

    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        if (role[u] == 0 && role[v] == 0)
            edges.emplace_back(*out.local[u], *out.local[v]);
    for (auto & tag : out.association.tags)
        if (tag.kind == AssociationKind::Edge)
            edges.emplace_back(*out.local[tag.a], *out.local[tag.b]);
    out.quotient = Graph::build(out.original.size(), edges, std::move(labels));
    return out;
}

auto quotient(const Graph & g, const SkeletonSpec & s) -> QuotientResult
{
    return quotient(g, s.frame, s.contracted);
}

} // namespace gwemb
