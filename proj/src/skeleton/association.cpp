#include <gwemb/error.hpp>
#include <gwemb/skeleton.hpp>

#include <algorithm>

namespace gwemb {

auto Association::contains(VertexId d) const -> bool
{
    return std::binary_search(vertices.begin(), vertices.end(), d);
}

auto Association::of(VertexId d) const -> const AssociationTag &
{
    auto it = std::lower_bound(vertices.begin(), vertices.end(), d);
    if (it == vertices.end() || *it != d)
        throw InputError("vertex " + std::to_string(d) + " is not contracted");
    return tags[static_cast<std::size_t>(it - vertices.begin())];
}

auto associate(const Graph & host, std::span<const VertexId> d) -> Association
{
    std::size_t n = host.vertex_count();
    std::vector<char> in_d(n, 0);
    for (auto v : d) {
        if (v >= n)
            throw InputError("contracted vertex " + std::to_string(v) + " out of range");
        if (host.degree(v) > 2)
            throw InputError("contracted vertex " + host.label(v) + " has degree " + std::to_string(host.degree(v)) +
                " > 2");
        in_d[v] = 1;
    }

    Association out;
    out.vertices.assign(d.begin(), d.end());
    std::sort(out.vertices.begin(), out.vertices.end());
    out.vertices.erase(std::unique(out.vertices.begin(), out.vertices.end()), out.vertices.end());
    out.tags.resize(out.vertices.size());

    // Every component of host[D] is a path or a cycle. A path is left by at
    // most two edges leading out of D.
    std::vector<char> seen(n, 0);
    for (auto start : out.vertices) {
        if (seen[start])
            continue;
        std::vector<VertexId> component{start}, exits;
        seen[start] = 1;
        bool cycle = true;
        for (std::size_t i = 0; i < component.size(); ++i) {
            auto v = component[i];
            std::size_t inner = 0;
            for (auto w : host.neighbours(v)) {
                if (! in_d[w]) {
                    exits.push_back(w);
                    continue;
                }
                ++inner;
                if (! seen[w]) {
                    seen[w] = 1;
                    component.push_back(w);
                }
            }
            if (inner != 2)
                cycle = false;
        }

        AssociationTag tag;
        if (! cycle) {
            if (exits.size() == 1) {
                tag = {AssociationKind::Vertex, exits[0], exits[0]};
            } else if (exits.size() == 2 && exits[0] != exits[1]) {
                tag = {AssociationKind::Edge, std::min(exits[0], exits[1]), std::max(exits[0], exits[1])};
            } else if (exits.size() > 2) {
                throw InputError("contracted component at " + host.label(start) + " has " +
                    std::to_string(exits.size()) + " exits");
            }
        }
        for (auto v : component)
            out.tags[static_cast<std::size_t>(
                std::lower_bound(out.vertices.begin(), out.vertices.end(), v) - out.vertices.begin())] = tag;
    }
    return out;
}

} // namespace gwemb
