#include <gwemb/algorithms.hpp>
#include <gwemb/error.hpp>

#include <algorithm>
#include <deque>

namespace gwemb {

namespace {

void bfs(const Graph & g, VertexId source, std::uint32_t * out)
{
    std::fill(out, out + g.vertex_count(), DistanceMatrix::unreachable);
    std::deque<VertexId> queue{source};
    out[source] = 0;
    while (! queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        for (auto w : g.neighbours(u))
            if (out[w] == DistanceMatrix::unreachable) {
                out[w] = out[u] + 1;
                queue.push_back(w);
            }
    }
}

} // namespace

auto distance(const Graph & g, VertexId u, VertexId v) -> std::optional<std::size_t>
{
    if (u >= g.vertex_count() || v >= g.vertex_count())
        throw InputError("vertex id out of range in distance query");
    std::vector<std::uint32_t> d(g.vertex_count());
    bfs(g, u, d.data());
    if (d[v] == DistanceMatrix::unreachable)
        return std::nullopt;
    return d[v];
}

DistanceMatrix::DistanceMatrix(const Graph & g) : n_(g.vertex_count()), d_(n_ * n_)
{
    for (VertexId u = 0; u < n_; ++u)
        bfs(g, u, d_.data() + u * n_);
}

auto DistanceMatrix::max_finite() const -> std::uint32_t
{
    std::uint32_t best = 0;
    for (auto d : d_)
        if (d != unreachable)
            best = std::max(best, d);
    return best;
}

auto DistanceMatrix::farthest_pairs() const -> std::vector<Edge>
{
    auto best = max_finite();
    std::vector<Edge> out;
    for (VertexId u = 0; u < n_; ++u)
        for (VertexId v = u + 1; v < n_; ++v)
            if (at(u, v) == best)
                out.emplace_back(u, v);
    return out;
}

auto all_pairs_distances(const Graph & g) -> DistanceMatrix
{
    return DistanceMatrix{g};
}

auto two_coloring(const Graph & g) -> std::optional<std::vector<int>>
{
    std::vector<int> side(g.vertex_count(), -1);
    for (VertexId root = 0; root < g.vertex_count(); ++root) {
        if (side[root] != -1)
            continue;
        side[root] = 0;
        std::deque<VertexId> queue{root};
        while (! queue.empty()) {
            auto u = queue.front();
            queue.pop_front();
            for (auto w : g.neighbours(u)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[u];
                    queue.push_back(w);
                }
                else if (side[w] == side[u])
                    return std::nullopt;
            }
        }
    }
    return side;
}

auto shortest_odd_cycle(const Graph & g) -> std::optional<std::size_t>
{
    // From every root, an edge joining two vertices of equal BFS depth d closes
    // an odd closed walk of length 2d+1 through the root. The minimum over all
    // roots is attained by a shortest odd cycle (take the root on that cycle
    // opposite the edge), and any odd closed walk contains an odd cycle no
    // longer than itself, so the minimum is exactly the odd girth.
    std::optional<std::size_t> best;
    std::vector<std::uint32_t> depth(g.vertex_count());
    for (VertexId root = 0; root < g.vertex_count(); ++root) {
        bfs(g, root, depth.data());
        for (auto [u, v] : g.edges())
            if (depth[u] != DistanceMatrix::unreachable && depth[u] == depth[v]) {
                std::size_t len = 2 * std::size_t{depth[u]} + 1;
                if (! best || len < *best)
                    best = len;
            }
        if (best && *best == 3)
            break;
    }
    return best;
}

} // namespace gwemb
