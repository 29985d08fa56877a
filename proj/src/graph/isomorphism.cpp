#include <gwemb/algorithms.hpp>
#include <gwemb/error.hpp>

#include <algorithm>
#include <deque>

namespace gwemb {

namespace {

// Sorted degrees of a vertex's neighbours; equal for corresponding vertices
// under any isomorphism.
auto neighbour_degrees(const Graph & g, VertexId v) -> std::vector<std::size_t>
{
    std::vector<std::size_t> out;
    for (auto w : g.neighbours(v))
        out.push_back(g.degree(w));
    std::sort(out.begin(), out.end());
    return out;
}

auto bfs_order(const Graph & g) -> std::vector<VertexId>
{
    std::vector<VertexId> order;
    std::vector<bool> seen(g.vertex_count(), false);
    while (order.size() < g.vertex_count()) {
        VertexId root = 0;
        std::size_t best = 0;
        bool any = false;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (! seen[v] && (! any || g.degree(v) > best)) {
                root = v;
                best = g.degree(v);
                any = true;
            }
        seen[root] = true;
        std::deque<VertexId> queue{root};
        while (! queue.empty()) {
            auto u = queue.front();
            queue.pop_front();
            order.push_back(u);
            for (auto w : g.neighbours(u))
                if (! seen[w]) {
                    seen[w] = true;
                    queue.push_back(w);
                }
        }
    }
    return order;
}

struct IsoSearch {
    const Graph & a;
    const Graph & b;
    std::vector<VertexId> order;
    std::vector<Bitset> candidates; // per a-vertex, static filter
    std::vector<VertexId> image;
    Bitset used;

    auto run(std::size_t depth) -> bool
    {
        if (depth == order.size())
            return true;
        auto v = order[depth];
        Bitset cand = candidates[v];
        cand.subtract(used);
        for (std::size_t i = 0; i < depth; ++i) {
            auto u = order[i];
            if (a.adjacent(u, v))
                cand &= b.row(image[u]);
            else
                cand.subtract(b.row(image[u]));
            if (cand.none())
                return false;
        }
        for (auto w = cand.find_first(); w != Bitset::npos; w = cand.find_next(w)) {
            image[v] = static_cast<VertexId>(w);
            used.set(w);
            if (run(depth + 1))
                return true;
            used.reset(w);
        }
        return false;
    }
};

} // namespace

auto are_isomorphic(const Graph & a, const Graph & b, const IsomorphismOptions & options) -> std::optional<VertexMap>
{
    if (a.vertex_count() > options.size_guard || b.vertex_count() > options.size_guard)
        throw GuardExceeded("isomorphism test limited to " + std::to_string(options.size_guard) + " vertices");
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return std::nullopt;

    std::size_t n = a.vertex_count();
    std::vector<std::vector<std::size_t>> sig_a(n), sig_b(n);
    for (VertexId v = 0; v < n; ++v) {
        sig_a[v] = neighbour_degrees(a, v);
        sig_b[v] = neighbour_degrees(b, v);
    }
    auto sorted_a = sig_a, sorted_b = sig_b;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b)
        return std::nullopt;

    IsoSearch search{a, b, bfs_order(a), std::vector<Bitset>(n, Bitset(n)), std::vector<VertexId>(n), Bitset(n)};
    for (VertexId v = 0; v < n; ++v)
        for (VertexId w = 0; w < n; ++w)
            if (sig_a[v] == sig_b[w])
                search.candidates[v].set(w);
    if (! search.run(0))
        return std::nullopt;
    return VertexMap{std::move(search.image)};
}

} // namespace gwemb
