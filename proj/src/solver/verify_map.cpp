#include <gwemb/error.hpp>
#include <gwemb/solver.hpp>

#include <string>

namespace gwemb {

namespace {

auto fail(std::string why) -> MapVerdict
{
    return {false, std::move(why)};
}

} // namespace

auto verify_map(const Graph & g, const Graph & h, const VertexMap & f, MapMode mode, const Coloring * chi)
    -> MapVerdict
{
    if (f.domain_size() != g.vertex_count())
        return fail("map covers " + std::to_string(f.domain_size()) + " vertices, pattern has " +
            std::to_string(g.vertex_count()));
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (f[v] >= h.vertex_count())
            return fail("image of " + std::to_string(v) + " is not a target vertex");

    for (auto [u, v] : g.edges())
        if (! h.adjacent(f[u], f[v]))
            return fail("edge " + std::to_string(u) + "-" + std::to_string(v) + " maps to non-edge " +
                std::to_string(f[u]) + "-" + std::to_string(f[v]));

    bool injective = mode == MapMode::Embedding || mode == MapMode::ColoredEmbedding;
    if (injective) {
        std::vector<VertexId> owner(h.vertex_count(), static_cast<VertexId>(-1));
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (owner[f[v]] != static_cast<VertexId>(-1))
                return fail("vertices " + std::to_string(owner[f[v]]) + " and " + std::to_string(v) +
                    " share image " + std::to_string(f[v]));
            owner[f[v]] = v;
        }
    }

    if (mode == MapMode::ColoredEmbedding || mode == MapMode::ColoredHomomorphism) {
        if (! chi)
            return fail("colored mode without a coloring");
        if (chi->target_size() != h.vertex_count())
            return fail("coloring is not total on the target");
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if ((*chi)[f[v]] != v)
                return fail("vertex " + std::to_string(v) + " maps to " + std::to_string(f[v]) + " of color " +
                    std::to_string((*chi)[f[v]]));
    }
    return {};
}

} // namespace gwemb
