#include <gwemb/error.hpp>
#include <gwemb/solver.hpp>

namespace gwemb {

// Repeatedly drops a vertex m whenever g -> g - m; what is left admits only
// surjective endomorphisms and is therefore a core of the input.
auto compute_core(const Graph & g, const SearchConfig & cfg, const CoreOptions & options) -> Graph
{
    if (g.vertex_count() > options.size_guard)
        throw GuardExceeded("core computation limited to " + std::to_string(options.size_guard) + " vertices, got " +
            std::to_string(g.vertex_count()));
    Graph current = g;
    bool shrunk = true;
    while (shrunk) {
        shrunk = false;
        for (VertexId m = 0; m < current.vertex_count(); ++m) {
            VertexId removed[] = {m};
            auto rest = remove_vertices(current, removed);
            auto r = find_homomorphism(current, rest.graph, cfg);
            if (r.limit_hit())
                throw LimitExceeded("core computation ran out of search budget");
            if (r.found()) {
                current = std::move(rest.graph);
                shrunk = true;
                break;
            }
        }
    }
    return current;
}

} // namespace gwemb
