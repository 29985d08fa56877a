#include <gwemb/algorithms.hpp>
#include <gwemb/error.hpp>

#include <algorithm>

namespace gwemb {

namespace {

struct CycleWalker {
    const Graph & g;
    std::size_t k;
    VertexId start = 0;
    std::vector<VertexId> path;
    std::vector<bool> on_path;
    std::vector<std::vector<VertexId>> found;

    void extend()
    {
        auto last = path.back();
        if (path.size() == k) {
            // a closing edge back to start; second < last fixes the direction
            if (g.adjacent(last, start) && path[1] < last)
                found.push_back(path);
            return;
        }
        for (auto w : g.neighbours(last)) {
            if (w <= start || on_path[w])
                continue;
            on_path[w] = true;
            path.push_back(w);
            extend();
            path.pop_back();
            on_path[w] = false;
        }
    }
};

} // namespace

auto enumerate_cycles(const Graph & g, std::size_t k) -> std::vector<std::vector<VertexId>>
{
    if (k < 3)
        throw InputError("cycle length must be at least 3, got " + std::to_string(k));
    CycleWalker walker{g, k, 0, {}, {}, {}};
    walker.on_path.assign(g.vertex_count(), false);
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        walker.start = s;
        walker.path = {s};
        walker.on_path[s] = true;
        walker.extend();
        walker.on_path[s] = false;
    }
    std::sort(walker.found.begin(), walker.found.end());
    return std::move(walker.found);
}

} // namespace gwemb
