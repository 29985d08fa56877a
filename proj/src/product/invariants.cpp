#include <gwemb/algorithms.hpp>
#include <gwemb/error.hpp>
#include <gwemb/product.hpp>

#include <algorithm>

namespace gwemb {

auto check_pi1_homomorphism(const ProductGraph & p, const Graph & g) -> std::string
{
    for (auto [x, y] : p.graph.edges()) {
        auto u = first_coordinate(p.vertices[x]), v = first_coordinate(p.vertices[y]);
        if (! g.adjacent(u, v))
            return "product edge " + std::to_string(x) + "-" + std::to_string(y) + " projects to non-edge " +
                g.label(u) + "-" + g.label(v);
    }
    return {};
}

auto check_edge_families(const ProductGraph & p, const Graph & g) -> std::string
{
    if (auto bad = check_pi1_homomorphism(p, g); ! bad.empty())
        return bad;
    for (auto [x, y] : p.graph.edges())
        if (edge_family(p, x, y) == "E34")
            return "edge " + std::to_string(x) + "-" + std::to_string(y) + " joins V3 and V4";
    return {};
}

auto check_centers(const ProductGraph & p, std::span<const VertexId> centers) -> CenterReport
{
    std::vector<char> is_center(p.vertex_count(), 0);
    std::vector<VertexId> c;
    for (auto u : centers) {
        if (u >= p.diagonal.size() || ! p.diagonal[u])
            throw InputError("center " + std::to_string(u) + " has no diagonal copy in the product");
        c.push_back(*p.diagonal[u]);
        is_center[c.back()] = 1;
    }

    CenterReport report;
    for (auto & cycle : enumerate_cycles(p.graph, 4)) {
        ++report.four_cycles;
        if (std::none_of(cycle.begin(), cycle.end(), [&](VertexId v) { return is_center[v]; }))
            ++report.cycles_without_center;
    }
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j) {
            ++report.center_pairs;
            auto d = distance(p.graph, c[i], c[j]);
            if (! d)
                ++report.unreachable_center_pairs;
            else if (*d % 2 == 1)
                ++report.odd_center_pairs;
        }
    return report;
}

auto check_odd_cycles(const ProductGraph & p, const Graph & g) -> std::string
{
    auto k = shortest_odd_cycle(g);
    if (! k)
        return {};
    for (auto & cycle : enumerate_cycles(p.graph, *k)) {
        std::vector<VertexId> image;
        for (auto x : cycle)
            image.push_back(first_coordinate(p.vertices[x]));
        auto sorted = image;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return "a " + std::to_string(*k) + "-cycle of P repeats a G-vertex under pi_1";
        for (std::size_t i = 0; i < image.size(); ++i)
            if (! g.adjacent(image[i], image[(i + 1) % image.size()]))
                return "a " + std::to_string(*k) + "-cycle of P does not project onto a cycle";
    }
    return {};
}

} // namespace gwemb
