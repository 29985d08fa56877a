#include <gwemb/error.hpp>
#include <gwemb/product.hpp>

#include <algorithm>

namespace gwemb {

auto product_class(const ProductVertex & x) -> int
{
    return static_cast<int>(x.index()) + 1;
}

auto first_coordinate(const ProductVertex & x) -> VertexId
{
    return std::visit([](const auto & v) { return v.u; }, x);
}

auto describe(const ProductVertex & x, const Graph & g, const Graph & h) -> std::string
{
    struct Visitor {
        const Graph & g;
        const Graph & h;
        auto operator()(const ClassV1 & v) const -> std::string { return "(" + g.label(v.u) + "," + h.label(v.a) + ")"; }
        auto operator()(const ClassV2 & v) const -> std::string { return "(" + g.label(v.u) + "," + g.label(v.u) + ")"; }
        auto operator()(const ClassV3 & v) const -> std::string
        {
            return "(" + g.label(v.u) + ",v[" + g.label(v.u) + "," + h.label(v.a) + "])";
        }
        auto operator()(const ClassV4 & v) const -> std::string
        {
            return "(" + g.label(v.u) + ",v[" + g.label(v.u) + ",{" + h.label(v.e.first) + "," + h.label(v.e.second) +
                "}])";
        }
    };
    return std::visit(Visitor{g, h}, x);
}

auto ProductGraph::frame_copy() const -> std::vector<VertexId>
{
    std::vector<VertexId> out;
    for (auto u : quotient.removed_frame)
        out.push_back(*diagonal[u]);
    return out;
}

auto build_product(const Graph & g, const SkeletonSpec & s, const Graph & h, const Coloring & chi) -> ProductGraph
{
    chi.validate(h.vertex_count(), g.vertex_count());
    ProductGraph p;
    p.quotient = quotient(g, s);
    auto & q = p.quotient;
    for (VertexId a = 0; a < h.vertex_count(); ++a)
        if (! q.local[chi[a]])
            throw InputError("color of " + h.label(a) + " is " + g.label(chi[a]) + ", which lies in F or D");

    std::vector<ClassV1> v1;
    std::vector<ClassV2> v2;
    std::vector<ClassV3> v3;
    std::vector<ClassV4> v4;
    for (VertexId a = 0; a < h.vertex_count(); ++a)
        v1.push_back({chi[a], a});
    for (auto u : q.removed_frame)
        v2.push_back({u});
    auto h_edges = h.edges();
    for (std::size_t i = 0; i < q.association.vertices.size(); ++i) {
        auto u = q.association.vertices[i];
        auto & tag = q.association.tags[i];
        switch (tag.kind) {
        case AssociationKind::None: v2.push_back({u}); break;
        case AssociationKind::Vertex:
            for (VertexId a = 0; a < h.vertex_count(); ++a)
                if (chi[a] == tag.a)
                    v3.push_back({u, a});
            break;
        case AssociationKind::Edge:
            for (auto e : h_edges)
                if ((chi[e.first] == tag.a && chi[e.second] == tag.b) ||
                    (chi[e.first] == tag.b && chi[e.second] == tag.a))
                    v4.push_back({u, e});
            break;
        }
    }
    std::sort(v1.begin(), v1.end());
    std::sort(v2.begin(), v2.end());
    std::sort(v3.begin(), v3.end());
    std::sort(v4.begin(), v4.end());

    p.diagonal.assign(g.vertex_count(), std::nullopt);
    p.v1_of.assign(h.vertex_count(), 0);
    auto add = [&](ProductVertex x) {
        auto id = static_cast<VertexId>(p.vertices.size());
        p.class_index[x.index()].push_back(id);
        p.vertices.push_back(x);
        return id;
    };
    for (auto & x : v1)
        p.v1_of[x.a] = add(x);
    for (auto & x : v2)
        p.diagonal[x.u] = add(x);
    for (auto & x : v3)
        p.v3_of[{x.u, x.a}] = add(x);
    for (auto & x : v4)
        p.v4_of[{x.u, x.e}] = add(x);

    std::vector<std::vector<VertexId>> over(g.vertex_count());
    for (VertexId id = 0; id < p.vertices.size(); ++id)
        over[first_coordinate(p.vertices[id])].push_back(id);

    auto in_edge = [](VertexId a, const Edge & e) { return e.first == a || e.second == a; };
    auto joined = [&](const ProductVertex & x, const ProductVertex & y) -> bool {
        int cx = product_class(x), cy = product_class(y);
        if (cx > cy)
            return false; // each unordered pair is tested in its sorted orientation
        if (cx == 2)
            return true; // E22, E23, E24
        if (cx == 1) {
            auto & a = std::get<ClassV1>(x);
            switch (cy) {
            case 1: return h.adjacent(a.a, std::get<ClassV1>(y).a);
            case 2: return true;
            case 3: return a.a == std::get<ClassV3>(y).a;
            case 4: return in_edge(a.a, std::get<ClassV4>(y).e);
            }
            return false;
        }
        if (cx == 3)
            return cy == 3 && std::get<ClassV3>(x).a == std::get<ClassV3>(y).a;
        return std::get<ClassV4>(x).e == std::get<ClassV4>(y).e;
    };

    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        for (auto x : over[u])
            for (auto y : over[v]) {
                auto & px = p.vertices[x];
                auto & py = p.vertices[y];
                if (product_class(px) <= product_class(py) ? joined(px, py) : joined(py, px))
                    edges.emplace_back(x, y);
            }
    p.graph = Graph::build(p.vertices.size(), edges);
    return p;
}

auto edge_family(const ProductGraph & p, VertexId x, VertexId y) -> std::string
{
    if (x >= p.vertex_count() || y >= p.vertex_count() || ! p.graph.adjacent(x, y))
        throw InputError("not an edge of the product");
    int a = product_class(p.vertices[x]), b = product_class(p.vertices[y]);
    if (a > b)
        std::swap(a, b);
    return "E" + std::to_string(a) + std::to_string(b);
}

} // namespace gwemb
