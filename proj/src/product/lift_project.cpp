#include <gwemb/error.hpp>
#include <gwemb/product.hpp>

#include <algorithm>

namespace gwemb {

auto project_first(const ProductGraph & p, const VertexMap & f) -> VertexMap
{
    VertexMap out;
    for (auto x : f.image) {
        if (x >= p.vertex_count())
            throw InputError("map leaves the product");
        out.image.push_back(first_coordinate(p.vertices[x]));
    }
    return out;
}

auto project_second(const ProductGraph & p, const VertexMap & f, const Graph & g, const Graph & h)
    -> std::vector<std::string>
{
    std::vector<std::string> out;
    for (auto x : f.image) {
        if (x >= p.vertex_count())
            throw InputError("map leaves the product");
        auto full = describe(p.vertices[x], g, h);
        // drop the "(u," prefix and the closing parenthesis
        auto prefix = g.label(first_coordinate(p.vertices[x])).size() + 2;
        out.push_back(full.substr(prefix, full.size() - prefix - 1));
    }
    return out;
}

auto lift_embedding(const ProductGraph & p, const Graph & h, const Coloring & chi, const VertexMap & hbar) -> VertexMap
{
    auto & q = p.quotient;
    Coloring local_chi;
    for (auto c : chi.color_of) {
        if (c >= q.local.size() || ! q.local[c])
            throw InputError("coloring uses a vertex outside the quotient");
        local_chi.color_of.push_back(*q.local[c]);
    }
    if (auto v = verify_map(q.quotient, h, hbar, MapMode::ColoredHomomorphism, &local_chi); ! v)
        throw InputError("cannot lift: " + v.violation);

    auto image_of = [&](VertexId g_vertex) { return hbar[*q.local[g_vertex]]; };
    VertexMap out;
    out.image.resize(q.local.size());
    for (VertexId u = 0; u < q.local.size(); ++u) {
        if (q.local[u]) {
            out.image[u] = p.v1_of[image_of(u)];
        } else if (! q.association.contains(u)) {
            out.image[u] = *p.diagonal[u];
        } else {
            auto & tag = q.association.of(u);
            switch (tag.kind) {
            case AssociationKind::None: out.image[u] = *p.diagonal[u]; break;
            case AssociationKind::Vertex: out.image[u] = p.v3_of.at({u, image_of(tag.a)}); break;
            case AssociationKind::Edge: {
                auto a = image_of(tag.a), b = image_of(tag.b);
                out.image[u] = p.v4_of.at({u, Edge{std::min(a, b), std::max(a, b)}});
                break;
            }
            }
        }
    }
    return out;
}

auto project_embedding(const ProductGraph & p, const Graph & g, const VertexMap & h) -> VertexMap
{
    std::size_t n = g.vertex_count();
    if (h.domain_size() != n)
        throw InputError("map does not cover V(G)");
    std::vector<char> hit(p.vertex_count(), 0);
    for (auto x : h.image) {
        if (x >= p.vertex_count())
            throw InputError("map leaves the product");
        hit[x] = 1;
    }
    for (auto u : p.quotient.removed_frame)
        if (! hit[*p.diagonal[u]])
            throw InputError("frame copy (" + g.label(u) + "," + g.label(u) + ") is not covered");

    auto rho = project_first(p, h);
    std::vector<VertexId> inverse(n, static_cast<VertexId>(-1));
    for (VertexId x = 0; x < n; ++x) {
        if (inverse[rho[x]] != static_cast<VertexId>(-1))
            throw InputError("pi_1 o h is not a permutation");
        inverse[rho[x]] = x;
    }
    for (auto [x, y] : g.edges())
        if (! g.adjacent(rho[x], rho[y]))
            throw InputError("pi_1 o h is not an automorphism");

    auto & q = p.quotient;
    VertexMap hbar;
    for (auto u : q.original) {
        auto & x = p.vertices[h[inverse[u]]];
        auto * v1 = std::get_if<ClassV1>(&x);
        if (! v1 || v1->u != u)
            throw InputError("h o rho^-1 sends " + g.label(u) + " outside V1");
        hbar.image.push_back(v1->a);
    }
    return hbar;
}

} // namespace gwemb
