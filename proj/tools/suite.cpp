#include "cli.hpp"

#include <gwemb/algorithms.hpp>
#include <gwemb/graph_io.hpp>
#include <gwemb/patterns.hpp>
#include <gwemb/product.hpp>
#include <gwemb/reduction.hpp>
#include <gwemb/rigidity.hpp>
#include <gwemb/skeleton.hpp>
#include <gwemb/solver.hpp>

#include <functional>
#include <ostream>
#include <random>

namespace gwemb::cli {

namespace {

using Rng = std::mt19937_64;

auto random_graph(Rng & rng, std::size_t n, double p) -> Graph
{
    std::bernoulli_distribution edge(p);
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (edge(rng))
                edges.emplace_back(u, v);
    return Graph::build(n, edges);
}

// Every map V(g) -> V(h), checked one by one.
auto brute_force(const Graph & g, const Graph & h, MapMode mode, const Coloring * chi) -> bool
{
    std::size_t n = g.vertex_count(), m = h.vertex_count();
    if (n == 0)
        return true;
    if (m == 0)
        return false;
    VertexMap f{std::vector<VertexId>(n, 0)};
    for (;;) {
        if (verify_map(g, h, f, mode, chi))
            return true;
        std::size_t i = 0;
        while (i < n && ++f.image[i] == m)
            f.image[i++] = 0;
        if (i == n)
            return false;
    }
}

struct Suite {
    std::string name;
    std::function<std::string(bool, Rng &)> body; // empty string on success
};

auto graph_suite(bool quick, Rng & rng) -> std::string
{
    std::size_t rounds = quick ? 30 : 100;
    for (std::size_t i = 0; i < rounds; ++i) {
        auto g = random_graph(rng, 1 + rng() % 9, 0.35);
        if (serialize_graph(parse_graph(serialize_graph(g))) != serialize_graph(g))
            return "serialize/parse round trip";
        DistanceMatrix d(g);
        for (VertexId u = 0; u < g.vertex_count(); ++u)
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                if (d.at(u, v) != d.at(v, u))
                    return "distance asymmetry";
        if (shortest_odd_cycle(g).has_value() == two_coloring(g).has_value())
            return "odd cycle vs two-coloring";
        if (auto iso = are_isomorphic(g, g); ! iso || ! verify_map(g, g, *iso, MapMode::Embedding))
            return "self-isomorphism";
    }
    return {};
}

auto pattern_suite(bool quick, Rng &) -> std::string
{
    for (std::size_t s = 1; s <= (quick ? 5u : 8u); ++s)
        for (std::size_t t = 1; t <= (quick ? 5u : 8u); ++t) {
            auto g = make_grid(s, t);
            if (g.vertex_count() != s * t || g.edge_count() != s * (t - 1) + t * (s - 1))
                return "grid size";
        }
    for (std::size_t s = 3; s <= (quick ? 4u : 6u); ++s)
        for (std::size_t t = 4; t <= (quick ? 5u : 7u); ++t) {
            auto w = make_wall(s, t);
            auto spec = wall_skeleton(s, t);
            auto & rows = std::get<WallSkeletonMeta>(spec.meta).rows;
            for (auto & c : enumerate_cycles(w, 5))
                for (auto v : c)
                    if (! std::binary_search(rows.begin(), rows.end(), v))
                        return "5-cycle leaves F1 in W_{" + std::to_string(s) + "," + std::to_string(t) + "}";
            if (shortest_odd_cycle(w) != std::optional<std::size_t>{5})
                return "wall odd girth";
        }
    return {};
}

auto solver_suite(bool quick, Rng & rng) -> std::string
{
    std::size_t rounds = quick ? 60 : 300;
    for (std::size_t i = 0; i < rounds; ++i) {
        auto g = random_graph(rng, 1 + rng() % 4, 0.5);
        auto h = random_graph(rng, 1 + rng() % 5, 0.5);
        auto hom = find_homomorphism(g, h);
        auto emb = find_embedding(g, h);
        if (hom.found() != brute_force(g, h, MapMode::Homomorphism, nullptr))
            return "homomorphism decision";
        if (emb.found() != brute_force(g, h, MapMode::Embedding, nullptr))
            return "embedding decision";
        if (hom.found() && ! verify_map(g, h, *hom.map, MapMode::Homomorphism))
            return "homomorphism witness";
        if (emb.found() && ! verify_map(g, h, *emb.map, MapMode::Embedding))
            return "embedding witness";
    }
    for (std::size_t s = 1; s <= 3; ++s)
        for (std::size_t t = 1; t <= 3; ++t) {
            auto g = make_grid(s, t);
            if (! find_endo_counterexample(g, grid_corners(s, t)).exhausted())
                return "corner frame of G_{" + std::to_string(s) + "," + std::to_string(t) + "}";
        }
    return {};
}

auto skeleton_suite(bool quick, Rng &) -> std::string
{
    for (std::size_t s = 5; s <= (quick ? 7u : 9u); ++s)
        for (std::size_t t = 6; t <= (quick ? 8u : 10u); ++t) {
            auto g = make_grid(s, t);
            auto spec = grid_skeleton(s, t);
            auto q = quotient(g, spec);
            auto [k1, k2] = std::pair{(s - 1) / 2 - 1, (t - 2) / 2 - 1};
            if (! are_isomorphic(q.quotient, make_grid(k1, k2)))
                return "quotient shape for (" + std::to_string(s) + "," + std::to_string(t) + ")";
            for (std::size_t i = 0; i < q.association.vertices.size(); ++i) {
                auto & tag = q.association.tags[i];
                if (tag.kind == AssociationKind::Edge && ! q.quotient.adjacent(*q.local[tag.a], *q.local[tag.b]))
                    return "edge association without quotient edge";
                if (tag.kind == AssociationKind::Vertex && ! q.local[tag.a])
                    return "vertex association outside the quotient";
            }
        }
    return {};
}

auto product_suite(bool quick, Rng & rng) -> std::string
{
    auto g = make_grid(5, 8);
    auto spec = grid_skeleton(5, 8);
    auto q = quotient(g, spec);
    std::size_t rounds = quick ? 10 : 40;
    for (std::size_t i = 0; i < rounds; ++i) {
        auto h = random_graph(rng, 1 + rng() % 6, 0.5);
        Coloring chi;
        for (VertexId a = 0; a < h.vertex_count(); ++a)
            chi.color_of.push_back(q.original[rng() % q.original.size()]);
        auto p = build_product(g, spec, h, chi);
        if (auto bad = check_edge_families(p, g); ! bad.empty())
            return bad;
        Coloring local;
        for (auto c : chi.color_of)
            local.color_of.push_back(*q.local[c]);
        auto hbar = find_colored_embedding(q.quotient, h, local);
        if (! hbar.found())
            continue;
        auto lifted = lift_embedding(p, h, chi, *hbar.map);
        if (! verify_map(g, p.graph, lifted, MapMode::Embedding))
            return "lift is not an embedding";
        if (project_embedding(p, g, lifted) != *hbar.map)
            return "project after lift is not the identity";
    }
    return {};
}

auto rigidity_suite(bool, Rng &) -> std::string
{
    auto p3 = Graph::build(3, std::vector<Edge>{{0, 1}, {1, 2}});
    auto v = is_rigid_exhaustive(p3, SkeletonSpec{{0, 2}, {}, {}});
    if (v.status != RigidityStatus::Counterexample || ! verify_counterexample(p3, SkeletonSpec{{0, 2}, {}, {}}, *v.counterexample).empty())
        return "P3 counterexample";
    auto k3 = Graph::build(3, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}});
    if (is_rigid_exhaustive(k3, SkeletonSpec{}).status != RigidityStatus::RigidExhaustive)
        return "K3 rigidity";
    return {};
}

auto reduction_suite(bool quick, Rng & rng) -> std::string
{
    std::size_t rounds = quick ? 60 : 300;
    for (std::size_t i = 0; i < rounds; ++i) {
        auto g = random_graph(rng, 1 + rng() % 4, 0.5);
        auto h = random_graph(rng, 1 + rng() % 4, 0.5);
        Coloring chi;
        for (VertexId a = 0; a < h.vertex_count(); ++a)
            chi.color_of.push_back(static_cast<VertexId>(rng() % g.vertex_count()));
        auto inst = hom_to_colemb(g, h, chi);
        bool hom = find_colored_homomorphism(g, h, chi).found();
        bool emb = find_colored_embedding(inst.pattern, inst.target, inst.chi).found();
        if (hom != emb)
            return "hom-to-colemb equivalence";
    }
    return {};
}

} // namespace

auto run_suites(bool quick, unsigned long long seed, std::ostream & out) -> bool
{
    std::vector<Suite> suites{{"graph-core", graph_suite}, {"patterns", pattern_suite}, {"morphism-solver", solver_suite},
        {"skeleton", skeleton_suite}, {"product", product_suite}, {"rigidity", rigidity_suite},
        {"reduction", reduction_suite}};
    bool ok = true;
    for (auto & s : suites) {
        Rng rng(seed);
        std::string failure;
        try {
            failure = s.body(quick, rng);
        } catch (const std::exception & e) {
            failure = std::string("exception: ") + e.what();
        }
        out << (failure.empty() ? "PASS " : "FAIL ") << s.name << (failure.empty() ? "" : ": " + failure) << "\n";
        ok = ok && failure.empty();
    }
    return ok;
}

} // namespace gwemb::cli
