// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include "oracles.hpp"

#include <gwemb/algorithms.hpp>
#include <gwemb/error.hpp>
#include <gwemb/graph_io.hpp>
#include <gwemb/patterns.hpp>
#include <gwemb/product.hpp>
#include <gwemb/reduction.hpp>
#include <gwemb/rigidity.hpp>
#include <gwemb/skeleton.hpp>
#include <gwemb/solver.hpp>

#include <chrono>
#include <functional>
#include <numeric>
#include <iostream>
#include <sstream>

using namespace gwemb;

namespace {

using Clock = std::chrono::steady_clock;
using Rng = std::mt19937_64;

// Collects the first few problems of a criterion.
struct Log {
    std::vector<std::string> problems;
    std::vector<std::string> notes;

    void fail(std::string what)
    {
        if (problems.size() < 5)
            problems.push_back(std::move(what));
        else if (problems.size() == 5)
            problems.push_back("...");
    }
    void expect(bool ok, const std::string & what)
    {
        if (! ok)
            fail(what);
    }
    void note(std::string what) { notes.push_back(std::move(what)); }
};

auto seconds_since(Clock::time_point start) -> double
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

auto dims(std::size_t s, std::size_t t) -> std::string
{
    return "(" + std::to_string(s) + "," + std::to_string(t) + ")";
}

auto diagonal_of(const ProductGraph & p, std::span<const VertexId> us) -> std::vector<VertexId>
{
    std::vector<VertexId> out;
    for (auto u : us)
        out.push_back(*p.diagonal[u]);
    std::sort(out.begin(), out.end());
    return out;
}

auto random_coloring_into(Rng & rng, std::size_t n, const std::vector<VertexId> & colors) -> Coloring
{
    Coloring chi;
    for (std::size_t i = 0; i < n; ++i)
        chi.color_of.push_back(colors[rng() % colors.size()]);
    return chi;
}

auto local_coloring(const QuotientResult & q, const Coloring & chi) -> Coloring
{
    Coloring out;
    for (auto c : chi.color_of)
        out.color_of.push_back(*q.local[c]);
    return out;
}

struct Fig3 {
    Graph g = make_grid(7, 8);
    SkeletonSpec s = grid_skeleton(7, 8);
    Graph h;
    Coloring chi;
};

auto fig3(bool with_edges = true) -> Fig3
{
    Fig3 f;
    std::vector<Edge> e;
    if (with_edges)
        for (VertexId base : {0u, 4u})
            for (auto [x, y] : std::vector<Edge>{{0, 1}, {1, 3}, {3, 2}, {2, 0}})
                e.emplace_back(base + x, base + y);
    f.h = Graph::build(8, e, {"a1", "b1", "c1", "d1", "a2", "b2", "c2", "d2"});
    auto a = grid_id(7, 8, {3, 3}), b = grid_id(7, 8, {3, 5}), c = grid_id(7, 8, {5, 3}), d = grid_id(7, 8, {5, 5});
    f.chi.color_of = {a, b, c, d, a, b, c, d};
    return f;
}

// 1 -----------------------------------------------------------------------

void quotient_shape(Log & log)
{
    auto start = Clock::now();
    for (std::size_t s = 5; s <= 9; ++s)
        for (std::size_t t = 6; t <= 10; ++t) {
            auto q = quotient(make_grid(s, t), grid_skeleton(s, t));
            auto want = make_grid((s - 1) / 2 - 1, (t - 2) / 2 - 1);
            log.expect(q.quotient.vertex_count() == want.vertex_count() && q.quotient.edge_count() == want.edge_count(),
                "size mismatch at " + dims(s, t));
            log.expect(are_isomorphic(q.quotient, want).has_value(), "not the formula grid at " + dims(s, t));
            if (want.vertex_count() <= 8)
                log.expect(oracle::isomorphic(q.quotient, want), "oracle disagrees at " + dims(s, t));
        }
    auto q = quotient(make_grid(7, 8), grid_skeleton(7, 8));
    std::vector<std::string> labels;
    for (VertexId v = 0; v < q.quotient.vertex_count(); ++v)
        labels.push_back(q.quotient.label(v));
    log.expect(labels == std::vector<std::string>{"(3,3)", "(3,5)", "(5,3)", "(5,5)"}, "G_{7,8} quotient vertices");
    log.expect(q.quotient.edge_count() == 4 && ! q.quotient.adjacent(0, 3) && ! q.quotient.adjacent(1, 2),
        "G_{7,8} quotient is not the 4-cycle (3,3)-(3,5)-(5,5)-(5,3)");
    auto took = seconds_since(start);
    log.expect(took < 1.0, "took " + std::to_string(took) + " s");
    log.note(std::to_string(took) + " s");
}

// 2 -----------------------------------------------------------------------

void corner_frame(Log & log)
{
    auto start = Clock::now();
    for (std::size_t s = 1; s <= 4; ++s)
        for (std::size_t t = 1; t <= 4; ++t) {
            auto g = make_grid(s, t);
            auto r = find_endo_counterexample(g, grid_corners(s, t));
            log.expect(r.exhausted(), "corners of G_" + dims(s, t) + " not proven a frame");
            if (s * t <= 7) {
                auto corners = grid_corners(s, t);
                log.expect(! oracle::frame_refuted(g, corners), "oracle refutes corners of G_" + dims(s, t));
            }
        }
    auto e0 = Clock::now();
    auto g22 = make_grid(2, 2);
    auto r = find_endo_counterexample(g22, std::vector<VertexId>{});
    auto instant = seconds_since(e0);
    log.expect(r.found() && verify_map(g22, g22, *r.map, MapMode::Homomorphism) && ! r.map->is_surjective(4),
        "empty set not refuted for G_(2,2)");
    log.expect(instant < 0.1, "empty-frame refutation took " + std::to_string(instant) + " s");
    auto took = seconds_since(start);
    log.expect(took < 60.0, "took " + std::to_string(took) + " s");
    log.note(std::to_string(took) + " s");
}

// 3 -----------------------------------------------------------------------

void wall_cycles(Log & log)
{
    auto start = Clock::now();
    std::size_t cycles = 0;
    for (std::size_t s = 3; s <= 6; ++s)
        for (std::size_t t = 4; t <= 7; ++t) {
            auto w = make_wall(s, t);
            auto rows = std::get<WallSkeletonMeta>(wall_skeleton(s, t).meta).rows;
            auto frame = wall_skeleton(s, t).frame;
            for (auto & c : enumerate_cycles(w, 5)) {
                ++cycles;
                for (auto v : c) {
                    log.expect(std::binary_search(rows.begin(), rows.end(), v),
                        "5-cycle leaves F1 in W_" + dims(s, t));
                    log.expect(std::binary_search(frame.begin(), frame.end(), v), "5-cycle leaves F in W_" + dims(s, t));
                }
            }
            log.expect(oracle::count_cycles(w, 5) == enumerate_cycles(w, 5).size(), "5-cycle count in W_" + dims(s, t));
            log.expect(shortest_odd_cycle(w) == std::optional<std::size_t>{5}, "odd girth of W_" + dims(s, t));
            log.expect(oracle::odd_girth(w) == std::optional<std::size_t>{5}, "oracle odd girth of W_" + dims(s, t));
        }
    auto took = seconds_since(start);
    log.expect(took < 30.0, "took " + std::to_string(took) + " s");
    log.note(std::to_string(cycles) + " cycles, " + std::to_string(took) + " s");
}

// 4 -----------------------------------------------------------------------

struct Host {
    Graph g;
    SkeletonSpec s;
    std::vector<VertexId> automorphisms_flat; // |G| entries per skeleton-preserving automorphism
};

// Row and column reflections of a grid that map F to F and D to D.
auto grid_host(std::size_t s, std::size_t t) -> Host
{
    Host h{make_grid(s, t), grid_skeleton(s, t), {}};
    for (int flip = 1; flip < 4; ++flip) {
        std::vector<VertexId> sigma;
        for (VertexId v = 0; v < s * t; ++v) {
            auto c = grid_coord(s, t, v);
            if (flip & 1)
                c.i = s + 1 - c.i;
            if (flip & 2)
                c.j = t + 1 - c.j;
            sigma.push_back(grid_id(s, t, c));
        }
        auto keeps = [&](const std::vector<VertexId> & set) {
            return std::all_of(set.begin(), set.end(),
                [&](VertexId v) { return std::binary_search(set.begin(), set.end(), sigma[v]); });
        };
        if (keeps(h.s.frame) && keeps(h.s.contracted))
            h.automorphisms_flat.insert(h.automorphisms_flat.end(), sigma.begin(), sigma.end());
    }
    return h;
}

void product_lemmas(Log & log)
{
    auto start = Clock::now();
    Rng rng(0);
    std::vector<Host> hosts;
    for (auto [s, t] : std::vector<std::pair<std::size_t, std::size_t>>{{5, 6}, {5, 8}, {7, 8}, {6, 7}, {7, 6}})
        hosts.push_back(grid_host(s, t));
    for (auto [s, t] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 4}, {4, 5}})
        hosts.push_back(Host{make_wall(s, t), wall_skeleton(s, t), {}});

    std::size_t lifts = 0, projections = 0, direct = 0, composed = 0;
    for (std::size_t i = 0; i < 200; ++i) {
        auto & host = hosts[i % hosts.size()];
        auto & g = host.g;
        auto q = quotient(g, host.s);
        auto h = oracle::random_graph(rng, 1 + rng() % 7, 0.2 + 0.1 * static_cast<double>(rng() % 7));
        auto chi = random_coloring_into(rng, h.vertex_count(), q.original);
        auto p = build_product(g, host.s, h, chi);
        auto tag = "instance " + std::to_string(i);

        // pi_1 preserves edges
        for (auto [x, y] : p.graph.edges())
            if (! g.adjacent(first_coordinate(p.vertices[x]), first_coordinate(p.vertices[y]))) {
                log.fail(tag + ": pi_1 breaks an edge");
                break;
            }

        // pi_2 o h is injective for injective h
        std::vector<VertexId> ids(p.vertex_count());
        std::iota(ids.begin(), ids.end(), 0);
        for (int k = 0; k < 5 && p.vertex_count() >= g.vertex_count(); ++k) {
            std::shuffle(ids.begin(), ids.end(), rng);
            VertexMap f{std::vector<VertexId>(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(g.vertex_count()))};
            auto second = project_second(p, f, g, h);
            log.expect(std::set<std::string>(second.begin(), second.end()).size() == second.size(),
                tag + ": pi_2 o h not injective");
        }

        auto local = local_coloring(q, chi);
        auto hbar = find_colored_embedding(q.quotient, h, local);
        std::optional<VertexMap> lifted;
        if (hbar.found()) {
            lifted = lift_embedding(p, h, chi, *hbar.map);
            ++lifts;
            log.expect(oracle::map_ok(g, p.graph, lifted->image, oracle::Kind::Emb, nullptr), tag + ": lift is not an embedding");
            auto second = project_second(p, *lifted, g, h);
            log.expect(std::set<std::string>(second.begin(), second.end()).size() == second.size(),
                tag + ": pi_2 o lift not injective");
            auto back = project_embedding(p, g, *lifted);
            ++projections;
            log.expect(back == *hbar.map, tag + ": project o lift is not the identity");
            log.expect(oracle::map_ok(q.quotient, h, back.image, oracle::Kind::Emb, &local.color_of),
                tag + ": projection is not a colored embedding");

            // a lift composed with a skeleton automorphism projects back to the same map
            auto n = g.vertex_count();
            for (std::size_t a = 0; a * n < host.automorphisms_flat.size(); ++a) {
                VertexMap twisted;
                for (VertexId v = 0; v < n; ++v)
                    twisted.image.push_back((*lifted)[host.automorphisms_flat[a * n + v]]);
                auto again = project_embedding(p, g, twisted);
                ++composed;
                log.expect(again == *hbar.map, tag + ": projection after a symmetry differs");
            }
        }

        // any embedding found directly that covers the frame copy projects to a colored embedding
        SearchConfig cfg;
        cfg.node_limit = 200000;
        auto emb = find_embedding(g, p.graph, cfg);
        log.expect(emb.found() == hbar.found() || emb.limit_hit(), tag + ": direct and quotient-side answers differ");
        if (emb.found()) {
            auto frame_copy = p.frame_copy();
            std::set<VertexId> image(emb.map->image.begin(), emb.map->image.end());
            bool covered = std::all_of(frame_copy.begin(), frame_copy.end(), [&](VertexId x) { return image.count(x); });
            log.expect(covered, tag + ": embedding misses the frame copy");
            if (covered) {
                auto back = project_embedding(p, g, *emb.map);
                ++direct;
                log.expect(oracle::map_ok(q.quotient, h, back.image, oracle::Kind::Emb, &local.color_of),
                    tag + ": projection of a direct embedding is not a colored embedding");
            }
        }
    }
    auto took = seconds_since(start);
    log.expect(lifts >= 40, "only " + std::to_string(lifts) + " liftable instances");
    log.expect(took < 120.0, "took " + std::to_string(took) + " s");
    log.note(std::to_string(lifts) + " lifts, " + std::to_string(direct) + " direct projections, " +
        std::to_string(composed) + " twisted projections, " + std::to_string(took) + " s");
}

// 5 -----------------------------------------------------------------------

void check_center_lemma(Log & log, const ProductGraph & p, std::span<const VertexId> centers, const std::string & tag,
    std::size_t & cycles)
{
    auto c = diagonal_of(p, centers);
    for (auto & cyc : oracle::cycle_vertex_sets(p.graph, 4)) {
        ++cycles;
        bool hit = std::any_of(cyc.begin(), cyc.end(), [&](VertexId v) { return std::binary_search(c.begin(), c.end(), v); });
        log.expect(hit, tag + ": a 4-cycle avoids C");
    }
    for (auto x : c) {
        auto d = oracle::bfs(p.graph, x);
        for (auto y : c)
            log.expect(d[y] < 0 || d[y] % 2 == 0, tag + ": odd distance between centers");
    }
    auto report = check_centers(p, centers);
    log.expect(report.holds(), tag + ": library center check disagrees");
}

void grid_rigidity_structure(Log & log)
{
    auto start = Clock::now();
    std::size_t cycles = 0;
    auto f = fig3();
    check_center_lemma(log, build_product(f.g, f.s, f.h, f.chi), grid_center_set(7, 8), "worked instance", cycles);
    Rng rng(0);
    // odd s of at least 7; with five rows every (3,j) lies between two frame rows
    std::vector<std::pair<std::size_t, std::size_t>> sizes{{7, 6}, {7, 8}, {9, 8}, {7, 10}, {9, 9}};
    for (std::size_t i = 0; i < 50; ++i) {
        auto [s, t] = sizes[i % sizes.size()];
        auto g = make_grid(s, t);
        auto spec = grid_skeleton(s, t);
        auto q = quotient(g, spec);
        auto h = oracle::random_graph(rng, 1 + rng() % 8, 0.2 + 0.1 * static_cast<double>(rng() % 7));
        auto chi = random_coloring_into(rng, h.vertex_count(), q.original);
        check_center_lemma(log, build_product(g, spec, h, chi), grid_center_set(s, t), "random " + std::to_string(i), cycles);
    }
    auto took = seconds_since(start);
    log.expect(took < 120.0, "took " + std::to_string(took) + " s");
    log.note(std::to_string(cycles) + " 4-cycles, " + std::to_string(took) + " s");
}

// 6 -----------------------------------------------------------------------

void check_counterexample_independently(Log & log, const Graph & g, const SkeletonSpec & s,
    const RigidityCounterexample & c, const std::string & tag)
{
    auto p = build_product(g, s, c.h, c.chi);
    log.expect(oracle::map_ok(g, p.graph, c.embedding.image, oracle::Kind::Emb, nullptr), tag + ": not an embedding");
    auto miss = *p.diagonal[c.missed];
    log.expect(std::find(c.embedding.image.begin(), c.embedding.image.end(), miss) == c.embedding.image.end(),
        tag + ": frame copy is covered");
}

void rigidity_checker(Log & log)
{
    auto start = Clock::now();
    auto p3 = Graph::build(3, std::vector<Edge>{{0, 1}, {1, 2}}, {"a", "b", "c"});
    SkeletonSpec ends{{0, 2}, {}, {}};
    auto t0 = Clock::now();
    auto v = is_rigid_exhaustive(p3, ends);
    auto p3_time = seconds_since(t0);
    log.expect(v.status == RigidityStatus::Counterexample && v.counterexample, "P3 verdict is not a counterexample");
    log.expect(p3_time < 5.0, "P3 took " + std::to_string(p3_time) + " s");
    if (v.counterexample) {
        check_counterexample_independently(log, p3, ends, *v.counterexample, "P3");
        auto r = restrict_counterexample(p3, ends, *v.counterexample);
        check_counterexample_independently(log, p3, ends, r, "P3 restricted");
    }
    RigidityCounterexample two{Graph::build(2, std::vector<Edge>{}), Coloring{{1, 1}}, {}, 2};
    auto p = build_product(p3, ends, two.h, two.chi);
    two.embedding = VertexMap{{p.v1_of[0], *p.diagonal[0], p.v1_of[1]}};
    check_counterexample_independently(log, p3, ends, two, "two isolated vertices");
    log.expect(verify_counterexample(p3, ends, two).empty(), "two-isolated-vertices witness rejected");

    auto k3 = Graph::build(3, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}});
    log.expect(is_rigid_exhaustive(k3, SkeletonSpec{}).status == RigidityStatus::RigidExhaustive, "K3 not rigid");

    auto g = make_grid(5, 6);
    auto grid = rigidity_random_search(g, grid_skeleton(5, 6), 10000, 0, std::min<std::size_t>(2 * g.vertex_count(), 12));
    log.expect(grid.status == RigidityStatus::NoCounterexampleFound, "S_{5,6}: " + rigidity_status_name(grid.status));
    if (grid.counterexample)
        check_counterexample_independently(log, g, grid_skeleton(5, 6), *grid.counterexample, "S_{5,6}");
    auto w = make_wall(3, 4);
    auto wall = rigidity_random_search(w, wall_skeleton(3, 4), 10000, 0, std::min<std::size_t>(2 * w.vertex_count(), 12));
    log.expect(wall.status == RigidityStatus::NoCounterexampleFound, "W_{3,4}: " + rigidity_status_name(wall.status));
    log.expect(grid.samples == 10000 && wall.samples == 10000, "sample count");
    log.note("P3 " + std::to_string(p3_time) + " s, grid " + std::to_string(grid.distinct_products) +
        " products, wall " + std::to_string(wall.distinct_products) + " products, " +
        std::to_string(seconds_since(start)) + " s");
}

// 7 -----------------------------------------------------------------------

void end_to_end(Log & log)
{
    auto start = Clock::now();
    ColEmbInstance inst;
    inst.pattern = make_grid(2, 2);
    inst.target = fig3().h;
    inst.chi.color_of = {0, 1, 2, 3, 0, 1, 2, 3};
    auto emb = colemb_to_emb(PatternKind::Grid, inst);
    auto d = decide_via_reduction(emb);
    log.expect(d.answer == Answer::Yes, "worked instance is not YES");
    log.expect(d.certificate && verify_map(emb.pattern, emb.target, *d.certificate, MapMode::Embedding) &&
            oracle::map_ok(emb.pattern, emb.target, d.certificate->image, oracle::Kind::Emb, nullptr),
        "worked instance certificate fails");

    auto emptied = inst;
    emptied.chi.color_of = {0, 1, 2, 2, 0, 1, 2, 2};
    log.expect(decide_via_reduction(PatternKind::Grid, emptied).answer == Answer::No, "emptied color class is not NO");

    Rng rng(0);
    std::size_t completed = 0, disagreements = 0, yes = 0;
    for (int i = 0; i < 50; ++i) {
        ColEmbInstance r;
        r.pattern = make_grid(1, 2);
        r.target = oracle::random_graph(rng, 1 + rng() % 6, 0.2 + 0.1 * static_cast<double>(rng() % 7));
        for (VertexId a = 0; a < r.target.vertex_count(); ++a)
            r.chi.color_of.push_back(static_cast<VertexId>(rng() % 2));
        auto e = colemb_to_emb(PatternKind::Grid, r);
        log.expect(e.provenance && e.provenance->s == 5 && e.provenance->t == 8, "random instance is not over S_{5,8}");
        auto via = decide_via_reduction(e);
        SearchConfig cfg;
        cfg.time_limit = std::chrono::seconds(10);
        auto direct = find_embedding(e.pattern, e.target, cfg);
        if (direct.limit_hit())
            continue;
        ++completed;
        yes += direct.found();
        if (direct.found() != (via.answer == Answer::Yes)) {
            ++disagreements;
            log.fail("instance " + std::to_string(i) + " disagrees");
        }
    }
    log.expect(completed * 10 >= 50 * 8, "completion " + std::to_string(completed) + "/50");
    log.note(std::to_string(completed) + "/50 completed, " + std::to_string(yes) + " yes, " +
        std::to_string(disagreements) + " disagreements, " + std::to_string(seconds_since(start)) + " s");
}

// 8 -----------------------------------------------------------------------

auto isomorphism_classes(std::size_t n) -> std::vector<Graph>
{
    std::vector<Graph> reps;
    std::size_t pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
        std::vector<Edge> e;
        std::size_t bit = 0;
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u + 1; v < n; ++v, ++bit)
                if ((mask >> bit) & 1u)
                    e.emplace_back(u, v);
        auto g = Graph::build(n, e);
        if (std::none_of(reps.begin(), reps.end(), [&](const Graph & r) { return oracle::isomorphic(r, g); }))
            reps.push_back(g);
    }
    return reps;
}

void hom_to_colemb_equivalence(Log & log)
{
    auto start = Clock::now();
    std::vector<Graph> classes;
    for (std::size_t n = 1; n <= 4; ++n)
        for (auto & g : isomorphism_classes(n))
            classes.push_back(g);
    log.expect(classes.size() == 18, "expected 18 graphs on at most 4 vertices up to isomorphism");

    std::size_t decisions = 0, yes = 0;
    auto decide = [&](const Graph & g, const Graph & h, const Coloring & chi) {
        auto inst = hom_to_colemb(g, h, chi);
        bool hom = oracle::exists_map(g, h, oracle::Kind::Hom, &chi.color_of);
        bool emb = find_colored_embedding(inst.pattern, inst.target, inst.chi).found();
        bool emb_oracle = oracle::exists_map(inst.pattern, inst.target, oracle::Kind::Emb, &inst.chi.color_of);
        ++decisions;
        yes += hom;
        if (hom != emb || emb != emb_oracle)
            log.fail("disagreement on |V(G)|=" + std::to_string(g.vertex_count()) + ", |V(H)|=" +
                std::to_string(h.vertex_count()));
    };
    // every pair of classes with every coloring
    for (auto & g : classes)
        for (auto & h : classes) {
            Coloring chi{std::vector<VertexId>(h.vertex_count(), 0)};
            for (;;) {
                decide(g, h, chi);
                std::size_t i = 0;
                while (i < chi.color_of.size() && ++chi.color_of[i] == g.vertex_count())
                    chi.color_of[i++] = 0;
                if (i == chi.color_of.size())
                    break;
            }
        }
    // and 500 random labeled triples
    Rng rng(0);
    for (int i = 0; i < 500; ++i) {
        auto g = oracle::random_graph(rng, 1 + rng() % 4, 0.5);
        auto h = oracle::random_graph(rng, 1 + rng() % 4, 0.5);
        Coloring chi;
        for (VertexId a = 0; a < h.vertex_count(); ++a)
            chi.color_of.push_back(static_cast<VertexId>(rng() % g.vertex_count()));
        decide(g, h, chi);
    }
    auto took = seconds_since(start);
    log.expect(took < 60.0, "took " + std::to_string(took) + " s");
    log.note(std::to_string(decisions) + " decisions, " + std::to_string(yes) + " yes, " + std::to_string(took) + " s");
}

// 9 -----------------------------------------------------------------------

void round_trips(Log & log)
{
    Rng rng(0);
    std::size_t dots = 0;
    for (int i = 0; i < 100; ++i) {
        auto g = oracle::random_graph(rng, rng() % 15, 0.1 * static_cast<double>(1 + rng() % 8));
        if (i % 3 == 0) {
            std::vector<std::string> labels;
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                labels.push_back("x" + std::to_string(v * 7 + 1));
            g = Graph::build(g.vertex_count(), g.edges(), labels);
        }
        auto text = serialize_graph(g);
        auto back = parse_graph(text);
        log.expect(back == g, "parse o serialize changes graph " + std::to_string(i));
        log.expect(serialize_graph(back) == text, "serialize o parse changes text " + std::to_string(i));

        oracle::DotChecker dot(to_dot(g));
        bool valid = dot.valid();
        log.expect(valid && dot.nodes == g.vertex_count() && dot.edges == g.edge_count(),
            "DOT of graph " + std::to_string(i) + " (valid " + std::to_string(valid) + ", " +
                std::to_string(dot.nodes) + " nodes, " + std::to_string(dot.edges) + " edges)");
        ++dots;
    }
    for (std::size_t s = 5; s <= 7; ++s) {
        auto g = make_grid(s, s + 1);
        auto sk = grid_skeleton(s, s + 1);
        oracle::DotChecker dot(to_dot(g, {{"F", sk.frame, ""}, {"D", sk.contracted, ""}}, "grid"));
        log.expect(dot.valid() && dot.nodes == g.vertex_count() && dot.edges == g.edge_count(), "DOT of a shaded grid");
        ++dots;
    }
    auto w = make_wall(4, 5);
    oracle::DotChecker wd(to_dot(w, {{"F", wall_skeleton(4, 5).frame, "black"}}));
    log.expect(wd.valid(), "DOT of a shaded wall");
    auto f = fig3();
    auto p = build_product(f.g, f.s, f.h, f.chi);
    oracle::DotChecker pd(to_dot(p.graph));
    log.expect(pd.valid() && pd.nodes == 68, "DOT of the worked product");
    log.note(std::to_string(dots + 2) + " DOT documents");
}

} // namespace

int main()
{
    std::vector<std::pair<std::string, std::function<void(Log &)>>> criteria{
        {"quotient shape", quotient_shape},
        {"corner frame", corner_frame},
        {"wall 5-cycles", wall_cycles},
        {"product lemmas", product_lemmas},
        {"grid rigidity structure", grid_rigidity_structure},
        {"rigidity checker", rigidity_checker},
        {"end-to-end equivalence", end_to_end},
        {"hom-to-colemb equivalence", hom_to_colemb_equivalence},
        {"format round trips", round_trips},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Log log;
        try {
            criteria[i].second(log);
        } catch (const std::exception & e) {
            log.fail(std::string("exception: ") + e.what());
        }
        bool ok = log.problems.empty();
        all = all && ok;
        std::ostringstream line;
        line << (ok ? "PASS " : "FAIL ") << i + 1 << " " << criteria[i].first;
        for (auto & n : log.notes)
            line << " [" << n << "]";
        for (auto & p : log.problems)
            line << " | " << p;
        std::cout << line.str() << std::endl;
    }
    return all ? 0 : 1;
}
