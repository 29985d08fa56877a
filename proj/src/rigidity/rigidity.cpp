#include <gwemb/error.hpp>
#include <gwemb/rigidity.hpp>
#include <gwemb/skeleton.hpp>

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <thread>

namespace gwemb {

namespace {

using Clock = std::chrono::steady_clock;

// Hands out per-search configs that respect one overall deadline.
struct Deadline {
    SearchConfig base;
    std::optional<Clock::time_point> end;

    explicit Deadline(const SearchConfig & cfg) : base(cfg)
    {
        if (cfg.time_limit)
            end = Clock::now() + *cfg.time_limit;
    }
    auto next() const -> std::optional<SearchConfig>
    {
        if (! end)
            return base;
        auto left = std::chrono::duration_cast<std::chrono::milliseconds>(*end - Clock::now());
        if (left.count() <= 0)
            return std::nullopt;
        SearchConfig cfg = base;
        cfg.time_limit = left;
        return cfg;
    }
};

auto free_vertices(const Graph & g, const SkeletonSpec & s) -> std::vector<VertexId>
{
    std::vector<char> taken(g.vertex_count(), 0);
    for (auto v : s.frame)
        taken[v] = 1;
    for (auto v : s.contracted)
        taken[v] = 1;
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (! taken[v])
            out.push_back(v);
    return out;
}

auto violation_in(const ProductGraph & p, const Graph & g, const SkeletonSpec & s, const Graph & h,
    const Coloring & chi, const SearchConfig & cfg, bool & limited) -> std::optional<RigidityCounterexample>
{
    for (auto f : s.frame) {
        auto missing = *p.diagonal[f];
        std::vector<Bitset> domains(g.vertex_count(), Bitset(p.vertex_count(), true));
        for (auto & d : domains)
            d.reset(missing);
        auto r = solve({&g, &p.graph, true, std::move(domains), {}}, cfg);
        if (r.limit_hit())
            limited = true;
        if (r.found())
            return RigidityCounterexample{h, chi, std::move(*r.map), f};
    }
    return std::nullopt;
}

auto graph_from_mask(std::size_t n, std::uint64_t mask) -> Graph
{
    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j, ++bit)
            if ((mask >> bit) & 1u)
                edges.emplace_back(i, j);
    return Graph::build(n, edges);
}

// Advances idx (values in [0, base)) to the next tuple; false after the last.
auto next_tuple(std::vector<std::size_t> & idx, std::size_t base, bool sorted) -> bool
{
    for (std::size_t i = idx.size(); i-- > 0;) {
        if (idx[i] + 1 < base) {
            ++idx[i];
            for (std::size_t j = i + 1; j < idx.size(); ++j)
                idx[j] = sorted ? idx[i] : 0;
            return true;
        }
    }
    return false;
}

struct ProductKey {
    std::size_t n;
    std::vector<Edge> edges;
    std::vector<VertexId> frame_copy;
    auto operator<=>(const ProductKey &) const = default;
};

} // namespace

auto rigidity_status_name(RigidityStatus s) -> std::string
{
    switch (s) {
    case RigidityStatus::RigidExhaustive: return "rigid-exhaustive";
    case RigidityStatus::Counterexample: return "counterexample";
    case RigidityStatus::NoCounterexampleFound: return "no-counterexample-found";
    case RigidityStatus::Indeterminate: return "indeterminate";
    }
    return "unknown";
}

auto find_rigidity_violation(const Graph & g, const SkeletonSpec & s, const Graph & h, const Coloring & chi,
    const SearchConfig & cfg, bool * limited) -> std::optional<RigidityCounterexample>
{
    auto p = build_product(g, s, h, chi);
    bool hit = false;
    auto out = violation_in(p, g, s, h, chi, cfg, hit);
    if (limited)
        *limited = hit;
    return out;
}

auto verify_counterexample(const Graph & g, const SkeletonSpec & s, const RigidityCounterexample & c) -> std::string
{
    if (! std::binary_search(s.frame.begin(), s.frame.end(), c.missed))
        return "missed vertex is not in F";
    ProductGraph p;
    try {
        p = build_product(g, s, c.h, c.chi);
    } catch (const InputError & e) {
        return e.what();
    }
    if (auto v = verify_map(g, p.graph, c.embedding, MapMode::Embedding); ! v)
        return "not an embedding: " + v.violation;
    auto target = *p.diagonal[c.missed];
    if (std::find(c.embedding.image.begin(), c.embedding.image.end(), target) != c.embedding.image.end())
        return "frame copy of " + g.label(c.missed) + " is covered";
    return {};
}

auto restrict_counterexample(const Graph & g, const SkeletonSpec & s, const RigidityCounterexample & c)
    -> RigidityCounterexample
{
    auto p = build_product(g, s, c.h, c.chi);
    std::set<VertexId> touched;
    for (auto x : c.embedding.image) {
        auto & pv = p.vertices[x];
        if (auto * v1 = std::get_if<ClassV1>(&pv))
            touched.insert(v1->a);
        else if (auto * v3 = std::get_if<ClassV3>(&pv))
            touched.insert(v3->a);
        else if (auto * v4 = std::get_if<ClassV4>(&pv)) {
            touched.insert(v4->e.first);
            touched.insert(v4->e.second);
        }
    }
    std::vector<VertexId> keep(touched.begin(), touched.end());
    std::vector<VertexId> index(c.h.vertex_count(), 0);
    for (VertexId i = 0; i < keep.size(); ++i)
        index[keep[i]] = i;

    RigidityCounterexample out;
    out.h = induced_subgraph(c.h, keep);
    for (auto a : keep)
        out.chi.color_of.push_back(c.chi[a]);
    out.missed = c.missed;
    auto q = build_product(g, s, out.h, out.chi);
    for (auto x : c.embedding.image) {
        auto & pv = p.vertices[x];
        VertexId y = 0;
        if (auto * v1 = std::get_if<ClassV1>(&pv))
            y = q.v1_of[index[v1->a]];
        else if (auto * v2 = std::get_if<ClassV2>(&pv))
            y = *q.diagonal[v2->u];
        else if (auto * v3 = std::get_if<ClassV3>(&pv))
            y = q.v3_of.at({v3->u, index[v3->a]});
        else {
            auto & v4 = std::get<ClassV4>(pv);
            y = q.v4_of.at({v4.u, Edge{index[v4.e.first], index[v4.e.second]}});
        }
        out.embedding.image.push_back(y);
    }
    return out;
}

auto rigidity_search_bound(const Graph & g, const SkeletonSpec & s) -> std::size_t
{
    auto q = quotient(g, s);
    bool edge_hung = std::any_of(q.association.tags.begin(), q.association.tags.end(),
        [](const AssociationTag & t) { return t.kind == AssociationKind::Edge; });
    return edge_hung ? 2 * g.vertex_count() : g.vertex_count();
}

auto is_rigid_exhaustive(const Graph & g, const SkeletonSpec & s, const SearchConfig & cfg,
    const RigidityOptions & options) -> RigidityVerdict
{
    if (g.vertex_count() > options.size_guard)
        throw GuardExceeded("exhaustive rigidity check limited to " + std::to_string(options.size_guard) +
            " vertices, got " + std::to_string(g.vertex_count()));
    RigidityVerdict verdict;
    quotient(g, s); // validates disjointness and the degree condition
    if (s.frame.empty()) {
        verdict.status = RigidityStatus::RigidExhaustive;
        return verdict;
    }

    auto colors = free_vertices(g, s);
    std::size_t bound = options.max_h.value_or(rigidity_search_bound(g, s));
    if (bound > 11)
        throw GuardExceeded("exhaustive rigidity check over graphs with " + std::to_string(bound) +
            " vertices is out of reach");
    Deadline budget(cfg);
    bool limited = false;
    for (std::size_t n = 0; n <= bound; ++n) {
        if (n > 0 && colors.empty())
            break;
        verdict.search_bound = n;
        std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            auto h = graph_from_mask(n, mask);
            std::vector<std::size_t> idx(n, 0);
            do {
                auto sub = budget.next();
                if (! sub) {
                    verdict.status = RigidityStatus::Indeterminate;
                    return verdict;
                }
                Coloring chi;
                for (auto i : idx)
                    chi.color_of.push_back(colors[i]);
                ++verdict.instances;
                bool hit = false;
                if (auto c = find_rigidity_violation(g, s, h, chi, *sub, &hit)) {
                    verdict.status = RigidityStatus::Counterexample;
                    verdict.counterexample = std::move(c);
                    return verdict;
                }
                limited = limited || hit;
            } while (next_tuple(idx, colors.size(), options.sorted_colorings));
        }
    }
    verdict.status = limited ? RigidityStatus::Indeterminate : RigidityStatus::RigidExhaustive;
    return verdict;
}

auto rigidity_random_search(const Graph & g, const SkeletonSpec & s, std::size_t samples, std::uint64_t seed,
    std::size_t max_h, const SearchConfig & cfg) -> RigidityVerdict
{
    RigidityVerdict verdict;
    verdict.samples = samples;
    verdict.seed = seed;
    verdict.search_bound = max_h;
    quotient(g, s);
    auto colors = free_vertices(g, s);
    if (s.frame.empty() || colors.empty() || max_h == 0 || samples == 0) {
        verdict.status = RigidityStatus::NoCounterexampleFound;
        return verdict;
    }

    struct Job {
        std::size_t sample;
        Graph h;
        Coloring chi;
        ProductGraph p;
    };
    std::vector<Job> jobs;
    std::set<ProductKey> seen;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> size_dist(1, max_h);
    std::uniform_int_distribution<int> density_dist(1, 9);
    std::uniform_int_distribution<std::size_t> color_dist(0, colors.size() - 1);
    for (std::size_t i = 0; i < samples; ++i) {
        auto n = size_dist(rng);
        std::bernoulli_distribution edge(density_dist(rng) / 10.0);
        std::vector<Edge> edges;
        for (VertexId a = 0; a < n; ++a)
            for (VertexId b = a + 1; b < n; ++b)
                if (edge(rng))
                    edges.emplace_back(a, b);
        Coloring chi;
        for (std::size_t a = 0; a < n; ++a)
            chi.color_of.push_back(colors[color_dist(rng)]);
        auto h = Graph::build(n, edges);
        auto p = build_product(g, s, h, chi);
        ++verdict.instances;
        if (seen.insert({p.vertex_count(), p.graph.edges(), p.frame_copy()}).second)
            jobs.push_back({i, std::move(h), std::move(chi), std::move(p)});
    }
    verdict.distinct_products = jobs.size();

    Deadline budget(cfg);
    std::atomic<bool> limited{false};
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{jobs.size()};
    std::mutex guard;
    std::optional<RigidityCounterexample> found;
    auto work = [&] {
        for (;;) {
            auto j = next.fetch_add(1);
            if (j >= jobs.size() || j > best.load())
                return;
            auto sub = budget.next();
            if (! sub) {
                limited = true;
                return;
            }
            bool hit = false;
            auto c = violation_in(jobs[j].p, g, s, jobs[j].h, jobs[j].chi, *sub, hit);
            if (hit)
                limited = true;
            if (c) {
                std::lock_guard lock(guard);
                if (j < best.load()) {
                    best = j;
                    found = std::move(c);
                }
            }
        }
    };
    unsigned workers = cfg.parallel ? std::max(1u, cfg.workers) : 1u;
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned k = 0; k < workers; ++k)
            pool.emplace_back(work);
        for (auto & t : pool)
            t.join();
    }

    if (found) {
        verdict.status = RigidityStatus::Counterexample;
        verdict.counterexample = std::move(found);
    } else {
        verdict.status = limited ? RigidityStatus::Indeterminate : RigidityStatus::NoCounterexampleFound;
    }
    return verdict;
}

auto list_rigid_skeletons(const Graph & g, const SearchConfig & cfg, const RigidityOptions & options)
    -> std::vector<SkeletonSpec>
{
    std::size_t n = g.vertex_count();
    if (n > options.size_guard)
        throw GuardExceeded("rigid skeleton listing limited to " + std::to_string(options.size_guard) +
            " vertices, got " + std::to_string(n));
    std::vector<std::pair<std::vector<VertexId>, std::vector<VertexId>>> pairs;
    std::vector<std::size_t> role(n, 0); // 0 free, 1 frame, 2 contracted
    do {
        std::vector<VertexId> f, d;
        for (VertexId v = 0; v < n; ++v) {
            if (role[v] == 1)
                f.push_back(v);
            else if (role[v] == 2)
                d.push_back(v);
        }
        pairs.emplace_back(std::move(f), std::move(d));
    } while (next_tuple(role, 3, false));
    std::sort(pairs.begin(), pairs.end());

    std::vector<SkeletonSpec> out;
    for (auto & [f, d] : pairs) {
        auto report = is_skeleton(g, f, d, cfg);
        if (! report.holds())
            continue;
        SkeletonSpec spec{f, d, {}};
        if (is_rigid_exhaustive(g, spec, cfg, options).status == RigidityStatus::RigidExhaustive)
            out.push_back(std::move(spec));
    }
    return out;
}

} // namespace gwemb
