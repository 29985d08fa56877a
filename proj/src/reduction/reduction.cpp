#include <gwemb/algorithms.hpp>
#include <gwemb/error.hpp>
#include <gwemb/reduction.hpp>
#include <gwemb/skeleton.hpp>

#include <algorithm>
#include <tuple>

namespace gwemb {

namespace {

struct Realization {
    std::size_t s, t;
    Graph host;
    SkeletonSpec skeleton;
    QuotientResult q;
    VertexMap iso; // pattern -> quotient ids
};

auto realize_grid(const Graph & pattern, const ReductionOptions & options) -> std::optional<Realization>
{
    std::size_t n = pattern.vertex_count();
    for (std::size_t k = 1; k * k <= n; ++k) {
        if (n % k != 0)
            continue;
        auto [s, t] = grid_params_for_quotient(k, n / k);
        auto host = make_grid(s, t);
        auto skel = grid_skeleton(s, t);
        auto q = quotient(host, skel);
        if (auto iso = are_isomorphic(pattern, q.quotient, {options.isomorphism_guard}))
            return Realization{s, t, std::move(host), std::move(skel), std::move(q), std::move(*iso)};
    }
    return std::nullopt;
}

auto wall_interior_size(std::size_t s, std::size_t t) -> std::size_t
{
    return wall_vertices(s, t).size() - wall_skeleton(s, t).frame.size();
}

auto realize_wall(const Graph & pattern, const ReductionOptions & options) -> std::optional<Realization>
{
    std::size_t n = pattern.vertex_count();
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> candidates; // (|V(W)|, s, t)
    for (std::size_t s = 3; s <= n + 4; ++s)
        for (std::size_t t = 4; t <= n + 5; ++t)
            if (wall_interior_size(s, t) == n)
                candidates.emplace_back(wall_vertices(s, t).size(), s, t);
    std::sort(candidates.begin(), candidates.end());
    for (auto [size, s, t] : candidates) {
        auto host = make_wall(s, t);
        auto skel = wall_skeleton(s, t);
        auto q = quotient(host, skel);
        if (auto iso = are_isomorphic(pattern, q.quotient, {options.isomorphism_guard}))
            return Realization{s, t, std::move(host), std::move(skel), std::move(q), std::move(*iso)};
    }
    return std::nullopt;
}

} // namespace

auto hom_to_colemb(const Graph & g, const Graph & h, const Coloring & chi_h) -> ColEmbInstance
{
    chi_h.validate(h.vertex_count(), g.vertex_count());
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId v = 0; v < h.vertex_count(); ++v)
        pairs.emplace_back(chi_h[v], v);
    std::sort(pairs.begin(), pairs.end());

    ColEmbInstance out;
    out.pattern = g;
    std::vector<std::string> labels;
    for (auto [u, v] : pairs) {
        out.chi.color_of.push_back(u);
        labels.push_back("(" + g.label(u) + "," + h.label(v) + ")");
    }
    std::vector<Edge> edges;
    for (VertexId x = 0; x < pairs.size(); ++x)
        for (VertexId y = x + 1; y < pairs.size(); ++y)
            if (g.adjacent(pairs[x].first, pairs[y].first) && h.adjacent(pairs[x].second, pairs[y].second))
                edges.emplace_back(x, y);
    out.target = Graph::build(pairs.size(), edges, std::move(labels));
    return out;
}

auto grid_params_for_quotient(std::size_t k, std::size_t l) -> std::pair<std::size_t, std::size_t>
{
    if (k < 1 || l < 1)
        throw InputError("quotient grid dimensions must be positive");
    return {2 * k + 3, 2 * l + 4};
}

auto colemb_to_emb(PatternKind family, const ColEmbInstance & inst, const ReductionOptions & options) -> EmbInstance
{
    inst.chi.validate(inst.target.vertex_count(), inst.pattern.vertex_count());
    if (inst.pattern.empty())
        throw InputError("empty pattern is not a realizable quotient");
    auto r = family == PatternKind::Grid ? realize_grid(inst.pattern, options) : realize_wall(inst.pattern, options);
    if (! r)
        throw InputError(std::string("pattern is not the quotient of any ") +
            (family == PatternKind::Grid ? "grid" : "wall") + " skeleton");

    EmbInstance::Provenance prov;
    prov.family = family;
    prov.s = r->s;
    prov.t = r->t;
    prov.skeleton = r->skeleton;
    prov.h = inst.target;
    for (auto c : inst.chi.color_of)
        prov.chi.color_of.push_back(r->q.original[r->iso[c]]);
    prov.pattern_to_quotient = r->iso;
    prov.product = build_product(r->host, prov.skeleton, prov.h, prov.chi);

    EmbInstance out;
    out.pattern = std::move(r->host);
    out.target = prov.product.graph;
    out.provenance = std::move(prov);
    return out;
}

auto answer_name(Answer a) -> std::string
{
    switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::Indeterminate: return "indeterminate";
    }
    return "unknown";
}

auto decide_via_reduction(const EmbInstance & inst, const SearchConfig & cfg) -> Decision
{
    if (! inst.provenance)
        throw InputError("instance carries no product provenance");
    auto & prov = *inst.provenance;
    auto & q = prov.product.quotient;
    Coloring local;
    for (auto c : prov.chi.color_of)
        local.color_of.push_back(*q.local[c]);

    Decision d;
    auto r = find_colored_embedding(q.quotient, prov.h, local, cfg);
    d.nodes = r.nodes;
    if (r.limit_hit()) {
        d.transcript = "quotient-side search stopped at its limit after " + std::to_string(r.nodes) + " nodes";
        return d;
    }
    if (r.exhausted()) {
        d.answer = Answer::No;
        d.transcript = "quotient-side colored embedding search exhausted after " + std::to_string(r.nodes) +
            " nodes: no colored embedding of the " + std::to_string(q.quotient.vertex_count()) + "-vertex quotient";
        return d;
    }
    auto cert = lift_embedding(prov.product, prov.h, prov.chi, *r.map);
    if (auto v = verify_map(inst.pattern, inst.target, cert, MapMode::Embedding); ! v)
        throw Error("lifted certificate failed verification: " + v.violation);
    VertexMap colored;
    for (auto qv : prov.pattern_to_quotient.image)
        colored.image.push_back((*r.map)[qv]);
    d.answer = Answer::Yes;
    d.colored_embedding = std::move(colored);
    d.certificate = std::move(cert);
    d.transcript = "quotient-side colored embedding found after " + std::to_string(r.nodes) +
        " nodes; lifted certificate verified";
    return d;
}

auto decide_via_reduction(PatternKind family, const ColEmbInstance & inst, const SearchConfig & cfg) -> Decision
{
    return decide_via_reduction(colemb_to_emb(family, inst), cfg);
}

} // namespace gwemb
