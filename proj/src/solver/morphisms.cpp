#include <gwemb/error.hpp>
#include <gwemb/solver.hpp>

#include <algorithm>

namespace gwemb {

namespace {

auto color_domains(const Graph & g, const Graph & h, const Coloring & chi) -> std::vector<Bitset>
{
    chi.validate(h.vertex_count(), g.vertex_count());
    std::vector<Bitset> domains(g.vertex_count(), Bitset(h.vertex_count()));
    for (VertexId w = 0; w < h.vertex_count(); ++w)
        domains[chi[w]].set(w);
    return domains;
}

// Splits an overall budget across consecutive sub-searches.
struct Budget {
    SearchConfig cfg;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::uint64_t used = 0;

    auto next() const -> std::optional<SearchConfig>
    {
        SearchConfig sub = cfg;
        if (cfg.node_limit) {
            if (used >= *cfg.node_limit)
                return std::nullopt;
            sub.node_limit = *cfg.node_limit - used;
        }
        if (cfg.time_limit) {
            auto left = *cfg.time_limit -
                std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
            if (left.count() <= 0)
                return std::nullopt;
            sub.time_limit = left;
        }
        return sub;
    }
};

// Marks every later m' with an automorphism fixing the frame setwise and
// sending missed to m'. Such an m' behaves exactly like missed.
auto settle_orbit(const Graph & g, const std::vector<char> & in_frame, VertexId missed, std::vector<char> & settled)
    -> std::uint64_t
{
    std::size_t n = g.vertex_count();
    Bitset inside(n), outside(n);
    for (VertexId v = 0; v < n; ++v)
        (in_frame[v] ? inside : outside).set(v);
    SearchConfig small;
    small.node_limit = 4096;
    std::uint64_t nodes = 0;
    for (VertexId other = missed + 1; other < n; ++other) {
        if (in_frame[other] || settled[other])
            continue;
        std::vector<Bitset> domains;
        for (VertexId v = 0; v < n; ++v)
            domains.push_back(in_frame[v] ? inside : outside);
        domains[missed] = Bitset(n);
        domains[missed].set(other);
        auto r = solve({&g, &g, true, std::move(domains), {}}, small);
        nodes += r.nodes;
        if (r.found())
            settled[other] = 1;
    }
    return nodes;
}

} // namespace

auto find_homomorphism(const Graph & g, const Graph & h, const SearchConfig & cfg) -> SearchResult
{
    return solve({&g, &h, false, {}, {}}, cfg);
}

auto find_embedding(const Graph & g, const Graph & h, const SearchConfig & cfg) -> SearchResult
{
    return solve({&g, &h, true, {}, {}}, cfg);
}

auto find_colored_embedding(const Graph & g, const Graph & h, const Coloring & chi, const SearchConfig & cfg)
    -> SearchResult
{
    return solve({&g, &h, true, color_domains(g, h, chi), {}}, cfg);
}

auto find_colored_homomorphism(const Graph & g, const Graph & h, const Coloring & chi, const SearchConfig & cfg)
    -> SearchResult
{
    return solve({&g, &h, false, color_domains(g, h, chi), {}}, cfg);
}

auto find_endo_counterexample(const Graph & g, std::span<const VertexId> frame, const SearchConfig & cfg)
    -> SearchResult
{
    cfg.validate();
    std::size_t n = g.vertex_count();
    std::vector<char> in_frame(n, 0);
    for (auto f : frame) {
        if (f >= n)
            throw InputError("frame vertex " + std::to_string(f) + " out of range");
        in_frame[f] = 1;
    }

    Budget budget{cfg};
    SearchResult total;
    bool limited = false;
    std::vector<char> settled(n, 0);
    // a non-surjective endomorphism misses some m outside the frame
    for (VertexId missed = 0; missed < n; ++missed) {
        if (in_frame[missed] || settled[missed])
            continue;
        auto sub = budget.next();
        if (! sub) {
            limited = true;
            break;
        }
        std::vector<Bitset> domains(n, Bitset(n, true));
        for (auto & d : domains)
            d.reset(missed);
        // same ids, missed isolated: walks in the image avoid it
        std::vector<Edge> kept;
        for (auto e : g.edges())
            if (e.first != missed && e.second != missed)
                kept.push_back(e);
        auto target = Graph::build(n, kept);
        auto r = solve({&g, &target, false, std::move(domains), {frame.begin(), frame.end()}}, *sub);
        budget.used += r.nodes;
        total.nodes += r.nodes;
        if (r.found()) {
            total.status = SearchStatus::Found;
            total.map = std::move(r.map);
            return total;
        }
        if (r.limit_hit()) {
            limited = true;
            break;
        }
        total.nodes += settle_orbit(g, in_frame, missed, settled);
    }
    total.status = limited ? SearchStatus::LimitExceeded : SearchStatus::Exhausted;
    return total;
}

} // namespace gwemb
