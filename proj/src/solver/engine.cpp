#include <gwemb/algorithms.hpp>
#include <gwemb/error.hpp>
#include <gwemb/solver.hpp>

#include <algorithm>
#include <atomic>
#include <deque>
#include <functional>
#include <limits>
#include <thread>

namespace gwemb {

namespace {

using Clock = std::chrono::steady_clock;
using Word = std::uint64_t;

// Walk balls cost m * radius * words; past this many words the pruning is
// switched off rather than blowing up memory.
constexpr std::size_t ball_budget_words = std::size_t{1} << 22;
constexpr std::uint32_t no_walk = std::numeric_limits<std::uint32_t>::max();

/// Shortest walk lengths of each parity: [(p * n + u) * n + v], p = 0 even.
auto walk_distances(const Graph & g) -> std::vector<std::uint32_t>
{
    std::size_t n = g.vertex_count();
    std::vector<std::uint32_t> out(2 * n * n, no_walk);
    std::vector<std::pair<VertexId, std::uint32_t>> queue;
    for (VertexId s = 0; s < n; ++s) {
        queue.clear();
        queue.emplace_back(s, 0);
        out[s * n + s] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            auto [v, p] = queue[head];
            auto d = out[(p * n + s) * n + v];
            for (auto w : g.neighbours(v)) {
                auto & slot = out[((1 - p) * n + s) * n + w];
                if (slot == no_walk) {
                    slot = d + 1;
                    queue.emplace_back(w, 1 - p);
                }
            }
        }
    }
    return out;
}

struct Shared {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    std::atomic<bool> limit_hit{false};
    std::optional<std::uint64_t> node_limit;
    std::optional<Clock::time_point> deadline;
};

/// Read-only preprocessing shared by all workers.
struct Model {
    const Graph & pattern;
    const Graph & target;
    bool injective;
    std::size_t n, m, words;
    std::vector<Word> initial; // n blocks of `words`
    std::vector<VertexId> cover;
    std::vector<std::uint32_t> pattern_walk; // see walk_distances
    std::uint32_t radius = 0;                // 0: no walk pruning
    std::vector<Word> balls;                 // (w * (radius + 1) + d) * words
    std::vector<VertexId> static_order;
    VariableOrder order;

    // Targets of a length-d walk from w, with the parity of d.
    auto ball(VertexId w, std::uint32_t d) const -> const Word *
    {
        if (d > radius)
            d = (d - radius) % 2 == 0 ? radius : radius - 1;
        return balls.data() + (static_cast<std::size_t>(w) * (radius + 1) + d) * words;
    }
    auto pattern_walk_at(std::uint32_t parity, VertexId u, VertexId v) const -> std::uint32_t
    {
        return pattern_walk[(parity * n + u) * n + v];
    }
};

auto bfs_order(const Graph & g) -> std::vector<VertexId>
{
    std::size_t n = g.vertex_count();
    std::vector<VertexId> order;
    std::vector<char> seen(n, 0);
    while (order.size() < n) {
        VertexId start = 0;
        std::size_t best = 0;
        bool any = false;
        for (VertexId v = 0; v < n; ++v)
            if (! seen[v] && (! any || g.degree(v) > best)) {
                start = v;
                best = g.degree(v);
                any = true;
            }
        std::deque<VertexId> queue{start};
        seen[start] = 1;
        while (! queue.empty()) {
            auto v = queue.front();
            queue.pop_front();
            order.push_back(v);
            for (auto w : g.neighbours(v))
                if (! seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        }
    }
    return order;
}

void build_balls(Model & mo, bool enabled)
{
    if (! enabled || mo.n < 2 || mo.m * mo.m > ball_budget_words)
        return;
    std::uint32_t pattern_radius = 0;
    for (auto d : mo.pattern_walk)
        if (d != no_walk)
            pattern_radius = std::max(pattern_radius, d);
    auto tw = walk_distances(mo.target);
    std::uint32_t target_radius = 0;
    for (auto d : tw)
        if (d != no_walk)
            target_radius = std::max(target_radius, d);
    std::uint32_t radius = std::max<std::uint32_t>(std::min(pattern_radius, target_radius + 1), 2);
    if (mo.m * (radius + 1) * mo.words > ball_budget_words)
        return;
    mo.radius = radius;
    mo.balls.assign(mo.m * (radius + 1) * mo.words, 0);
    for (std::uint32_t p = 0; p < 2; ++p)
        for (VertexId w = 0; w < mo.m; ++w)
            for (VertexId x = 0; x < mo.m; ++x) {
                auto d = tw[(p * mo.m + w) * mo.m + x];
                if (d == no_walk)
                    continue;
                for (std::uint32_t r = d; r <= radius; r += 2)
                    mo.balls[(static_cast<std::size_t>(w) * (radius + 1) + r) * mo.words + (x >> 6)] |=
                        Word{1} << (x & 63);
            }
}

class Worker {
public:
    Worker(const Model & mo, Shared & sh) :
        mo_(mo), sh_(sh), k_(simd::active()), dom_((mo.n + 1) * mo.n * mo.words, 0), assignment_(mo.n, 0),
        assigned_(mo.n, 0), image_count_(mo.m, 0), union_(mo.words, 0),
        owner_(mo.n, no_vertex), match_(mo.m, no_vertex), visited_(mo.n, 0)
    {
        std::copy(mo.initial.begin(), mo.initial.end(), dom_.begin());
    }

    /// Level-0 consistency of the initial domains.
    auto root_consistent() -> bool { return consistent(0); }

    auto root_variable() -> VertexId { return choose(0); }

    auto root_values(VertexId v) const -> std::vector<VertexId>
    {
        std::vector<VertexId> out;
        for_each_bit(block(0) + v * mo_.words, [&](VertexId w) { out.push_back(w); });
        return out;
    }

    /// Explores the subtrees below v := values[i] for every i accepted by
    /// `take`. Returns the first accepted index whose subtree has a solution.
    auto run(VertexId v, const std::vector<VertexId> & values, const std::function<bool(std::size_t)> & take)
        -> std::optional<std::size_t>
    {
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (! take(i))
                continue;
            if (sh_.stop.load(std::memory_order_relaxed))
                break;
            if (try_value(0, v, values[i]))
                return i;
        }
        flush();
        return std::nullopt;
    }

    auto solution() const -> VertexMap { return VertexMap{assignment_}; }
    void flush()
    {
        sh_.nodes.fetch_add(local_nodes_, std::memory_order_relaxed);
        local_nodes_ = 0;
    }

private:
    const Model & mo_;
    Shared & sh_;
    const simd::Kernels & k_;
    std::vector<Word> dom_;
    std::vector<VertexId> assignment_;
    std::vector<char> assigned_;
    std::vector<std::uint32_t> image_count_;
    std::vector<Word> union_;
    static constexpr VertexId no_vertex = std::numeric_limits<VertexId>::max();
    std::vector<VertexId> owner_, match_; // pattern -> required, required -> pattern
    std::vector<char> visited_;
    std::uint64_t local_nodes_ = 0;
    std::size_t depth_ = 0;

    auto block(std::size_t level) -> Word * { return dom_.data() + level * mo_.n * mo_.words; }
    auto block(std::size_t level) const -> const Word * { return dom_.data() + level * mo_.n * mo_.words; }

    template <typename F>
    static void for_each_bit_words(const Word * p, std::size_t words, F && f)
    {
        for (std::size_t i = 0; i < words; ++i)
            for (Word w = p[i]; w; w &= w - 1)
                f(static_cast<VertexId>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
    }
    template <typename F>
    void for_each_bit(const Word * p, F && f) const
    {
        for_each_bit_words(p, mo_.words, std::forward<F>(f));
    }

    auto over_budget() -> bool
    {
        if (sh_.stop.load(std::memory_order_relaxed))
            return true;
        ++local_nodes_;
        bool hit = sh_.node_limit && sh_.nodes.load(std::memory_order_relaxed) + local_nodes_ > *sh_.node_limit;
        if (! hit && local_nodes_ % 256 == 0) {
            flush();
            hit = sh_.deadline && Clock::now() > *sh_.deadline;
        }
        if (hit) {
            sh_.limit_hit.store(true);
            sh_.stop.store(true);
        }
        return hit;
    }

    auto choose(std::size_t level) -> VertexId
    {
        if (mo_.order == VariableOrder::StaticBfs) {
            for (auto v : mo_.static_order)
                if (! assigned_[v])
                    return v;
        }
        const Word * b = block(level);
        VertexId best = 0;
        std::size_t best_size = 0, best_degree = 0;
        bool any = false;
        for (VertexId v = 0; v < mo_.n; ++v) {
            if (assigned_[v])
                continue;
            auto size = k_.popcount(b + v * mo_.words, mo_.words);
            auto degree = mo_.pattern.degree(v);
            if (! any || size < best_size || (size == best_size && degree > best_degree)) {
                best = v;
                best_size = size;
                best_degree = degree;
                any = true;
            }
        }
        return best;
    }

    // Hall-style counting on the unassigned domains and the cover constraint.
    auto consistent(std::size_t level) -> bool
    {
        const Word * b = block(level);
        std::size_t unassigned = 0;
        std::fill(union_.begin(), union_.end(), 0);
        for (VertexId x = 0; x < mo_.n; ++x) {
            if (assigned_[x])
                continue;
            if (k_.is_zero(b + x * mo_.words, mo_.words))
                return false;
            ++unassigned;
            k_.or_inplace(union_.data(), b + x * mo_.words, mo_.words);
        }
        if (mo_.injective && k_.popcount(union_.data(), mo_.words) < unassigned)
            return false;
        if (! mo_.cover.empty()) {
            std::size_t uncovered = 0;
            for (auto r : mo_.cover) {
                if (image_count_[r])
                    continue;
                if (! ((union_[r >> 6] >> (r & 63)) & 1u))
                    return false;
                ++uncovered;
            }
            if (uncovered > unassigned)
                return false;
            return cover_matching(b);
        }
        return true;
    }

    // Distinct preimages for the uncovered required vertices, by augmenting
    // paths. The matching of the previous node is kept where still valid.
    auto cover_matching(const Word * b) -> bool
    {
        auto can_take = [&](VertexId x, VertexId r) {
            return ! assigned_[x] && ((b[x * mo_.words + (r >> 6)] >> (r & 63)) & 1u);
        };
        for (auto r : mo_.cover) {
            auto x = match_[r];
            if (x != no_vertex && (image_count_[r] || ! can_take(x, r))) {
                match_[r] = no_vertex;
                owner_[x] = no_vertex;
            }
        }
        for (auto r : mo_.cover) {
            if (image_count_[r] || match_[r] != no_vertex)
                continue;
            std::fill(visited_.begin(), visited_.end(), 0);
            if (! augment(r, b))
                return false;
        }
        return true;
    }

    auto augment(VertexId r, const Word * b) -> bool
    {
        for (VertexId x = 0; x < mo_.n; ++x)
            if (owner_[x] == no_vertex && ! assigned_[x] && ((b[x * mo_.words + (r >> 6)] >> (r & 63)) & 1u)) {
                owner_[x] = r;
                match_[r] = x;
                return true;
            }
        for (VertexId x = 0; x < mo_.n; ++x) {
            if (visited_[x] || assigned_[x] || ! ((b[x * mo_.words + (r >> 6)] >> (r & 63)) & 1u))
                continue;
            visited_[x] = 1;
            if (owner_[x] == no_vertex || augment(owner_[x], b)) {
                owner_[x] = r;
                match_[r] = x;
                return true;
            }
        }
        return false;
    }

    auto propagate(std::size_t level, VertexId v, VertexId w) -> bool
    {
        Word * b = block(level);
        Word bit = Word{1} << (w & 63);
        auto row = mo_.target.row(w).data();
        for (VertexId x = 0; x < mo_.n; ++x) {
            if (assigned_[x])
                continue;
            Word * dx = b + x * mo_.words;
            if (mo_.injective)
                dx[w >> 6] &= ~bit;
            if (mo_.radius) {
                for (std::uint32_t p = 0; p < 2; ++p)
                    if (auto d = mo_.pattern_walk_at(p, v, x); d != no_walk)
                        k_.and_inplace(dx, mo_.ball(w, d), mo_.words);
            } else if (mo_.pattern.adjacent(v, x)) {
                k_.and_inplace(dx, row, mo_.words);
            }
            if (k_.is_zero(dx, mo_.words))
                return false;
        }
        return consistent(level);
    }

    auto try_value(std::size_t level, VertexId v, VertexId w) -> bool
    {
        if (over_budget())
            return false;
        std::copy(block(level), block(level) + mo_.n * mo_.words, block(level + 1));
        Word * dv = block(level + 1) + v * mo_.words;
        std::fill(dv, dv + mo_.words, 0);
        dv[w >> 6] |= Word{1} << (w & 63);
        assigned_[v] = 1;
        assignment_[v] = w;
        ++image_count_[w];
        bool ok = propagate(level + 1, v, w) && search(level + 1);
        if (! ok) {
            assigned_[v] = 0;
            --image_count_[w];
        }
        return ok;
    }

    // The uncovered required vertex with the fewest possible preimages.
    auto scarcest_cover(std::size_t level, std::size_t & count) -> std::optional<VertexId>
    {
        const Word * b = block(level);
        std::optional<VertexId> best;
        for (auto r : mo_.cover) {
            if (image_count_[r])
                continue;
            std::size_t c = 0;
            for (VertexId x = 0; x < mo_.n && (! best || c < count); ++x)
                if (! assigned_[x] && ((b[x * mo_.words + (r >> 6)] >> (r & 63)) & 1u))
                    ++c;
            if (! best || c < count) {
                best = r;
                count = c;
            }
        }
        return best;
    }

    auto search(std::size_t level) -> bool
    {
        if (level == mo_.n)
            return true;
        auto v = choose(level);
        Word * b = block(level);
        Word * dv = b + v * mo_.words;
        std::size_t preimages = 0;
        if (auto r = scarcest_cover(level, preimages); r && preimages < k_.popcount(dv, mo_.words)) {
            // some unassigned x must take r; once x := r fails, x never takes r
            Word bit = Word{1} << (*r & 63);
            for (VertexId x = 0; x < mo_.n; ++x) {
                if (assigned_[x] || ! (b[x * mo_.words + (*r >> 6)] & bit))
                    continue;
                if (try_value(level, x, *r))
                    return true;
                if (sh_.stop.load(std::memory_order_relaxed))
                    return false;
                b[x * mo_.words + (*r >> 6)] &= ~bit;
                if (k_.is_zero(b + x * mo_.words, mo_.words) || ! consistent(level))
                    return false;
            }
            return false;
        }
        // deeper levels only write from block(level + 1) on
        for (std::size_t i = 0; i < mo_.words; ++i)
            for (Word word = dv[i]; word; word &= word - 1) {
                auto w = static_cast<VertexId>(i * 64 + static_cast<std::size_t>(std::countr_zero(word)));
                if (try_value(level, v, w))
                    return true;
                if (sh_.stop.load(std::memory_order_relaxed))
                    return false;
                dv[w >> 6] &= ~(Word{1} << (w & 63));
                if (! consistent(level))
                    return false;
            }
        return false;
    }
};

auto neighbour_degrees(const Graph & g, VertexId v) -> std::vector<std::size_t>
{
    std::vector<std::size_t> out;
    for (auto w : g.neighbours(v))
        out.push_back(g.degree(w));
    std::sort(out.rbegin(), out.rend());
    return out;
}

// For an embedding, v can only go to w if w's sorted neighbour degrees
// dominate v's position by position.
auto dominated(const std::vector<std::size_t> & a, const std::vector<std::size_t> & b) -> bool
{
    if (a.size() > b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

} // namespace

void SearchConfig::validate() const
{
    if (node_limit && *node_limit == 0)
        throw InputError("node limit must be positive");
    if (time_limit && time_limit->count() <= 0)
        throw InputError("time limit must be positive");
    if (workers == 0)
        throw InputError("worker count must be positive");
}

auto status_name(SearchStatus s) -> std::string
{
    switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Exhausted: return "exhausted";
    case SearchStatus::LimitExceeded: return "limit-exceeded";
    }
    return "unknown";
}

auto solve(const SearchProblem & problem, const SearchConfig & cfg) -> SearchResult
{
    cfg.validate();
    if (! problem.pattern || ! problem.target)
        throw InputError("search problem needs a pattern and a target");
    const Graph & p = *problem.pattern;
    const Graph & t = *problem.target;
    std::size_t n = p.vertex_count(), m = t.vertex_count();

    if (! problem.domains.empty() && problem.domains.size() != n)
        throw InputError("domain count does not match pattern size");
    for (auto & d : problem.domains)
        if (d.size() != m)
            throw InputError("domain width does not match target size");
    for (auto r : problem.must_cover)
        if (r >= m)
            throw InputError("cover vertex " + std::to_string(r) + " out of range");

    SearchResult result;
    std::vector<VertexId> cover = problem.must_cover;
    std::sort(cover.begin(), cover.end());
    cover.erase(std::unique(cover.begin(), cover.end()), cover.end());

    if (n == 0) {
        result.status = cover.empty() ? SearchStatus::Found : SearchStatus::Exhausted;
        if (result.found())
            result.map = VertexMap{};
        return result;
    }
    if (m == 0 || (problem.injective && n > m) || cover.size() > n)
        return result;

    Model mo{p, t, problem.injective, n, m, Bitset::word_count(m), {}, std::move(cover), {}, 0, {}, {},
        cfg.variable_order};
    mo.initial.assign(n * mo.words, 0);
    std::vector<std::vector<std::size_t>> pattern_nd, target_nd;
    if (problem.injective) {
        for (VertexId v = 0; v < n; ++v)
            pattern_nd.push_back(neighbour_degrees(p, v));
        for (VertexId w = 0; w < m; ++w)
            target_nd.push_back(neighbour_degrees(t, w));
    }
    for (VertexId v = 0; v < n; ++v) {
        Word * dv = mo.initial.data() + v * mo.words;
        for (VertexId w = 0; w < m; ++w) {
            if (! problem.domains.empty() && ! problem.domains[v].test(w))
                continue;
            if (p.degree(v) > 0 && t.degree(w) == 0)
                continue;
            if (problem.injective && ! dominated(pattern_nd[v], target_nd[w]))
                continue;
            dv[w >> 6] |= Word{1} << (w & 63);
        }
    }
    if (mo.order == VariableOrder::StaticBfs)
        mo.static_order = bfs_order(p);
    if (cfg.distance_pruning && n * n <= ball_budget_words) {
        mo.pattern_walk = walk_distances(p);
        build_balls(mo, true);
    }
    // v on a closed odd walk of length L needs an image on one of length <= L
    if (mo.radius)
        for (VertexId v = 0; v < n; ++v)
            if (auto d = mo.pattern_walk_at(1, v, v); d != no_walk) {
                Word * dv = mo.initial.data() + v * mo.words;
                for (VertexId w = 0; w < m; ++w)
                    if (! ((mo.ball(w, d)[w >> 6] >> (w & 63)) & 1u))
                        dv[w >> 6] &= ~(Word{1} << (w & 63));
            }

    Shared sh;
    sh.node_limit = cfg.node_limit;
    if (cfg.time_limit)
        sh.deadline = Clock::now() + *cfg.time_limit;

    Worker root(mo, sh);
    if (! root.root_consistent())
        return result;
    auto v0 = root.root_variable();
    auto values = root.root_values(v0);

    unsigned workers = cfg.parallel ? std::max(1u, cfg.workers) : 1u;
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(values.size(), 1)));
    if (workers <= 1) {
        if (root.run(v0, values, [](std::size_t) { return true; })) {
            result.status = SearchStatus::Found;
            result.map = root.solution();
        } else if (sh.limit_hit.load()) {
            result.status = SearchStatus::LimitExceeded;
        }
        root.flush();
        result.nodes = sh.nodes.load();
        return result;
    }

    std::vector<std::optional<std::size_t>> hit(workers);
    std::vector<std::optional<VertexMap>> maps(workers);
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < workers; ++k)
        pool.emplace_back([&, k] {
            Worker w(mo, sh);
            auto found = w.run(v0, values, [&](std::size_t i) { return i % workers == k; });
            w.flush();
            if (found) {
                hit[k] = found;
                maps[k] = w.solution();
                sh.stop.store(true);
            }
        });
    for (auto & th : pool)
        th.join();

    std::optional<std::size_t> best;
    for (unsigned k = 0; k < workers; ++k)
        if (hit[k] && (! best || *hit[k] < *hit[*best]))
            best = k;
    if (best) {
        result.status = SearchStatus::Found;
        result.map = std::move(maps[*best]);
    } else if (sh.limit_hit.load()) {
        result.status = SearchStatus::LimitExceeded;
    }
    result.nodes = sh.nodes.load();
    return result;
}

} // namespace gwemb
