#pragma once

#include <gwemb/graph.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace gwemb {

/// BFS distance; nullopt when v is unreachable from u.
auto distance(const Graph & g, VertexId u, VertexId v) -> std::optional<std::size_t>;

/// Dense all-pairs BFS distances.
class DistanceMatrix {
public:
    static constexpr std::uint32_t unreachable = static_cast<std::uint32_t>(-1);

    DistanceMatrix() = default;
    explicit DistanceMatrix(const Graph & g);

    auto size() const -> std::size_t { return n_; }
    auto at(VertexId u, VertexId v) const -> std::uint32_t { return d_[u * n_ + v]; }
    auto reachable(VertexId u, VertexId v) const -> bool { return at(u, v) != unreachable; }
    /// Largest finite entry (0 for graphs without edges).
    auto max_finite() const -> std::uint32_t;
    /// All pairs u < v at distance max_finite().
    auto farthest_pairs() const -> std::vector<Edge>;

private:
    std::size_t n_ = 0;
    std::vector<std::uint32_t> d_;
};

auto all_pairs_distances(const Graph & g) -> DistanceMatrix;

/// All simple cycles of length k, each once, in canonical form: starts at its
/// smallest vertex, and the second vertex is the smaller of that vertex's two
/// cycle neighbours. Sorted lexicographically. Throws InputError for k < 3.
auto enumerate_cycles(const Graph & g, std::size_t k) -> std::vector<std::vector<VertexId>>;

/// Length of a shortest odd cycle, nullopt iff the graph is bipartite.
auto shortest_odd_cycle(const Graph & g) -> std::optional<std::size_t>;

/// Proper 2-coloring by BFS, or nullopt.
auto two_coloring(const Graph & g) -> std::optional<std::vector<int>>;

struct IsomorphismOptions {
    std::size_t size_guard = 64;
};

/// Exact backtracking isomorphism test. Returns a witness bijection f with
/// uv in E(a) iff f(u)f(v) in E(b), or nullopt. Throws GuardExceeded when
/// either graph is larger than options.size_guard.
auto are_isomorphic(const Graph & a, const Graph & b, const IsomorphismOptions & options = {})
    -> std::optional<VertexMap>;

} // namespace gwemb
