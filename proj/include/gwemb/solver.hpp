#pragma once

#include <gwemb/graph.hpp>

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gwemb {

enum class VariableOrder {
    StaticBfs,         // BFS from a highest-degree vertex, fixed up front
    MinRemainingDomain // smallest current domain first
};

struct SearchConfig {
    std::optional<std::uint64_t> node_limit;
    std::optional<std::chrono::milliseconds> time_limit;
    VariableOrder variable_order = VariableOrder::MinRemainingDomain;
    bool parallel = false;
    unsigned workers = 1;
    /// A walk of length d between two pattern vertices forces a walk of the
    /// same length between their images. Candidates without one are pruned,
    /// for homomorphisms and embeddings alike.
    bool distance_pruning = true;

    /// Throws InputError on a zero limit or zero workers.
    void validate() const;
};

enum class SearchStatus { Found, Exhausted, LimitExceeded };

struct SearchResult {
    SearchStatus status = SearchStatus::Exhausted;
    std::optional<VertexMap> map;
    std::uint64_t nodes = 0;

    auto found() const -> bool { return status == SearchStatus::Found; }
    auto exhausted() const -> bool { return status == SearchStatus::Exhausted; }
    auto limit_hit() const -> bool { return status == SearchStatus::LimitExceeded; }
};

auto status_name(SearchStatus s) -> std::string;

/// A general map search from `pattern` into `target`. Each pattern vertex v
/// may only go to domains[v] (all target vertices when `domains` is empty),
/// and every vertex in must_cover has to appear in the image.
struct SearchProblem {
    const Graph * pattern = nullptr;
    const Graph * target = nullptr;
    bool injective = false;
    std::vector<Bitset> domains;
    std::vector<VertexId> must_cover;
};

auto solve(const SearchProblem & problem, const SearchConfig & cfg) -> SearchResult;

auto find_homomorphism(const Graph & g, const Graph & h, const SearchConfig & cfg = {}) -> SearchResult;
auto find_embedding(const Graph & g, const Graph & h, const SearchConfig & cfg = {}) -> SearchResult;
/// Embedding f with chi(f(v)) = v. chi colors V(h) with vertices of g.
auto find_colored_embedding(const Graph & g, const Graph & h, const Coloring & chi, const SearchConfig & cfg = {})
    -> SearchResult;
/// Homomorphism f with chi(f(v)) = v.
auto find_colored_homomorphism(const Graph & g, const Graph & h, const Coloring & chi, const SearchConfig & cfg = {})
    -> SearchResult;

/// A non-surjective endomorphism of g whose image contains every vertex of
/// `frame`. Found means `frame` is not a frame; Exhausted means it is.
auto find_endo_counterexample(const Graph & g, std::span<const VertexId> frame, const SearchConfig & cfg = {})
    -> SearchResult;

struct CoreOptions {
    std::size_t size_guard = 40;
};

/// An induced subgraph of g that is a core of g (labels carried over).
/// Throws GuardExceeded above the guard and LimitExceeded when a search runs
/// out of budget.
auto compute_core(const Graph & g, const SearchConfig & cfg = {}, const CoreOptions & options = {}) -> Graph;

enum class MapMode { Homomorphism, Embedding, ColoredHomomorphism, ColoredEmbedding };

struct MapVerdict {
    bool ok = true;
    std::string violation; // first violated condition, empty when ok

    explicit operator bool() const { return ok; }
};

/// Checks f against the conditions of `mode`. Colored modes need chi
/// (coloring V(h) with vertices of g).
auto verify_map(const Graph & g, const Graph & h, const VertexMap & f, MapMode mode, const Coloring * chi = nullptr)
    -> MapVerdict;

} // namespace gwemb
