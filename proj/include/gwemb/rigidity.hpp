#pragma once

#include <gwemb/graph.hpp>
#include <gwemb/product.hpp>
#include <gwemb/skeleton_spec.hpp>
#include <gwemb/solver.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gwemb {

enum class RigidityStatus { RigidExhaustive, Counterexample, NoCounterexampleFound, Indeterminate };

auto rigidity_status_name(RigidityStatus s) -> std::string;

/// (H, chi, h): h embeds G into P(G, S, H, chi) and misses (f, f).
struct RigidityCounterexample {
    Graph h;
    Coloring chi;
    VertexMap embedding;
    VertexId missed = 0; // the frame vertex f
};

struct RigidityVerdict {
    RigidityStatus status = RigidityStatus::Indeterminate;
    std::optional<RigidityCounterexample> counterexample;
    std::size_t search_bound = 0;   // largest |V(H)| examined
    std::size_t instances = 0;      // (H, chi) pairs examined
    std::size_t distinct_products = 0;
    std::size_t samples = 0;        // randomized search only
    std::uint64_t seed = 0;
};

struct RigidityOptions {
    std::size_t size_guard = 4;
    /// Only visit colorings that are non-decreasing in the H-vertex index.
    /// Every (H, chi) is isomorphic to such a pair, so nothing is lost.
    bool sorted_colorings = false;
    /// Override the bound on |V(H)|; by default |V(G)|, or 2|V(G)| when some
    /// D-vertex hangs off an edge.
    std::optional<std::size_t> max_h;
};

/// Searches one (H, chi) for an embedding G -> P missing a frame copy.
auto find_rigidity_violation(const Graph & g, const SkeletonSpec & s, const Graph & h, const Coloring & chi,
    const SearchConfig & cfg, bool * limited = nullptr) -> std::optional<RigidityCounterexample>;

/// Empty when the counterexample checks out end to end.
auto verify_counterexample(const Graph & g, const SkeletonSpec & s, const RigidityCounterexample & c) -> std::string;

/// Restricts a counterexample to H[X], X the H-vertices its embedding
/// touches; the result is again a counterexample.
auto restrict_counterexample(const Graph & g, const SkeletonSpec & s, const RigidityCounterexample & c)
    -> RigidityCounterexample;

/// The bound on |V(H)| used when RigidityOptions::max_h is unset.
auto rigidity_search_bound(const Graph & g, const SkeletonSpec & s) -> std::size_t;

auto is_rigid_exhaustive(const Graph & g, const SkeletonSpec & s, const SearchConfig & cfg = {},
    const RigidityOptions & options = {}) -> RigidityVerdict;

auto rigidity_random_search(const Graph & g, const SkeletonSpec & s, std::size_t samples, std::uint64_t seed,
    std::size_t max_h, const SearchConfig & cfg = {}) -> RigidityVerdict;

/// All rigid skeletons of g in lexicographic order of (F, D).
auto list_rigid_skeletons(const Graph & g, const SearchConfig & cfg = {}, const RigidityOptions & options = {})
    -> std::vector<SkeletonSpec>;

} // namespace gwemb
