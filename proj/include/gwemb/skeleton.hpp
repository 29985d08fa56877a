#pragma once

#include <gwemb/graph.hpp>
#include <gwemb/skeleton_spec.hpp>
#include <gwemb/solver.hpp>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gwemb {

enum class AssociationKind { None, Vertex, Edge };

/// What a contracted vertex hangs off: a quotient vertex `a`, a quotient
/// edge {a, b} with a < b, or nothing.
struct AssociationTag {
    AssociationKind kind = AssociationKind::None;
    VertexId a = 0, b = 0;
    auto operator==(const AssociationTag &) const -> bool = default;
};

struct Association {
    std::vector<VertexId> vertices;   // the contracted set, ascending
    std::vector<AssociationTag> tags; // parallel to `vertices`

    auto contains(VertexId d) const -> bool;
    /// Throws InputError when d is not a contracted vertex.
    auto of(VertexId d) const -> const AssociationTag &;
};

/// Associates every vertex of `d` inside `host`. All ids refer to `host`.
/// Throws InputError when some d-vertex has more than two neighbours.
auto associate(const Graph & host, std::span<const VertexId> d) -> Association;

struct QuotientResult {
    Graph quotient;                                 // on V(G) \ (F u D), labels carried over
    std::vector<VertexId> original;                 // quotient id -> G id
    std::vector<std::optional<VertexId>> local;     // G id -> quotient id
    Association association;                        // in G ids
    std::vector<VertexId> removed_frame;            // F, ascending
};

/// (G \ F) / D. Throws InputError unless F and D are disjoint, in range and
/// every D-vertex has at most two neighbours outside F.
auto quotient(const Graph & g, std::span<const VertexId> frame, std::span<const VertexId> contracted)
    -> QuotientResult;
auto quotient(const Graph & g, const SkeletonSpec & s) -> QuotientResult;

enum class FrameStatus { Frame, NotFrame, Indeterminate };

struct FrameVerdict {
    FrameStatus status = FrameStatus::Indeterminate;
    std::optional<VertexMap> witness; // a non-surjective endomorphism covering F
    std::uint64_t nodes = 0;
};

auto frame_status_name(FrameStatus s) -> std::string;

struct FrameOptions {
    std::size_t size_guard = 40;
    bool allow_above_guard = false;
};

/// Exact frame test. Throws GuardExceeded above the guard unless allowed.
auto is_frame(const Graph & g, std::span<const VertexId> frame, const SearchConfig & cfg = {},
    const FrameOptions & options = {}) -> FrameVerdict;

struct SkeletonReport {
    FrameVerdict s1;      // F is a frame
    bool s2 = false;      // F and D are disjoint
    bool s3 = false;      // every D-vertex has at most two neighbours outside F
    std::vector<std::string> problems;

    auto holds() const -> bool { return s1.status == FrameStatus::Frame && s2 && s3; }
    auto indeterminate() const -> bool { return s2 && s3 && s1.status == FrameStatus::Indeterminate; }
};

/// Evaluates all three conditions independently. Ids outside V(G) throw.
auto is_skeleton(const Graph & g, std::span<const VertexId> frame, std::span<const VertexId> contracted,
    const SearchConfig & cfg = {}, const FrameOptions & options = {}) -> SkeletonReport;

} // namespace gwemb
