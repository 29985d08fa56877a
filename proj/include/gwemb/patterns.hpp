#pragma once

#include <gwemb/graph.hpp>
#include <gwemb/skeleton_spec.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace gwemb {

// Grids. Vertex (i,j), 1 <= i <= s, 1 <= j <= t, has id (i-1)*t + (j-1) and
// label "(i,j)".

struct GridCoord {
    std::size_t i = 0, j = 0;
    auto operator==(const GridCoord &) const -> bool = default;
};

auto make_grid(std::size_t s, std::size_t t) -> Graph;
auto grid_id(std::size_t s, std::size_t t, GridCoord c) -> VertexId;
auto grid_coord(std::size_t s, std::size_t t, VertexId v) -> GridCoord;
/// The four corners (1,1), (s,1), (1,t), (s,t), deduplicated and sorted.
auto grid_corners(std::size_t s, std::size_t t) -> std::vector<VertexId>;

// Walls. Vertices are ordered by row j = 1..t+1; within a row all existing
// v_{i,j} (i = 1..s+1) come first, then all existing u_{i,j}. Labels are
// "v_{i,j}" and "u_{i,j}".

enum class WallFamily { V, U };

struct WallVertex {
    WallFamily family = WallFamily::V;
    std::size_t i = 0, j = 0;
    auto operator==(const WallVertex &) const -> bool = default;
};

auto make_wall(std::size_t s, std::size_t t) -> Graph;
auto wall_vertices(std::size_t s, std::size_t t) -> std::vector<WallVertex>;
/// nullopt when the wall has no such vertex.
auto wall_id(std::size_t s, std::size_t t, WallVertex w) -> std::optional<VertexId>;

enum class PatternKind { Grid, Wall };

/// Closed forms: min{s,t} for grids, min{s,t}+1 for walls.
auto pattern_treewidth(PatternKind kind, std::size_t s, std::size_t t) -> std::size_t;

/// The grid skeleton S_{s,t}; requires s >= 5 and t >= 6.
auto grid_skeleton(std::size_t s, std::size_t t) -> SkeletonSpec;
/// {(2i,2j) | i <= floor((s-1)/2), j <= floor((t-2)/2)+1}.
auto grid_center_set(std::size_t s, std::size_t t) -> std::vector<VertexId>;

/// The wall skeleton with D empty; requires s > 2 and t > 3.
auto wall_skeleton(std::size_t s, std::size_t t) -> SkeletonSpec;

} // namespace gwemb
