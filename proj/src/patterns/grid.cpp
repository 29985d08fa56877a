#include <gwemb/error.hpp>
#include <gwemb/patterns.hpp>

#include <algorithm>
#include <string>

namespace gwemb {

namespace {

void require_grid_dims(std::size_t s, std::size_t t)
{
    if (s < 1 || t < 1)
        throw InputError("grid dimensions must be positive, got " + std::to_string(s) + "x" + std::to_string(t));
}

void require_skeleton_dims(std::size_t s, std::size_t t)
{
    if (s < 5 || t < 6)
        throw InputError("grid skeleton needs s >= 5 and t >= 6, got " + std::to_string(s) + "x" + std::to_string(t));
}

auto sorted_unique(std::vector<VertexId> v) -> std::vector<VertexId>
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

} // namespace

auto grid_id(std::size_t s, std::size_t t, GridCoord c) -> VertexId
{
    if (c.i < 1 || c.i > s || c.j < 1 || c.j > t)
        throw InputError("grid coordinate (" + std::to_string(c.i) + "," + std::to_string(c.j) + ") out of range");
    return static_cast<VertexId>((c.i - 1) * t + (c.j - 1));
}

auto grid_coord(std::size_t s, std::size_t t, VertexId v) -> GridCoord
{
    if (v >= s * t)
        throw InputError("grid vertex id " + std::to_string(v) + " out of range");
    return {v / t + 1, v % t + 1};
}

auto make_grid(std::size_t s, std::size_t t) -> Graph
{
    require_grid_dims(s, t);
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= s; ++i)
        for (std::size_t j = 1; j <= t; ++j) {
            labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
            auto v = grid_id(s, t, {i, j});
            if (i < s)
                edges.emplace_back(v, grid_id(s, t, {i + 1, j}));
            if (j < t)
                edges.emplace_back(v, grid_id(s, t, {i, j + 1}));
        }
    return Graph::build(s * t, edges, std::move(labels));
}

auto grid_corners(std::size_t s, std::size_t t) -> std::vector<VertexId>
{
    require_grid_dims(s, t);
    return sorted_unique({grid_id(s, t, {1, 1}), grid_id(s, t, {s, 1}), grid_id(s, t, {1, t}), grid_id(s, t, {s, t})});
}

auto pattern_treewidth(PatternKind kind, std::size_t s, std::size_t t) -> std::size_t
{
    require_grid_dims(s, t);
    auto m = std::min(s, t);
    return kind == PatternKind::Grid ? m : m + 1;
}

auto grid_center_set(std::size_t s, std::size_t t) -> std::vector<VertexId>
{
    require_skeleton_dims(s, t);
    std::size_t k1 = (s - 1) / 2, k2 = (t - 2) / 2;
    std::vector<VertexId> out;
    for (std::size_t i = 1; i <= k1; ++i)
        for (std::size_t j = 1; j <= k2 + 1; ++j)
            out.push_back(grid_id(s, t, {2 * i, 2 * j}));
    return sorted_unique(std::move(out));
}

auto grid_skeleton(std::size_t s, std::size_t t) -> SkeletonSpec
{
    require_skeleton_dims(s, t);
    std::size_t k1 = (s - 1) / 2, k2 = (t - 2) / 2;

    std::vector<VertexId> frame, contracted;
    for (std::size_t i = 1; i <= s; ++i)
        for (std::size_t j = 1; j <= t; ++j) {
            bool band = i <= 2 || (2 * k1 <= i && i <= s) || j == 1 || (2 * k2 < j && j <= t);
            bool post = i % 2 == 0 && j % 2 == 0 && i / 2 <= k1 && j / 2 <= k2;
            if (band || post)
                frame.push_back(grid_id(s, t, {i, j}));
        }
    for (std::size_t i = 1; i + 1 <= k1; ++i)
        for (std::size_t j = 1; j <= k2; ++j)
            contracted.push_back(grid_id(s, t, {2 * i + 1, 2 * j}));
    for (std::size_t i = 2; i < k1; ++i)
        for (std::size_t j = 1; j + 1 <= k2; ++j)
            contracted.push_back(grid_id(s, t, {2 * i, 2 * j + 1}));

    SkeletonSpec spec;
    spec.frame = sorted_unique(std::move(frame));
    spec.contracted = sorted_unique(std::move(contracted));
    spec.meta = GridSkeletonMeta{s, t, k1, k2, grid_center_set(s, t)};
    return spec;
}

} // namespace gwemb
