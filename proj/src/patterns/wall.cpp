#include <gwemb/error.hpp>
#include <gwemb/patterns.hpp>

#include <algorithm>
#include <string>

namespace gwemb {

namespace {

void require_wall_dims(std::size_t s, std::size_t t)
{
    if (s < 1 || t < 1)
        throw InputError("wall dimensions must be positive, got " + std::to_string(s) + "x" + std::to_string(t));
}

auto exists(std::size_t s, std::size_t t, WallVertex w) -> bool
{
    if (w.i < 1 || w.i > s + 1)
        return false;
    bool odd_t = t % 2 == 1;
    if (w.family == WallFamily::V)
        return (w.j >= 1 && w.j <= t) || (w.j == t + 1 && odd_t);
    return (w.j >= 2 && w.j <= t) || (w.j == t + 1 && ! odd_t);
}

auto label(WallVertex w) -> std::string
{
    return std::string(w.family == WallFamily::V ? "v_{" : "u_{") + std::to_string(w.i) + "," + std::to_string(w.j) +
        "}";
}

} // namespace

auto wall_vertices(std::size_t s, std::size_t t) -> std::vector<WallVertex>
{
    require_wall_dims(s, t);
    std::vector<WallVertex> out;
    for (std::size_t j = 1; j <= t + 1; ++j)
        for (auto family : {WallFamily::V, WallFamily::U})
            for (std::size_t i = 1; i <= s + 1; ++i)
                if (exists(s, t, {family, i, j}))
                    out.push_back({family, i, j});
    return out;
}

auto wall_id(std::size_t s, std::size_t t, WallVertex w) -> std::optional<VertexId>
{
    if (! exists(s, t, w))
        return std::nullopt;
    // rows below j, then the preceding members of row j
    VertexId id = 0;
    for (std::size_t j = 1; j < w.j; ++j)
        for (auto family : {WallFamily::V, WallFamily::U})
            if (exists(s, t, {family, 1, j}))
                id += static_cast<VertexId>(s + 1);
    if (w.family == WallFamily::U && exists(s, t, {WallFamily::V, 1, w.j}))
        id += static_cast<VertexId>(s + 1);
    return id + static_cast<VertexId>(w.i - 1);
}

auto make_wall(std::size_t s, std::size_t t) -> Graph
{
    require_wall_dims(s, t);
    auto verts = wall_vertices(s, t);
    auto id = [&](WallFamily f, std::size_t i, std::size_t j) { return *wall_id(s, t, {f, i, j}); };
    constexpr auto V = WallFamily::V;
    constexpr auto U = WallFamily::U;
    bool odd_t = t % 2 == 1;

    std::vector<Edge> edges;
    // bottom row
    for (std::size_t i = 1; i <= s; ++i)
        edges.emplace_back(id(V, i, 1), id(V, i + 1, 1));
    // top row: v's for odd t, u's for even t
    for (std::size_t i = 1; i <= s; ++i) {
        if (odd_t)
            edges.emplace_back(id(V, i, t + 1), id(V, i + 1, t + 1));
        else
            edges.emplace_back(id(U, i, t + 1), id(U, i + 1, t + 1));
    }
    // middle rows alternate v_{1,j} u_{1,j} v_{2,j} ... v_{s+1,j} u_{s+1,j}
    for (std::size_t j = 2; j <= t; ++j) {
        for (std::size_t i = 1; i <= s + 1; ++i)
            edges.emplace_back(id(V, i, j), id(U, i, j));
        for (std::size_t i = 1; i <= s; ++i)
            edges.emplace_back(id(U, i, j), id(V, i + 1, j));
    }
    // verticals: v's leave odd rows, u's leave even rows
    for (std::size_t i = 1; i <= s + 1; ++i)
        for (std::size_t j = 1; j <= t; ++j) {
            if (j % 2 == 1)
                edges.emplace_back(id(V, i, j), id(V, i, j + 1));
            else
                edges.emplace_back(id(U, i, j), id(U, i, j + 1));
        }

    std::vector<std::string> labels;
    for (auto & w : verts)
        labels.push_back(label(w));
    return Graph::build(verts.size(), edges, std::move(labels));
}

auto wall_skeleton(std::size_t s, std::size_t t) -> SkeletonSpec
{
    if (s <= 2 || t <= 3)
        throw InputError("wall skeleton needs s > 2 and t > 3, got " + std::to_string(s) + "x" + std::to_string(t));
    constexpr auto V = WallFamily::V;
    constexpr auto U = WallFamily::U;
    auto id = [&](WallFamily f, std::size_t i, std::size_t j) { return *wall_id(s, t, {f, i, j}); };
    bool odd_t = t % 2 == 1;

    std::vector<VertexId> rows, columns;
    for (std::size_t i = 1; i <= s + 1; ++i) {
        rows.push_back(id(V, i, 1));
        rows.push_back(id(V, i, 2));
        rows.push_back(id(U, i, 2));
        rows.push_back(id(V, i, t));
        rows.push_back(id(U, i, t));
        rows.push_back(odd_t ? id(V, i, t + 1) : id(U, i, t + 1));
    }
    for (std::size_t j = 3; j < t; ++j)
        for (auto v : {id(V, 1, j), id(U, 1, j), id(V, 2, j), id(U, s, j), id(V, s + 1, j), id(U, s + 1, j)})
            columns.push_back(v);

    auto normalize = [](std::vector<VertexId> v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    };
    rows = normalize(std::move(rows));
    columns = normalize(std::move(columns));
    std::vector<VertexId> frame = rows;
    frame.insert(frame.end(), columns.begin(), columns.end());

    SkeletonSpec spec;
    spec.frame = normalize(std::move(frame));
    spec.meta = WallSkeletonMeta{s, t, std::move(rows), std::move(columns)};
    return spec;
}

} // namespace gwemb
