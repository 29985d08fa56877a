#pragma once

#include <gwemb/bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gwemb {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Undirected simple graph on vertices 0..n-1. Immutable once built; the
/// neighbour lists are sorted and mirrored by adjacency bitset rows.
class Graph {
public:
    Graph() = default;

    /// Validates and normalizes: endpoints must be < n, no self-loops,
    /// duplicates (in either orientation) collapse. Labels, when given, must
    /// have size n and be pairwise distinct.
    static auto build(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels = {}) -> Graph;

    auto vertex_count() const -> std::size_t { return neighbours_.size(); }
    auto edge_count() const -> std::size_t { return edge_count_; }
    auto empty() const -> bool { return neighbours_.empty(); }

    /// Throws InputError on a bad id.
    auto neighbours(VertexId v) const -> std::span<const VertexId>;
    auto degree(VertexId v) const -> std::size_t { return neighbours(v).size(); }
    auto adjacent(VertexId u, VertexId v) const -> bool { return rows_[u].test(v); }
    auto row(VertexId v) const -> const Bitset & { return rows_[v]; }

    /// Edges with u < v in lexicographic order.
    auto edges() const -> std::vector<Edge>;

    auto has_labels() const -> bool { return ! labels_.empty(); }
    auto labels() const -> const std::vector<std::string> & { return labels_; }
    /// The stored label, or the decimal id when the graph is unlabeled.
    auto label(VertexId v) const -> std::string;
    auto find_label(const std::string & label) const -> std::optional<VertexId>;

    auto operator==(const Graph & o) const -> bool
    {
        return neighbours_ == o.neighbours_ && labels_ == o.labels_;
    }

private:
    std::vector<std::vector<VertexId>> neighbours_;
    std::vector<Bitset> rows_;
    std::vector<std::string> labels_;
    std::size_t edge_count_ = 0;
};

/// Neighbour set of v, same as Graph::neighbours.
auto adjacency(const Graph & g, VertexId v) -> std::vector<VertexId>;

/// Subgraph induced on `keep` (any order; duplicates rejected). Vertex i of
/// the result is keep[i]; labels carry over.
auto induced_subgraph(const Graph & g, std::span<const VertexId> keep) -> Graph;

/// Graph minus a vertex set, with the surviving ids in ascending order.
struct Restriction {
    Graph graph;
    std::vector<VertexId> original;            // new id -> old id
    std::vector<std::optional<VertexId>> local; // old id -> new id
};
auto remove_vertices(const Graph & g, std::span<const VertexId> removed) -> Restriction;

/// A total map V(G) -> V(H): image[i] is the image of vertex i.
struct VertexMap {
    std::vector<VertexId> image;

    auto domain_size() const -> std::size_t { return image.size(); }
    auto operator[](VertexId v) const -> VertexId { return image[v]; }
    auto is_injective() const -> bool;
    auto is_surjective(std::size_t codomain_size) const -> bool;
    auto operator==(const VertexMap &) const -> bool = default;
};

/// Colors every target vertex with a pattern vertex.
struct Coloring {
    std::vector<VertexId> color_of;

    auto target_size() const -> std::size_t { return color_of.size(); }
    auto operator[](VertexId v) const -> VertexId { return color_of[v]; }
    /// Throws InputError unless total on a target of `target_size` vertices
    /// with colors < pattern_size.
    void validate(std::size_t target_size, std::size_t pattern_size) const;
    /// Target vertices carrying color c, ascending.
    auto class_of(VertexId c) const -> std::vector<VertexId>;
    auto operator==(const Coloring &) const -> bool = default;
};

} // namespace gwemb
