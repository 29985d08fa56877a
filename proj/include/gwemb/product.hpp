#pragma once

#include <gwemb/graph.hpp>
#include <gwemb/skeleton.hpp>
#include <gwemb/skeleton_spec.hpp>
#include <gwemb/solver.hpp>

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace gwemb {

// Product vertices. The fresh elements v_{u,a} and v_{u,e} are the V3 and V4
// payloads themselves.

struct ClassV1 { // (u, a) with chi(a) = u
    VertexId u, a;
    auto operator<=>(const ClassV1 &) const = default;
};
struct ClassV2 { // (u, u) for u in F or u in D unassociated
    VertexId u;
    auto operator<=>(const ClassV2 &) const = default;
};
struct ClassV3 { // (u, v_{u,a}), u associated with the vertex chi(a)
    VertexId u, a;
    auto operator<=>(const ClassV3 &) const = default;
};
struct ClassV4 { // (u, v_{u,e}), u associated with the edge chi(e); e.first < e.second
    VertexId u;
    Edge e;
    auto operator<=>(const ClassV4 &) const = default;
};

using ProductVertex = std::variant<ClassV1, ClassV2, ClassV3, ClassV4>;

/// 1..4
auto product_class(const ProductVertex & x) -> int;
/// The G-coordinate u.
auto first_coordinate(const ProductVertex & x) -> VertexId;
/// Human-readable form using the labels of g and h, e.g. "((3,3),a1)".
auto describe(const ProductVertex & x, const Graph & g, const Graph & h) -> std::string;

struct ProductGraph {
    Graph graph;
    std::vector<ProductVertex> vertices;            // index = vertex id of `graph`
    std::array<std::vector<VertexId>, 4> class_index; // ids of V1..V4
    QuotientResult quotient;                        // (G \ F) / D with its association
    std::vector<std::optional<VertexId>> diagonal;  // u -> id of (u,u)
    std::vector<VertexId> v1_of;                    // H-vertex a -> id of (chi(a), a)
    std::map<std::pair<VertexId, VertexId>, VertexId> v3_of; // (u, a) -> id
    std::map<std::pair<VertexId, Edge>, VertexId> v4_of;      // (u, e) -> id

    auto vertex_count() const -> std::size_t { return vertices.size(); }
    /// Ids of (u,u) for u in F, ascending by u.
    auto frame_copy() const -> std::vector<VertexId>;
};

/// P(G, S, H, chi). chi colors V(H) with vertices of G outside F u D.
/// Checks disjointness and the degree condition of S; whether F is a frame is
/// the caller's business. Throws InputError on violations.
auto build_product(const Graph & g, const SkeletonSpec & s, const Graph & h, const Coloring & chi) -> ProductGraph;

/// "E11" ... "E44" for an edge of P; throws if xy is not an edge.
auto edge_family(const ProductGraph & p, VertexId x, VertexId y) -> std::string;

/// pi_1 o f, a map into V(G).
auto project_first(const ProductGraph & p, const VertexMap & f) -> VertexMap;
/// pi_2 o f as printable second coordinates.
auto project_second(const ProductGraph & p, const VertexMap & f, const Graph & g, const Graph & h)
    -> std::vector<std::string>;

/// Lifts a colored embedding hbar: quotient -> H (indexed by quotient ids) to
/// an embedding G -> P. Throws InputError when hbar is not a colored
/// homomorphism of the quotient.
auto lift_embedding(const ProductGraph & p, const Graph & h, const Coloring & chi, const VertexMap & hbar)
    -> VertexMap;

/// Recovers hbar = pi_2 o h o rho^-1 on the quotient from a homomorphism
/// h: G -> P covering the frame copy, where rho = pi_1 o h. Throws InputError
/// when the frame copy is not covered or rho is not an automorphism.
auto project_embedding(const ProductGraph & p, const Graph & g, const VertexMap & h) -> VertexMap;

// Structural checks, each returning an empty string when the property holds
// and a description of the first violation otherwise.

auto check_pi1_homomorphism(const ProductGraph & p, const Graph & g) -> std::string;
/// E34 is empty and every edge projects to a G-edge of one family.
auto check_edge_families(const ProductGraph & p, const Graph & g) -> std::string;

struct CenterReport {
    std::size_t four_cycles = 0;
    std::size_t cycles_without_center = 0;
    std::size_t center_pairs = 0;
    std::size_t odd_center_pairs = 0;
    std::size_t unreachable_center_pairs = 0;

    auto holds() const -> bool { return cycles_without_center == 0 && odd_center_pairs == 0; }
};

/// For C = {(u,u) | u in centers}: counts 4-cycles of P avoiding C and pairs
/// of C at odd distance (unreachable pairs are counted separately and are
/// not violations).
auto check_centers(const ProductGraph & p, std::span<const VertexId> centers) -> CenterReport;

/// With k the odd girth of G: every k-cycle of P projects under pi_1 onto k
/// distinct vertices forming a cycle of G.
auto check_odd_cycles(const ProductGraph & p, const Graph & g) -> std::string;

} // namespace gwemb
