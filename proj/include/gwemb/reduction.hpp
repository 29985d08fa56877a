#pragma once

#include <gwemb/graph.hpp>
#include <gwemb/patterns.hpp>
#include <gwemb/product.hpp>
#include <gwemb/solver.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

namespace gwemb {

/// Is there an embedding f: pattern -> target with chi(f(v)) = v?
struct ColEmbInstance {
    Graph pattern;
    Graph target;
    Coloring chi; // colors V(target) with vertices of pattern
};

/// Is there an embedding pattern -> target? When built by colemb_to_emb the
/// target is P(G, S, H, chi) and the remaining fields record how.
struct EmbInstance {
    Graph pattern;
    Graph target;
    struct Provenance {
        PatternKind family = PatternKind::Grid;
        std::size_t s = 0, t = 0;
        SkeletonSpec skeleton;
        ProductGraph product;
        Graph h;
        Coloring chi;                 // V(H) -> V(G), the transported coloring
        VertexMap pattern_to_quotient; // colored-embedding pattern -> quotient ids
    };
    std::optional<Provenance> provenance;
};

/// The product-style target P with V(P) = {(u,v) | chi_h(v) = u} and the
/// coloring (u,v) -> u. Vertex i of the target is the i-th pair in
/// lexicographic order; labels are "(u,v)" with the input labels.
auto hom_to_colemb(const Graph & g, const Graph & h, const Coloring & chi_h) -> ColEmbInstance;

/// The smallest (s, t) whose grid skeleton has a k x l quotient grid:
/// (2k + 3, 2l + 4).
auto grid_params_for_quotient(std::size_t k, std::size_t l) -> std::pair<std::size_t, std::size_t>;

struct ReductionOptions {
    std::size_t isomorphism_guard = 64;
};

/// Realizes inst.pattern as the quotient of a grid or wall skeleton and
/// builds the product target. Throws InputError when the pattern is not such
/// a quotient.
auto colemb_to_emb(PatternKind family, const ColEmbInstance & inst, const ReductionOptions & options = {})
    -> EmbInstance;

enum class Answer { Yes, No, Indeterminate };

auto answer_name(Answer a) -> std::string;

struct Decision {
    Answer answer = Answer::Indeterminate;
    std::optional<VertexMap> colored_embedding; // pattern of the colored instance -> H
    std::optional<VertexMap> certificate;       // verified embedding G -> P
    std::uint64_t nodes = 0;
    std::string transcript;
};

/// Decides an instance built by colemb_to_emb on the quotient side and lifts
/// any solution to a verified certificate.
auto decide_via_reduction(const EmbInstance & inst, const SearchConfig & cfg = {}) -> Decision;
auto decide_via_reduction(PatternKind family, const ColEmbInstance & inst, const SearchConfig & cfg = {}) -> Decision;

} // namespace gwemb
