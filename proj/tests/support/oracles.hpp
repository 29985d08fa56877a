#pragma once

// Test-side reference implementations. None of these call into the library
// beyond Graph accessors, so they can serve as independent oracles.

#include <gwemb/graph.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace oracle {

using gwemb::Edge;
using gwemb::Graph;
using gwemb::VertexId;

inline auto random_graph(std::mt19937_64 & rng, std::size_t n, double p) -> Graph
{
    std::bernoulli_distribution edge(p);
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (edge(rng))
                edges.emplace_back(u, v);
    return Graph::build(n, edges);
}

inline auto has_edge(const Graph & g, VertexId u, VertexId v) -> bool
{
    auto nb = g.neighbours(u);
    return std::find(nb.begin(), nb.end(), v) != nb.end();
}

enum class Kind { Hom, Emb };

// chi, when given, colors V(h) with vertices of g and the map must satisfy
// chi(f(v)) = v.
inline auto map_ok(const Graph & g, const Graph & h, const std::vector<VertexId> & f, Kind kind,
    const std::vector<VertexId> * chi) -> bool
{
    for (auto [u, v] : g.edges())
        if (! has_edge(h, f[u], f[v]))
            return false;
    if (kind == Kind::Emb) {
        std::set<VertexId> seen(f.begin(), f.end());
        if (seen.size() != f.size())
            return false;
    }
    if (chi)
        for (VertexId v = 0; v < f.size(); ++v)
            if ((*chi)[f[v]] != v)
                return false;
    return true;
}

/// Calls visit(f) for every map V(g) -> V(h) until it returns true.
template <typename Visit>
auto for_each_map(std::size_t n, std::size_t m, Visit && visit) -> bool
{
    if (n == 0)
        return visit(std::vector<VertexId>{});
    if (m == 0)
        return false;
    std::vector<VertexId> f(n, 0);
    for (;;) {
        if (visit(f))
            return true;
        std::size_t i = 0;
        while (i < n && ++f[i] == m)
            f[i++] = 0;
        if (i == n)
            return false;
    }
}

inline auto exists_map(const Graph & g, const Graph & h, Kind kind, const std::vector<VertexId> * chi = nullptr)
    -> bool
{
    return for_each_map(g.vertex_count(), h.vertex_count(),
        [&](const std::vector<VertexId> & f) { return map_ok(g, h, f, kind, chi); });
}

inline auto isomorphic(const Graph & a, const Graph & b) -> bool
{
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    std::vector<VertexId> perm(a.vertex_count());
    for (VertexId i = 0; i < perm.size(); ++i)
        perm[i] = i;
    do {
        bool ok = true;
        for (auto [u, v] : a.edges())
            if (! has_edge(b, perm[u], perm[v])) {
                ok = false;
                break;
            }
        if (ok)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Is there a non-surjective endomorphism of g whose image contains `frame`?
inline auto frame_refuted(const Graph & g, const std::vector<VertexId> & frame) -> bool
{
    std::size_t n = g.vertex_count();
    return for_each_map(n, n, [&](const std::vector<VertexId> & f) {
        std::set<VertexId> image(f.begin(), f.end());
        if (image.size() == n)
            return false;
        for (auto x : frame)
            if (! image.count(x))
                return false;
        return map_ok(g, g, f, Kind::Hom, nullptr);
    });
}

inline auto bfs(const Graph & g, VertexId s) -> std::vector<int>
{
    std::vector<int> d(g.vertex_count(), -1);
    std::vector<VertexId> queue{s};
    d[s] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (auto w : g.neighbours(queue[i]))
            if (d[w] < 0) {
                d[w] = d[queue[i]] + 1;
                queue.push_back(w);
            }
    return d;
}

/// Number of simple k-cycles, by DFS from every start vertex; each cycle is
/// seen 2k times.
inline auto count_cycles(const Graph & g, std::size_t k) -> std::size_t
{
    std::size_t total = 0;
    std::vector<VertexId> path;
    std::vector<char> on(g.vertex_count(), 0);
    auto dfs = [&](auto & self, VertexId v) -> void {
        if (path.size() == k) {
            if (has_edge(g, v, path.front()))
                ++total;
            return;
        }
        for (auto w : g.neighbours(v))
            if (! on[w]) {
                on[w] = 1;
                path.push_back(w);
                self(self, w);
                path.pop_back();
                on[w] = 0;
            }
    };
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        path = {s};
        on[s] = 1;
        dfs(dfs, s);
        on[s] = 0;
    }
    return total / (2 * k);
}

/// Every simple k-cycle as a vertex set, by DFS.
inline auto cycle_vertex_sets(const Graph & g, std::size_t k) -> std::set<std::vector<VertexId>>
{
    std::set<std::vector<VertexId>> out;
    std::vector<VertexId> path;
    std::vector<char> on(g.vertex_count(), 0);
    auto dfs = [&](auto & self, VertexId v) -> void {
        if (path.size() == k) {
            if (has_edge(g, v, path.front())) {
                auto s = path;
                std::sort(s.begin(), s.end());
                out.insert(s);
            }
            return;
        }
        for (auto w : g.neighbours(v))
            if (! on[w] && w > path.front()) {
                on[w] = 1;
                path.push_back(w);
                self(self, w);
                path.pop_back();
                on[w] = 0;
            }
    };
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        path = {s};
        on[s] = 1;
        dfs(dfs, s);
        on[s] = 0;
    }
    return out;
}

/// Shortest odd closed walk through BFS on the bipartite double cover; equal
/// to the odd girth.
inline auto odd_girth(const Graph & g) -> std::optional<std::size_t>
{
    std::size_t n = g.vertex_count();
    std::optional<std::size_t> best;
    for (VertexId s = 0; s < n; ++s) {
        std::vector<int> d(2 * n, -1);
        std::vector<VertexId> queue{2 * s};
        d[2 * s] = 0;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            auto state = queue[i];
            for (auto w : g.neighbours(state / 2)) {
                auto next = 2 * w + (1 - state % 2);
                if (d[next] < 0) {
                    d[next] = d[state] + 1;
                    queue.push_back(next);
                }
            }
        }
        if (d[2 * s + 1] >= 0 && (! best || static_cast<std::size_t>(d[2 * s + 1]) < *best))
            best = static_cast<std::size_t>(d[2 * s + 1]);
    }
    return best;
}

// A second wall generator, written from the displayed vertex and edge sets
// with label strings as keys.
struct LabeledGraph {
    std::set<std::string> vertices;
    std::set<std::pair<std::string, std::string>> edges;
};

inline auto wall_by_labels(std::size_t s, std::size_t t) -> LabeledGraph
{
    auto v = [](std::size_t i, std::size_t j) { return "v_{" + std::to_string(i) + "," + std::to_string(j) + "}"; };
    auto u = [](std::size_t i, std::size_t j) { return "u_{" + std::to_string(i) + "," + std::to_string(j) + "}"; };
    LabeledGraph w;
    auto add = [&](std::string a, std::string b) {
        if (b < a)
            std::swap(a, b);
        w.edges.emplace(a, b);
    };
    for (std::size_t i = 1; i <= s + 1; ++i) {
        for (std::size_t j = 1; j <= t; ++j)
            w.vertices.insert(v(i, j));
        for (std::size_t j = 2; j <= t; ++j)
            w.vertices.insert(u(i, j));
        w.vertices.insert(t % 2 ? v(i, t + 1) : u(i, t + 1));
    }
    for (std::size_t i = 1; i <= s; ++i) {
        add(v(i, 1), v(i + 1, 1));
        if (t % 2)
            add(v(i, t + 1), v(i + 1, t + 1));
        else
            add(u(i, t + 1), u(i + 1, t + 1));
        for (std::size_t j = 2; j <= t; ++j)
            add(u(i, j), v(i + 1, j));
    }
    for (std::size_t i = 1; i <= s + 1; ++i) {
        for (std::size_t j = 2; j <= t; ++j)
            add(v(i, j), u(i, j));
        for (std::size_t j = 1; j <= t; j += 2)
            add(v(i, j), v(i, j + 1));
        for (std::size_t j = 2; j <= t; j += 2)
            add(u(i, j), u(i, j + 1));
    }
    return w;
}

inline auto labeled(const Graph & g) -> LabeledGraph
{
    LabeledGraph out;
    for (VertexId x = 0; x < g.vertex_count(); ++x)
        out.vertices.insert(g.label(x));
    for (auto [a, b] : g.edges()) {
        auto la = g.label(a), lb = g.label(b);
        if (lb < la)
            std::swap(la, lb);
        out.edges.emplace(la, lb);
    }
    return out;
}

/// Smallest n' such that g maps homomorphically into an induced subgraph of
/// g on n' vertices; the core size.
inline auto core_size(const Graph & g) -> std::size_t
{
    std::size_t n = g.vertex_count();
    for (std::size_t k = 1; k <= n; ++k)
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (static_cast<std::size_t>(__builtin_popcount(mask)) != k)
                continue;
            bool found = for_each_map(n, n, [&](const std::vector<VertexId> & f) {
                for (auto x : f)
                    if (! ((mask >> x) & 1u))
                        return false;
                return map_ok(g, g, f, Kind::Hom, nullptr);
            });
            if (found)
                return k;
        }
    return n;
}

// Recursive-descent check of the DOT language (graph, digraph, strict,
// statements, attribute lists, subgraphs, quoted and numeral IDs, comments).
class DotChecker {
public:
    explicit DotChecker(std::string text) : text_(std::move(text)) {}

    auto valid() -> bool
    {
        try {
            tokenize();
            graph();
            return pos_ == tokens_.size();
        } catch (const Fail &) {
            return false;
        }
    }

    std::size_t nodes = 0, edges = 0;

private:
    struct Fail {};
    struct Token {
        enum Type { Id, Punct, Arrow } type;
        std::string text;
    };

    std::string text_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    bool directed_ = false;
    std::set<std::string> seen_nodes_;

    void tokenize()
    {
        std::size_t i = 0;
        while (i < text_.size()) {
            char c = text_[i];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
            } else if (c == '/' && i + 1 < text_.size() && text_[i + 1] == '/') {
                while (i < text_.size() && text_[i] != '\n')
                    ++i;
            } else if (c == '/' && i + 1 < text_.size() && text_[i + 1] == '*') {
                auto end = text_.find("*/", i + 2);
                if (end == std::string::npos)
                    throw Fail{};
                i = end + 2;
            } else if (c == '#' && (i == 0 || text_[i - 1] == '\n')) {
                while (i < text_.size() && text_[i] != '\n')
                    ++i;
            } else if (c == '"') {
                std::string s;
                ++i;
                while (i < text_.size() && text_[i] != '"') {
                    if (text_[i] == '\\' && i + 1 < text_.size())
                        s += text_[i++];
                    s += text_[i++];
                }
                if (i == text_.size())
                    throw Fail{};
                ++i;
                tokens_.push_back({Token::Id, s});
            } else if (c == '-' && i + 1 < text_.size() && (text_[i + 1] == '-' || text_[i + 1] == '>')) {
                tokens_.push_back({Token::Arrow, std::string(text_.substr(i, 2))});
                i += 2;
            } else if (std::string_view("{}[];,=:").find(c) != std::string_view::npos) {
                tokens_.push_back({Token::Punct, std::string(1, c)});
                ++i;
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
                static_cast<unsigned char>(c) >= 128) {
                std::size_t j = i;
                while (j < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_' ||
                           static_cast<unsigned char>(text_[j]) >= 128))
                    ++j;
                tokens_.push_back({Token::Id, std::string(text_.substr(i, j - i))});
                i = j;
            } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-') {
                std::size_t j = i + 1;
                while (j < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[j])) || text_[j] == '.'))
                    ++j;
                tokens_.push_back({Token::Id, std::string(text_.substr(i, j - i))});
                i = j;
            } else {
                throw Fail{};
            }
        }
    }

    auto peek(std::string_view punct) const -> bool
    {
        return pos_ < tokens_.size() && tokens_[pos_].type != Token::Id && tokens_[pos_].text == punct;
    }
    auto peek_id() const -> bool { return pos_ < tokens_.size() && tokens_[pos_].type == Token::Id; }
    auto keyword(std::string_view k) const -> bool
    {
        if (! peek_id())
            return false;
        auto s = tokens_[pos_].text;
        std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return std::tolower(ch); });
        return s == k;
    }
    void expect(std::string_view punct)
    {
        if (! peek(punct))
            throw Fail{};
        ++pos_;
    }
    auto id() -> std::string
    {
        if (! peek_id())
            throw Fail{};
        return tokens_[pos_++].text;
    }

    void graph()
    {
        if (keyword("strict"))
            ++pos_;
        if (keyword("digraph"))
            directed_ = true;
        else if (! keyword("graph"))
            throw Fail{};
        ++pos_;
        if (peek_id())
            ++pos_;
        expect("{");
        stmt_list();
        expect("}");
    }

    void stmt_list()
    {
        while (! peek("}")) {
            if (pos_ >= tokens_.size())
                throw Fail{};
            stmt();
            if (peek(";"))
                ++pos_;
        }
    }

    void attr_list()
    {
        while (peek("[")) {
            ++pos_;
            while (! peek("]")) {
                id();
                expect("=");
                id();
                if (peek(";") || peek(","))
                    ++pos_;
            }
            expect("]");
        }
    }

    // node_id or subgraph as an edge operand
    void operand()
    {
        if (keyword("subgraph") || peek("{")) {
            subgraph();
            return;
        }
        auto name = id();
        if (peek(":")) {
            ++pos_;
            id();
            if (peek(":")) {
                ++pos_;
                id();
            }
        }
        if (seen_nodes_.insert(name).second)
            ++nodes;
    }

    void subgraph()
    {
        if (keyword("subgraph")) {
            ++pos_;
            if (peek_id())
                ++pos_;
        }
        expect("{");
        stmt_list();
        expect("}");
    }

    void stmt()
    {
        if (keyword("graph") || keyword("node") || keyword("edge")) {
            ++pos_;
            if (! peek("["))
                throw Fail{};
            attr_list();
            return;
        }
        if (peek_id() && pos_ + 1 < tokens_.size() && tokens_[pos_ + 1].type == Token::Punct &&
            tokens_[pos_ + 1].text == "=") {
            pos_ += 2;
            id();
            return;
        }
        operand();
        while (pos_ < tokens_.size() && tokens_[pos_].type == Token::Arrow) {
            if ((tokens_[pos_].text == "->") != directed_)
                throw Fail{};
            ++pos_;
            operand();
            ++edges;
        }
        attr_list();
    }
};

} // namespace oracle
