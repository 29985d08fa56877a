#include <gwemb/error.hpp>
#include <gwemb/graph_io.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

namespace gwemb {

namespace {

auto trim(std::string_view s) -> std::string_view
{
    while (! s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (! s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

auto split_lines(std::string_view text) -> std::vector<std::pair<std::size_t, std::string_view>>
{
    std::vector<std::pair<std::size_t, std::string_view>> out;
    std::size_t line_no = 0;
    while (! text.empty()) {
        ++line_no;
        auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        out.emplace_back(line_no, line);
    }
    return out;
}

// Exactly `count` unsigned integers separated by whitespace.
auto parse_numbers(std::string_view line, std::size_t count, std::size_t line_no) -> std::vector<std::size_t>
{
    std::vector<std::size_t> out;
    line = trim(line);
    while (! line.empty()) {
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
        if (ec != std::errc{} || ptr == line.data())
            throw InputError("line " + std::to_string(line_no) + ": expected an integer in '" + std::string(line) + "'");
        out.push_back(value);
        line.remove_prefix(static_cast<std::size_t>(ptr - line.data()));
        if (! line.empty() && line.front() != ' ' && line.front() != '\t')
            throw InputError("line " + std::to_string(line_no) + ": malformed number");
        line = trim(line);
    }
    if (out.size() != count)
        throw InputError("line " + std::to_string(line_no) + ": expected " + std::to_string(count) + " integers, got " +
            std::to_string(out.size()));
    return out;
}

} // namespace

auto parse_graph(std::string_view text) -> Graph
{
    auto lines = split_lines(text);
    std::size_t i = 0;
    auto skip_blank = [&] {
        while (i < lines.size()) {
            auto t = trim(lines[i].second);
            if (! t.empty() && ! (t.front() == '#' && t.substr(0, 7) != "# label"))
                break;
            ++i;
        }
    };

    skip_blank();
    if (i == lines.size())
        throw InputError("missing header line 'n m'");
    auto header = parse_numbers(lines[i].second, 2, lines[i].first);
    ++i;
    std::size_t n = header[0], m = header[1];

    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::size_t e = 0; e < m; ++e) {
        skip_blank();
        if (i == lines.size())
            throw InputError("expected " + std::to_string(m) + " edge lines, found " + std::to_string(e));
        if (trim(lines[i].second).starts_with("#"))
            throw InputError("line " + std::to_string(lines[i].first) + ": label line before all edges were read");
        auto uv = parse_numbers(lines[i].second, 2, lines[i].first);
        if (uv[0] >= n || uv[1] >= n)
            throw InputError("line " + std::to_string(lines[i].first) + ": endpoint out of range");
        edges.emplace_back(static_cast<VertexId>(uv[0]), static_cast<VertexId>(uv[1]));
        ++i;
    }

    std::vector<std::string> labels;
    std::vector<bool> has(n, false);
    std::size_t label_count = 0;
    for (; i < lines.size(); ++i) {
        auto t = trim(lines[i].second);
        if (t.empty())
            continue;
        if (! t.starts_with("#"))
            throw InputError("line " + std::to_string(lines[i].first) + ": unexpected content after edges");
        if (! t.starts_with("# label "))
            continue;
        auto rest = t.substr(8);
        auto space = rest.find(' ');
        if (space == std::string_view::npos)
            throw InputError("line " + std::to_string(lines[i].first) + ": label line needs a vertex and a text");
        auto ids = parse_numbers(rest.substr(0, space), 1, lines[i].first);
        if (ids[0] >= n)
            throw InputError("line " + std::to_string(lines[i].first) + ": label for unknown vertex");
        if (labels.empty())
            labels.resize(n);
        if (has[ids[0]])
            throw InputError("line " + std::to_string(lines[i].first) + ": vertex labeled twice");
        has[ids[0]] = true;
        labels[ids[0]] = std::string(rest.substr(space + 1));
        ++label_count;
    }
    if (label_count != 0 && label_count != n)
        throw InputError("labels must cover every vertex (" + std::to_string(label_count) + " of " + std::to_string(n) +
            ")");
    return Graph::build(n, edges, std::move(labels));
}

auto serialize_graph(const Graph & g) -> std::string
{
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    if (g.has_labels())
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            out << "# label " << v << ' ' << g.labels()[v] << '\n';
    return out.str();
}

auto read_graph_file(const std::string & path) -> Graph
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw InputError("cannot open graph file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_graph(buffer.str());
}

void write_graph_file(const std::string & path, const Graph & g)
{
    std::ofstream out(path, std::ios::binary);
    if (! out)
        throw InputError("cannot write graph file '" + path + "'");
    out << serialize_graph(g);
}

} // namespace gwemb
