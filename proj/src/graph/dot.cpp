#include <gwemb/error.hpp>
#include <gwemb/graph_io.hpp>

#include <array>
#include <sstream>

namespace gwemb {

namespace {

constexpr std::array<const char *, 6> palette{"black", "lightgray", "white", "gray", "lightblue", "orange"};

auto quoted(std::string_view s) -> std::string
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

auto to_dot(const Graph & g, const std::vector<DotClass> & classes, std::string_view graph_name) -> std::string
{
    std::vector<int> class_of(g.vertex_count(), -1);
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (auto v : classes[c].members) {
            if (v >= g.vertex_count())
                throw InputError("highlight class '" + classes[c].name + "' names unknown vertex " + std::to_string(v));
            if (class_of[v] != -1)
                throw InputError("vertex " + std::to_string(v) + " is in highlight classes '" +
                    classes[static_cast<std::size_t>(class_of[v])].name + "' and '" + classes[c].name + "'");
            class_of[v] = static_cast<int>(c);
        }

    std::ostringstream out;
    out << "graph " << quoted(graph_name) << " {\n";
    out << "  node [shape=circle, width=0.3, fixedsize=false];\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v << " [label=" << quoted(g.label(v));
        if (class_of[v] >= 0) {
            auto & cls = classes[static_cast<std::size_t>(class_of[v])];
            std::string fill = cls.fill.empty() ? palette[static_cast<std::size_t>(class_of[v]) % palette.size()] : cls.fill;
            out << ", style=filled, fillcolor=" << quoted(fill) << ", class=" << quoted(cls.name);
            if (fill == "black")
                out << ", fontcolor=\"white\"";
        }
        out << "];\n";
    }
    for (auto [u, v] : g.edges())
        out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace gwemb
