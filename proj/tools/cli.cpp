#include "cli.hpp"

#include <gwemb/algorithms.hpp>
#include <gwemb/error.hpp>
#include <gwemb/graph_io.hpp>
#include <gwemb/patterns.hpp>
#include <gwemb/product.hpp>
#include <gwemb/reduction.hpp>
#include <gwemb/rigidity.hpp>
#include <gwemb/skeleton.hpp>
#include <gwemb/solver.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

namespace gwemb::cli {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Outcome {
    int code = exit_yes;
    std::string status = "ok";
    json result = json::object();
    std::string text; // human-readable payload for the output stream
};

struct Options {
    bool json_output = false;
    unsigned long long seed = 0;
    unsigned workers = 1;

    std::string kind, mode;
    std::size_t s = 0, t = 0;
    std::string output, graph, target, skel, chi, provenance, frame, family = "grid", order = "mrv";
    std::optional<std::uint64_t> limit_nodes;
    std::optional<double> timeout;
    bool unsafe = false, exhaustive = false, quick = false, sorted_colorings = false;
    std::size_t samples = 10000;
    std::optional<std::size_t> max_h;
};

class Phases {
public:
    void start(std::string name)
    {
        stop();
        name_ = std::move(name);
        begin_ = Clock::now();
    }
    void stop()
    {
        if (name_.empty())
            return;
        timing_[name_] = std::chrono::duration<double, std::milli>(Clock::now() - begin_).count();
        name_.clear();
    }
    auto report() -> json
    {
        stop();
        return timing_;
    }

private:
    std::string name_;
    Clock::time_point begin_;
    json timing_ = json::object();
};

auto graph_json(const Graph & g) -> json
{
    json edges = json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u, v});
    json out{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"edges", edges}};
    if (g.has_labels())
        out["labels"] = g.labels();
    return out;
}

auto read_json_file(const std::string & path) -> json
{
    std::ifstream in(path);
    if (! in)
        throw InputError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception & e) {
        throw InputError(path + ": " + e.what());
    }
}

void write_text_file(const std::string & path, const std::string & text)
{
    std::ofstream out(path);
    if (! out)
        throw InputError("cannot write " + path);
    out << text;
}

auto vertex_of(const json & item, const Graph & g, const std::string & what) -> VertexId
{
    if (item.is_number_unsigned() || item.is_number_integer()) {
        auto v = item.get<long long>();
        if (v < 0 || static_cast<std::size_t>(v) >= g.vertex_count())
            throw InputError(what + ": vertex " + std::to_string(v) + " out of range");
        return static_cast<VertexId>(v);
    }
    if (item.is_string()) {
        if (auto v = g.find_label(item.get<std::string>()))
            return *v;
        throw InputError(what + ": unknown vertex label " + item.get<std::string>());
    }
    throw InputError(what + ": vertices must be ids or labels");
}

auto vertex_list(const json & arr, const Graph & g, const std::string & what) -> std::vector<VertexId>
{
    if (! arr.is_array())
        throw InputError(what + " must be an array");
    std::vector<VertexId> out;
    for (auto & item : arr)
        out.push_back(vertex_of(item, g, what));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

auto skeleton_json(const SkeletonSpec & spec) -> json
{
    json meta = json::object();
    if (auto * gm = std::get_if<GridSkeletonMeta>(&spec.meta))
        meta = {{"family", "grid"}, {"s", gm->s}, {"t", gm->t}, {"k1", gm->k1}, {"k2", gm->k2}, {"F1", gm->centers}};
    else if (auto * wm = std::get_if<WallSkeletonMeta>(&spec.meta))
        meta = {{"family", "wall"}, {"s", wm->s}, {"t", wm->t}, {"F1", wm->rows}, {"F2", wm->columns}};
    return {{"F", spec.frame}, {"D", spec.contracted}, {"meta", meta}};
}

auto load_skeleton(const std::string & path, const Graph & g) -> SkeletonSpec
{
    auto doc = read_json_file(path);
    if (! doc.is_object() || ! doc.contains("F"))
        throw InputError(path + ": skeleton needs an \"F\" array");
    SkeletonSpec spec;
    spec.frame = vertex_list(doc["F"], g, "F");
    spec.contracted = doc.contains("D") ? vertex_list(doc["D"], g, "D") : std::vector<VertexId>{};
    if (doc.contains("meta") && doc["meta"].is_object() && doc["meta"].contains("family")) {
        auto & m = doc["meta"];
        auto get = [&](const char * key) { return m.value(key, std::size_t{0}); };
        if (m["family"] == "grid" && m.contains("F1"))
            spec.meta = GridSkeletonMeta{get("s"), get("t"), get("k1"), get("k2"), vertex_list(m["F1"], g, "F1")};
        else if (m["family"] == "wall" && m.contains("F1") && m.contains("F2"))
            spec.meta = WallSkeletonMeta{get("s"), get("t"), vertex_list(m["F1"], g, "F1"), vertex_list(m["F2"], g, "F2")};
    }
    return spec;
}

/// A JSON array of colors, or an object with a "chi" array. Colors are
/// pattern ids or labels.
auto load_coloring(const std::string & path, const Graph & target, const Graph & pattern) -> Coloring
{
    auto doc = read_json_file(path);
    const json & arr = doc.is_object() && doc.contains("chi") ? doc["chi"] : doc;
    if (! arr.is_array())
        throw InputError(path + ": coloring must be an array");
    Coloring chi;
    for (auto & item : arr)
        chi.color_of.push_back(vertex_of(item, pattern, "coloring"));
    chi.validate(target.vertex_count(), pattern.vertex_count());
    return chi;
}

auto search_config(const Options & o) -> SearchConfig
{
    SearchConfig cfg;
    cfg.node_limit = o.limit_nodes;
    if (o.timeout) {
        if (*o.timeout <= 0)
            throw InputError("--timeout must be positive");
        cfg.time_limit = std::chrono::milliseconds(static_cast<long long>(*o.timeout * 1000.0 + 0.5));
        if (cfg.time_limit->count() == 0)
            cfg.time_limit = std::chrono::milliseconds(1);
    }
    if (o.order == "mrv")
        cfg.variable_order = VariableOrder::MinRemainingDomain;
    else if (o.order == "bfs")
        cfg.variable_order = VariableOrder::StaticBfs;
    else
        throw InputError("--order must be bfs or mrv");
    cfg.workers = o.workers;
    cfg.parallel = o.workers > 1;
    cfg.validate();
    return cfg;
}

auto map_json(const VertexMap & f, const Graph & from, const Graph & to) -> json
{
    json pairs = json::array();
    for (VertexId v = 0; v < f.domain_size(); ++v)
        pairs.push_back({{"from", v}, {"to", f[v]}, {"from_label", from.label(v)}, {"to_label", to.label(f[v])}});
    return pairs;
}

auto map_text(const VertexMap & f, const Graph & from, const Graph & to) -> std::string
{
    std::ostringstream out;
    for (VertexId v = 0; v < f.domain_size(); ++v)
        out << from.label(v) << " -> " << to.label(f[v]) << "\n";
    return out.str();
}

auto provenance_json(const ProductGraph & p, const Graph & g, const Graph & h) -> json
{
    json vertices = json::array();
    for (VertexId id = 0; id < p.vertex_count(); ++id) {
        auto & x = p.vertices[id];
        json item{{"id", id}, {"class", "V" + std::to_string(product_class(x))}, {"u", first_coordinate(x)},
            {"text", describe(x, g, h)}};
        if (auto * v1 = std::get_if<ClassV1>(&x))
            item["a"] = v1->a;
        else if (auto * v3 = std::get_if<ClassV3>(&x))
            item["a"] = v3->a;
        else if (auto * v4 = std::get_if<ClassV4>(&x))
            item["e"] = {v4->e.first, v4->e.second};
        vertices.push_back(item);
    }
    json classes = json::object();
    for (int c = 0; c < 4; ++c)
        classes["V" + std::to_string(c + 1)] = p.class_index[static_cast<std::size_t>(c)];
    return {{"vertices", vertices}, {"classes", classes}};
}

auto association_json(const QuotientResult & q, const Graph & g) -> json
{
    json out = json::array();
    for (std::size_t i = 0; i < q.association.vertices.size(); ++i) {
        auto d = q.association.vertices[i];
        auto & tag = q.association.tags[i];
        json item{{"vertex", d}, {"label", g.label(d)}};
        switch (tag.kind) {
        case AssociationKind::None: item["kind"] = "none"; break;
        case AssociationKind::Vertex:
            item["kind"] = "vertex";
            item["with"] = {tag.a};
            break;
        case AssociationKind::Edge:
            item["kind"] = "edge";
            item["with"] = {tag.a, tag.b};
            break;
        }
        out.push_back(item);
    }
    return out;
}

auto pattern_kind(const std::string & kind) -> PatternKind
{
    if (kind == "grid")
        return PatternKind::Grid;
    if (kind == "wall")
        return PatternKind::Wall;
    throw InputError("family must be grid or wall, got " + kind);
}

// --- subcommands ---------------------------------------------------------

auto cmd_gen(const Options & o, Phases & ph) -> Outcome
{
    ph.start("generate");
    auto kind = pattern_kind(o.kind);
    auto g = kind == PatternKind::Grid ? make_grid(o.s, o.t) : make_wall(o.s, o.t);
    Outcome r;
    r.result = {{"family", o.kind}, {"s", o.s}, {"t", o.t}, {"treewidth", pattern_treewidth(kind, o.s, o.t)},
        {"graph", graph_json(g)}};
    ph.start("write");
    if (! o.output.empty()) {
        write_graph_file(o.output, g);
        r.result["output"] = o.output;
    } else {
        r.text = serialize_graph(g);
    }
    return r;
}

auto cmd_skeleton(const Options & o, Phases & ph) -> Outcome
{
    ph.start("generate");
    auto spec = pattern_kind(o.kind) == PatternKind::Grid ? grid_skeleton(o.s, o.t) : wall_skeleton(o.s, o.t);
    Outcome r;
    r.result = skeleton_json(spec);
    ph.start("write");
    if (! o.output.empty())
        write_text_file(o.output, r.result.dump(2) + "\n");
    else
        r.text = r.result.dump(2) + "\n";
    return r;
}

auto cmd_quotient(const Options & o, Phases & ph) -> Outcome
{
    ph.start("load");
    auto g = read_graph_file(o.graph);
    auto spec = load_skeleton(o.skel, g);
    ph.start("compute");
    auto q = quotient(g, spec);
    Outcome r;
    r.result = {{"quotient", graph_json(q.quotient)}, {"original", q.original}, {"association", association_json(q, g)},
        {"removed_frame", q.removed_frame}};
    ph.start("write");
    if (! o.output.empty())
        write_graph_file(o.output, q.quotient);
    else
        r.text = serialize_graph(q.quotient);
    return r;
}

auto cmd_product(const Options & o, Phases & ph) -> Outcome
{
    ph.start("load");
    auto g = read_graph_file(o.graph);
    auto spec = load_skeleton(o.skel, g);
    auto h = read_graph_file(o.target);
    auto chi = load_coloring(o.chi, h, g);
    ph.start("compute");
    auto p = build_product(g, spec, h, chi);
    Outcome r;
    r.result = {{"n", p.vertex_count()}, {"m", p.graph.edge_count()},
        {"class_sizes", {p.class_index[0].size(), p.class_index[1].size(), p.class_index[2].size(),
                            p.class_index[3].size()}}};
    ph.start("write");
    if (! o.provenance.empty())
        write_text_file(o.provenance, provenance_json(p, g, h).dump(2) + "\n");
    if (! o.output.empty())
        write_graph_file(o.output, p.graph);
    else
        r.text = serialize_graph(p.graph);
    return r;
}

auto cmd_solve(const Options & o, Phases & ph) -> Outcome
{
    ph.start("load");
    auto g = read_graph_file(o.graph);
    auto h = read_graph_file(o.target);
    auto cfg = search_config(o);
    std::optional<Coloring> chi;
    MapMode mode;
    if (o.mode == "hom")
        mode = MapMode::Homomorphism;
    else if (o.mode == "emb")
        mode = MapMode::Embedding;
    else if (o.mode == "colemb") {
        mode = MapMode::ColoredEmbedding;
        if (o.chi.empty())
            throw InputError("solve colemb needs --chi");
        chi = load_coloring(o.chi, h, g);
    } else {
        throw InputError("solve mode must be hom, emb or colemb");
    }

    ph.start("search");
    SearchResult res = mode == MapMode::Homomorphism ? find_homomorphism(g, h, cfg)
        : mode == MapMode::Embedding                 ? find_embedding(g, h, cfg)
                                                     : find_colored_embedding(g, h, *chi, cfg);
    Outcome r;
    r.status = status_name(res.status);
    r.result = {{"mode", o.mode}, {"status", r.status}, {"nodes", res.nodes}};
    if (res.found()) {
        auto check = verify_map(g, h, *res.map, mode, chi ? &*chi : nullptr);
        if (! check)
            throw Error("solver returned an invalid map: " + check.violation);
        r.result["map"] = map_json(*res.map, g, h);
        r.text = "found\n" + map_text(*res.map, g, h);
    } else {
        r.text = res.exhausted() ? "none\n" : "limit exceeded\n";
    }
    r.code = res.found() ? exit_yes : res.exhausted() ? exit_no : exit_limit;
    return r;
}

auto grid_corners_by_label(const Graph & g) -> std::vector<VertexId>
{
    std::size_t s = 0, t = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::size_t i = 0, j = 0;
        char open = 0, comma = 0, close = 0;
        std::istringstream in(g.label(v));
        if (! g.has_labels() || ! (in >> open >> i >> comma >> j >> close) || open != '(' || comma != ',' ||
            close != ')')
            throw InputError("--frame corners needs a grid with \"(i,j)\" labels");
        s = std::max(s, i);
        t = std::max(t, j);
    }
    std::vector<VertexId> out;
    for (auto [i, j] : {std::pair{std::size_t{1}, std::size_t{1}}, {s, std::size_t{1}}, {std::size_t{1}, t}, {s, t}}) {
        auto v = g.find_label("(" + std::to_string(i) + "," + std::to_string(j) + ")");
        if (! v)
            throw InputError("grid has no corner (" + std::to_string(i) + "," + std::to_string(j) + ")");
        out.push_back(*v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

auto frame_argument(const Options & o, const Graph & g) -> std::vector<VertexId>
{
    if (! o.skel.empty())
        return load_skeleton(o.skel, g).frame;
    if (o.frame == "corners")
        return grid_corners_by_label(g);
    if (o.frame.empty())
        throw InputError("check frame needs --skel or --frame");
    json arr = json::array();
    std::stringstream in(o.frame);
    for (std::string item; std::getline(in, item, ',');) {
        if (! item.empty() && std::all_of(item.begin(), item.end(), [](char c) { return std::isdigit(c); }))
            arr.push_back(std::stoull(item));
        else
            arr.push_back(item);
    }
    return vertex_list(arr, g, "--frame");
}

auto cmd_check(const Options & o, Phases & ph) -> Outcome
{
    ph.start("load");
    auto g = read_graph_file(o.graph);
    auto cfg = search_config(o);
    FrameOptions fopts;
    fopts.allow_above_guard = o.unsafe;
    Outcome r;

    if (o.mode == "frame") {
        auto frame = frame_argument(o, g);
        ph.start("search");
        auto v = is_frame(g, frame, cfg, fopts);
        r.status = frame_status_name(v.status);
        r.result = {{"frame", frame}, {"status", r.status}, {"nodes", v.nodes}};
        if (v.witness)
            r.result["witness"] = map_json(*v.witness, g, g);
        r.text = r.status + "\n";
        r.code = v.status == FrameStatus::Frame ? exit_yes : v.status == FrameStatus::NotFrame ? exit_no : exit_limit;
        return r;
    }
    if (o.skel.empty())
        throw InputError("check " + o.mode + " needs --skel");
    auto spec = load_skeleton(o.skel, g);

    if (o.mode == "skeleton") {
        ph.start("search");
        auto rep = is_skeleton(g, spec.frame, spec.contracted, cfg, fopts);
        r.status = rep.holds() ? "skeleton" : rep.indeterminate() ? "indeterminate" : "not-skeleton";
        r.result = {{"status", r.status}, {"S1", frame_status_name(rep.s1.status)}, {"S2", rep.s2}, {"S3", rep.s3},
            {"problems", rep.problems}};
        std::ostringstream text;
        text << r.status << "\nS1 " << frame_status_name(rep.s1.status) << "\nS2 " << (rep.s2 ? "holds" : "fails")
             << "\nS3 " << (rep.s3 ? "holds" : "fails") << "\n";
        r.text = text.str();
        r.code = rep.holds() ? exit_yes : rep.indeterminate() ? exit_limit : exit_no;
        return r;
    }
    if (o.mode == "rigid") {
        ph.start("search");
        RigidityVerdict v;
        if (o.exhaustive) {
            RigidityOptions ropts;
            ropts.sorted_colorings = o.sorted_colorings;
            ropts.max_h = o.max_h;
            if (o.unsafe)
                ropts.size_guard = std::numeric_limits<std::size_t>::max();
            v = is_rigid_exhaustive(g, spec, cfg, ropts);
        } else {
            auto max_h = o.max_h.value_or(2 * g.vertex_count());
            v = rigidity_random_search(g, spec, o.samples, o.seed, max_h, cfg);
        }
        r.status = rigidity_status_name(v.status);
        r.result = {{"status", r.status}, {"search_bound", v.search_bound}, {"instances", v.instances},
            {"distinct_products", v.distinct_products}, {"samples", v.samples}, {"seed", v.seed}};
        r.text = r.status + "\n";
        if (v.counterexample) {
            auto & c = *v.counterexample;
            auto p = build_product(g, spec, c.h, c.chi);
            r.result["counterexample"] = {{"h", graph_json(c.h)}, {"chi", c.chi.color_of},
                {"missed", c.missed}, {"embedding", map_json(c.embedding, g, p.graph)},
                {"check", verify_counterexample(g, spec, c)}};
            r.text += "H:\n" + serialize_graph(c.h) + "missed (" + g.label(c.missed) + "," + g.label(c.missed) + ")\n";
        }
        r.code = v.status == RigidityStatus::Counterexample ? exit_no
            : v.status == RigidityStatus::Indeterminate     ? exit_limit
                                                            : exit_yes;
        return r;
    }
    throw InputError("check target must be frame, skeleton or rigid");
}

auto cmd_reduce(const Options & o, Phases & ph) -> Outcome
{
    ph.start("load");
    auto g = read_graph_file(o.graph);
    auto h = read_graph_file(o.target);
    auto chi = load_coloring(o.chi, h, g);
    if (o.output.empty())
        throw InputError("reduce needs -o <directory>");
    std::filesystem::create_directories(o.output);
    auto dir = std::filesystem::path(o.output);
    Outcome r;

    if (o.mode == "hom-to-colemb") {
        ph.start("reduce");
        auto inst = hom_to_colemb(g, h, chi);
        ph.start("write");
        write_graph_file((dir / "pattern.g").string(), inst.pattern);
        write_graph_file((dir / "target.g").string(), inst.target);
        write_text_file((dir / "chi.json").string(), json(inst.chi.color_of).dump() + "\n");
        json prov{{"reduction", "hom-to-colemb"}, {"chi", inst.chi.color_of}, {"labels", inst.target.labels()}};
        write_text_file((dir / "provenance.json").string(), prov.dump(2) + "\n");
        r.result = {{"pattern_vertices", inst.pattern.vertex_count()}, {"target_vertices", inst.target.vertex_count()},
            {"target_edges", inst.target.edge_count()}, {"output", o.output}};
        return r;
    }
    if (o.mode == "colemb-to-emb") {
        ph.start("reduce");
        auto family = pattern_kind(o.family);
        auto inst = colemb_to_emb(family, ColEmbInstance{g, h, chi});
        auto & prov = *inst.provenance;
        ph.start("write");
        write_graph_file((dir / "pattern.g").string(), inst.pattern);
        write_graph_file((dir / "target.g").string(), inst.target);
        json doc = provenance_json(prov.product, inst.pattern, prov.h);
        doc["reduction"] = "colemb-to-emb";
        doc["family"] = o.family;
        doc["s"] = prov.s;
        doc["t"] = prov.t;
        doc["skeleton"] = skeleton_json(prov.skeleton);
        doc["chi"] = prov.chi.color_of;
        doc["pattern_to_quotient"] = prov.pattern_to_quotient.image;
        write_text_file((dir / "provenance.json").string(), doc.dump(2) + "\n");
        r.result = {{"family", o.family}, {"s", prov.s}, {"t", prov.t}, {"pattern_vertices", inst.pattern.vertex_count()},
            {"target_vertices", inst.target.vertex_count()}, {"target_edges", inst.target.edge_count()},
            {"output", o.output}};
        return r;
    }
    throw InputError("reduce mode must be hom-to-colemb or colemb-to-emb");
}

auto cmd_export(const Options & o, Phases & ph) -> Outcome
{
    ph.start("load");
    auto g = read_graph_file(o.graph);
    Outcome r;
    ph.start("render");
    std::string doc;
    if (o.mode == "dot") {
        std::vector<DotClass> classes;
        if (! o.skel.empty()) {
            auto spec = load_skeleton(o.skel, g);
            classes.push_back({"F", spec.frame, "black"});
            classes.push_back({"D", spec.contracted, "lightgray"});
        }
        doc = to_dot(g, classes);
    } else if (o.mode == "json") {
        doc = graph_json(g).dump(2) + "\n";
    } else {
        throw InputError("export format must be dot or json");
    }
    r.result = {{"format", o.mode}, {"bytes", doc.size()}};
    ph.start("write");
    if (! o.output.empty())
        write_text_file(o.output, doc);
    else
        r.text = doc;
    return r;
}

auto cmd_suite(const Options & o, Phases & ph) -> Outcome
{
    ph.start("suites");
    std::ostringstream lines;
    bool ok = run_suites(o.quick, o.seed, lines);
    Outcome r;
    r.status = ok ? "pass" : "fail";
    r.text = lines.str();
    json arr = json::array();
    std::istringstream in(r.text);
    for (std::string line; std::getline(in, line);)
        arr.push_back(line);
    r.result = {{"quick", o.quick}, {"lines", arr}, {"passed", ok}};
    r.code = ok ? exit_yes : exit_no;
    return r;
}

} // namespace

auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
{
    Options o;
    CLI::App app{"Frames, skeletons, product graphs and embedding reductions over grids and walls", "gwemb"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_flag("--json", o.json_output, "Emit one JSON report on the output stream");
    app.add_option("--seed", o.seed, "Seed for every random choice")->capture_default_str();
    app.add_option("--workers", o.workers, "Parallel workers for search and sampling")->check(CLI::PositiveNumber);

    auto limits = [&](CLI::App * sub) {
        sub->add_option("--limit-nodes", o.limit_nodes, "Search node budget")->check(CLI::PositiveNumber);
        sub->add_option("--timeout", o.timeout, "Search time budget in seconds");
        sub->add_option("--order", o.order, "Variable order: mrv or bfs");
    };

    auto gen = app.add_subcommand("gen", "Generate a grid or wall graph");
    gen->add_option("kind", o.kind, "grid | wall")->required();
    gen->add_option("--s", o.s, "Width")->required();
    gen->add_option("--t", o.t, "Height")->required();
    gen->add_option("-o,--output", o.output, "Graph file to write");

    auto skel = app.add_subcommand("skeleton", "Emit the grid or wall skeleton as JSON");
    skel->add_option("kind", o.kind, "grid | wall")->required();
    skel->add_option("--s", o.s, "Width")->required();
    skel->add_option("--t", o.t, "Height")->required();
    skel->add_option("-o,--output", o.output, "JSON file to write");

    auto quot = app.add_subcommand("quotient", "Compute (G \\ F) / D");
    quot->add_option("-g,--graph", o.graph, "Host graph")->required();
    quot->add_option("--skel", o.skel, "Skeleton JSON")->required();
    quot->add_option("-o,--output", o.output, "Quotient graph file");

    auto prod = app.add_subcommand("product", "Build P(G, S, H, chi)");
    prod->add_option("-g,--graph", o.graph, "Host graph G")->required();
    prod->add_option("--skel", o.skel, "Skeleton JSON")->required();
    prod->add_option("-H,--target", o.target, "Graph H")->required();
    prod->add_option("--chi", o.chi, "Coloring of V(H) with vertices of G")->required();
    prod->add_option("-o,--output", o.output, "Product graph file");
    prod->add_option("--provenance", o.provenance, "Provenance JSON file");

    auto solve_cmd = app.add_subcommand("solve", "Search for a homomorphism or embedding");
    solve_cmd->add_option("mode", o.mode, "hom | emb | colemb")->required();
    solve_cmd->add_option("-g,--graph", o.graph, "Pattern graph")->required();
    solve_cmd->add_option("-H,--target", o.target, "Target graph")->required();
    solve_cmd->add_option("--chi", o.chi, "Coloring of the target (colemb)");
    limits(solve_cmd);

    auto check = app.add_subcommand("check", "Check a frame, skeleton or rigidity");
    check->add_option("what", o.mode, "frame | skeleton | rigid")->required();
    check->add_option("-g,--graph", o.graph, "Host graph")->required();
    check->add_option("--skel", o.skel, "Skeleton JSON");
    check->add_option("--frame", o.frame, "Frame: 'corners' or a comma list of ids/labels");
    check->add_flag("--unsafe", o.unsafe, "Allow exact checks above the size guard");
    check->add_flag("--exhaustive", o.exhaustive, "Exhaustive rigidity check");
    check->add_flag("--sorted-colorings", o.sorted_colorings, "Visit only sorted colorings (exhaustive mode)");
    check->add_option("--samples", o.samples, "Random rigidity samples")->capture_default_str();
    check->add_option("--max-h", o.max_h, "Largest |V(H)| to sample or enumerate");
    limits(check);

    auto reduce = app.add_subcommand("reduce", "Apply a reduction and write the instance");
    reduce->add_option("which", o.mode, "hom-to-colemb | colemb-to-emb")->required();
    reduce->add_option("--family", o.family, "grid | wall (colemb-to-emb)")->capture_default_str();
    reduce->add_option("-g,--graph", o.graph, "Pattern graph")->required();
    reduce->add_option("-H,--target", o.target, "Target graph")->required();
    reduce->add_option("--chi", o.chi, "Coloring of the target")->required();
    reduce->add_option("-o,--output", o.output, "Output directory")->required();

    auto exp = app.add_subcommand("export", "Export a graph as DOT or JSON");
    exp->add_option("format", o.mode, "dot | json")->required();
    exp->add_option("-g,--graph", o.graph, "Graph file")->required();
    exp->add_option("--skel", o.skel, "Skeleton JSON to shade F and D");
    exp->add_option("-o,--output", o.output, "Output file");

    auto suite = app.add_subcommand("suite", "Run the property suites of all modules");
    suite->add_flag("--quick", o.quick, "Smaller instance ranges");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_yes;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_yes;
    } catch (const CLI::ParseError & e) {
        err << "error: " << e.what() << "\n";
        if (o.json_output)
            out << json{{"command", args}, {"exit_code", exit_usage}, {"error", e.what()}}.dump() << "\n";
        return exit_usage;
    }

    Phases ph;
    Outcome r;
    std::string error;
    auto name = app.get_subcommands().front()->get_name();
    try {
        if (name == "gen")
            r = cmd_gen(o, ph);
        else if (name == "skeleton")
            r = cmd_skeleton(o, ph);
        else if (name == "quotient")
            r = cmd_quotient(o, ph);
        else if (name == "product")
            r = cmd_product(o, ph);
        else if (name == "solve")
            r = cmd_solve(o, ph);
        else if (name == "check")
            r = cmd_check(o, ph);
        else if (name == "reduce")
            r = cmd_reduce(o, ph);
        else if (name == "export")
            r = cmd_export(o, ph);
        else
            r = cmd_suite(o, ph);
    } catch (const LimitExceeded & e) {
        error = e.what();
        r.code = exit_limit;
        r.status = "limit-exceeded";
    } catch (const GuardExceeded & e) {
        error = e.what();
        if (name == "check")
            error += " (pass --unsafe to run anyway)";
        r.code = exit_usage;
        r.status = "error";
    } catch (const std::exception & e) {
        error = e.what();
        r.code = exit_usage;
        r.status = "error";
    }

    if (! error.empty())
        err << "error: " << error << "\n";
    if (o.json_output) {
        json report{{"command", args}, {"status", r.status}, {"exit_code", r.code}, {"timing_ms", ph.report()},
            {"result", r.result}};
        if (! error.empty())
            report["error"] = error;
        out << report.dump() << "\n";
    } else {
        out << r.text;
    }
    return r.code;
}

} // namespace gwemb::cli
