#include <gwemb/error.hpp>
#include <gwemb/skeleton.hpp>

#include <algorithm>

namespace gwemb {

auto frame_status_name(FrameStatus s) -> std::string
{
    switch (s) {
    case FrameStatus::Frame: return "frame";
    case FrameStatus::NotFrame: return "not-frame";
    case FrameStatus::Indeterminate: return "indeterminate";
    }
    return "unknown";
}

auto is_frame(const Graph & g, std::span<const VertexId> frame, const SearchConfig & cfg, const FrameOptions & options)
    -> FrameVerdict
{
    if (g.vertex_count() > options.size_guard && ! options.allow_above_guard)
        throw GuardExceeded("exact frame check limited to " + std::to_string(options.size_guard) +
            " vertices, got " + std::to_string(g.vertex_count()));
    auto r = find_endo_counterexample(g, frame, cfg);
    FrameVerdict v;
    v.nodes = r.nodes;
    switch (r.status) {
    case SearchStatus::Found:
        v.status = FrameStatus::NotFrame;
        v.witness = std::move(r.map);
        break;
    case SearchStatus::Exhausted: v.status = FrameStatus::Frame; break;
    case SearchStatus::LimitExceeded: v.status = FrameStatus::Indeterminate; break;
    }
    return v;
}

auto is_skeleton(const Graph & g, std::span<const VertexId> frame, std::span<const VertexId> contracted,
    const SearchConfig & cfg, const FrameOptions & options) -> SkeletonReport
{
    std::size_t n = g.vertex_count();
    std::vector<char> in_f(n, 0);
    for (auto v : frame) {
        if (v >= n)
            throw InputError("frame vertex " + std::to_string(v) + " out of range");
        in_f[v] = 1;
    }
    for (auto v : contracted)
        if (v >= n)
            throw InputError("contracted vertex " + std::to_string(v) + " out of range");

    SkeletonReport report;
    report.s2 = true;
    report.s3 = true;
    for (auto v : contracted) {
        if (in_f[v]) {
            report.s2 = false;
            report.problems.push_back("S2: " + g.label(v) + " is in both sets");
        }
        auto outside = std::count_if(g.neighbours(v).begin(), g.neighbours(v).end(), [&](VertexId w) { return ! in_f[w]; });
        if (outside > 2) {
            report.s3 = false;
            report.problems.push_back("S3: " + g.label(v) + " has " + std::to_string(outside) + " neighbours outside F");
        }
    }
    report.s1 = is_frame(g, frame, cfg, options);
    if (report.s1.status == FrameStatus::NotFrame)
        report.problems.push_back("S1: F is not a frame");
    else if (report.s1.status == FrameStatus::Indeterminate)
        report.problems.push_back("S1: frame search ran out of budget");
    return report;
}

} // namespace gwemb
