#include "hamlab/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>

namespace hamlab {

namespace {

[[noreturn]] void fail(long line_no, const std::string& what) {
    std::ostringstream os;
    os << "edge list, line " << line_no << ": " << what;
    throw EdgeListError(os.str());
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    return s;
}

// Parses "a b" with a single separating space run; both decimal non-negative.
std::optional<std::pair<long, long>> parse_pair(std::string_view s) {
    long a = 0, b = 0;
    const char* p = s.data();
    const char* end = s.data() + s.size();
    auto r1 = std::from_chars(p, end, a);
    if (r1.ec != std::errc{} || r1.ptr == end) return std::nullopt;
    p = r1.ptr;
    if (*p != ' ' && *p != '\t') return std::nullopt;
    while (p != end && (*p == ' ' || *p == '\t')) ++p;
    auto r2 = std::from_chars(p, end, b);
    if (r2.ec != std::errc{} || r2.ptr != end) return std::nullopt;
    return std::make_pair(a, b);
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string raw;
    long line_no = 0;
    long n = -1, m = -1;
    std::optional<Graph> g;
    long seen = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const auto pair = parse_pair(line);
        if (!pair) fail(line_no, "expected two decimal integers");
        if (n < 0) {
            n = pair->first;
            m = pair->second;
            if (n <= 0) fail(line_no, "vertex count must be positive");
            if (m < 0) fail(line_no, "negative edge count");
            g.emplace(static_cast<int>(n));
            continue;
        }
        const long u = pair->first, v = pair->second;
        if (seen == m) fail(line_no, "more edge lines than declared");
        if (u < 0 || v < 0 || u >= n || v >= n) fail(line_no, "vertex id out of range");
        if (u == v) fail(line_no, "self-loop");
        if (u > v) fail(line_no, "edges must be written with u < v");
        if (!g->add_edge(static_cast<int>(u), static_cast<int>(v))) fail(line_no, "duplicate edge");
        ++seen;
    }
    if (n < 0) throw EdgeListError("edge list: empty input");
    if (seen != m) {
        std::ostringstream os;
        os << "edge list: declared " << m << " edges, found " << seen;
        throw EdgeListError(os.str());
    }
    return *std::move(g);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw EdgeListError("cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g, const std::string& spec_comment) {
    if (!spec_comment.empty()) out << "# spec=" << spec_comment << "\n";
    out << g.order() << " " << g.edge_count() << "\n";
    for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

void write_edge_list_file(const std::string& path, const Graph& g,
                          const std::string& spec_comment) {
    std::ofstream out(path);
    if (!out) throw EdgeListError("cannot open " + path + " for writing");
    write_edge_list(out, g, spec_comment);
    if (!out.flush()) throw EdgeListError("write to " + path + " failed");
}

}  // namespace hamlab
