#pragma once

#include <charconv>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>

#include "p3vc/graph.hpp"

namespace p3vc {

struct parse_error : std::runtime_error {
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line)
    {
    }
    int line;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r'))
            ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r')
            ++j;
        if (j > i)
            out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline long long parse_int(std::string_view tok, int line)
{
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw parse_error(line, "expected an integer, got '" + std::string(tok) + "'");
    return value;
}

}  // namespace detail

/// Reads the "p edge n m" / "e u v" format (1-indexed endpoints, "c" comments).
inline graph parse_dimacs(std::istream& in)
{
    std::string text;
    int line_no = 0;
    bool have_header = false;
    long long n = 0, m = 0;
    std::vector<edge> edges;
    while (std::getline(in, text)) {
        ++line_no;
        auto tok = detail::split_ws(text);
        if (tok.empty() || tok[0] == "c")
            continue;
        if (tok[0] == "p") {
            if (have_header)
                throw parse_error(line_no, "duplicate problem line");
            if (tok.size() != 4 || tok[1] != "edge")
                throw parse_error(line_no, "malformed header, expected 'p edge <n> <m>'");
            n = detail::parse_int(tok[2], line_no);
            m = detail::parse_int(tok[3], line_no);
            if (n < 0 || m < 0)
                throw parse_error(line_no, "negative count in header");
            have_header = true;
        } else if (tok[0] == "e") {
            if (!have_header)
                throw parse_error(line_no, "edge line before header");
            if (tok.size() != 3)
                throw parse_error(line_no, "malformed edge line, expected 'e <u> <v>'");
            long long u = detail::parse_int(tok[1], line_no);
            long long v = detail::parse_int(tok[2], line_no);
            if (u < 1 || u > n || v < 1 || v > n)
                throw parse_error(line_no, "vertex index out of range");
            if (u == v)
                throw parse_error(line_no, "self-loop");
            edges.emplace_back(static_cast<vertex>(u - 1), static_cast<vertex>(v - 1));
        } else {
            throw parse_error(line_no, "unrecognized line type '" + std::string(tok[0]) + "'");
        }
    }
    if (!have_header)
        throw parse_error(line_no, "missing 'p edge' header");
    if (static_cast<long long>(edges.size()) != m)
        throw parse_error(line_no, "header declares " + std::to_string(m) + " edge lines, found " +
                                       std::to_string(edges.size()));
    return graph(static_cast<int>(n), edges);
}

inline graph parse_dimacs(std::string_view text)
{
    std::istringstream in{std::string(text)};
    return parse_dimacs(in);
}

/// Canonical form: header, then edges with u < v in lexicographic order.
inline std::string to_dimacs(const graph& g)
{
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

}  // namespace p3vc
