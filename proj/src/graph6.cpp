#include "spectree/graph6.hpp"

#include "spectree/errors.hpp"

#include <fstream>
#include <istream>

namespace spectree {

namespace {

constexpr std::size_t small_limit = 62;
constexpr std::size_t medium_limit = 258047;
constexpr std::size_t large_limit = 68719476735ULL;

void put_size(std::string& out, std::size_t n)
{
    if (n <= small_limit) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= medium_limit) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else if (n <= large_limit) {
        out.append("~~");
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    } else {
        throw invalid_parameter("graph too large for graph6");
    }
}

int sextet(std::string_view line, std::size_t pos)
{
    if (pos >= line.size())
        throw parse_error("graph6 line truncated", pos);
    auto c = static_cast<unsigned char>(line[pos]);
    if (c < 63 || c > 126)
        throw parse_error("byte " + std::to_string(c) + " outside printable graph6 range 63..126", pos);
    return c - 63;
}

} // namespace

std::string encode_graph6(const graph& g)
{
    const std::size_t n = g.order();
    std::string out;
    put_size(out, n);
    int acc = 0;
    int filled = 0;
    for (vertex j = 1; j < n; ++j)
        for (vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

graph decode_graph6(std::string_view line)
{
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.starts_with(">>graph6<<"))
        line.remove_prefix(10);
    if (line.empty())
        throw parse_error("empty graph6 line", 0);

    std::size_t pos = 0;
    std::size_t n = 0;
    if (line[0] != '~') {
        n = static_cast<std::size_t>(sextet(line, 0));
        pos = 1;
    } else if (line.size() > 1 && line[1] == '~') {
        for (std::size_t i = 2; i < 8; ++i)
            n = (n << 6) | static_cast<std::size_t>(sextet(line, i));
        pos = 8;
    } else {
        for (std::size_t i = 1; i < 4; ++i)
            n = (n << 6) | static_cast<std::size_t>(sextet(line, i));
        pos = 4;
    }

    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t body = (bits + 5) / 6;
    if (line.size() < pos + body)
        throw parse_error("graph6 line truncated: expected " + std::to_string(body) + " data bytes for n=" + std::to_string(n), line.size());
    if (line.size() > pos + body)
        throw parse_error("trailing bytes after graph6 data", pos + body);

    graph g(n);
    std::size_t bit = 0;
    for (vertex j = 1; j < n; ++j)
        for (vertex i = 0; i < j; ++i, ++bit) {
            int value = sextet(line, pos + bit / 6);
            if ((value >> (5 - bit % 6)) & 1)
                g.add_edge(i, j);
        }
    if (bits % 6 != 0) {
        int last = sextet(line, pos + body - 1);
        if (last & ((1 << (6 - bits % 6)) - 1))
            throw parse_error("non-zero padding bits", pos + body - 1);
    }
    return g;
}

std::vector<graph> read_graph6_stream(std::istream& in)
{
    std::vector<graph> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        try {
            out.push_back(decode_graph6(line));
        } catch (const parse_error& e) {
            throw parse_error("line " + std::to_string(lineno) + ": " + e.what(), e.offset());
        }
    }
    return out;
}

std::vector<graph> read_graph6_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw error("cannot open graph6 file '" + path + "'");
    return read_graph6_stream(in);
}

} // namespace spectree
