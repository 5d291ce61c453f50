#pragma once

#include "spectree/graph.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace spectree {

/// graph6 text for g, without trailing newline.
std::string encode_graph6(const graph& g);

/// Parses one graph6 line (a trailing '\n' or "\r\n" is tolerated).
/// Throws parse_error carrying the byte offset of the first bad byte.
graph decode_graph6(std::string_view line);

/// Reads every non-empty line of a graph6 stream. Errors report the line number.
std::vector<graph> read_graph6_stream(std::istream& in);
std::vector<graph> read_graph6_file(const std::string& path);

} // namespace spectree
