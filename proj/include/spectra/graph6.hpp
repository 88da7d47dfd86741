#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "spectra/graph.hpp"

namespace spectra {

/// Decodes one graph6 string. The ">>graph6<<" header and trailing line
/// terminators are accepted; anything else malformed raises ParseError with
/// the offending byte offset (counted from the start of `text`).
Graph parse_graph6(std::string_view text);

/// Encodes without header or newline.
std::string to_graph6(const Graph& g);

/// One graph per non-blank line.
std::vector<Graph> read_graph6_stream(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace spectra
