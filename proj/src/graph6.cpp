#include "spectra/graph6.hpp"

#include <fstream>

#include "spectra/error.hpp"

namespace spectra {

namespace {

constexpr char kBias = 63;
constexpr char kMaxPrintable = 126;
constexpr std::string_view kHeader = ">>graph6<<";

int sextet(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("graph6 input truncated", pos);
  const char c = text[pos];
  if (c < kBias || c > kMaxPrintable) {
    throw ParseError("graph6 byte out of range 63..126", pos);
  }
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kHeader)) pos = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  if (pos >= text.size()) throw ParseError("graph6 input is empty", pos);

  std::size_t n = 0;
  if (text[pos] != kMaxPrintable) {
    n = static_cast<std::size_t>(sextet(text, pos));
    pos += 1;
  } else if (pos + 1 < text.size() && text[pos + 1] == kMaxPrintable) {
    pos += 2;
    for (int i = 0; i < 6; ++i) n = (n << 6) | static_cast<std::size_t>(sextet(text, pos++));
  } else {
    pos += 1;
    for (int i = 0; i < 3; ++i) n = (n << 6) | static_cast<std::size_t>(sextet(text, pos++));
  }
  if (n > kMaxVertices) {
    throw ParseError("graph6 order " + std::to_string(n) + " exceeds supported maximum " +
                         std::to_string(kMaxVertices),
                     pos - 1);
  }

  for (std::size_t i = pos; i < text.size(); ++i) sextet(text, i);

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t body_bytes = (bits + 5) / 6;
  if (text.size() - pos != body_bytes) {
    const std::size_t where = text.size() - pos < body_bytes ? text.size() : pos + body_bytes;
    throw ParseError("graph6 body has " + std::to_string(text.size() - pos) + " bytes, expected " +
                         std::to_string(body_bytes),
                     where);
  }

  GraphBuilder builder(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int value = sextet(text, pos + k / 6);
      if ((value >> (5 - k % 6)) & 1) builder.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = pos + body_bytes - 1;
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if ((sextet(text, last) & pad_mask) != 0) throw ParseError("graph6 padding bits are not zero", last);
  }
  return builder.build();
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(kMaxPrintable);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kBias));
    }
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open graph6 file '" + path + "'");
  return read_graph6_stream(in);
}

}  // namespace spectra
