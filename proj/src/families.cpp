#include "spectra/families.hpp"

#include <numeric>
#include <sstream>

#include "spectra/error.hpp"

namespace spectra {

namespace {

struct Check {
  const char* family;

  void require(bool ok, const std::string& constraint) const {
    if (!ok) throw UsageError(std::string(family) + " requires " + constraint);
  }
};

std::string got(const char* name, long long value) {
  return std::string(" (got ") + name + "=" + std::to_string(value) + ")";
}

long long as_signed(std::size_t v) { return static_cast<long long>(v); }

void check_odd_b(const Check& c, std::size_t b) {
  c.require(b >= 1 && b % 2 == 1, "b odd and b >= 1" + got("b", as_signed(b)));
}

void check_k(const Check& c, std::size_t k) { c.require(k >= 3, "k >= 3" + got("k", as_signed(k))); }

void append_repeat(std::vector<std::size_t>& parts, std::size_t count, std::size_t size) {
  parts.insert(parts.end(), count, size);
}

// Blocks: K_s, the first part, parts [1, split), parts [split, end).
Partition four_blocks(std::size_t s, const std::vector<std::size_t>& parts, std::size_t split) {
  const std::size_t n = s + std::accumulate(parts.begin(), parts.end(), std::size_t{0});
  Partition pi;
  pi.blocks.assign(4, VertexSet(n));
  Vertex v = 0;
  for (; v < s; ++v) pi.blocks[0].insert(v);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::size_t block = i == 0 ? 1 : (i < split ? 2 : 3);
    for (std::size_t j = 0; j < parts[i]; ++j) pi.blocks[block].insert(v++);
  }
  return pi;
}

}  // namespace

void validate_partition(std::size_t n, const Partition& pi) {
  VertexSet seen(n);
  for (std::size_t i = 0; i < pi.blocks.size(); ++i) {
    const auto& block = pi.blocks[i];
    if (block.size() != n) {
      throw UsageError("partition block " + std::to_string(i) + " indexes " +
                       std::to_string(block.size()) + " vertices, expected " + std::to_string(n));
    }
    if (block.empty()) throw UsageError("partition block " + std::to_string(i) + " is empty");
    if (block.intersects(seen)) {
      throw UsageError("partition block " + std::to_string(i) + " overlaps an earlier block");
    }
    seen |= block;
  }
  if (seen.count() != n) {
    throw UsageError("partition misses vertex " + std::to_string(seen.complement().first()));
  }
}

Partition singleton_partition(std::size_t n) {
  Partition pi;
  for (Vertex v = 0; v < n; ++v) pi.blocks.push_back(VertexSet(n, {v}));
  return pi;
}

Graph complete_graph(std::size_t n) {
  GraphBuilder builder(n);
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  builder.add_clique(all);
  return builder.build();
}

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph path_graph(std::size_t n) {
  GraphBuilder builder(n);
  for (Vertex v = 1; v < n; ++v) builder.add_edge(v - 1, v);
  return builder.build();
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw UsageError("cycle requires n >= 3" + got("n", as_signed(n)));
  GraphBuilder builder(n);
  for (Vertex v = 0; v < n; ++v) builder.add_edge(v, (v + 1) % n);
  return builder.build();
}

Graph star_graph(std::size_t t) {
  GraphBuilder builder(t + 1);
  for (Vertex v = 1; v <= t; ++v) builder.add_edge(0, v);
  return builder.build();
}

Graph clique_join(std::size_t s, const std::vector<std::size_t>& parts) {
  const Check c{"clique_join"};
  c.require(s >= 1, "s >= 1" + got("s", as_signed(s)));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    c.require(parts[i] >= 1, "every part size >= 1 (part " + std::to_string(i) + " is 0)");
  }
  const std::size_t n = s + std::accumulate(parts.begin(), parts.end(), std::size_t{0});
  c.require(n <= kMaxVertices, "total order <= " + std::to_string(kMaxVertices) + got("n", as_signed(n)));

  GraphBuilder builder(n);
  std::vector<Vertex> block(s);
  std::iota(block.begin(), block.end(), Vertex{0});
  builder.add_clique(block);
  Vertex next = s;
  for (std::size_t size : parts) {
    std::vector<Vertex> members(size);
    std::iota(members.begin(), members.end(), next);
    builder.add_clique(members);
    for (Vertex u = 0; u < s; ++u) {
      for (Vertex v : members) builder.add_edge(u, v);
    }
    next += size;
  }
  return builder.build();
}

Partition clique_join_partition(std::size_t s, const std::vector<std::size_t>& parts) {
  const std::size_t n = s + std::accumulate(parts.begin(), parts.end(), std::size_t{0});
  Partition pi;
  pi.blocks.emplace_back(n);
  Vertex v = 0;
  for (; v < s; ++v) pi.blocks[0].insert(v);
  for (std::size_t size : parts) {
    VertexSet block(n);
    for (std::size_t j = 0; j < size; ++j) block.insert(v++);
    pi.blocks.push_back(block);
  }
  return pi;
}

std::vector<std::size_t> extremal_odd_factor_parts(std::size_t n, std::size_t b) {
  const Check c{"extremal_odd_factor"};
  check_odd_b(c, b);
  c.require(n % 2 == 0, "n even" + got("n", as_signed(n)));
  c.require(n >= b + 5, "n - b - 4 >= 1" + got("n", as_signed(n)));
  std::vector<std::size_t> parts{n - b - 4, 3};
  append_repeat(parts, b, 1);
  return parts;
}

std::vector<std::size_t> extremal_ktree_parts(std::size_t n, std::size_t k) {
  const Check c{"extremal_ktree"};
  check_k(c, k);
  c.require(n >= k + 4, "n - k - 3 >= 1" + got("n", as_signed(n)));
  std::vector<std::size_t> parts{n - k - 3, 2, 2};
  append_repeat(parts, k - 2, 1);
  return parts;
}

std::vector<std::size_t> g2_odd_factor_parts(std::size_t n, std::size_t b, std::size_t s) {
  const Check c{"g2_odd_factor"};
  check_odd_b(c, b);
  c.require(s >= 1, "s >= 1" + got("s", as_signed(s)));
  c.require(n >= (b + 1) * s + 6, "n >= (b+1)s+6 = " + std::to_string((b + 1) * s + 6) +
                                      got("n", as_signed(n)));
  std::vector<std::size_t> parts{n - (b + 1) * s - 3, 3};
  append_repeat(parts, b * s, 1);
  return parts;
}

std::vector<std::size_t> g2_ktree_parts(std::size_t n, std::size_t k, std::size_t s) {
  const Check c{"g2_ktree"};
  check_k(c, k);
  c.require(s >= 1, "s >= 1" + got("s", as_signed(s)));
  c.require(n >= (k - 1) * s + 6, "n >= (k-1)s+6 = " + std::to_string((k - 1) * s + 6) +
                                      got("n", as_signed(n)));
  std::vector<std::size_t> parts{n - (k - 1) * s - 4, 2, 2};
  append_repeat(parts, (k - 2) * s, 1);
  return parts;
}

Graph extremal_odd_factor(std::size_t n, std::size_t b) {
  return clique_join(1, extremal_odd_factor_parts(n, b));
}

Graph extremal_ktree(std::size_t n, std::size_t k) { return clique_join(1, extremal_ktree_parts(n, k)); }

Graph g2_odd_factor(std::size_t n, std::size_t b, std::size_t s) {
  return clique_join(s, g2_odd_factor_parts(n, b, s));
}

Graph g2_ktree(std::size_t n, std::size_t k, std::size_t s) {
  return clique_join(s, g2_ktree_parts(n, k, s));
}

Graph comparison_graph_thm11(std::size_t n, std::size_t b) {
  const Check c{"comparison_graph_thm11"};
  check_odd_b(c, b);
  c.require(n >= 3 * b + 3, "n - 3b - 2 >= 1" + got("n", as_signed(n)));
  std::vector<std::size_t> parts{n - 3 * b - 2};
  append_repeat(parts, b, 3);
  parts.push_back(1);
  return clique_join(1, parts);
}

Graph comparison_graph_thm13(std::size_t n, std::size_t k) {
  const Check c{"comparison_graph_thm13"};
  check_k(c, k);
  c.require(n >= 2 * k + 1, "n - 2k >= 1" + got("n", as_signed(n)));
  std::vector<std::size_t> parts{n - 2 * k};
  append_repeat(parts, k - 1, 2);
  parts.push_back(1);
  return clique_join(1, parts);
}

Partition g2_odd_factor_partition(std::size_t n, std::size_t b, std::size_t s) {
  return four_blocks(s, g2_odd_factor_parts(n, b, s), 2);
}

Partition g2_ktree_partition(std::size_t n, std::size_t k, std::size_t s) {
  return four_blocks(s, g2_ktree_parts(n, k, s), 3);
}

Partition extremal_odd_factor_partition(std::size_t n, std::size_t b) {
  return four_blocks(1, extremal_odd_factor_parts(n, b), 2);
}

Partition extremal_ktree_partition(std::size_t n, std::size_t k) {
  return four_blocks(1, extremal_ktree_parts(n, k), 3);
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"odd-extremal", "ktree-extremal", "g2-odd", "g2-ktree",
                                              "thm11",        "thm13",          "clique-join"};
  return names;
}

Graph build_family(const FamilyRequest& r) {
  auto need = [&](const std::optional<std::size_t>& value, const char* flag) {
    if (!value) throw UsageError("family " + r.name + " needs --" + flag);
    return *value;
  };
  if (r.name == "odd-extremal") return extremal_odd_factor(need(r.n, "n"), need(r.b, "b"));
  if (r.name == "ktree-extremal") return extremal_ktree(need(r.n, "n"), need(r.k, "k"));
  if (r.name == "g2-odd") return g2_odd_factor(need(r.n, "n"), need(r.b, "b"), need(r.s, "s"));
  if (r.name == "g2-ktree") return g2_ktree(need(r.n, "n"), need(r.k, "k"), need(r.s, "s"));
  if (r.name == "thm11") return comparison_graph_thm11(need(r.n, "n"), need(r.b, "b"));
  if (r.name == "thm13") return comparison_graph_thm13(need(r.n, "n"), need(r.k, "k"));
  if (r.name == "clique-join") {
    if (r.parts.empty()) throw UsageError("family clique-join needs --parts");
    return clique_join(need(r.s, "s"), r.parts);
  }
  std::ostringstream msg;
  msg << "unknown family '" << r.name << "' (expected one of";
  for (const auto& name : family_names()) msg << ' ' << name;
  msg << ')';
  throw UsageError(msg.str());
}

}  // namespace spectra
