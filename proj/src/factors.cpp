#include "spectra/factors.hpp"

#include <algorithm>
#include <functional>

#include "spectra/error.hpp"
#include "subsets.hpp"

namespace spectra {

namespace {

void check_b(std::size_t b) {
  if (b < 1 || b % 2 == 0) throw UsageError("b must be odd and >= 1 (got b=" + std::to_string(b) + ")");
}

}  // namespace

std::optional<VertexSet> odd_factor_violating_set(const Graph& g, std::size_t b) {
  check_b(b);
  const std::size_t n = g.order();
  if (n == 0) return std::nullopt;
  const std::size_t cap = (n - 1) / (b + 1);
  std::optional<VertexSet> found;
  for (std::size_t size = 0; size <= cap && !found; ++size) {
    detail::for_each_subset(n, size, [&](const VertexSet& s) {
      if (odd_component_count(g, s) > b * size) {
        found = s;
        return true;
      }
      return false;
    });
  }
  return found;
}

FactorDecision has_odd_factor(const Graph& g, std::size_t b, bool construct) {
  FactorDecision d;
  d.b = b;
  d.violating_set = odd_factor_violating_set(g, b);
  d.exists = !d.violating_set;
  if (d.violating_set) d.odd_count = odd_component_count(g, *d.violating_set);
  if (d.exists && construct) d.factor_edges = construct_odd_factor_tiny(g, b);
  return d;
}

std::optional<std::vector<Edge>> construct_odd_factor_tiny(const Graph& g, std::size_t b,
                                                           std::size_t max_edges) {
  check_b(b);
  const auto edges = g.edges();
  if (edges.size() > max_edges) {
    throw CapabilityError("exhaustive factor construction is limited to " + std::to_string(max_edges) +
                          " edges (got " + std::to_string(edges.size()) + ")");
  }
  const std::size_t n = g.order();
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 0) return std::nullopt;
  }

  // Once the last edge at v is decided, deg_F(v) is final and must be odd.
  std::vector<std::size_t> last(n, 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    last[edges[i].u] = std::max(last[edges[i].u], i);
    last[edges[i].v] = std::max(last[edges[i].v], i);
  }
  std::vector<std::size_t> deg(n, 0);
  std::vector<bool> take(edges.size(), false);

  auto settled_ok = [&](std::size_t i) {
    for (Vertex v : {edges[i].u, edges[i].v}) {
      if (last[v] == i && deg[v] % 2 == 0) return false;
    }
    return true;
  };

  std::function<bool(std::size_t)> search = [&](std::size_t i) {
    if (i == edges.size()) return true;
    const Edge& e = edges[i];
    if (deg[e.u] < b && deg[e.v] < b) {
      ++deg[e.u];
      ++deg[e.v];
      take[i] = true;
      if (settled_ok(i) && search(i + 1)) return true;
      take[i] = false;
      --deg[e.u];
      --deg[e.v];
    }
    return settled_ok(i) && search(i + 1);
  };

  if (!search(0)) return std::nullopt;
  std::vector<Edge> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (take[i]) out.push_back(edges[i]);
  }
  return out;
}

bool is_odd_factor(const Graph& g, const std::vector<Edge>& edges, std::size_t b) {
  std::vector<std::size_t> deg(g.order(), 0);
  std::vector<Edge> seen;
  for (Edge e : edges) {
    if (e.u >= g.order() || e.v >= g.order() || !g.adjacent(e.u, e.v)) return false;
    if (e.u > e.v) std::swap(e.u, e.v);
    seen.push_back(e);
    ++deg[e.u];
    ++deg[e.v];
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  return std::all_of(deg.begin(), deg.end(), [&](std::size_t d) { return d % 2 == 1 && d <= b; });
}

}  // namespace spectra
