#include "enumerate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace enumerate {

namespace {

using Colours = std::vector<int>;

struct Dense {
  std::size_t n;
  std::vector<std::uint16_t> nb;  // neighbour bitmask per vertex
};

Dense dense(const spectra::Graph& g) {
  Dense d{g.order(), std::vector<std::uint16_t>(g.order(), 0)};
  for (std::size_t u = 0; u < d.n; ++u)
    for (std::size_t v = 0; v < d.n; ++v)
      if (g.adjacent(u, v)) d.nb[u] |= static_cast<std::uint16_t>(1u << v);
  return d;
}

// Colour refinement to the coarsest equitable colouring finer than c. Colours
// are ranks of (old colour, neighbour colour counts), so relabelling the
// graph relabels the result the same way.
void refine(const Dense& g, Colours& c) {
  const std::size_t n = g.n;
  for (;;) {
    std::vector<std::pair<std::vector<int>, std::size_t>> sig(n);
    const int k = *std::max_element(c.begin(), c.end()) + 1;
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<int> s(static_cast<std::size_t>(k) + 1, 0);
      s[0] = c[v];
      for (std::size_t u = 0; u < n; ++u)
        if (g.nb[v] >> u & 1u) ++s[static_cast<std::size_t>(c[u]) + 1];
      sig[v] = {std::move(s), v};
    }
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return sig[a].first < sig[b].first; });
    Colours next(n);
    int rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]].first != sig[order[i - 1]].first) ++rank;
      next[order[i]] = rank;
    }
    const int before = k, after = rank + 1;
    c = std::move(next);
    if (after == before) return;
  }
}

std::uint64_t leaf_key(const Dense& g, const Colours& c) {
  const std::size_t n = g.n;
  std::vector<std::size_t> at(n);
  for (std::size_t v = 0; v < n; ++v) at[static_cast<std::size_t>(c[v])] = v;
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) key = key << 1 | (g.nb[at[i]] >> at[j] & 1u);
  return key;
}

void search(const Dense& g, Colours c, std::uint64_t& best, bool& any) {
  refine(g, c);
  const std::size_t n = g.n;
  std::vector<int> size(n, 0);
  for (int x : c) ++size[static_cast<std::size_t>(x)];
  int target = -1;
  for (std::size_t x = 0; x < n; ++x) {
    if (size[x] > 1) {
      target = static_cast<int>(x);
      break;
    }
  }
  if (target < 0) {
    const std::uint64_t k = leaf_key(g, c);
    if (!any || k > best) best = k;
    any = true;
    return;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (c[v] != target) continue;
    Colours child(n);
    for (std::size_t u = 0; u < n; ++u) child[u] = 2 * c[u] + (u == v ? 0 : 1);
    search(g, std::move(child), best, any);
  }
}

std::vector<std::uint64_t> extend(std::size_t n, const std::vector<std::uint64_t>& smaller, bool connected) {
  std::unordered_set<std::uint64_t> seen;
  for (std::uint64_t key : smaller) {
    const spectra::Graph base = from_key(n - 1, key);
    for (std::uint32_t mask = connected ? 1 : 0; mask < (1u << (n - 1)); ++mask) {
      spectra::GraphBuilder gb(n);
      for (const auto& e : base.edges()) gb.add_edge(e.u, e.v);
      for (std::size_t v = 0; v + 1 < n; ++v)
        if (mask >> v & 1u) gb.add_edge(v, n - 1);
      seen.insert(canonical_key(gb.build()));
    }
  }
  std::vector<std::uint64_t> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::uint64_t canonical_key(const spectra::Graph& g) {
  if (g.order() > 11) throw std::invalid_argument("canonical_key supports n <= 11");
  const Dense d = dense(g);
  std::uint64_t best = 0;
  bool any = false;
  if (d.n == 0) return 0;
  search(d, Colours(d.n, 0), best, any);
  return best;
}

spectra::Graph from_key(std::size_t n, std::uint64_t key) {
  spectra::GraphBuilder gb(n);
  std::size_t bit = n * (n - 1) / 2;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      --bit;
      if (key >> bit & 1u) gb.add_edge(i, j);
    }
  }
  return gb.build();
}

std::vector<std::uint64_t> all_graphs(std::size_t n) {
  static std::map<std::size_t, std::vector<std::uint64_t>> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<std::uint64_t> out = n <= 1 ? std::vector<std::uint64_t>{0} : extend(n, all_graphs(n - 1), false);
  cache[n] = out;
  return out;
}

// Every connected graph keeps a connected subgraph after deleting a leaf of a
// spanning tree, so growing connected graphs by a vertex with at least one
// neighbour reaches all of them.
std::vector<std::uint64_t> connected_graphs(std::size_t n) {
  static std::map<std::size_t, std::vector<std::uint64_t>> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<std::uint64_t> out = n <= 1 ? std::vector<std::uint64_t>{0} : extend(n, connected_graphs(n - 1), true);
  cache[n] = out;
  return out;
}

}  // namespace enumerate
