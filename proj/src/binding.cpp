#include "spectra/binding.hpp"

#include <algorithm>
#include <vector>

#include "spectra/error.hpp"

namespace spectra {

namespace {

// Enumerates, for each target size m = 1, 2, ..., the m-subsets of
// V - N(z) for every z, calling `visit(X, N(X))` on each complete subset.
// `prune(|N(prefix)|, m)` cuts a prefix; `visit` returns true to stop.
template <typename Prune, typename Visit>
std::size_t enumerate_admissible(const Graph& g, Prune&& prune, Visit&& visit) {
  const std::size_t n = g.order();
  std::vector<std::vector<Vertex>> universes(n);
  std::size_t largest = 0;
  for (Vertex z = 0; z < n; ++z) {
    universes[z] = g.neighbors(z).complement().to_vector();
    largest = std::max(largest, universes[z].size());
  }

  std::size_t nodes = 0;
  bool stop = false;
  std::vector<VertexSet> nbhd(largest + 1, VertexSet(n));
  std::vector<VertexSet> chosen(largest + 1, VertexSet(n));

  for (std::size_t m = 1; m <= largest && !stop; ++m) {
    for (Vertex z = 0; z < n && !stop; ++z) {
      const auto& cand = universes[z];
      if (cand.size() < m) continue;
      // Iterative DFS over increasing index sequences idx[0] < idx[1] < ...
      std::vector<std::size_t> idx(m, 0);
      std::size_t depth = 0;
      idx[0] = 0;
      while (!stop) {
        if (idx[depth] + (m - depth) > cand.size()) {
          if (depth == 0) break;
          --depth;
          ++idx[depth];
          continue;
        }
        ++nodes;
        const Vertex v = cand[idx[depth]];
        nbhd[depth + 1] = nbhd[depth];
        nbhd[depth + 1] |= g.neighbors(v);
        chosen[depth + 1] = chosen[depth];
        chosen[depth + 1].insert(v);
        if (prune(nbhd[depth + 1].count(), m)) {
          ++idx[depth];
          continue;
        }
        if (depth + 1 == m) {
          stop = visit(chosen[m], nbhd[m]);
          ++idx[depth];
          continue;
        }
        idx[depth + 1] = idx[depth] + 1;
        ++depth;
      }
    }
  }
  return nodes;
}

}  // namespace

BindingResult binding_number(const Graph& g, bool force) {
  if (g.order() > kExhaustiveBindingLimit && !force) {
    throw CapabilityError("exhaustive binding number is limited to n <= " +
                          std::to_string(kExhaustiveBindingLimit) + " (got n=" +
                          std::to_string(g.order()) + "); pass force to override");
  }
  BindingResult best;
  best.witness = VertexSet(g.order());
  std::int64_t best_num = 0, best_den = 1;

  auto prune = [&](std::size_t nbhd, std::size_t m) {
    return best.feasible &&
           compare_ratio(static_cast<std::int64_t>(nbhd), static_cast<std::int64_t>(m), best_num, best_den) >= 0;
  };
  auto visit = [&](const VertexSet& x, const VertexSet& nx) {
    const auto num = static_cast<std::int64_t>(nx.count());
    const auto den = static_cast<std::int64_t>(x.count());
    if (!best.feasible || compare_ratio(num, den, best_num, best_den) < 0) {
      best.feasible = true;
      best_num = num;
      best_den = den;
      best.witness = x;
    }
    return false;
  };
  best.nodes = enumerate_admissible(g, prune, visit);
  if (best.feasible) best.value = Rational(best_num, best_den);
  return best;
}

RBindingResult is_r_binding(const Graph& g, const Rational& r) {
  if (r.num() <= 0) throw UsageError("binding threshold must be positive (got " + r.to_string() + ")");
  RBindingResult result;
  auto prune = [&](std::size_t nbhd, std::size_t m) {
    return compare_ratio(static_cast<std::int64_t>(nbhd), static_cast<std::int64_t>(m), r.num(), r.den()) >= 0;
  };
  auto visit = [&](const VertexSet& x, const VertexSet&) {
    result.holds = false;
    result.violating_set = x;
    return true;
  };
  result.nodes = enumerate_admissible(g, prune, visit);
  return result;
}

}  // namespace spectra
