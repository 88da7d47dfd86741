#include "spectra/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <map>
#include <mutex>
#include <random>
#include <thread>

#include "spectra/binding.hpp"
#include "spectra/error.hpp"
#include "spectra/factors.hpp"
#include "spectra/families.hpp"
#include "spectra/graph6.hpp"
#include "spectra/isomorphism.hpp"
#include "spectra/ktree.hpp"
#include "spectra/rational.hpp"
#include "spectra/spectral.hpp"

namespace spectra {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

// Runs fn(i) for i in [0, count) on the worker pool. Each index is handled by
// exactly one worker, so callers write results into per-index slots.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const std::size_t workers = std::min(worker_count(), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

json set_json(const VertexSet& s) { return s.to_vector(); }

// Portable draws so reports do not depend on the standard library's
// distribution implementations.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }
std::size_t below(std::mt19937_64& rng, std::size_t m) { return static_cast<std::size_t>(rng() % m); }

std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[below(rng, i)]);
  return perm;
}

double rho_of(const Graph& g) { return spectral_radius(g).rho; }

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

Rational eval(const IntPolynomial& p, std::int64_t x) { return p.evaluate(Rational(x)); }

// Aggregates many evaluations of the same claim into one check.
class Tally {
 public:
  void record(const std::string& name, bool ok, const json& where) {
    auto it = index_.find(name);
    if (it == index_.end()) {
      it = index_.emplace(name, entries_.size()).first;
      entries_.push_back({name, 0, json::array()});
    }
    Entry& e = entries_[it->second];
    ++e.evaluated;
    if (!ok && e.failures.size() < kMaxListed) e.failures.push_back(where);
    if (!ok) ++e.failed;
  }

  void flush(VerificationReport& report) const {
    for (const Entry& e : entries_) {
      report.add(e.name, e.failed == 0, {{"evaluated", e.evaluated}, {"failed", e.failed}, {"failures", e.failures}});
    }
  }

 private:
  static constexpr std::size_t kMaxListed = 20;
  struct Entry {
    std::string name;
    std::size_t evaluated = 0;
    json failures;
    std::size_t failed = 0;
  };
  std::vector<Entry> entries_;
  std::map<std::string, std::size_t> index_;
};

struct Outcome {
  std::string name;
  bool ok;
  json where;
};

}  // namespace

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void VerificationReport::add(std::string name, bool passed, json witness) {
  checks.push_back({std::move(name), passed, std::move(witness)});
}

void VerificationReport::absorb(VerificationReport other) {
  for (auto& g : other.grid) grid.push_back(std::move(g));
  for (auto& c : other.checks) checks.push_back(std::move(c));
  for (auto& n : other.notes) {
    if (std::find(notes.begin(), notes.end(), n) == notes.end()) notes.push_back(std::move(n));
  }
}

json VerificationReport::to_json() const {
  json out;
  out["theorem_id"] = theorem_id;
  out["grid"] = grid;
  json cs = json::array();
  for (const Check& c : checks) {
    cs.push_back({{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"witness", c.witness}});
  }
  out["checks"] = cs;
  out["rng_seed"] = rng_seed;
  out["runtime_ms"] = runtime_ms;
  out["notes"] = notes;
  return out;
}

std::size_t worker_count() {
  if (const char* env = std::getenv("SPECTRA_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

IntPolynomial ineq_f(std::int64_t n, std::int64_t b, std::int64_t s) {
  const std::int64_t c3 = -b;
  const std::int64_t c2 = b * s + 2 * b + 3;
  const std::int64_t c1 =
      -(b * s * n + b * n + 3 * n - (b * b + b) * s * s - (b * b + 6 * b + 3) * s - b * b - 8 * b - 15);
  const std::int64_t c0 =
      2 * b * s * n + 2 * b * n - (2 * b * b + 2 * b) * s * s - (2 * b * b + 10 * b) * s - 2 * b * b - 10 * b;
  return IntPolynomial({c0, c1, c2, c3});
}

IntPolynomial ineq_g(std::int64_t b, std::int64_t s) {
  const std::int64_t b2 = b * b, b3 = b2 * b, b4 = b3 * b;
  const std::int64_t c3 = -b;
  const std::int64_t c2 = 3 * b2 + 13 * b;
  const std::int64_t c1 = (b2 + b) * s * s + (4 * b + 3) * s - 3 * b3 - 26 * b2 - 53 * b + 3;
  const std::int64_t c0 =
      -(b3 + 7 * b2 + 6 * b) * s * s - (4 * b2 + 21 * b + 12) * s + b4 + 13 * b3 + 53 * b2 + 63 * b - 12;
  return IntPolynomial({c0, c1, c2, c3});
}

IntPolynomial ineq_h(std::int64_t b) {
  const std::int64_t b2 = b * b, b3 = b2 * b, b4 = b3 * b;
  const std::int64_t c3 = -b2 * (b + 1) * (b + 1);
  const std::int64_t c2 = (b + 1) * (3 * b3 - 3 * b2 - b + 3);
  const std::int64_t c1 = -3 * b4 + 7 * b3 + b2 + b + 9;
  const std::int64_t c0 = b4 - 5 * b3 + 5 * b2 - 3 * b + 6;
  return IntPolynomial({c0, c1, c2, c3});
}

IntPolynomial ineq_phi(std::int64_t n, std::int64_t k) {
  return IntPolynomial({n * n - 10 * n + 25, 9 * k - 10 - 2 * (k - 2) * n, k * (k - 2)});
}

InequalityFns inequality_functions(std::int64_t n, std::int64_t b, std::int64_t k, std::int64_t s) {
  return {ineq_f(n, b, s), ineq_g(b, s), ineq_h(b), ineq_phi(n, k)};
}

namespace {

const char* kNumberingNote =
    "odd [1,b]-factor suite is labelled 1.2 after the statement it checks; the proof it follows is headed "
    "'Theorem 1.3'";

void require_odd_factor_params(std::size_t n, std::size_t b) {
  if (b < 1 || b % 2 == 0) throw UsageError("theorem 1.2 requires b odd and b >= 1 (got b=" + std::to_string(b) + ")");
  if (n % 2 != 0) throw UsageError("theorem 1.2 requires n even (got n=" + std::to_string(n) + ")");
  const std::size_t lo = std::max<std::size_t>(12, 2 * b + 8);
  if (n < lo) {
    throw UsageError("theorem 1.2 requires n >= max{12, 2b+8} = " + std::to_string(lo) +
                     " (got n=" + std::to_string(n) + ")");
  }
}

void require_ktree_params(std::size_t n, std::size_t k) {
  if (k < 3) throw UsageError("theorem 1.4 requires k >= 3 (got k=" + std::to_string(k) + ")");
  if (n < 2 * k + 22) {
    throw UsageError("theorem 1.4 requires n >= 2k+22 = " + std::to_string(2 * k + 22) +
                     " (got n=" + std::to_string(n) + ")");
  }
}

}  // namespace

VerificationReport verify_sharpness_odd_factor(std::size_t n, std::size_t b) {
  require_odd_factor_params(n, b);
  const auto start = Clock::now();
  VerificationReport r;
  r.theorem_id = "1.2";
  r.grid.push_back({{"n", n}, {"b", b}});
  r.notes.push_back(kNumberingNote);

  const Graph g = extremal_odd_factor(n, b);
  const json at = {{"n", n}, {"b", b}, {"graph6", to_graph6(g)}};

  r.add("connected", is_connected(g), at);

  const BindingResult bind = binding_number(g, true);
  const Rational target(1, as_int(b));
  r.add("binding_number_is_1/b", bind.feasible && bind.value == target,
        {{"n", n}, {"b", b}, {"value", bind.value.to_string()}, {"expected", target.to_string()},
         {"witness", set_json(bind.witness)}});

  const FactorDecision fd = has_odd_factor(g, b);
  const VertexSet join_vertex(n, {0});
  const bool witness_ok = !fd.exists && fd.violating_set && *fd.violating_set == join_vertex && fd.odd_count == b + 2;
  json fw = {{"n", n}, {"b", b}, {"exists", fd.exists}, {"odd_count", fd.odd_count}, {"expected_odd_count", b + 2}};
  if (fd.violating_set) fw["violating_set"] = set_json(*fd.violating_set);
  r.add("no_odd_factor_join_vertex_witness", witness_ok, fw);

  const double rho = rho_of(g);
  const double lo = static_cast<double>(n - b - 4);
  const double root = largest_real_root(charpoly_b2(as_int(n), as_int(b), 1), lo);
  r.add("rho_equals_quotient_root", std::abs(rho - root) < 1e-8,
        {{"n", n}, {"b", b}, {"rho", rho}, {"root", root}, {"tolerance", 1e-8}});

  r.add("rho_exceeds_clique_bound", rho - lo > 1e-9, {{"n", n}, {"b", b}, {"rho", rho}, {"bound", lo}});

  r.runtime_ms = elapsed_ms(start);
  return r;
}

VerificationReport verify_sharpness_ktree(std::size_t n, std::size_t k, bool exact_cross_check, std::size_t budget) {
  require_ktree_params(n, k);
  const auto start = Clock::now();
  VerificationReport r;
  r.theorem_id = "1.4";
  r.grid.push_back({{"n", n}, {"k", k}});

  const Graph g = extremal_ktree(n, k);
  r.add("connected", is_connected(g), {{"n", n}, {"k", k}, {"graph6", to_graph6(g)}});

  const BindingResult bind = binding_number(g, true);
  const Rational target(1, as_int(k - 2));
  r.add("binding_number_is_1/(k-2)", bind.feasible && bind.value == target,
        {{"n", n}, {"k", k}, {"value", bind.value.to_string()}, {"expected", target.to_string()},
         {"witness", set_json(bind.witness)}});

  const KTreeDecision d = has_spanning_ktree(g, k, budget);
  const auto necessary = ktree_necessary_violating_set(g, k);
  const VertexSet join_vertex(n, {0});
  const std::size_t pieces = component_count_without(g, join_vertex);
  json kw = {{"n", n}, {"k", k}, {"status", to_string(d.status)}, {"method", d.method},
             {"components_without_join_vertex", pieces}, {"expected_components", k + 1}};
  if (d.violating_set) kw["violating_set"] = set_json(*d.violating_set);
  if (necessary) kw["necessary_witness"] = set_json(*necessary);
  r.add("no_spanning_ktree",
        d.status == KTreeStatus::no && necessary && *necessary == join_vertex && pieces == k + 1, kw);

  const double rho = rho_of(g);
  const double lo = static_cast<double>(n - k - 3);
  r.add("rho_exceeds_clique_bound", rho - lo > 1e-9, {{"n", n}, {"k", k}, {"rho", rho}, {"bound", lo}});

  const Partition pi = extremal_ktree_partition(n, k);
  json qw = {{"n", n}, {"k", k}, {"rho", rho}};
  bool quotient_ok = is_equitable(g, pi);
  if (quotient_ok) {
    const double perron = quotient_largest_eigenvalue(quotient(g, pi));
    qw["perron_root"] = perron;
    quotient_ok = std::abs(perron - rho) < 1e-8;
  }
  qw["equitable"] = is_equitable(g, pi);
  r.add("quotient_perron_root_equals_rho", quotient_ok, qw);

  if (exact_cross_check) {
    const ExactTreeResult ex = exact_spanning_ktree(g, k, budget);
    r.add("exact_search_concurs", ex.status == KTreeStatus::no,
          {{"n", n}, {"k", k}, {"status", to_string(ex.status)}, {"nodes", ex.nodes}, {"budget", budget}});
  }

  r.runtime_ms = elapsed_ms(start);
  return r;
}

namespace {

struct Sample {
  Graph graph;
  std::string origin;
};

Graph connected_er(std::size_t n, double p, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    GraphBuilder gb(n);
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (unit(rng) < p) gb.add_edge(u, v);
      }
    }
    Graph g = gb.build();
    if (is_connected(g)) return g;
  }
  return complete_graph(n);
}

Graph perturbed(const Graph& base, std::mt19937_64& rng) {
  const std::size_t n = base.order();
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const auto perm = random_permutation(n, rng);
    GraphBuilder gb(permute(base, perm));
    const std::size_t toggles = 1 + below(rng, 3);
    for (std::size_t t = 0; t < toggles; ++t) {
      const Vertex u = below(rng, n);
      Vertex v = below(rng, n - 1);
      if (v >= u) ++v;
      if (gb.has_edge(u, v)) gb.remove_edge(u, v);
      else gb.add_edge(u, v);
    }
    Graph g = gb.build();
    if (is_connected(g)) return g;
  }
  return base;
}

struct SampleVerdict {
  double rho = 0.0;
  bool threshold = false;
  bool hypothesis = false;
  bool evaluated = false;  // threshold and hypothesis both held
  bool conclusion = false;
  bool undecided = false;
  bool isomorphic = false;
  bool iso_timeout = false;
};

}  // namespace

VerificationReport verify_implication(ImplicationTheorem theorem, std::size_t n, std::size_t param,
                                      std::size_t samples, std::uint64_t seed) {
  const bool odd = theorem == ImplicationTheorem::odd_factor;
  if (odd) require_odd_factor_params(n, param);
  else require_ktree_params(n, param);
  if (n > 40) throw UsageError("implication sampling requires n <= 40 (got n=" + std::to_string(n) + ")");
  if (samples < 2) throw UsageError("implication sampling needs at least 2 samples");
  const auto start = Clock::now();

  VerificationReport r;
  r.theorem_id = odd ? "1.2" : "1.4";
  r.rng_seed = seed;
  r.grid.push_back(odd ? json{{"n", n}, {"b", param}} : json{{"n", n}, {"k", param}});
  if (odd) r.notes.push_back(kNumberingNote);

  const Graph extremal = odd ? extremal_odd_factor(n, param) : extremal_ktree(n, param);
  const double threshold = rho_of(extremal);
  const Rational r_bind = odd ? Rational(1, as_int(param)) : Rational(1, as_int(param - 2));

  // Draw everything up front on one generator so the sample set depends only
  // on the seed, whatever the worker count.
  std::mt19937_64 rng(seed);
  std::vector<Sample> pool;
  pool.push_back({permute(extremal, random_permutation(n, rng)), "extremal"});
  pool.push_back({complete_graph(n), "complete"});
  const double q = threshold / static_cast<double>(n - 1);
  const double p_lo = 0.5 * q;
  const double p_hi = std::min(0.99, 1.2 * q + 0.05);
  const std::size_t rest = samples - 2;
  const std::size_t er_count = (rest + 1) / 2;
  for (std::size_t i = 0; i < rest; ++i) {
    if (i % 2 == 0) {
      const std::size_t j = i / 2;
      const double p = er_count <= 1 ? p_hi : p_lo + (p_hi - p_lo) * static_cast<double>(j) / static_cast<double>(er_count - 1);
      pool.push_back({connected_er(n, p, rng), "erdos-renyi"});
    } else {
      pool.push_back({perturbed(extremal, rng), "perturbed-extremal"});
    }
  }

  std::vector<SampleVerdict> verdicts(pool.size());
  parallel_for(pool.size(), [&](std::size_t i) {
    const Graph& g = pool[i].graph;
    SampleVerdict& v = verdicts[i];
    v.rho = rho_of(g);
    v.threshold = v.rho >= threshold - 1e-9;
    v.hypothesis = is_r_binding(g, r_bind).holds;
    v.evaluated = v.threshold && v.hypothesis;
    if (!v.evaluated) return;
    if (odd) {
      v.conclusion = has_odd_factor(g, param).exists;
    } else {
      const KTreeStatus st = has_spanning_ktree(g, param).status;
      v.conclusion = st == KTreeStatus::yes;
      v.undecided = st == KTreeStatus::unknown;
    }
    if (!v.conclusion && !v.undecided) {
      try {
        v.isomorphic = are_isomorphic(g, extremal).isomorphic;
      } catch (const TimeoutError&) {
        v.iso_timeout = true;
      }
    }
  });

  std::size_t hyp = 0, thr = 0, both = 0, holding = 0, excused = 0;
  json counterexamples = json::array();
  json undecided = json::array();
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const SampleVerdict& v = verdicts[i];
    hyp += v.hypothesis;
    thr += v.threshold;
    if (!v.evaluated) continue;
    ++both;
    if (v.conclusion) {
      ++holding;
    } else if (v.isomorphic) {
      ++excused;
    } else {
      json entry = {{"index", i}, {"origin", pool[i].origin}, {"graph6", to_graph6(pool[i].graph)}, {"rho", v.rho}};
      if (v.undecided || v.iso_timeout) {
        entry["reason"] = v.undecided ? "tree search exhausted its budget" : "isomorphism search timed out";
        undecided.push_back(entry);
      } else {
        counterexamples.push_back(entry);
      }
    }
  }

  r.add("implication_holds", counterexamples.empty() && undecided.empty(),
        {{"sampled", pool.size()},
         {"hypothesis_passing", hyp},
         {"threshold_passing", thr},
         {"hypothesis_and_threshold", both},
         {"conclusion_holding", holding},
         {"isomorphic_to_extremal", excused},
         {"threshold", threshold},
         {"counterexamples", counterexamples},
         {"undecided", undecided}});
  if (both == 0) r.notes.push_back("vacuous: no sample met both the binding hypothesis and the threshold");

  const SampleVerdict& ve = verdicts[0];
  r.add("extremal_triggers_isomorphism_branch",
        ve.threshold && ve.hypothesis && !ve.conclusion && ve.isomorphic,
        {{"graph6", to_graph6(pool[0].graph)}, {"rho", ve.rho}, {"threshold", threshold},
         {"hypothesis", ve.hypothesis}, {"conclusion", ve.conclusion}, {"isomorphic", ve.isomorphic}});
  const SampleVerdict& vk = verdicts[1];
  r.add("complete_graph_meets_conclusion", vk.threshold && vk.hypothesis && vk.conclusion,
        {{"rho", vk.rho}, {"threshold", threshold}, {"conclusion", vk.conclusion}});

  r.runtime_ms = elapsed_ms(start);
  return r;
}

VerificationReport verify_intro_comparisons(std::size_t n, std::optional<std::size_t> b, std::optional<std::size_t> k) {
  if (!b && !k) throw UsageError("intro comparisons need b or k");
  const auto start = Clock::now();
  VerificationReport r;
  r.theorem_id = "intro";
  if (b) {
    const Graph lhs = comparison_graph_thm11(n, *b);
    const Graph rhs = g2_odd_factor(n, *b, 1);
    const double a = rho_of(lhs), c = rho_of(rhs);
    r.grid.push_back({{"n", n}, {"b", *b}});
    r.add("odd_factor_comparison", a <= c + 1e-9,
          {{"n", n}, {"b", *b}, {"lhs", a}, {"rhs", c}, {"identical_graphs", lhs == rhs}});
  }
  if (k) {
    const Graph lhs = comparison_graph_thm13(n, *k);
    const Graph rhs = g2_ktree(n, *k, 1);
    const double a = rho_of(lhs), c = rho_of(rhs);
    r.grid.push_back({{"n", n}, {"k", *k}});
    r.add("ktree_comparison", a <= c + 1e-9, {{"n", n}, {"k", *k}, {"lhs", a}, {"rhs", c}});
  }
  r.runtime_ms = elapsed_ms(start);
  return r;
}

namespace {

struct LemmaTuple {
  std::size_t s = 0;
  std::vector<std::size_t> parts;  // ascending
  std::size_t n = 0;
};

// lemma25 wants the second largest part >= 3, lemma26 the third largest
// >= 2; both want the largest part < n-s-t-1.
bool admissible(int lemma, const LemmaTuple& tu) {
  const std::size_t t = tu.parts.size();
  if (lemma == 25 && (t < 2 || tu.parts[t - 2] < 3)) return false;
  if (lemma == 26 && (t < 3 || tu.parts[t - 3] < 2)) return false;
  return tu.n <= 40 && tu.n >= tu.s + t + 1 && tu.parts.back() + tu.s + t + 1 < tu.n;
}

std::vector<std::size_t> lemma_rhs_parts(int lemma, const LemmaTuple& tu) {
  const std::size_t t = tu.parts.size();
  std::vector<std::size_t> out{tu.n - tu.s - t - 1};
  if (lemma == 25) {
    out.push_back(3);
    out.insert(out.end(), t - 2, 1);
  } else {
    out.push_back(2);
    out.push_back(2);
    out.insert(out.end(), t - 3, 1);
  }
  return out;
}

}  // namespace

VerificationReport verify_lemma_25_26(int lemma, std::size_t trials, std::uint64_t seed) {
  if (lemma != 25 && lemma != 26) throw UsageError("lemma must be 25 or 26");
  if (trials < 1) throw UsageError("trials must be >= 1");
  const auto start = Clock::now();
  VerificationReport r;
  r.theorem_id = lemma == 25 ? "lemma2.5" : "lemma2.6";
  r.rng_seed = seed;

  std::mt19937_64 rng(seed);
  std::vector<LemmaTuple> tuples;
  std::size_t skipped = 0;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    bool found = false;
    for (int attempt = 0; attempt < 1000 && !found; ++attempt) {
      LemmaTuple tu;
      tu.s = 1 + below(rng, 4);
      const std::size_t t = (lemma == 25 ? 2 : 3) + below(rng, 10);
      for (std::size_t i = 0; i < t; ++i) tu.parts.push_back(1 + below(rng, 10));
      std::sort(tu.parts.begin(), tu.parts.end());
      tu.n = tu.s;
      for (std::size_t p : tu.parts) tu.n += p;
      if (admissible(lemma, tu)) {
        tuples.push_back(std::move(tu));
        found = true;
      }
    }
    if (!found) ++skipped;
  }

  struct Margin {
    double lhs = 0, rhs = 0;
  };
  std::vector<Margin> margins(tuples.size());
  parallel_for(tuples.size(), [&](std::size_t i) {
    const LemmaTuple& tu = tuples[i];
    margins[i].lhs = rho_of(clique_join(tu.s, tu.parts));
    margins[i].rhs = rho_of(clique_join(tu.s, lemma_rhs_parts(lemma, tu)));
  });

  json violations = json::array();
  double min_margin = INFINITY;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    const LemmaTuple& tu = tuples[i];
    r.grid.push_back({{"n", tu.n}, {"s", tu.s}, {"t", tu.parts.size()}, {"parts", tu.parts}});
    const double margin = margins[i].rhs - margins[i].lhs;
    min_margin = std::min(min_margin, margin);
    if (!(margin > 1e-9)) {
      violations.push_back({{"n", tu.n}, {"s", tu.s}, {"parts", tu.parts}, {"lhs", margins[i].lhs},
                            {"rhs", margins[i].rhs}, {"graph6", to_graph6(clique_join(tu.s, tu.parts))}});
    }
  }
  json w = {{"trials", trials}, {"evaluated", tuples.size()}, {"skipped", skipped}, {"violations", violations}};
  if (!tuples.empty()) w["min_margin"] = min_margin;
  r.add(lemma == 25 ? "lemma_2_5_strict" : "lemma_2_6_strict", violations.empty() && !tuples.empty(), w);
  r.runtime_ms = elapsed_ms(start);
  return r;
}

namespace {

std::vector<Outcome> odd_cell(std::int64_t n, std::int64_t b, std::int64_t s, bool spectral) {
  std::vector<Outcome> out;
  const json at = {{"n", n}, {"b", b}, {"s", s}};
  const auto un = static_cast<std::size_t>(n), ub = static_cast<std::size_t>(b), us = static_cast<std::size_t>(s);

  const IntPolynomial b2 = charpoly_b2_exact(n, b, s);
  const Graph g2 = g2_odd_factor(un, ub, us);
  const IntPolynomial expanded = characteristic_polynomial(quotient(g2, g2_odd_factor_partition(un, ub, us)));
  out.push_back({"charpoly_b2_matches_quotient_determinant", expanded == b2,
                 {{"n", n}, {"b", b}, {"s", s}, {"closed_form", b2.to_string()}, {"expanded", expanded.to_string()}}});

  const IntPolynomial f = ineq_f(n, b, s);
  const IntPolynomial diff = charpoly_bstar_exact(n, b) - b2;
  out.push_back({"identity_bstar_minus_b2_equals_(s-1)f", diff == f * (s - 1),
                 {{"n", n}, {"b", b}, {"s", s}, {"difference", diff.to_string()}, {"f", f.to_string()}}});

  if (spectral) {
    const double rho = rho_of(g2);
    const Polynomial p = b2.cast<double>();
    const double residual = std::abs(p.evaluate(rho));
    out.push_back({"charpoly_b2_vanishes_at_rho", residual < 1e-6, {{"n", n}, {"b", b}, {"s", s}, {"rho", rho}, {"value", residual}}});
    const double root = largest_real_root(p, static_cast<double>(n - b * s - 4));
    out.push_back({"largest_root_equals_rho", std::abs(root - rho) < 1e-8,
                   {{"n", n}, {"b", b}, {"s", s}, {"rho", rho}, {"root", root}}});
    if (s >= 2) {
      const double top = rho_of(g2_odd_factor(un, ub, 1));
      out.push_back({"rho_g2_odd_below_extremal", top - rho > 1e-9,
                     {{"n", n}, {"b", b}, {"s", s}, {"rho_g2", rho}, {"rho_extremal", top}}});
    }
  }

  if (s < 2 || b < 3) return out;

  // f decreasing from n-b-4 on, sampled at 50 points.
  const IntPolynomial fp = f.derivative();
  bool decreasing = true;
  json bad;
  Rational prev;
  for (std::int64_t j = 0; j < 50 && decreasing; ++j) {
    const std::int64_t x = n - b - 4 + j * j;
    const Rational fx = eval(f, x);
    if (!(eval(fp, x) < Rational(0)) || (j > 0 && !(fx < prev))) {
      decreasing = false;
      bad = {{"n", n}, {"b", b}, {"s", s}, {"x", x}};
    }
    prev = fx;
  }
  out.push_back({"f_decreasing_past_n-b-4", decreasing, bad.is_null() ? at : bad});

  // (s-1) f(x) < 0 on the same points, i.e. phi(B_2,x) > phi(B_*,x).
  bool dominates = true;
  for (std::int64_t j = 0; j < 50 && dominates; ++j) {
    const std::int64_t x = n - b - 4 + j * j;
    dominates = eval(f, x) * Rational(s - 1) < Rational(0);
  }
  out.push_back({"phi_b2_exceeds_phi_bstar", dominates, at});

  const IntPolynomial g = ineq_g(b, s);
  const std::int64_t n0 = (b + 1) * s + 6;
  const Rational fn = eval(f, n - b - 4), gn = eval(g, n), g0 = eval(g, n0), hs = eval(ineq_h(b), s);
  out.push_back({"f_at_n-b-4_equals_g", fn == gn, {{"n", n}, {"b", b}, {"s", s}, {"f", fn.to_string()}, {"g", gn.to_string()}}});
  out.push_back({"g_bounded_by_g_at_(b+1)s+6", gn <= g0, {{"n", n}, {"b", b}, {"s", s}, {"g", gn.to_string()}, {"g0", g0.to_string()}}});
  out.push_back({"g_at_(b+1)s+6_equals_h", g0 == hs, {{"b", b}, {"s", s}, {"g0", g0.to_string()}, {"h", hs.to_string()}}});
  return out;
}

std::vector<Outcome> ktree_cell(std::int64_t n, std::int64_t k, const std::vector<std::int64_t>& s_values, bool spectral) {
  std::vector<Outcome> out;
  const json at = {{"n", n}, {"k", k}};
  const IntPolynomial phi = ineq_phi(n, k);
  const Rational phi2 = eval(phi, 2);
  const Rational end_point(n - 6, k - 1);
  const Rational phi_end = phi.evaluate(end_point);
  out.push_back({"phi_2_dominates_phi_at_(n-6)/(k-1)", phi2 >= phi_end,
                 {{"n", n}, {"k", k}, {"phi_2", phi2.to_string()}, {"phi_end", phi_end.to_string()}}});

  const std::int64_t numerator = (k - 2) * (k - 2) * n * n - (4 * k * k * k - 7 * k * k - 11 * k + 26) * n +
                                 4 * k * k * k * k + 2 * k * k * k - 18 * k * k + 8 * k + 40;
  const Rational lhs = (phi2 - phi_end) * Rational((k - 1) * (k - 1));
  bool numer_ok = lhs == Rational(numerator);
  if (n == 2 * k + 22) numer_ok = numer_ok && numerator == 306 * k * k - 1386 * k + 1404;
  out.push_back({"phi_difference_numerator", numer_ok, {{"n", n}, {"k", k}, {"numerator", numerator}}});

  bool interior = true;
  for (std::int64_t s = 2; (k - 1) * s + 6 <= n && interior; ++s) interior = eval(phi, s) <= phi2;
  out.push_back({"phi_s_at_most_phi_2", interior, at});

  const std::int64_t gap = (n - k - 3) * (n - k - 3);
  const std::int64_t closed = (2 * k - 4) * n - 3 * k * k - 4 * k + 4;
  bool square_ok = Rational(gap) - phi2 == Rational(closed) && closed > 0 &&
                   phi2 == Rational(n * n - (4 * k + 2) * n + 4 * k * k + 10 * k + 5);
  if (n == 2 * k + 22) square_ok = square_ok && closed == k * k + 32 * k - 84;
  out.push_back({"phi_2_below_(n-k-3)^2", square_ok, {{"n", n}, {"k", k}, {"difference", closed}}});

  const auto un = static_cast<std::size_t>(n), uk = static_cast<std::size_t>(k);
  const double top = spectral ? rho_of(g2_ktree(un, uk, 1)) : 0.0;
  for (std::int64_t s : s_values) {
    if (s < 2 || (k - 1) * s + 6 > n) continue;
    const Graph g2 = g2_ktree(un, uk, static_cast<std::size_t>(s));
    const std::int64_t two_e = 2 * static_cast<std::int64_t>(g2.edge_count());
    const std::int64_t formula = k * (k - 2) * s * s + (9 * k - 10 - 2 * (k - 2) * n) * s + n * n - 9 * n + 24;
    out.push_back({"two_e_g2_closed_form", two_e == formula && eval(phi, s) == Rational(two_e - n + 1),
                   {{"n", n}, {"k", k}, {"s", s}, {"two_e", two_e}, {"formula", formula}}});
    if (spectral) {
      const double rho = rho_of(g2);
      out.push_back({"rho_g2_ktree_below_extremal", top - rho > 1e-9,
                     {{"n", n}, {"k", k}, {"s", s}, {"rho_g2", rho}, {"rho_extremal", top}}});
      out.push_back({"rho_g2_ktree_within_hong_bound", rho <= std::sqrt(static_cast<double>(two_e - n + 1)) + 1e-9,
                     {{"n", n}, {"k", k}, {"s", s}, {"rho_g2", rho}}});
    }
  }
  return out;
}

}  // namespace

VerificationReport verify_proof_inequalities(const ProofGrid& grid) {
  const auto start = Clock::now();
  VerificationReport r;
  r.theorem_id = "proofs";
  r.notes.push_back(kNumberingNote);

  for (std::int64_t b : grid.b_values) {
    if (b < 1 || b % 2 == 0 || b > 15) throw UsageError("proof grid needs odd b in 1..15 (got b=" + std::to_string(b) + ")");
  }
  for (std::int64_t k : grid.k_values) {
    if (k < 3 || k > 12) throw UsageError("proof grid needs k in 3..12 (got k=" + std::to_string(k) + ")");
  }
  for (std::int64_t s : grid.s_values) {
    if (s < 1 || s > 10) throw UsageError("proof grid needs s in 1..10 (got s=" + std::to_string(s) + ")");
  }
  if (grid.odd_extent < 0 || grid.ktree_extent < 0) throw UsageError("grid extents must be >= 0");

  struct Cell {
    bool odd;
    std::int64_t n, param, s;
  };
  std::vector<Cell> cells;
  for (std::int64_t b : grid.b_values) {
    for (std::int64_t s : grid.s_values) {
      const std::int64_t lo = (b + 1) * s + 6;
      for (std::int64_t n = lo; n <= lo + grid.odd_extent; ++n) cells.push_back({true, n, b, s});
    }
  }
  for (std::int64_t k : grid.k_values) {
    for (std::int64_t n = 2 * k + 22; n <= 2 * k + 22 + grid.ktree_extent; ++n) cells.push_back({false, n, k, 0});
  }

  std::vector<std::vector<Outcome>> results(cells.size());
  parallel_for(cells.size(), [&](std::size_t i) {
    const Cell& c = cells[i];
    results[i] = c.odd ? odd_cell(c.n, c.param, c.s, grid.spectral) : ktree_cell(c.n, c.param, grid.s_values, grid.spectral);
  });

  Tally tally;
  for (std::int64_t b : grid.b_values) {
    if (b < 3) continue;
    const Rational h2 = eval(ineq_h(b), 2);
    const std::int64_t closed = -b * b * b * b - 7 * b * b * b - 17 * b * b + 7 * b + 36;
    tally.record("h_2_closed_form_negative", h2 == Rational(closed) && closed < 0,
                 {{"b", b}, {"h_2", h2.to_string()}, {"closed_form", closed}});
    for (std::int64_t s : grid.s_values) {
      if (s < 2) continue;
      const Rational hs = eval(ineq_h(b), s);
      tally.record("h_s_at_most_h_2", hs <= h2, {{"b", b}, {"s", s}, {"h_s", hs.to_string()}});
    }
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const Cell& c = cells[i];
    r.grid.push_back(c.odd ? json{{"n", c.n}, {"b", c.param}, {"s", c.s}} : json{{"n", c.n}, {"k", c.param}});
    for (const Outcome& o : results[i]) tally.record(o.name, o.ok, o.where);
  }
  tally.flush(r);
  r.runtime_ms = elapsed_ms(start);
  return r;
}

}  // namespace spectra
