#include "spectra/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "spectra/binding.hpp"
#include "spectra/error.hpp"
#include "spectra/factors.hpp"
#include "spectra/families.hpp"
#include "spectra/graph6.hpp"
#include "spectra/isomorphism.hpp"
#include "spectra/ktree.hpp"
#include "spectra/spectral.hpp"
#include "spectra/verify.hpp"

namespace spectra::cli {

using nlohmann::json;

namespace {

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", v);
  return buf;
}

std::string join_ints(const std::vector<std::size_t>& xs, const char* sep = " ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
  return os.str();
}

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

std::string edges_text(const std::vector<Edge>& edges) {
  std::ostringstream os;
  for (std::size_t i = 0; i < edges.size(); ++i) os << (i ? " " : "") << edges[i].u << "-" << edges[i].v;
  return os.str();
}

struct Range {
  std::int64_t lo, hi, step;
};

// "a", "a:b" or "a:b:step".
Range parse_range(const std::string& text, const std::string& flag) {
  std::vector<std::int64_t> xs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      std::size_t used = 0;
      xs.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(flag + " expects a:b:step (got '" + text + "')");
    }
  }
  if (xs.empty() || xs.size() > 3) throw UsageError(flag + " expects a:b:step (got '" + text + "')");
  Range r{xs[0], xs.size() > 1 ? xs[1] : xs[0], xs.size() > 2 ? xs[2] : 1};
  if (r.step <= 0 || r.hi < r.lo || r.lo < 0) throw UsageError(flag + " needs 0 <= a <= b and step >= 1 (got '" + text + "')");
  return r;
}

std::vector<std::int64_t> expand(const Range& r) {
  std::vector<std::int64_t> out;
  for (std::int64_t v = r.lo; v <= r.hi; v += r.step) out.push_back(v);
  return out;
}

struct Io {
  std::istream& in;
  std::ostream& out;
};

std::vector<Graph> load_graphs(const std::string& path, Io io) {
  std::vector<Graph> gs = path == "-" ? read_graph6_stream(io.in) : read_graph6_file(path);
  if (gs.empty()) throw UsageError("no graph in input " + (path == "-" ? std::string("<stdin>") : path));
  return gs;
}

Graph load_one(const std::string& path, Io io) {
  auto gs = load_graphs(path, io);
  if (gs.size() != 1) throw UsageError("expected one graph in " + path + ", found " + std::to_string(gs.size()));
  return gs.front();
}

// One JSON object per graph; a lone graph prints as a bare object.
void emit(std::ostream& out, const std::vector<json>& items) {
  if (items.size() == 1) out << items.front().dump() << "\n";
  else out << json(items).dump() << "\n";
}

Partition read_partition(const std::string& path, std::size_t n) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open partition file " + path);
  json j;
  try {
    f >> j;
  } catch (const json::exception&) {
    throw UsageError("partition file " + path + " is not valid JSON");
  }
  if (j.is_object() && j.contains("blocks")) j = j["blocks"];
  if (!j.is_array()) throw UsageError("partition must be a JSON array of vertex arrays");
  Partition pi;
  for (const auto& block : j) {
    if (!block.is_array()) throw UsageError("partition must be a JSON array of vertex arrays");
    VertexSet b(n);
    for (const auto& v : block) {
      if (!v.is_number_unsigned() || v.get<std::size_t>() >= n) {
        throw UsageError("partition vertex " + v.dump() + " is not in 0.." + std::to_string(n - 1));
      }
      b.insert(v.get<std::size_t>());
    }
    pi.blocks.push_back(b);
  }
  validate_partition(n, pi);
  return pi;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"spectral and structural graph toolkit", "spectra"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  std::uint64_t seed = 0;
  std::string expect;
  app.add_flag("--json", as_json, "JSON output");
  app.add_option("--seed", seed, "RNG seed for sampling commands")->capture_default_str();
  app.add_option("--expect", expect, "exit 1 when the decision is not this")->check(CLI::IsMember({"yes"}));

  std::string in_path = "-";
  std::size_t b = 1, k = 3, budget = kDefaultKTreeBudget;
  std::optional<std::size_t> n_opt, b_opt, k_opt, s_opt;

  // construct
  auto* construct = app.add_subcommand("construct", "build a named family graph");
  FamilyRequest fam;
  std::string parts_text, out_path;
  bool dot = false;
  construct->add_option("--family", fam.name, "family name")->required()->check(CLI::IsMember(family_names()));
  construct->add_option("--n", n_opt);
  construct->add_option("--b", b_opt);
  construct->add_option("--k", k_opt);
  construct->add_option("--s", s_opt);
  construct->add_option("--parts", parts_text, "comma separated part sizes for clique-join");
  construct->add_option("--out", out_path, "write graph6 here instead of stdout");
  construct->add_flag("--dot", dot, "emit DOT instead of graph6");

  // rho
  auto* rho = app.add_subcommand("rho", "adjacency spectral radius");
  double tol = kDefaultSpectralTolerance;
  rho->add_option("--in", in_path, "graph6 file, - for stdin")->capture_default_str();
  rho->add_option("--tol", tol)->capture_default_str()->check(CLI::PositiveNumber);

  // charpoly
  auto* charpoly = app.add_subcommand("charpoly", "characteristic polynomial of the odd-factor quotient");
  std::int64_t cp_n = 0, cp_b = 0, cp_s = 1;
  charpoly->add_option("--n", cp_n)->required();
  charpoly->add_option("--b", cp_b)->required();
  charpoly->add_option("--s", cp_s)->capture_default_str();

  // quotient
  auto* quot = app.add_subcommand("quotient", "quotient matrix of an equitable partition");
  std::string partition_path;
  quot->add_option("--in", in_path)->capture_default_str();
  quot->add_option("--partition", partition_path, "JSON array of vertex blocks")->required();

  // binding
  auto* bind = app.add_subcommand("binding", "binding number");
  std::string threshold;
  bool force = false;
  bind->add_option("--in", in_path)->capture_default_str();
  bind->add_option("--threshold", threshold, "decide bind(G) >= p/q instead");
  bind->add_flag("--force", force, "allow exhaustive search above 24 vertices");

  // odd-factor
  auto* odd = app.add_subcommand("odd-factor", "odd [1,b]-factor decision");
  bool construct_factor = false;
  odd->add_option("--in", in_path)->capture_default_str();
  odd->add_option("--b", b)->required();
  odd->add_flag("--construct", construct_factor, "also build a factor (small graphs)");

  // ktree
  auto* ktree = app.add_subcommand("ktree", "spanning k-tree decision");
  std::string method = "auto";
  ktree->add_option("--in", in_path)->capture_default_str();
  ktree->add_option("--k", k)->required();
  ktree->add_option("--method", method)->check(CLI::IsMember({"auto", "win", "necessary", "mdst", "exact"}))->capture_default_str();
  ktree->add_option("--budget", budget)->capture_default_str();

  // verify
  auto* ver = app.add_subcommand("verify", "theorem-level verification suites");
  std::string theorem, n_range, b_range, k_range, s_range, report_path;
  std::size_t samples = 0, trials = 200;
  std::int64_t extent = 30;
  bool exact = false, no_spectral = false;
  ver->add_option("--theorem", theorem)->required()->check(CLI::IsMember({"1.2", "1.4", "intro", "lemma25", "lemma26", "proofs"}));
  ver->add_option("--n-range", n_range, "a:b:step");
  ver->add_option("--b", b_opt);
  ver->add_option("--k", k_opt);
  ver->add_option("--samples", samples, "implication samples per n (1.2, 1.4); 0 skips")->capture_default_str();
  ver->add_option("--trials", trials, "lemma25/lemma26 trials")->capture_default_str();
  ver->add_option("--b-range", b_range, "proofs: odd b range");
  ver->add_option("--k-range", k_range, "proofs: k range");
  ver->add_option("--s-range", s_range, "proofs: s range");
  ver->add_option("--extent", extent, "proofs: n runs from its lower bound to lower bound + extent")->capture_default_str();
  ver->add_flag("--exact", exact, "1.4: cross-check with exact tree search");
  ver->add_flag("--no-spectral", no_spectral, "proofs: skip power-iteration checks");
  ver->add_option("--budget", budget)->capture_default_str();
  ver->add_option("--report", report_path, "write the JSON report here");

  // iso
  auto* iso = app.add_subcommand("iso", "graph isomorphism");
  std::string second_path;
  std::size_t iso_budget = kDefaultIsomorphismBudget;
  iso->add_option("--in", in_path, "one file with two graphs, or the first graph")->capture_default_str();
  iso->add_option("--other", second_path, "second graph file");
  iso->add_option("--budget", iso_budget)->capture_default_str();

  std::vector<std::string> argv_store{"spectra"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    if (auto nl = msg.find('\n'); nl != std::string::npos) msg.resize(nl);
    err << "error: " << msg << "\n";
    return kExitUsage;
  }

  const bool want_yes = expect == "yes";
  const Io io{in, out};
  try {
    if (construct->parsed()) {
      fam.n = n_opt;
      fam.b = b_opt;
      fam.k = k_opt;
      fam.s = s_opt;
      if (!parts_text.empty()) {
        std::stringstream ss(parts_text);
        std::string item;
        while (std::getline(ss, item, ',')) {
          try {
            fam.parts.push_back(std::stoul(item));
          } catch (const std::exception&) {
            throw UsageError("--parts expects comma separated sizes (got '" + parts_text + "')");
          }
        }
      }
      const Graph g = build_family(fam);
      std::string text = dot ? to_dot(g) : to_graph6(g) + "\n";
      if (as_json && !dot) {
        text = json{{"family", fam.name}, {"n", g.order()}, {"edges", g.edge_count()}, {"graph6", to_graph6(g)}}.dump() + "\n";
      }
      if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) throw UsageError("cannot write " + out_path);
        f << text;
      } else {
        out << text;
      }
      return kExitOk;
    }

    if (rho->parsed()) {
      std::vector<json> items;
      for (const Graph& g : load_graphs(in_path, io)) {
        const SpectralResult r = spectral_radius(g, tol);
        if (as_json) items.push_back({{"rho", r.rho}, {"iterations", r.iterations}, {"residual", r.residual}});
        else out << fixed(r.rho) << "\n";
      }
      if (as_json) emit(out, items);
      return kExitOk;
    }

    if (charpoly->parsed()) {
      if (cp_b < 1 || cp_b % 2 == 0) throw UsageError("charpoly requires b odd and b >= 1 (got b=" + std::to_string(cp_b) + ")");
      if (cp_s < 1) throw UsageError("charpoly requires s >= 1 (got s=" + std::to_string(cp_s) + ")");
      if (cp_n < (cp_b + 1) * cp_s + 6) {
        throw UsageError("charpoly requires n >= (b+1)s+6 = " + std::to_string((cp_b + 1) * cp_s + 6) +
                         " (got n=" + std::to_string(cp_n) + ")");
      }
      const IntPolynomial p = charpoly_b2_exact(cp_n, cp_b, cp_s);
      const double root = largest_real_root(p.cast<double>(), static_cast<double>(cp_n - cp_b * cp_s - 4));
      std::vector<std::int64_t> high_first(p.coefficients().rbegin(), p.coefficients().rend());
      if (as_json) {
        out << json{{"polynomial", p.to_string()}, {"coefficients", high_first}, {"largest_root", root}}.dump() << "\n";
      } else {
        out << p.to_string() << "\n";
        for (std::size_t i = 0; i < high_first.size(); ++i) out << (i ? " " : "") << high_first[i];
        out << "\n" << fixed(root) << "\n";
      }
      return kExitOk;
    }

    if (quot->parsed()) {
      const Graph g = load_one(in_path, io);
      const Partition pi = read_partition(partition_path, g.order());
      const QuotientMatrix q = quotient(g, pi);
      const double perron = quotient_largest_eigenvalue(q);
      const IntPolynomial cp = characteristic_polynomial(q);
      if (as_json) {
        json rows = json::array();
        for (std::size_t i = 0; i < q.size(); ++i) {
          json row = json::array();
          for (std::size_t j = 0; j < q.size(); ++j) row.push_back(q.at(i, j));
          rows.push_back(row);
        }
        out << json{{"matrix", rows}, {"perron_root", perron}, {"charpoly", cp.to_string()}}.dump() << "\n";
      } else {
        for (std::size_t i = 0; i < q.size(); ++i) {
          for (std::size_t j = 0; j < q.size(); ++j) out << (j ? " " : "") << q.at(i, j);
          out << "\n";
        }
        out << cp.to_string() << "\n" << fixed(perron) << "\n";
      }
      return kExitOk;
    }

    if (bind->parsed()) {
      const Graph g = load_one(in_path, io);
      if (!threshold.empty()) {
        Rational r;
        try {
          r = Rational::parse(threshold);
        } catch (const Error&) {
          throw UsageError("--threshold expects p/q (got '" + threshold + "')");
        }
        if (g.order() > kExhaustiveBindingLimit && !force) {
          throw CapabilityError("binding search is limited to " + std::to_string(kExhaustiveBindingLimit) +
                                " vertices; pass --force to run anyway");
        }
        const RBindingResult res = is_r_binding(g, r);
        if (as_json) {
          json j = {{"threshold", r.to_string()}, {"holds", res.holds}, {"violating_set", nullptr}};
          if (res.violating_set) j["violating_set"] = res.violating_set->to_vector();
          out << j.dump() << "\n";
        } else {
          out << (res.holds ? "yes" : "no");
          if (res.violating_set) out << " " << join_ints(res.violating_set->to_vector());
          out << "\n";
        }
        return want_yes && !res.holds ? kExitNo : kExitOk;
      }
      const BindingResult res = binding_number(g, force);
      if (as_json) {
        json j = {{"value", nullptr}, {"witness", json::array()}};
        if (res.feasible) {
          j["value"] = res.value.to_string();
          j["witness"] = res.witness.to_vector();
        }
        out << j.dump() << "\n";
      } else if (res.feasible) {
        out << res.value.to_string() << "\n" << join_ints(res.witness.to_vector()) << "\n";
      } else {
        out << "undefined\n";
      }
      return kExitOk;
    }

    if (odd->parsed()) {
      const Graph g = load_one(in_path, io);
      const FactorDecision d = has_odd_factor(g, b, construct_factor);
      if (as_json) {
        json j = {{"exists", d.exists}, {"b", b}, {"violating_set", nullptr}, {"odd_count", d.odd_count}, {"bound", nullptr}};
        if (d.violating_set) {
          j["violating_set"] = d.violating_set->to_vector();
          j["bound"] = b * d.violating_set->count();
        }
        if (d.factor_edges) j["factor"] = edges_json(*d.factor_edges);
        out << j.dump() << "\n";
      } else {
        out << (d.exists ? "yes" : "no") << "\n";
        if (d.violating_set) {
          out << "S = {" << join_ints(d.violating_set->to_vector(), ", ") << "}, o(G-S) = " << d.odd_count
              << " > " << b * d.violating_set->count() << "\n";
        }
        if (d.factor_edges) out << edges_text(*d.factor_edges) << "\n";
      }
      return want_yes && !d.exists ? kExitNo : kExitOk;
    }

    if (ktree->parsed()) {
      const Graph g = load_one(in_path, io);
      const KTreeDecision d = decide_spanning_ktree(g, k, parse_ktree_method(method), budget);
      if (as_json) {
        json j = {{"status", to_string(d.status)}, {"method", d.method}, {"tree", nullptr}, {"violating_set", nullptr}};
        if (d.tree_edges) j["tree"] = edges_json(*d.tree_edges);
        if (d.violating_set) j["violating_set"] = d.violating_set->to_vector();
        out << j.dump() << "\n";
      } else {
        out << to_string(d.status) << " (" << d.method << ")\n";
        if (d.tree_edges) out << edges_text(*d.tree_edges) << "\n";
        if (d.violating_set) out << "S = {" << join_ints(d.violating_set->to_vector(), ", ") << "}\n";
      }
      return want_yes && d.status != KTreeStatus::yes ? kExitNo : kExitOk;
    }

    if (iso->parsed()) {
      std::vector<Graph> gs = load_graphs(in_path, io);
      if (!second_path.empty()) {
        auto more = load_graphs(second_path, io);
        gs.insert(gs.end(), more.begin(), more.end());
      }
      if (gs.size() != 2) throw UsageError("iso needs exactly two graphs, got " + std::to_string(gs.size()));
      const IsomorphismResult r = are_isomorphic(gs[0], gs[1], iso_budget);
      if (as_json) {
        json j = {{"isomorphic", r.isomorphic}, {"mapping", nullptr}, {"nodes", r.nodes}};
        if (r.isomorphic) j["mapping"] = r.mapping;
        out << j.dump() << "\n";
      } else {
        out << (r.isomorphic ? "yes" : "no") << "\n";
        if (r.isomorphic) out << join_ints(r.mapping) << "\n";
      }
      return want_yes && !r.isomorphic ? kExitNo : kExitOk;
    }

    if (ver->parsed()) {
      const auto start = std::chrono::steady_clock::now();
      VerificationReport report;
      report.rng_seed = seed;
      if (theorem == "1.2" || theorem == "1.4") {
        const bool is_odd = theorem == "1.2";
        const std::size_t param = is_odd ? b_opt.value_or(1) : k_opt.value_or(3);
        if (is_odd && k_opt) throw UsageError("--k does not apply to theorem 1.2");
        if (!is_odd && b_opt) throw UsageError("--b does not apply to theorem 1.4");
        const std::int64_t lo = is_odd ? std::max<std::int64_t>(12, 2 * static_cast<std::int64_t>(param) + 8)
                                       : 2 * static_cast<std::int64_t>(param) + 22;
        const Range range = n_range.empty() ? Range{lo, is_odd ? std::max<std::int64_t>(lo, 40) : lo + 8, is_odd ? 2 : 1}
                                            : parse_range(n_range, "--n-range");
        report.theorem_id = theorem;
        for (std::int64_t n : expand(range)) {
          const auto un = static_cast<std::size_t>(n);
          report.absorb(is_odd ? verify_sharpness_odd_factor(un, param) : verify_sharpness_ktree(un, param, exact, budget));
          if (samples > 0) {
            report.absorb(verify_implication(is_odd ? ImplicationTheorem::odd_factor : ImplicationTheorem::ktree, un,
                                             param, samples, seed));
          }
        }
      } else if (theorem == "intro") {
        if (!b_opt && !k_opt) throw UsageError("verify --theorem intro needs --b and/or --k");
        if (n_range.empty()) throw UsageError("verify --theorem intro needs --n-range");
        report.theorem_id = "intro";
        for (std::int64_t n : expand(parse_range(n_range, "--n-range"))) {
          report.absorb(verify_intro_comparisons(static_cast<std::size_t>(n), b_opt, k_opt));
        }
      } else if (theorem == "lemma25" || theorem == "lemma26") {
        report = verify_lemma_25_26(theorem == "lemma25" ? 25 : 26, trials, seed);
      } else {
        ProofGrid grid;
        if (!b_range.empty()) {
          grid.b_values.clear();
          for (auto v : expand(parse_range(b_range, "--b-range"))) {
            if (v % 2 == 1) grid.b_values.push_back(v);
          }
        }
        if (!k_range.empty()) grid.k_values = expand(parse_range(k_range, "--k-range"));
        if (!s_range.empty()) grid.s_values = expand(parse_range(s_range, "--s-range"));
        grid.odd_extent = grid.ktree_extent = extent;
        grid.spectral = !no_spectral;
        report = verify_proof_inequalities(grid);
      }
      report.rng_seed = seed;
      report.runtime_ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
      const json j = report.to_json();
      if (!report_path.empty()) {
        std::ofstream f(report_path);
        if (!f) throw UsageError("cannot write " + report_path);
        f << j.dump(2) << "\n";
      }
      if (as_json) {
        out << j.dump() << "\n";
      } else {
        std::size_t failed = 0;
        for (const Check& c : report.checks) failed += !c.passed;
        for (const Check& c : report.checks) {
          if (!c.passed) out << "FAIL " << c.name << " " << c.witness.dump() << "\n";
        }
        out << report.theorem_id << ": " << report.checks.size() - failed << "/" << report.checks.size()
            << " checks passed\n";
      }
      return report.all_passed() ? kExitOk : kExitNo;
    }
  } catch (const Error& e) {
    // usage, parse, capability and the remaining library errors all end here
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cin, std::cout, std::cerr);
}

}  // namespace spectra::cli
