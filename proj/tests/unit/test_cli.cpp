#include "doctest.h"
#include "json.hpp"
#include "spectra/cli.hpp"
#include "spectra/families.hpp"
#include "spectra/graph6.hpp"
#include "spectra/isomorphism.hpp"

#include <fstream>
#include <sstream>

using nlohmann::json;
using namespace spectra;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("construct round-trips through graph6") {
  const auto r = run({"construct", "--family", "odd-extremal", "--n", "14", "--b", "3"});
  REQUIRE(r.code == 0);
  const Graph g = parse_graph6(r.out.substr(0, r.out.find('\n')));
  CHECK(are_isomorphic(g, extremal_odd_factor(14, 3)).isomorphic);
}

TEST_CASE("construct writes files for every family") {
  const std::vector<std::vector<std::string>> cases = {
      {"--family", "odd-extremal", "--n", "16", "--b", "3"},
      {"--family", "ktree-extremal", "--n", "30", "--k", "4"},
      {"--family", "g2-odd", "--n", "20", "--b", "3", "--s", "2"},
      {"--family", "g2-ktree", "--n", "30", "--k", "4", "--s", "2"},
      {"--family", "thm11", "--n", "24", "--b", "3"},
      {"--family", "thm13", "--n", "28", "--k", "8"},
      {"--family", "clique-join", "--s", "2", "--parts", "4,3,1"},
  };
  for (const auto& c : cases) {
    std::vector<std::string> args{"construct"};
    args.insert(args.end(), c.begin(), c.end());
    args.insert(args.end(), {"--out", "family.g6"});
    REQUIRE(run(args).code == 0);
    std::vector<std::string> plain{"construct"};
    plain.insert(plain.end(), c.begin(), c.end());
    const auto direct = run(plain);
    std::ifstream f("family.g6");
    std::string line;
    std::getline(f, line);
    CHECK(parse_graph6(line) == parse_graph6(direct.out.substr(0, direct.out.find('\n'))));
  }
}

TEST_CASE("rho of K5") {
  write("k5.g6", "D~{\n");
  const auto r = run({"rho", "--in", "k5.g6"});
  CHECK(r.code == 0);
  CHECK(r.out == "4.000000000000\n");
  const auto viastdin = run({"rho"}, "D~{\n");
  CHECK(viastdin.out == "4.000000000000\n");
  const auto j = json::parse(run({"rho", "--in", "k5.g6", "--json"}).out);
  CHECK(j["rho"].get<double>() == doctest::Approx(4.0));
}

TEST_CASE("charpoly") {
  const auto r = run({"charpoly", "--n", "14", "--b", "3", "--s", "1", "--json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["polynomial"] == "x^4 - 8x^3 - x^2 + 56x - 36");
  CHECK(j["coefficients"] == json::array({1, -8, -1, 56, -36}));
  CHECK(j["largest_root"].get<double>() > 7.1);
  CHECK(run({"charpoly", "--n", "10", "--b", "3", "--s", "2"}).code == 2);
}

TEST_CASE("quotient") {
  write("g14.g6", to_graph6(extremal_odd_factor(14, 3)) + "\n");
  write("blocks.json", "[[0],[1,2,3,4,5,6,7],[8,9,10],[11,12,13]]");
  const auto r = run({"quotient", "--in", "g14.g6", "--partition", "blocks.json", "--json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["matrix"] == json::parse("[[0,7,3,3],[1,6,0,0],[1,0,2,0],[1,0,0,0]]"));
  write("bad.json", "[[0,1,2,3,4,5,6,7],[8,9,10],[11,12,13]]");
  const auto bad = run({"quotient", "--in", "g14.g6", "--partition", "bad.json"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("error:") == 0);
}

TEST_CASE("binding") {
  write("g14.g6", to_graph6(extremal_odd_factor(14, 3)) + "\n");
  const auto j = json::parse(run({"binding", "--in", "g14.g6", "--json"}).out);
  CHECK(j["value"] == "1/3");
  CHECK(j["witness"] == json::array({11, 12, 13}));
  CHECK(run({"binding", "--in", "g14.g6", "--threshold", "1/3", "--expect", "yes"}).code == 0);
  CHECK(run({"binding", "--in", "g14.g6", "--threshold", "1/2", "--expect", "yes"}).code == 1);
  CHECK(run({"binding", "--in", "g14.g6", "--threshold", "1/2"}).code == 0);
  CHECK(run({"binding", "--in", "g14.g6", "--threshold", "x"}).code == 2);
  write("k25.g6", to_graph6(complete_graph(25)) + "\n");
  CHECK(run({"binding", "--in", "k25.g6"}).code == 2);
  CHECK(run({"binding", "--in", "k25.g6", "--force"}).code == 0);
}

TEST_CASE("odd-factor") {
  write("g14.g6", to_graph6(extremal_odd_factor(14, 3)) + "\n");
  const auto r = run({"odd-factor", "--in", "g14.g6", "--b", "3", "--json"});
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["exists"] == false);
  CHECK(j["violating_set"] == json::array({0}));
  CHECK(j["odd_count"] == 5);
  CHECK(j["bound"] == 3);
  CHECK(run({"odd-factor", "--in", "g14.g6", "--b", "3", "--expect", "yes"}).code == 1);
  CHECK(run({"odd-factor", "--in", "g14.g6", "--b", "2"}).code == 2);
  write("p4.g6", to_graph6(path_graph(4)) + "\n");
  const auto p = json::parse(run({"odd-factor", "--in", "p4.g6", "--b", "1", "--construct", "--json"}).out);
  CHECK(p["exists"] == true);
  CHECK(p["factor"] == json::parse("[[0,1],[2,3]]"));
}

TEST_CASE("ktree") {
  write("g28.g6", to_graph6(extremal_ktree(28, 3)) + "\n");
  const auto j = json::parse(run({"ktree", "--in", "g28.g6", "--k", "3", "--json"}).out);
  CHECK(j["status"] == "no");
  CHECK(j["violating_set"] == json::array({0}));
  CHECK(j.contains("tree"));
  CHECK(j.contains("method"));
  CHECK(run({"ktree", "--in", "g28.g6", "--k", "3", "--expect", "yes"}).code == 1);
  CHECK(run({"ktree", "--in", "g28.g6", "--k", "3", "--method", "sideways"}).code == 2);
  write("k6.g6", to_graph6(complete_graph(6)) + "\n");
  const auto y = json::parse(run({"ktree", "--in", "k6.g6", "--k", "2", "--json", "--expect", "yes"}).out);
  CHECK(y["status"] == "yes");
  CHECK(y["tree"].size() == 5);
}

TEST_CASE("iso") {
  write("pair.g6", to_graph6(star_graph(3)) + "\n" + to_graph6(disjoint_union(complete_graph(3), complete_graph(1))) + "\n");
  CHECK(run({"iso", "--in", "pair.g6"}).out == "no\n");
  CHECK(run({"iso", "--in", "pair.g6", "--expect", "yes"}).code == 1);
  write("a.g6", "D~{\n");
  const auto j = json::parse(run({"iso", "--in", "a.g6", "--other", "a.g6", "--json"}).out);
  CHECK(j["isomorphic"] == true);
  CHECK(j["mapping"].size() == 5);
}

TEST_CASE("verify writes a report") {
  const auto r = run({"verify", "--theorem", "1.2", "--b", "3", "--n-range", "14:16:2", "--report", "odd.json"});
  CHECK(r.code == 0);
  std::ifstream f("odd.json");
  json j;
  f >> j;
  CHECK(j["theorem_id"] == "1.2");
  CHECK(j["checks"].size() == 10);
  CHECK(run({"verify", "--theorem", "lemma26", "--trials", "20", "--seed", "42", "--json"}).code == 0);
  CHECK(run({"verify", "--theorem", "intro", "--n-range", "24", "--b", "3", "--k", "8"}).code == 0);
  CHECK(run({"verify", "--theorem", "proofs", "--b-range", "3:5", "--k-range", "3:4", "--s-range", "2:3",
             "--extent", "4", "--json"}).code == 0);
}

TEST_CASE("usage errors exit 2 with a one-line diagnosis") {
  const std::vector<std::vector<std::string>> bad = {
      {},
      {"frobnicate"},
      {"rho", "--bogus"},
      {"verify", "--theorem", "1.4", "--k", "3", "--n-range", "27:27"},
      {"verify", "--theorem", "1.2", "--b", "3", "--n-range", "12:12"},
      {"verify", "--theorem", "9.9"},
      {"verify", "--theorem", "1.2", "--n-range", "a:b"},
      {"construct", "--family", "odd-extremal", "--n", "13", "--b", "3"},
      {"construct", "--family", "g2-odd", "--n", "20"},
      {"rho", "--in", "does-not-exist.g6"},
      {"binding", "--in", "k5.g6", "--expect", "no"},
  };
  write("k5.g6", "D~{\n");
  for (const auto& args : bad) {
    const auto r = run(args);
    const std::string label = args.empty() ? std::string("<none>") : args[0];
    INFO(label);
    CHECK(r.code == 2);
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
  }
  const auto malformed = run({"rho"}, "D~\n");
  CHECK(malformed.code == 2);
  CHECK(malformed.err.find("offset") != std::string::npos);
}

TEST_CASE("help exits 0") {
  CHECK(run({"--help"}).code == 0);
}
