#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "caring/shannon.hpp"

using namespace caring;

namespace {

std::string data_path(const char* rel) { return std::string(CARING_SOURCE_DIR) + rel; }

bool color_rec(const SimpleGraph& g, int k, std::vector<int>& col, int v) {
  if (v == g.vertex_count()) return true;
  for (int c = 0; c < k; ++c) {
    bool ok = true;
    for (int u = 0; u < v; ++u)
      if (col[u] == c && g.adjacent(u, v)) { ok = false; break; }
    if (ok) {
      col[v] = c;
      if (color_rec(g, k, col, v + 1)) return true;
    }
  }
  return false;
}

bool colorable(const SimpleGraph& g, int k) {
  std::vector<int> col(g.vertex_count(), -1);
  return color_rec(g, k, col, 0);
}

std::vector<int> neighbor_list(const SimpleGraph& g, int v) {
  std::vector<int> out;
  for (int u = 0; u < g.vertex_count(); ++u)
    if (u != v && g.adjacent(u, v)) out.push_back(u);
  return out;
}

}  // namespace

TEST_CASE("graph builders") {
  REQUIRE(cycle_graph(5).edge_count() == 5);
  REQUIRE(complete_graph(6).edge_count() == 15);
  REQUIRE_THROWS_AS(cycle_graph(2), std::invalid_argument);

  SimpleGraph p = or_product(cycle_graph(5), cycle_graph(5));
  REQUIRE(p.vertex_count() == 25);
  REQUIRE(p.edge_count() == 200);
  SimpleGraph p2 = or_power(cycle_graph(5), 2);
  REQUIRE(p2.vertex_count() == 25);
  REQUIRE(p2.edge_count() == 200);

  REQUIRE_THROWS_AS(or_power(cycle_graph(5), 7), std::invalid_argument);
  REQUIRE_THROWS_AS(or_product(complete_graph(200), complete_graph(200)),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(or_power(cycle_graph(5), 0), std::invalid_argument);
}

TEST_CASE("the mycielskian of an edge is the pentagon") {
  SimpleGraph m = mycielskian(complete_graph(2));
  REQUIRE(m.vertex_count() == 5);
  REQUIRE(m.edge_count() == 5);
  for (int v = 0; v < 5; ++v) REQUIRE(m.degree(v) == 2);
  // 2-regular and connected: walk the cycle
  int prev = 0, cur = neighbor_list(m, 0)[0], steps = 1;
  while (cur != 0 && steps <= 5) {
    auto nb = neighbor_list(m, cur);
    int nxt = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = nxt;
    ++steps;
  }
  REQUIRE(steps == 5);
}

TEST_CASE("triangle free but not three colorable") {
  SimpleGraph g = grotzsch_graph();
  REQUIRE(g.vertex_count() == 11);
  REQUIRE(g.edge_count() == 20);
  CliqueResult c = max_clique(g);
  REQUIRE(c.exact);
  REQUIRE(c.size == 2);
  REQUIRE_FALSE(colorable(g, 3));
  REQUIRE(colorable(g, 4));
}

TEST_CASE("maximum cliques") {
  REQUIRE(max_clique(cycle_graph(5)).size == 2);
  REQUIRE(max_clique(complete_graph(6)).size == 6);
  REQUIRE(max_clique(SimpleGraph(0)).size == 0);
  REQUIRE(max_clique(SimpleGraph(3)).size == 1);

  CliqueResult c = max_clique(or_power(cycle_graph(5), 2));
  REQUIRE(c.exact);
  REQUIRE(c.size == 5);
  REQUIRE(c.vertices.size() == 5);
  SimpleGraph p = or_power(cycle_graph(5), 2);
  for (std::size_t i = 0; i < c.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < c.vertices.size(); ++j)
      REQUIRE(p.adjacent(c.vertices[i], c.vertices[j]));
}

TEST_CASE("clique budgets degrade to a bound") {
  SearchBudget tiny;
  tiny.max_nodes = 5;
  CliqueResult c = max_clique(or_power(cycle_graph(5), 2), tiny);
  REQUIRE_FALSE(c.exact);
  REQUIRE(c.size >= 1);
  REQUIRE(c.size <= 5);
}

TEST_CASE("power descriptors") {
  REQUIRE(parse_power_descriptor("C5").base == "C5");
  REQUIRE(parse_power_descriptor("C5").t == 1);
  REQUIRE(parse_power_descriptor("C5^3").t == 3);
  REQUIRE(parse_power_descriptor("M(C5)^4").base == "M(C5)");
  REQUIRE(parse_power_descriptor("M(C5)^4").t == 4);
  REQUIRE_THROWS_AS(parse_power_descriptor("^3"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_power_descriptor("C5^"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_power_descriptor("C5^x"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_power_descriptor("C5^0"), std::invalid_argument);
}

TEST_CASE("named graphs") {
  REQUIRE(named_graph("c7").vertex_count() == 7);
  REQUIRE(named_graph("C7").edge_count() == 7);
  REQUIRE(named_graph("k4").edge_count() == 6);
  REQUIRE(named_graph("grotzsch").vertex_count() == 11);
  REQUIRE(named_graph("M(C5)").vertex_count() == 11);
  REQUIRE_THROWS_AS(named_graph("petersen"), std::invalid_argument);
  REQUIRE_THROWS_AS(named_graph("c5x"), std::invalid_argument);
}

TEST_CASE("embedded certificates verify against their base graphs") {
  REQUIRE(verify_certificate(cycle_graph(5), shannon_c5_clique()).ok);
  REQUIRE(verify_certificate(grotzsch_graph(), grotzsch_pow4_clique28()).ok);

  CliqueCertificate tampered = grotzsch_pow4_clique28();
  tampered.members[3] = {0, 0, 0, 0};
  REQUIRE_FALSE(verify_certificate(grotzsch_graph(), tampered).ok);

  CliqueCertificate dup = shannon_c5_clique();
  dup.members[1] = dup.members[0];
  CertificateCheck chk = verify_certificate(cycle_graph(5), dup);
  REQUIRE_FALSE(chk.ok);
  REQUIRE(chk.first == 0);
  REQUIRE(chk.second == 1);
  REQUIRE(chk.reason == "duplicate members");

  CliqueCertificate arity = shannon_c5_clique();
  arity.members[2].push_back(0);
  REQUIRE_FALSE(verify_certificate(cycle_graph(5), arity).ok);
}

TEST_CASE("certificate files match the embedded tables") {
  std::ifstream c5(data_path("/data/c5_pow2_clique5.cert"));
  REQUIRE(c5.good());
  CliqueCertificate a = read_certificate(c5);
  REQUIRE(a.descriptor == shannon_c5_clique().descriptor);
  REQUIRE(a.members == shannon_c5_clique().members);

  std::ifstream gz(data_path("/data/grotzsch_pow4_clique28.cert"));
  REQUIRE(gz.good());
  CliqueCertificate b = read_certificate(gz);
  REQUIRE(b.descriptor == grotzsch_pow4_clique28().descriptor);
  REQUIRE(b.members == grotzsch_pow4_clique28().members);
}

TEST_CASE("certificate io round trips and rejects damage") {
  std::ostringstream os;
  write_certificate(os, grotzsch_pow4_clique28());
  std::istringstream is(os.str());
  CliqueCertificate back = read_certificate(is);
  REQUIRE(back.members == grotzsch_pow4_clique28().members);

  std::istringstream empty("");
  REQUIRE_THROWS_AS(read_certificate(empty), std::invalid_argument);
  std::istringstream badhdr("C5^2\nx 2\n");
  REQUIRE_THROWS_AS(read_certificate(badhdr), std::invalid_argument);
  std::istringstream wrongt("C5^2\n2 3\n0 0 0\n1 2 0\n");
  REQUIRE_THROWS_AS(read_certificate(wrongt), std::invalid_argument);
  std::istringstream trunc("C5^2\n2 2\n0 0\n1\n");
  REQUIRE_THROWS_AS(read_certificate(trunc), std::invalid_argument);
}

TEST_CASE("capacity bounds") {
  CapacityBound direct = capacity_lower_bound(cycle_graph(5), 2);
  REQUIRE(direct.clique_size == 5);
  REQUIRE(direct.t == 2);
  REQUIRE(direct.exact);
  REQUIRE(std::abs(direct.value - std::sqrt(5.0)) < 1e-12);

  CapacityBound c5 = capacity_from_certificate(cycle_graph(5), shannon_c5_clique());
  REQUIRE(std::abs(c5.value * c5.value - 5.0) < 1e-9);

  CapacityBound gz = capacity_from_certificate(grotzsch_graph(), grotzsch_pow4_clique28());
  REQUIRE(gz.clique_size == 28);
  REQUIRE(gz.t == 4);
  REQUIRE(std::abs(gz.value - 2.30033) < 1e-4);
  REQUIRE(gz.clique_size > 25);

  CliqueCertificate tampered = shannon_c5_clique();
  tampered.members[1] = {1, 1};
  REQUIRE_THROWS_AS(capacity_from_certificate(cycle_graph(5), tampered),
                    std::invalid_argument);
}
