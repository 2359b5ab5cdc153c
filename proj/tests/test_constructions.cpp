#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "caring/constructions.hpp"
#include "caring/verify.hpp"

using namespace caring;

namespace {

// per-color adjacency lists of a coloring
std::vector<std::vector<std::vector<int>>> class_adjacency(const EdgeColoring& c) {
  std::vector<std::vector<std::vector<int>>> adj(c.k(),
                                                 std::vector<std::vector<int>>(c.n()));
  for (int v = 1; v < c.n(); ++v)
    for (int u = 0; u < v; ++u) {
      int col = c.color(u, v);
      adj[col][u].push_back(v);
      adj[col][v].push_back(u);
    }
  return adj;
}

bool spanning_connected(const std::vector<std::vector<int>>& adj) {
  int n = static_cast<int>(adj.size());
  std::vector<char> seen(n, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 0;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    ++reached;
    for (int y : adj[x])
      if (!seen[y]) {
        seen[y] = 1;
        stack.push_back(y);
      }
  }
  return reached == n;
}

}  // namespace

TEST_CASE("hamiltonian classes are hamiltonian cycles") {
  for (int n = 3; n <= 15; n += 2) {
    EdgeColoring c = hamiltonian_decomposition_coloring(n);
    REQUIRE(c.k() == (n - 1) / 2);
    REQUIRE(c.colors_used() == c.k());
    auto adj = class_adjacency(c);
    for (int col = 0; col < c.k(); ++col) {
      for (int v = 0; v < n; ++v) REQUIRE(adj[col][v].size() == 2);
      REQUIRE(spanning_connected(adj[col]));
    }
  }
  REQUIRE_THROWS_AS(hamiltonian_decomposition_coloring(4), std::invalid_argument);
  REQUIRE_THROWS_AS(hamiltonian_decomposition_coloring(1), std::invalid_argument);
}

TEST_CASE("paired one-factorization classes have tiny degrees") {
  for (int n = 4; n <= 10; n += 2) {
    EdgeColoring c = paired_one_factorization_coloring(n);
    REQUIRE(c.k() == n / 2);
    REQUIRE(c.colors_used() == c.k());
    auto adj = class_adjacency(c);
    for (int col = 0; col < c.k(); ++col)
      for (int v = 0; v < n; ++v)
        REQUIRE(adj[col][v].size() == (col + 1 < c.k() ? 2u : 1u));
  }
  REQUIRE_THROWS_AS(paired_one_factorization_coloring(5), std::invalid_argument);
  REQUIRE_THROWS_AS(paired_one_factorization_coloring(2), std::invalid_argument);
}

TEST_CASE("both families avoid monochromatic stars") {
  for (int n = 5; n <= 15; n += 2)
    REQUIRE(monochromatic_free(hamiltonian_decomposition_coloring(n), PatternKind::K13).pass);
  for (int n = 4; n <= 10; n += 2)
    REQUIRE(monochromatic_free(paired_one_factorization_coloring(n), PatternKind::K13).pass);
}

TEST_CASE("binary labels") {
  BinaryLabeling lab = default_binary_labels(8);
  REQUIRE(lab.n() == 8);
  REQUIRE(lab.t() == 3);
  REQUIRE(default_binary_labels(9).t() == 4);
  REQUIRE(default_binary_labels(2).t() == 1);
  // coordinate 0 is the most significant bit
  REQUIRE(lab.bit(5, 0) == 1);
  REQUIRE(lab.bit(5, 1) == 0);
  REQUIRE(lab.bit(5, 2) == 1);
  REQUIRE_THROWS_AS(BinaryLabeling(2, {0, 1, 2, 4}), std::invalid_argument);
  REQUIRE_THROWS_AS(BinaryLabeling(3, {1, 1}), std::invalid_argument);
  REQUIRE_THROWS_AS(BinaryLabeling(0, {0, 1}), std::invalid_argument);
  REQUIRE_THROWS_AS(BinaryLabeling(64, {0, 1}), std::invalid_argument);
  REQUIRE_THROWS_AS(BinaryLabeling(2, {0}), std::invalid_argument);
}

TEST_CASE("four color rounds, frozen small case") {
  ColoringRounds r = binary_four_color_rounds(4);
  REQUIRE(r.round_count() == 2);
  REQUIRE(r.palette() == 4);
  REQUIRE(r.round(0).colors() == std::vector<int>{0, 2, 2, 2, 2, 1});
  REQUIRE(r.round(1).colors() == std::vector<int>{2, 0, 3, 3, 1, 2});
}

TEST_CASE("round family reaches every four subset") {
  for (int n : {5, 8, 16}) {
    VerifyReport rep = rounds_rainbow_p4(binary_four_color_rounds(n));
    REQUIRE(rep.pass);
    REQUIRE(rep.min_rainbow_per_subset >= 4);
  }
  REQUIRE(rounds_rainbow_p4(binary_four_color_rounds(8)).min_rainbow_per_subset == 8);
  REQUIRE(rounds_rainbow_p4(binary_four_color_rounds(16)).min_rainbow_per_subset == 8);
}

TEST_CASE("ternary encoding halves the palette and keeps the property") {
  ColoringRounds r = binary_four_color_rounds(8);
  ColoringRounds t3 = encode_rounds_to_ternary(r);
  REQUIRE(t3.palette() == 3);
  REQUIRE(t3.round_count() == 2 * r.round_count());
  VerifyReport rep = rounds_rainbow_p4(t3);
  REQUIRE(rep.pass);
  REQUIRE(rep.min_rainbow_per_subset == 8);
  REQUIRE_THROWS_AS(encode_rounds_to_ternary(t3), std::invalid_argument);
}

TEST_CASE("the symbol pair code separates any three colors") {
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      for (int c = b + 1; c < 4; ++c) {
        ColoringRounds one(3, 4, {EdgeColoring(3, 4, {a, b, c})});
        ColoringRounds enc = encode_rounds_to_ternary(one);
        bool separated = false;
        for (const auto& round : enc.rounds()) {
          const auto& cs = round.colors();
          if (cs[0] != cs[1] && cs[0] != cs[2] && cs[1] != cs[2]) separated = true;
        }
        REQUIRE(separated);
      }
}

TEST_CASE("two ones of four property") {
  REQUIRE(has_two_ones_of_four_property(BinaryLabeling(2, {0, 1, 2, 3})).ok);
  LabelPropertyCheck pc =
      has_two_ones_of_four_property(BinaryLabeling(3, {0, 1, 2, 3, 4, 5, 6, 7}));
  REQUIRE_FALSE(pc.ok);
  REQUIRE(pc.witness == std::array<int, 4>{0, 1, 2, 4});
}

TEST_CASE("three color rounds from labels") {
  BinaryLabeling lab(2, {0, 1, 2, 3});
  ColoringRounds r = three_color_rounds_from_labels(lab);
  REQUIRE(r.palette() == 3);
  REQUIRE(r.round_count() == 2);
  REQUIRE(r.round(0).colors() == std::vector<int>{0, 2, 2, 2, 2, 1});
  REQUIRE(rounds_triangle_multicolored(r, 2).pass);

  try {
    three_color_rounds_from_labels(BinaryLabeling(3, {0, 1, 2, 3, 4, 5, 6, 7}));
    FAIL("expected label_property_error");
  } catch (const label_property_error& e) {
    REQUIRE(e.witness == std::array<int, 4>{0, 1, 2, 4});
  }
}
