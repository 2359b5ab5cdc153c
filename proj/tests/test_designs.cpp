#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <set>
#include <sstream>

#include "caring/designs.hpp"

using namespace caring;

namespace {
std::string data_path(const char* rel) { return std::string(CARING_SOURCE_DIR) + rel; }
}  // namespace

TEST_CASE("nine point base system") {
  KirkmanSystem ks = kts9_base();
  REQUIRE(ks.n() == 9);
  REQUIRE(ks.class_count() == 4);
  REQUIRE(is_resolvable(ks).ok);
  REQUIRE(is_good_kts(ks).ok);
}

TEST_CASE("power construction grows the system") {
  int n = 3;
  for (int t : {2, 3, 4}) {
    n *= 3;
    KirkmanSystem ks = kts_power_of_three(t);
    REQUIRE(ks.n() == n);
    REQUIRE(ks.class_count() == (n - 1) / 2);
    std::size_t triples = 0;
    for (const auto& cl : ks.classes()) {
      REQUIRE(cl.size() == static_cast<std::size_t>(n) / 3);
      triples += cl.size();
    }
    REQUIRE(triples == static_cast<std::size_t>(n) * (n - 1) / 6);
    REQUIRE(is_resolvable(ks).ok);
  }
  REQUIRE(is_good_kts(kts_power_of_three(3)).ok);
}

TEST_CASE("power construction guards") {
  REQUIRE_THROWS_AS(kts_power_of_three(1), std::invalid_argument);
  REQUIRE_THROWS_AS(kts_power_of_three(8), std::invalid_argument);
  REQUIRE(kts_power_of_three(5, 5).n() == 243);  // raised guard is honored
}

TEST_CASE("steiner and resolvability diagnostics") {
  TripleSystem ts{7, {{0, 1, 2}, {0, 1, 3}}};
  SteinerCheck st = is_steiner(ts);
  REQUIRE_FALSE(st.ok);
  REQUIRE(st.a == 0);
  REQUIRE(st.b == 1);
  REQUIRE(st.coverage == 2);

  std::vector<std::vector<Triple>> cls = kts9_base().classes();
  cls[0][0] = {0, 1, 3};  // point 1 now repeated in class 0
  ResolvabilityCheck rc = is_resolvable(KirkmanSystem(9, cls));
  REQUIRE_FALSE(rc.ok);
  REQUIRE(rc.class_index == 0);
}

TEST_CASE("system constructor validates triples") {
  REQUIRE_THROWS_AS(KirkmanSystem(8, {}), std::invalid_argument);   // not a multiple of 3
  REQUIRE_THROWS_AS(KirkmanSystem(9, {{{0, 2, 1}}}), std::invalid_argument);  // unsorted
  REQUIRE_THROWS_AS(KirkmanSystem(9, {{{0, 1, 9}}}), std::invalid_argument);  // out of range
}

TEST_CASE("class coloring touches every vertex twice per class") {
  for (int t : {2, 3}) {
    KirkmanSystem ks = kts_power_of_three(t);
    EdgeColoring c = kts_coloring(ks);
    REQUIRE(c.k() == ks.class_count());
    REQUIRE(c.colors_used() == c.k());
    for (int v = 0; v < c.n(); ++v) {
      std::vector<int> deg(c.k(), 0);
      for (int u = 0; u < c.n(); ++u)
        if (u != v) ++deg[c.color(u, v)];
      for (int d : deg) REQUIRE(d == 2);
    }
  }
}

TEST_CASE("class coloring rejects broken systems") {
  std::vector<std::vector<Triple>> cls = kts9_base().classes();
  cls[1] = cls[0];  // pairs of class 0 now covered twice
  REQUIRE_THROWS_AS(kts_coloring(KirkmanSystem(9, cls)), std::invalid_argument);
}

TEST_CASE("fifteen point fixture is resolvable but not good") {
  std::ifstream in(data_path("/tests/data/kts15.txt"));
  REQUIRE(in.good());
  KirkmanSystem ks = read_kts(in);
  REQUIRE(ks.n() == 15);
  REQUIRE(ks.class_count() == 7);
  REQUIRE(is_resolvable(ks).ok);

  GoodnessCheck gc = is_good_kts(ks);
  REQUIRE_FALSE(gc.ok);
  REQUIRE(gc.quad == std::array<int, 4>{0, 3, 8, 14});

  // frozen number of 4-subsets whose six edges sit in at most three classes
  EdgeColoring c = kts_coloring(ks);
  int low_spread = 0;
  for (const auto& q : subsets(15, 4)) {
    std::set<int> seen;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) seen.insert(c.color(q[i], q[j]));
    if (seen.size() < 4) ++low_spread;
  }
  REQUIRE(low_spread == 14);
}

TEST_CASE("goodness requires a resolvable system") {
  std::vector<std::vector<Triple>> cls = kts9_base().classes();
  cls.pop_back();
  REQUIRE_THROWS_AS(is_good_kts(KirkmanSystem(9, cls)), std::invalid_argument);
}

TEST_CASE("text format round trips") {
  KirkmanSystem ks = kts_power_of_three(3);
  std::ostringstream os;
  write_kts(os, ks);
  std::istringstream is(os.str());
  KirkmanSystem back = read_kts(is);
  std::ostringstream os2;
  write_kts(os2, back);
  REQUIRE(os.str() == os2.str());
}

TEST_CASE("reader rejects malformed input") {
  auto bad = [](const std::string& text) {
    std::istringstream is(text);
    REQUIRE_THROWS_AS(read_kts(is), std::runtime_error);
  };
  bad("");
  bad("9 3\n");            // wrong class count for n
  bad("10 4\n");           // not a multiple of 3
  bad("9 4\nclass 1\n");   // wrong class index
  bad("9 4\nclass 0\n0 1 1\n");  // repeated point
  bad("9 4\nclass 0\n0 1 9\n");  // out of range
  bad("9 4\nclass 0\n0 1 2\n3 4 5\n6 7 8\n");  // truncated

  // structurally complete but the pairs of class 0 repeat: caught on read
  std::vector<std::vector<Triple>> cls = kts9_base().classes();
  cls[1] = cls[0];
  std::ostringstream os;
  write_kts(os, KirkmanSystem(9, cls));
  std::istringstream is(os.str());
  REQUIRE_THROWS_AS(read_kts(is), std::runtime_error);
}
