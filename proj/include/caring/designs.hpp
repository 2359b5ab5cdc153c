#pragma once
// Kirkman triple systems: the 9-point affine-plane system, the 3^t recursion,
// structure checks, the induced edge coloring, and a text format for external
// systems ("n c" header, then per class a "class i" line and n/3 triples).

#include <array>
#include <atomic>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "caring/coloring.hpp"
#include "caring/graph.hpp"
#include "caring/parallel.hpp"
#include "caring/patterns.hpp"

namespace caring {

using Triple = std::array<int, 3>;

struct TripleSystem {
  int n = 0;
  std::vector<Triple> triples;
};

class KirkmanSystem {
 public:
  KirkmanSystem(int n, std::vector<std::vector<Triple>> classes)
      : n_(n), classes_(std::move(classes)) {
    if (n < 3 || n % 3 != 0) throw std::invalid_argument("KirkmanSystem: n must be a positive multiple of 3");
    for (const auto& cl : classes_)
      for (const auto& t : cl) {
        if (t[0] < 0 || t[2] >= n) throw std::invalid_argument("KirkmanSystem: point out of range");
        if (t[0] >= t[1] || t[1] >= t[2])
          throw std::invalid_argument("KirkmanSystem: triples must be sorted and distinct");
      }
  }

  int n() const { return n_; }
  int class_count() const { return static_cast<int>(classes_.size()); }
  const std::vector<Triple>& parallel_class(int i) const { return classes_.at(i); }
  const std::vector<std::vector<Triple>>& classes() const { return classes_; }

  TripleSystem flatten() const {
    TripleSystem ts{n_, {}};
    for (const auto& cl : classes_) ts.triples.insert(ts.triples.end(), cl.begin(), cl.end());
    return ts;
  }

 private:
  int n_;
  std::vector<std::vector<Triple>> classes_;
};

struct SteinerCheck {
  bool ok = true;
  int a = -1, b = -1;  // witness pair
  int coverage = 0;    // how often the witness pair is covered
};

struct ResolvabilityCheck {
  bool ok = true;
  int class_index = -1;
  std::string reason;
};

struct GoodnessCheck {
  bool ok = true;
  std::array<int, 4> quad{-1, -1, -1, -1};
};

// every pair of points covered by exactly one triple
inline SteinerCheck is_steiner(const TripleSystem& ts) {
  std::vector<std::uint8_t> cover(edge_count(ts.n), 0);
  for (const auto& t : ts.triples) {
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        auto& c = cover[detail::eidx(t[i], t[j])];
        if (c < 255) ++c;
      }
  }
  for (int v = 1; v < ts.n; ++v)
    for (int u = 0; u < v; ++u)
      if (cover[detail::eidx(u, v)] != 1) return {false, u, v, cover[detail::eidx(u, v)]};
  return {};
}

// every class partitions the points; every pair covered exactly once overall
inline ResolvabilityCheck is_resolvable(const KirkmanSystem& ks) {
  std::vector<std::uint8_t> hit(ks.n());
  for (int i = 0; i < ks.class_count(); ++i) {
    std::fill(hit.begin(), hit.end(), 0);
    for (const auto& t : ks.parallel_class(i))
      for (int p : t) {
        if (hit[p]) return {false, i, "point " + std::to_string(p) + " repeated in class"};
        hit[p] = 1;
      }
    for (int p = 0; p < ks.n(); ++p)
      if (!hit[p]) return {false, i, "point " + std::to_string(p) + " missing from class"};
  }
  SteinerCheck st = is_steiner(ks.flatten());
  if (!st.ok)
    return {false, -1,
            "pair {" + std::to_string(st.a) + "," + std::to_string(st.b) + "} covered " +
                std::to_string(st.coverage) + " times"};
  return {};
}

// edge {u,v} -> index of the parallel class whose triple covers it
inline EdgeColoring kts_coloring(const KirkmanSystem& ks) {
  std::vector<int> color(edge_count(ks.n()), -1);
  for (int i = 0; i < ks.class_count(); ++i)
    for (const auto& t : ks.parallel_class(i))
      for (int a = 0; a < 3; ++a)
        for (int b = a + 1; b < 3; ++b) {
          int& c = color[detail::eidx(t[a], t[b])];
          if (c != -1) throw std::invalid_argument("kts_coloring: pair covered twice");
          c = i;
        }
  for (int c : color)
    if (c == -1) throw std::invalid_argument("kts_coloring: uncovered pair");
  return EdgeColoring(ks.n(), ks.class_count(), std::move(color));
}

namespace detail {

// first 4-subset (lex order) whose 6 edges use fewer than min_distinct colors
inline std::optional<std::array<int, 4>> first_quad_below_colors(const EdgeColoring& c,
                                                                 int min_distinct, int workers) {
  int n = c.n();
  const int* col = c.colors().data();
  std::uint64_t total = binomial(n, 4);
  int w = resolve_workers(workers);
  std::vector<std::uint64_t> fail_rank(w, ~0ull);
  std::vector<std::array<int, 4>> fail_quad(w);
  std::atomic<std::uint64_t> global_fail{~0ull};

  run_chunked(total, w, [&](int id, std::uint64_t begin, std::uint64_t end) {
    auto quad = combination_at(n, 4, begin);
    int a = quad[0], b = quad[1], cc = quad[2], d = quad[3];
    std::uint64_t rank = begin;
    int ec[6];
    while (rank < end) {
      if ((rank & 1023) == 0 && rank > global_fail.load(std::memory_order_relaxed)) return;
      ec[0] = col[eidx(a, b)];
      ec[1] = col[eidx(a, cc)];
      ec[2] = col[eidx(a, d)];
      ec[3] = col[eidx(b, cc)];
      ec[4] = col[eidx(b, d)];
      ec[5] = col[eidx(cc, d)];
      int distinct = 0;
      for (int i = 0; i < 6; ++i) {
        bool fresh = true;
        for (int j = 0; j < i; ++j)
          if (ec[j] == ec[i]) { fresh = false; break; }
        distinct += fresh;
      }
      if (distinct < min_distinct) {
        fail_rank[id] = rank;
        fail_quad[id] = {a, b, cc, d};
        std::uint64_t cur = global_fail.load(std::memory_order_relaxed);
        while (rank < cur && !global_fail.compare_exchange_weak(cur, rank)) {}
        return;
      }
      ++rank;
      // advance (a,b,cc,d) to the next 4-subset in lex order
      if (d + 1 < n) { ++d; continue; }
      if (cc + 2 < n) { ++cc; d = cc + 1; continue; }
      if (b + 3 < n) { ++b; cc = b + 1; d = b + 2; continue; }
      ++a; b = a + 1; cc = a + 2; d = a + 3;
    }
  });

  int best = -1;
  std::uint64_t best_rank = ~0ull;
  for (int i = 0; i < w; ++i)
    if (fail_rank[i] < best_rank) { best_rank = fail_rank[i]; best = i; }
  if (best < 0) return std::nullopt;
  return fail_quad[best];
}

}  // namespace detail

// no 4-subset may see its 6 edges in only 3 parallel classes
inline GoodnessCheck is_good_kts(const KirkmanSystem& ks, int workers = 0) {
  ResolvabilityCheck rc = is_resolvable(ks);
  if (!rc.ok) throw std::invalid_argument("is_good_kts: system is not resolvable: " + rc.reason);
  auto quad = detail::first_quad_below_colors(kts_coloring(ks), 4, workers);
  if (quad) return {false, *quad};
  return {};
}

// ---------------------------------------------------------------------------
// constructions

// AG(2,3): points (x,y) over Z_3 mapped to 3x+y, classes = the four directions
inline KirkmanSystem kts9_base() {
  std::vector<std::vector<Triple>> classes;
  for (int m = 0; m < 3; ++m) {  // slope m lines y = m x + b
    std::vector<Triple> cl;
    for (int b = 0; b < 3; ++b) {
      Triple t{};
      for (int x = 0; x < 3; ++x) t[x] = 3 * x + (m * x + b) % 3;
      std::sort(t.begin(), t.end());
      cl.push_back(t);
    }
    classes.push_back(cl);
  }
  std::vector<Triple> vertical;
  for (int b = 0; b < 3; ++b) vertical.push_back({3 * b, 3 * b + 1, 3 * b + 2});
  classes.push_back(vertical);
  return KirkmanSystem(9, std::move(classes));
}

// Kirkman system on 3^t points. Beyond the 9-point base, three copies of the
// previous system sit on blocks A_0,A_1,A_2 (point (l,j) -> l*3^{t-1}+j); the
// copies' classes are merged index-wise and each shift j adds a cross-block
// class {{(0,a),(1,a+j),(2,a+2j)} : a mod 3^{t-1}}.
inline KirkmanSystem kts_power_of_three(int t, int guard_t = 7) {
  if (t < 2) throw std::invalid_argument("kts_power_of_three: need t >= 2");
  if (t > guard_t) throw std::invalid_argument("kts_power_of_three: t exceeds guard");
  if (t == 2) return kts9_base();
  KirkmanSystem sub = kts_power_of_three(t - 1, guard_t);
  int q = sub.n();
  std::vector<std::vector<Triple>> classes;
  for (int i = 0; i < sub.class_count(); ++i) {
    std::vector<Triple> merged;
    for (int l = 0; l < 3; ++l)
      for (const auto& tr : sub.parallel_class(i))
        merged.push_back({l * q + tr[0], l * q + tr[1], l * q + tr[2]});
    classes.push_back(std::move(merged));
  }
  for (int j = 0; j < q; ++j) {
    std::vector<Triple> cl;
    for (int a = 0; a < q; ++a) cl.push_back({a, q + (a + j) % q, 2 * q + (a + 2 * j) % q});
    classes.push_back(std::move(cl));
  }
  return KirkmanSystem(3 * q, std::move(classes));
}

// ---------------------------------------------------------------------------
// text format

inline void write_kts(std::ostream& os, const KirkmanSystem& ks) {
  os << ks.n() << ' ' << ks.class_count() << '\n';
  for (int i = 0; i < ks.class_count(); ++i) {
    os << "class " << i << '\n';
    for (const auto& t : ks.parallel_class(i)) os << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  }
}

inline KirkmanSystem read_kts(std::istream& is) {
  auto fail = [](int line, const std::string& what) {
    throw std::runtime_error("kts: line " + std::to_string(line) + ": " + what);
  };
  std::string text;
  int line = 0;
  auto next_line = [&](std::istringstream& ls) {
    while (std::getline(is, text)) {
      ++line;
      if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
      ls = std::istringstream(text);
      return true;
    }
    return false;
  };

  std::istringstream ls;
  if (!next_line(ls)) fail(1, "empty input");
  long long n, c;
  if (!(ls >> n >> c)) fail(line, "expected header \"n c\"");
  if (n < 3 || n % 3 != 0) fail(line, "n must be a positive multiple of 3");
  if (c != (n - 1) / 2)
    fail(line, "a Kirkman system on " + std::to_string(n) + " points has " +
                   std::to_string((n - 1) / 2) + " classes, header says " + std::to_string(c));

  std::vector<std::vector<Triple>> classes;
  for (long long i = 0; i < c; ++i) {
    if (!next_line(ls)) fail(line + 1, "expected \"class " + std::to_string(i) + "\"");
    std::string word;
    long long idx;
    if (!(ls >> word >> idx) || word != "class" || idx != i)
      fail(line, "expected \"class " + std::to_string(i) + "\"");
    std::vector<Triple> cl;
    for (long long j = 0; j < n / 3; ++j) {
      if (!next_line(ls)) fail(line + 1, "expected a triple");
      long long a, b, d;
      if (!(ls >> a >> b >> d)) fail(line, "expected three point ids");
      if (a < 0 || b < 0 || d < 0 || a >= n || b >= n || d >= n) fail(line, "point out of range");
      Triple t{static_cast<int>(a), static_cast<int>(b), static_cast<int>(d)};
      std::sort(t.begin(), t.end());
      if (t[0] == t[1] || t[1] == t[2]) fail(line, "repeated point in triple");
      cl.push_back(t);
    }
    classes.push_back(std::move(cl));
  }
  KirkmanSystem ks(static_cast<int>(n), std::move(classes));
  ResolvabilityCheck rc = is_resolvable(ks);
  if (!rc.ok)
    throw std::runtime_error("kts: invalid system (class " + std::to_string(rc.class_index) +
                             "): " + rc.reason);
  return ks;
}

}  // namespace caring
