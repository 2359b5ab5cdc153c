#pragma once
// Exhaustive oracles for small instances: minimum colors for mono-free /
// rainbow-everywhere / caring colorings, the local-rainbow threshold f, the
// mono-triangle-avoidance feasibility test, and the minimum round count p.
// Backtracking over edges in canonical order; colors enter in first-use order
// (the first edge is always color 0), and per-class structure is maintained
// incrementally. Guards and budgets are configuration, never hard-coded.

#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "caring/coloring.hpp"
#include "caring/graph.hpp"
#include "caring/patterns.hpp"

namespace caring {

struct SearchBudget {
  std::uint64_t max_nodes = 50'000'000;
  double max_seconds = 60.0;
  int max_vertices = 0;  // 0 = per-operation default
  int max_colors = 0;    // 0 = per-operation default
};

class budget_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SearchResult {
  int value = -1;
  std::uint64_t nodes = 0;
  std::optional<EdgeColoring> witness;
};

struct FeasibilityResult {
  bool feasible = false;
  std::uint64_t nodes = 0;
  std::optional<EdgeColoring> witness;
};

namespace detail {

// largest edge count of a pattern-free subgraph of K_n; sound class-size caps
inline int class_cap(PatternKind kind, int n) {
  switch (kind) {
    case PatternKind::K3: return n * n / 4;                  // Mantel
    case PatternKind::K13: return n;                         // max degree 2
    case PatternKind::P4: return n % 3 == 0 ? n : n - 1;     // triangles and stars
  }
  return n * n;
}

struct SearchSpec {
  int n = 0;
  int k = 0;
  PatternKind kind = PatternKind::P4;
  bool mono_free = false;
  bool rainbow = false;
  int min_distinct = 0;  // when > 0: every 4-subset spans at least this many colors
};

class ColoringSearch {
 public:
  static constexpr int kMaxVertices = 32;  // adjacency masks are 32-bit
  static constexpr int kMaxColors = 64;

  ColoringSearch(const SearchSpec& spec, const SearchBudget& budget)
      : s_(spec),
        budget_(budget),
        m_(static_cast<int>(edge_count(spec.n))),
        deadline_(std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(budget.max_seconds))) {
    if (s_.n > kMaxVertices)
      throw std::invalid_argument("search: more than 32 vertices is unsupported");
    if (s_.k > kMaxColors)
      throw std::invalid_argument("search: more than 64 colors is unsupported");
    colors_.assign(m_, -1);
    ends_.reserve(m_);
    for (int v = 1; v < s_.n; ++v)
      for (int u = 0; u < v; ++u) ends_.push_back({u, v});
    deg_.assign(static_cast<std::size_t>(s_.k) * s_.n, 0);
    adj_.assign(static_cast<std::size_t>(s_.k) * s_.n, 0);
    size_.assign(s_.k, 0);
    if (s_.mono_free && s_.kind == PatternKind::K3)
      dcap_ = neighborhood_cap(s_.k - 1);
  }

  // In a triangle-mono-free coloring the same-color neighborhood of a vertex
  // carries only the remaining colors on its internal edges, so its size is
  // capped by the largest n those colors can still cover. Derived here from
  // the search itself instead of a lookup table; past rest = 2 the scan would
  // be as hard as the instances it is meant to speed up, so no cap is used.
  static int neighborhood_cap(int rest) {
    if (rest <= 0) return 1;
    if (rest > 2) return std::numeric_limits<int>::max();
    SearchBudget tiny;
    tiny.max_nodes = 1'000'000;
    tiny.max_seconds = 5.0;
    int best = 1;
    for (int n = 2; n <= kMaxVertices; ++n) {
      SearchSpec sub;
      sub.n = n;
      sub.k = rest;
      sub.kind = PatternKind::K3;
      sub.mono_free = true;
      try {
        ColoringSearch inner(sub, tiny);
        if (!inner.run()) break;
      } catch (const budget_exceeded&) {
        return std::numeric_limits<int>::max();
      }
      best = n;
    }
    return best;
  }

  bool run() {
    if (s_.mono_free &&
        static_cast<std::int64_t>(s_.k) * class_cap(s_.kind, s_.n) < m_)
      return false;  // not enough room for the edges, no search needed
    bool plain = s_.mono_free && !s_.rainbow && s_.min_distinct == 0;
    return plain ? dfs_dyn(0, 0) : dfs(0, 0);
  }

  std::uint64_t nodes() const { return nodes_; }
  EdgeColoring coloring() const { return EdgeColoring(s_.n, s_.k, colors_); }

 private:
  void tick() {
    if (++nodes_ > budget_.max_nodes) throw budget_exceeded("search: node budget exceeded");
    if ((nodes_ & 8191) == 0 && std::chrono::steady_clock::now() > deadline_)
      throw budget_exceeded("search: time budget exceeded");
  }

  bool class_ok(int c, int u, int v) const {
    std::size_t base = static_cast<std::size_t>(c) * s_.n;
    switch (s_.kind) {
      case PatternKind::K3:
        return deg_[base + u] < dcap_ && deg_[base + v] < dcap_ &&
               (adj_[base + u] & adj_[base + v]) == 0;
      case PatternKind::K13: return deg_[base + u] < 2 && deg_[base + v] < 2;
      case PatternKind::P4: break;
    }
    // P4: the merged component must still be a triangle or a star
    std::uint32_t comp = 0, frontier = 1u << u;
    std::uint32_t extra_u = 1u << v, extra_v = 1u << u;  // the tentative edge
    while (frontier) {
      comp |= frontier;
      std::uint32_t next = 0;
      std::uint32_t f = frontier;
      while (f) {
        int x = std::countr_zero(f);
        f &= f - 1;
        std::uint32_t row = adj_[base + x];
        if (x == u) row |= extra_u;
        if (x == v) row |= extra_v;
        next |= row;
      }
      frontier = next & ~comp;
    }
    int nv = std::popcount(comp), ne = 0, max_deg = 0;
    std::uint32_t cm = comp;
    while (cm) {
      int x = std::countr_zero(cm);
      cm &= cm - 1;
      std::uint32_t row = adj_[base + x];
      if (x == u) row |= extra_u;
      if (x == v) row |= extra_v;
      int d = std::popcount(row & comp);
      ne += d;
      max_deg = std::max(max_deg, d);
    }
    ne /= 2;
    return (nv == 3 && ne == 3) || max_deg == ne;
  }

  bool quad_ok(int a, int b, int u, int v) const {
    int six[6] = {colors_[eidx(a, b)], colors_[eidx(a, u)], colors_[eidx(a, v)],
                  colors_[eidx(b, u)], colors_[eidx(b, v)], colors_[eidx(u, v)]};
    if (s_.min_distinct > 0) {
      int distinct = 0;
      for (int i = 0; i < 6; ++i) {
        bool fresh = true;
        for (int j = 0; j < i; ++j)
          if (six[j] == six[i]) { fresh = false; break; }
        distinct += fresh;
      }
      if (distinct < s_.min_distinct) return false;
    }
    if (s_.rainbow) {
      for (const auto& sl : copy_slots(s_.kind))
        if (rainbow3(six[sl[0]], six[sl[1]], six[sl[2]])) return true;
      return false;
    }
    return true;
  }

  // constraints on subsets completed by the edge (u,v); u < v, so a quad
  // closes exactly when its two largest vertices are u and v
  bool completed_ok(int u, int v) const {
    if (s_.rainbow && s_.kind == PatternKind::K3) {
      for (int a = 0; a < u; ++a)
        if (!rainbow3(colors_[eidx(a, u)], colors_[eidx(a, v)], colors_[eidx(u, v)])) return false;
      return true;
    }
    if (s_.min_distinct > 0 || s_.rainbow) {
      for (int b = 1; b < u; ++b)
        for (int a = 0; a < b; ++a)
          if (!quad_ok(a, b, u, v)) return false;
    }
    return true;
  }

  int legal_colors(int e, int limit) const {
    auto [u, v] = ends_[e];
    int cap = class_cap(s_.kind, s_.n);
    int count = 0;
    for (int c = 0; c <= limit; ++c)
      if (size_[c] < cap && class_ok(c, u, v)) ++count;
    return count;
  }

  // fail-first branching for plain mono-free searches: color the tightest
  // edge next and give up as soon as any edge has no color left. Subset
  // constraints are absent here, so assignment order is free. The star of
  // vertex 0 goes first with nondecreasing colors: sorting it is a vertex
  // relabeling, so only canonical stars need searching.
  bool dfs_dyn(int colored, int used) {
    if (colored == m_) return true;
    int limit = std::min(used, s_.k - 1);
    int pick = -1, cmin = 0;
    if (colored < s_.n - 1) {
      pick = eidx(0, colored + 1);
      if (colored > 0) cmin = colors_[eidx(0, colored)];
    } else {
      int tightest = std::numeric_limits<int>::max();
      for (int e = 0; e < m_; ++e) {
        if (colors_[e] >= 0) continue;
        int count = legal_colors(e, limit);
        if (count == 0) return false;
        if (count < tightest) {
          tightest = count;
          pick = e;
          if (count == 1) break;
        }
      }
    }
    auto [u, v] = ends_[pick];
    int cap = class_cap(s_.kind, s_.n);
    std::array<std::pair<int, int>, kMaxColors> order;
    int cands = 0;
    for (int c = cmin; c <= limit; ++c) {
      int key = (deg_[static_cast<std::size_t>(c) * s_.n + u] +
                 deg_[static_cast<std::size_t>(c) * s_.n + v]) * 1024 + size_[c];
      int i = cands++;
      while (i > 0 && order[i - 1].first > key) {
        order[i] = order[i - 1];
        --i;
      }
      order[i] = {key, c};
    }
    for (int oi = 0; oi < cands; ++oi) {
      int c = order[oi].second;
      tick();
      if (size_[c] >= cap || !class_ok(c, u, v)) continue;
      std::size_t base = static_cast<std::size_t>(c) * s_.n;
      colors_[pick] = c;
      adj_[base + u] |= 1u << v;
      adj_[base + v] |= 1u << u;
      ++deg_[base + u];
      ++deg_[base + v];
      ++size_[c];
      if (dfs_dyn(colored + 1, used + (c == used ? 1 : 0))) return true;
      colors_[pick] = -1;
      adj_[base + u] &= ~(1u << v);
      adj_[base + v] &= ~(1u << u);
      --deg_[base + u];
      --deg_[base + v];
      --size_[c];
    }
    return false;
  }

  bool dfs(int pos, int used) {
    if (pos == m_) return true;
    auto [u, v] = ends_[pos];
    int limit = std::min(used, s_.k - 1);
    // deterministic value ordering: balanced classes first; keeps the search
    // out of lopsided prefixes that die many levels later
    std::array<std::pair<int, int>, kMaxColors> order;
    for (int c = 0; c <= limit; ++c) {
      int key = (deg_[static_cast<std::size_t>(c) * s_.n + u] +
                 deg_[static_cast<std::size_t>(c) * s_.n + v]) * 1024 + size_[c];
      int i = c;
      while (i > 0 && order[i - 1].first > key) {
        order[i] = order[i - 1];
        --i;
      }
      order[i] = {key, c};
    }
    for (int oi = 0; oi <= limit; ++oi) {
      int c = order[oi].second;
      tick();
      std::size_t base = static_cast<std::size_t>(c) * s_.n;
      if (s_.mono_free) {
        if (size_[c] >= class_cap(s_.kind, s_.n)) continue;
        if (!class_ok(c, u, v)) continue;
      }
      colors_[pos] = c;
      adj_[base + u] |= 1u << v;
      adj_[base + v] |= 1u << u;
      ++deg_[base + u];
      ++deg_[base + v];
      ++size_[c];
      if (completed_ok(u, v) && dfs(pos + 1, used + (c == used ? 1 : 0))) return true;
      colors_[pos] = -1;
      adj_[base + u] &= ~(1u << v);
      adj_[base + v] &= ~(1u << u);
      --deg_[base + u];
      --deg_[base + v];
      --size_[c];
    }
    return false;
  }

  SearchSpec s_;
  SearchBudget budget_;
  int m_;
  std::chrono::steady_clock::time_point deadline_;
  std::uint64_t nodes_ = 0;
  std::vector<int> colors_;
  std::vector<std::pair<int, int>> ends_;
  std::vector<std::uint8_t> deg_;
  std::vector<std::uint32_t> adj_;
  std::vector<int> size_;
  int dcap_ = std::numeric_limits<int>::max();
};

inline FeasibilityResult feasible_with(const SearchSpec& spec, const SearchBudget& budget) {
  ColoringSearch search(spec, budget);
  FeasibilityResult out;
  out.feasible = search.run();
  out.nodes = search.nodes();
  if (out.feasible) out.witness = search.coloring();
  return out;
}

inline void check_guard(const char* op, int n, int lo, int limit) {
  if (n < lo) throw std::invalid_argument(std::string(op) + ": n too small");
  if (n > limit)
    throw std::invalid_argument(std::string(op) + ": n exceeds guard (" + std::to_string(limit) +
                                "); raise SearchBudget::max_vertices to override");
}

// minimum k over increasing scan; every mode is satisfied by the all-distinct
// coloring, so the scan terminates at k <= C(n,2)
inline SearchResult min_colors(const char* op, SearchSpec spec, const SearchBudget& budget,
                               int kmax) {
  SearchResult out;
  for (int k = 1; k <= kmax; ++k) {
    spec.k = k;
    FeasibilityResult f = feasible_with(spec, budget);
    out.nodes += f.nodes;
    if (f.feasible) {
      out.value = k;
      out.witness = std::move(f.witness);
      return out;
    }
  }
  throw budget_exceeded(std::string(op) + ": color guard (" + std::to_string(kmax) +
                        ") reached without a feasible coloring");
}

}  // namespace detail

// ---------------------------------------------------------------------------

// least k admitting a coloring with no monochromatic copy of the pattern
inline SearchResult exact_b(int n, PatternKind kind, const SearchBudget& budget = {}) {
  int guard = budget.max_vertices ? budget.max_vertices : (kind == PatternKind::K3 ? 6 : 9);
  detail::check_guard("exact_b", n, pattern_vertex_count(kind), guard);
  int kmax = budget.max_colors ? budget.max_colors : 16;
  detail::SearchSpec spec;
  spec.n = n;
  spec.kind = kind;
  spec.mono_free = true;
  return detail::min_colors("exact_b", spec, budget, kmax);
}

// least k admitting a coloring with a rainbow copy in every subset
inline SearchResult exact_a(int n, PatternKind kind, const SearchBudget& budget = {}) {
  int guard = budget.max_vertices ? budget.max_vertices : 7;
  detail::check_guard("exact_a", n, pattern_vertex_count(kind), guard);
  int kmax = budget.max_colors ? budget.max_colors : 16;
  detail::SearchSpec spec;
  spec.n = n;
  spec.kind = kind;
  spec.rainbow = true;
  return detail::min_colors("exact_a", spec, budget, kmax);
}

// least k admitting a caring coloring (both constraints at once)
inline SearchResult exact_g(int n, PatternKind kind, const SearchBudget& budget = {}) {
  int guard = budget.max_vertices ? budget.max_vertices : 7;
  detail::check_guard("exact_g", n, pattern_vertex_count(kind), guard);
  int kmax = budget.max_colors ? budget.max_colors : 16;
  detail::SearchSpec spec;
  spec.n = n;
  spec.kind = kind;
  spec.mono_free = true;
  spec.rainbow = true;
  return detail::min_colors("exact_g", spec, budget, kmax);
}

// least k such that every 4-subset spans at least q colors
inline SearchResult exact_f(int n, int q, const SearchBudget& budget = {}) {
  int guard = budget.max_vertices ? budget.max_vertices : 8;
  detail::check_guard("exact_f", n, 4, guard);
  if (q < 1 || q > 6) throw std::invalid_argument("exact_f: need 1 <= q <= 6");
  int kmax = budget.max_colors ? budget.max_colors : 16;
  detail::SearchSpec spec;
  spec.n = n;
  spec.min_distinct = q;
  return detail::min_colors("exact_f", spec, budget, kmax);
}

// does some k-coloring of K_n avoid monochromatic triangles entirely?
inline FeasibilityResult ramsey_feasible(int n, int k, const SearchBudget& budget = {}) {
  int guard = budget.max_vertices ? budget.max_vertices : 16;
  detail::check_guard("ramsey_feasible", n, 3, guard);
  int kguard = budget.max_colors ? budget.max_colors : 3;
  if (k < 1 || k > kguard)
    throw std::invalid_argument("ramsey_feasible: k exceeds guard; raise SearchBudget::max_colors");
  detail::SearchSpec spec;
  spec.n = n;
  spec.k = k;
  spec.kind = PatternKind::K3;
  spec.mono_free = true;
  return detail::feasible_with(spec, budget);
}

// Minimum number of 3-coloring rounds such that every 4-subset sees a rainbow
// path in some round. Coverage masks are invariant under color permutation,
// so enumerating colorings with the first edge fixed to color 0 loses nothing;
// an exact set cover over the distinct masks finishes the job.
inline SearchResult exact_p(int n, const SearchBudget& budget = {}) {
  int guard = budget.max_vertices ? budget.max_vertices : 5;
  detail::check_guard("exact_p", n, 4, guard);
  int m = static_cast<int>(edge_count(n));
  std::vector<std::array<int, 4>> quads;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) quads.push_back({a, b, c, d});
  int nq = static_cast<int>(quads.size());
  if (nq > 20)
    throw std::invalid_argument("exact_p: too many 4-subsets for the exact cover stage");
  const auto& slots = detail::copy_slots(PatternKind::P4);

  SearchResult out;
  auto deadline = std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(budget.max_seconds));
  std::vector<int> colors(m, 0);
  std::vector<char> mask_seen(1u << nq, 0);
  std::vector<std::uint32_t> masks;
  std::uint32_t full = (1u << nq) - 1;
  while (true) {
    if (++out.nodes > budget.max_nodes) throw budget_exceeded("exact_p: node budget exceeded");
    if ((out.nodes & 8191) == 0 && std::chrono::steady_clock::now() > deadline)
      throw budget_exceeded("exact_p: time budget exceeded");
    std::uint32_t covered = 0;
    for (int qi = 0; qi < nq; ++qi) {
      const auto& q = quads[qi];
      int six[6] = {colors[detail::eidx(q[0], q[1])], colors[detail::eidx(q[0], q[2])],
                    colors[detail::eidx(q[0], q[3])], colors[detail::eidx(q[1], q[2])],
                    colors[detail::eidx(q[1], q[3])], colors[detail::eidx(q[2], q[3])]};
      for (const auto& sl : slots)
        if (detail::rainbow3(six[sl[0]], six[sl[1]], six[sl[2]])) {
          covered |= 1u << qi;
          break;
        }
    }
    if (!mask_seen[covered]) {
      mask_seen[covered] = 1;
      masks.push_back(covered);
    }
    // next coloring, first edge pinned to color 0
    int i = m - 1;
    while (i >= 1 && colors[i] == 2) colors[i--] = 0;
    if (i < 1) break;
    ++colors[i];
  }

  // exact minimum cover over the achievable masks: unions reachable with r
  // rounds, grown one round at a time over the (tiny) state space
  std::vector<char> reach(std::size_t{1} << nq, 0);
  for (std::uint32_t mk : masks) reach[mk] = 1;
  for (int r = 1; r <= nq + 1; ++r) {
    if (reach[full]) {
      out.value = r;
      return out;
    }
    std::vector<char> grown = reach;
    for (std::uint32_t s = 0; s <= full; ++s)
      if (reach[s])
        for (std::uint32_t mk : masks) grown[s | mk] = 1;
    reach.swap(grown);
  }
  throw budget_exceeded("exact_p: no cover found");  // unreachable: quads are coverable one by one
}

}  // namespace caring
