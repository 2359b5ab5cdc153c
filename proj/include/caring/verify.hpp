#pragma once
// Verification of caring properties: monochromatic-freeness (structural
// shortcut cross-checked against a direct scan on small n), rainbow copies in
// every subset, and the multi-round variants. Failing checks always carry the
// canonically smallest witness (lexicographic subset order, copy-table order
// within a subset), independent of the worker count.

#include <array>
#include <atomic>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "caring/coloring.hpp"
#include "caring/graph.hpp"
#include "caring/parallel.hpp"
#include "caring/patterns.hpp"

namespace caring {

struct VerifyReport {
  bool pass = true;
  std::string check;
  // witness, set when pass == false
  std::vector<int> witness_subset;
  std::array<EdgeId, 3> witness_edges{-1, -1, -1};
  int witness_color = -1;
  int witness_round = -1;
  std::string failed_stage;  // for is_caring: "mono" or "rainbow"
  // counts; on failure subsets_checked is the canonical prefix length
  // (witness rank + 1) and the tallies are left at zero
  std::uint64_t subsets_checked = 0;
  std::uint64_t rainbow_total = 0;
  std::uint64_t min_rainbow_per_subset = 0;
};

namespace detail {

struct CopyEval {
  bool ok = true;
  std::uint64_t tally = 0;
  std::array<EdgeId, 3> edges{-1, -1, -1};
  int color = -1;
  int round = -1;
};

struct ScanResult {
  bool pass = true;
  std::uint64_t total = 0;
  std::uint64_t fail_rank = ~0ull;
  std::vector<int> witness;
  CopyEval witness_eval;
  std::uint64_t tally_sum = 0;
  std::uint64_t tally_min = 0;
};

// scan all R-subsets of [0,n); eval sees the vertices and their pairwise edge
// ids in slot order and reports ok/tally plus witness payload
template <int R, class Eval>
ScanResult scan_subsets(int n, int workers, Eval&& eval) {
  static_assert(R == 3 || R == 4);
  constexpr int E = R * (R - 1) / 2;
  ScanResult out;
  out.total = binomial(n, R);
  int w = resolve_workers(workers);

  struct Local {
    std::uint64_t fail_rank = ~0ull;
    std::array<int, R> witness{};
    CopyEval eval;
    std::uint64_t sum = 0;
    std::uint64_t min = ~0ull;
  };
  std::vector<Local> locals(w);
  std::atomic<std::uint64_t> global_fail{~0ull};

  run_chunked(out.total, w, [&](int id, std::uint64_t begin, std::uint64_t end) {
    Local& L = locals[id];
    auto start = combination_at(n, R, begin);
    std::array<int, R> vs{};
    for (int i = 0; i < R; ++i) vs[i] = start[i];
    std::array<EdgeId, E> ids{};
    for (std::uint64_t rank = begin; rank < end; ++rank) {
      if ((rank & 1023) == 0 && rank > global_fail.load(std::memory_order_relaxed)) return;
      int t = 0;
      for (int i = 0; i < R; ++i)
        for (int j = i + 1; j < R; ++j) ids[t++] = eidx(vs[i], vs[j]);
      CopyEval ev = eval(vs, ids);
      if (!ev.ok) {
        L.fail_rank = rank;
        L.witness = vs;
        L.eval = ev;
        std::uint64_t cur = global_fail.load(std::memory_order_relaxed);
        while (rank < cur && !global_fail.compare_exchange_weak(cur, rank)) {}
        return;
      }
      L.sum += ev.tally;
      L.min = std::min(L.min, ev.tally);
      // next subset in lex order
      int i = R - 1;
      while (i >= 0 && vs[i] == n - R + i) --i;
      if (i < 0) break;
      ++vs[i];
      for (int j = i + 1; j < R; ++j) vs[j] = vs[j - 1] + 1;
    }
  });

  int best = -1;
  std::uint64_t best_rank = ~0ull;
  for (int i = 0; i < w; ++i)
    if (locals[i].fail_rank < best_rank) { best_rank = locals[i].fail_rank; best = i; }
  if (best >= 0) {
    out.pass = false;
    out.fail_rank = best_rank;
    out.witness.assign(locals[best].witness.begin(), locals[best].witness.end());
    out.witness_eval = locals[best].eval;
    return out;
  }
  std::uint64_t mn = ~0ull;
  for (const auto& L : locals) {
    out.tally_sum += L.sum;
    mn = std::min(mn, L.min);
  }
  out.tally_min = (mn == ~0ull) ? 0 : mn;
  return out;
}

// --- structural monochromatic-freeness shortcuts -----------------------------

// K13-free <=> every vertex has per-color degree at most 2
inline bool k13_free_classes(const EdgeColoring& c) {
  int n = c.n(), k = c.k();
  std::vector<std::uint8_t> deg(static_cast<std::size_t>(n) * k, 0);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      int col = c.colors()[eidx(u, v)];
      if (++deg[static_cast<std::size_t>(u) * k + col] > 2) return false;
      if (++deg[static_cast<std::size_t>(v) * k + col] > 2) return false;
    }
  return true;
}

// K3-free <=> no color class contains a triangle
inline bool k3_free_classes(const EdgeColoring& c) {
  int n = c.n(), k = c.k();
  std::vector<std::vector<Bitset>> adj(k, std::vector<Bitset>(n, Bitset(n)));
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      int col = c.colors()[eidx(u, v)];
      adj[col][u].set(v);
      adj[col][v].set(u);
    }
  for (int col = 0; col < k; ++col)
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u)
        if (adj[col][u].test(v) && adj[col][u].intersects(adj[col][v])) return false;
  return true;
}

// P4-free <=> every component of every color class is a triangle or a star
inline bool p4_free_classes(const EdgeColoring& c) {
  int n = c.n(), k = c.k();
  std::vector<std::vector<std::vector<int>>> adj(k, std::vector<std::vector<int>>(n));
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      int col = c.colors()[eidx(u, v)];
      adj[col][u].push_back(v);
      adj[col][v].push_back(u);
    }
  std::vector<int> comp, stack;
  std::vector<char> seen(n);
  for (int col = 0; col < k; ++col) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int s = 0; s < n; ++s) {
      if (seen[s] || adj[col][s].empty()) continue;
      comp.clear();
      stack.assign(1, s);
      seen[s] = 1;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        comp.push_back(x);
        for (int y : adj[col][x])
          if (!seen[y]) {
            seen[y] = 1;
            stack.push_back(y);
          }
      }
      int edges = 0, max_deg = 0;
      for (int x : comp) {
        edges += static_cast<int>(adj[col][x].size());
        max_deg = std::max(max_deg, static_cast<int>(adj[col][x].size()));
      }
      edges /= 2;
      bool triangle = comp.size() == 3 && edges == 3;
      bool star = max_deg == edges;  // all edges share one endpoint
      if (!triangle && !star) return false;
    }
  }
  return true;
}

inline bool mono_free_structural(const EdgeColoring& c, PatternKind kind) {
  switch (kind) {
    case PatternKind::K3: return k3_free_classes(c);
    case PatternKind::K13: return k13_free_classes(c);
    case PatternKind::P4: return p4_free_classes(c);
  }
  return false;
}

// direct all-copies scan; used as witness finder and as the n <= 12 cross-check
template <int R>
ScanResult mono_scan(const EdgeColoring& c, PatternKind kind, int workers) {
  const auto& slots = copy_slots(kind);
  const int* col = c.colors().data();
  return scan_subsets<R>(c.n(), workers, [&](const std::array<int, R>&, const auto& ids) {
    CopyEval ev;
    for (const auto& s : slots) {
      int c0 = col[ids[s[0]]], c1 = col[ids[s[1]]], c2 = col[ids[s[2]]];
      if (c0 == c1 && c1 == c2) {
        ev.ok = false;
        ev.edges = {ids[s[0]], ids[s[1]], ids[s[2]]};
        ev.color = c0;
        return ev;
      }
    }
    return ev;
  });
}

template <int R>
ScanResult rainbow_scan(const EdgeColoring& c, PatternKind kind, int workers) {
  const auto& slots = copy_slots(kind);
  const int* col = c.colors().data();
  return scan_subsets<R>(c.n(), workers, [&](const std::array<int, R>&, const auto& ids) {
    CopyEval ev;
    for (const auto& s : slots)
      if (rainbow3(col[ids[s[0]]], col[ids[s[1]]], col[ids[s[2]]])) ++ev.tally;
    ev.ok = ev.tally > 0;
    return ev;
  });
}

inline void fill_fail(VerifyReport& r, const ScanResult& sc) {
  r.pass = false;
  r.witness_subset = sc.witness;
  r.witness_edges = sc.witness_eval.edges;
  r.witness_color = sc.witness_eval.color;
  r.witness_round = sc.witness_eval.round;
  r.subsets_checked = sc.fail_rank + 1;
}

}  // namespace detail

// ---------------------------------------------------------------------------

// no subset spans a monochromatic copy of the pattern
inline VerifyReport monochromatic_free(const EdgeColoring& c, PatternKind kind, int workers = 0) {
  VerifyReport r;
  r.check = std::string("mono-free:") + to_string(kind);
  bool structural = detail::mono_free_structural(c, kind);
  bool small = c.n() <= 12;
  detail::ScanResult sc;
  bool scanned = false;
  if (small || !structural) {
    sc = pattern_vertex_count(kind) == 3 ? detail::mono_scan<3>(c, kind, workers)
                                         : detail::mono_scan<4>(c, kind, workers);
    scanned = true;
  }
  if (small && scanned && sc.pass != structural)
    throw std::logic_error("monochromatic_free: structural check and direct scan disagree");
  if (structural) {
    r.subsets_checked = binomial(c.n(), pattern_vertex_count(kind));
    return r;
  }
  detail::fill_fail(r, sc);
  return r;
}

// every subset of the pattern's size contains a rainbow copy
inline VerifyReport rainbow_everywhere(const EdgeColoring& c, PatternKind kind, int workers = 0) {
  VerifyReport r;
  r.check = std::string("rainbow:") + to_string(kind);
  detail::ScanResult sc = pattern_vertex_count(kind) == 3
                              ? detail::rainbow_scan<3>(c, kind, workers)
                              : detail::rainbow_scan<4>(c, kind, workers);
  if (!sc.pass) {
    detail::fill_fail(r, sc);
    return r;
  }
  r.subsets_checked = sc.total;
  r.rainbow_total = sc.tally_sum;
  r.min_rainbow_per_subset = sc.tally_min;
  return r;
}

// caring = monochromatic-free and rainbow everywhere
inline VerifyReport is_caring(const EdgeColoring& c, PatternKind kind, int workers = 0) {
  VerifyReport mono = monochromatic_free(c, kind, workers);
  if (!mono.pass) {
    mono.check = std::string("caring:") + to_string(kind);
    mono.failed_stage = "mono";
    return mono;
  }
  VerifyReport rb = rainbow_everywhere(c, kind, workers);
  rb.check = std::string("caring:") + to_string(kind);
  if (!rb.pass) rb.failed_stage = "rainbow";
  return rb;
}

// every 4-subset must see a rainbow 3-edge path in some round; the tallies
// count rainbow (round, copy) pairs
inline VerifyReport rounds_rainbow_p4(const ColoringRounds& rounds, int workers = 0) {
  if (rounds.palette() != 3 && rounds.palette() != 4)
    throw std::invalid_argument("rounds_rainbow_p4: palette must be 3 or 4");
  VerifyReport r;
  r.check = "rounds-rainbow:P4";
  const auto& slots = detail::copy_slots(PatternKind::P4);
  std::vector<const int*> cols;
  for (const auto& round : rounds.rounds()) cols.push_back(round.colors().data());
  int nr = rounds.round_count();

  detail::ScanResult sc =
      detail::scan_subsets<4>(rounds.n(), workers, [&](const std::array<int, 4>&, const auto& ids) {
        detail::CopyEval ev;
        for (int ri = 0; ri < nr; ++ri) {
          const int* col = cols[ri];
          int c0 = col[ids[0]], c1 = col[ids[1]], c2 = col[ids[2]];
          int c3 = col[ids[3]], c4 = col[ids[4]], c5 = col[ids[5]];
          int six[6] = {c0, c1, c2, c3, c4, c5};
          for (const auto& s : slots)
            if (detail::rainbow3(six[s[0]], six[s[1]], six[s[2]])) ++ev.tally;
        }
        ev.ok = ev.tally > 0;
        return ev;
      });
  if (!sc.pass) {
    detail::fill_fail(r, sc);
    return r;
  }
  r.subsets_checked = sc.total;
  r.rainbow_total = sc.tally_sum;
  r.min_rainbow_per_subset = sc.tally_min;
  return r;
}

// every triangle must span at least `required` colors in its best round
inline VerifyReport rounds_triangle_multicolored(const ColoringRounds& rounds, int required,
                                                 int workers = 0) {
  if (required < 2 || required > 3)
    throw std::invalid_argument("rounds_triangle_multicolored: required must be 2 or 3");
  VerifyReport r;
  r.check = "rounds-triangle:" + std::to_string(required);
  std::vector<const int*> cols;
  for (const auto& round : rounds.rounds()) cols.push_back(round.colors().data());
  int nr = rounds.round_count();

  detail::ScanResult sc =
      detail::scan_subsets<3>(rounds.n(), workers, [&](const std::array<int, 3>&, const auto& ids) {
        detail::CopyEval ev;
        int best = 0;
        for (int ri = 0; ri < nr && best < 3; ++ri) {
          const int* col = cols[ri];
          int c0 = col[ids[0]], c1 = col[ids[1]], c2 = col[ids[2]];
          int distinct = 1 + (c1 != c0) + (c2 != c0 && c2 != c1);
          best = std::max(best, distinct);
        }
        ev.tally = best;
        ev.ok = best >= required;
        return ev;
      });
  if (!sc.pass) {
    detail::fill_fail(r, sc);
    return r;
  }
  r.subsets_checked = sc.total;
  r.rainbow_total = sc.tally_sum;
  r.min_rainbow_per_subset = sc.tally_min;
  return r;
}

}  // namespace caring
