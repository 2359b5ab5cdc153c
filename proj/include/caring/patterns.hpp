#pragma once
// The three small patterns (triangle, 3-star, 3-edge path) and the labeled
// copies they admit inside a fixed 3- or 4-vertex subset.

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "caring/graph.hpp"

namespace caring {

enum class PatternKind { K3, K13, P4 };

inline int pattern_vertex_count(PatternKind kind) { return kind == PatternKind::K3 ? 3 : 4; }

inline const char* to_string(PatternKind kind) {
  switch (kind) {
    case PatternKind::K3: return "K3";
    case PatternKind::K13: return "K13";
    case PatternKind::P4: return "P4";
  }
  return "?";
}

inline PatternKind parse_pattern(std::string_view s) {
  if (s == "K3" || s == "k3") return PatternKind::K3;
  if (s == "K13" || s == "k13") return PatternKind::K13;
  if (s == "P4" || s == "p4") return PatternKind::P4;
  throw std::invalid_argument("unknown pattern: " + std::string(s));
}

// one labeled copy: three canonical edge indices
struct PatternCopy {
  std::array<EdgeId, 3> edges;
};

namespace detail {

inline bool rainbow3(int a, int b, int c) { return a != b && a != c && b != c; }

// Copies expressed as slots into the edge list of a sorted subset.
// Slot order for a quad {a<b<c<d}: ab,ac,ad,bc,bd,cd; for a triple: ab,ac,bc.
inline int quad_slot(int i, int j) {  // i < j, positions within the subset
  static constexpr int slot[4][4] = {
      {-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  return slot[i][j];
}

inline const std::vector<std::array<int, 3>>& copy_slots(PatternKind kind) {
  static const std::vector<std::array<int, 3>> k3 = {{0, 1, 2}};
  static const std::vector<std::array<int, 3>> k13 = [] {
    std::vector<std::array<int, 3>> out;
    for (int c = 0; c < 4; ++c) {
      std::array<int, 3> copy{};
      int t = 0;
      for (int o = 0; o < 4; ++o)
        if (o != c) copy[t++] = quad_slot(std::min(c, o), std::max(c, o));
      out.push_back(copy);
    }
    return out;
  }();
  static const std::vector<std::array<int, 3>> p4 = [] {
    // paths w-x-y-z over all vertex orderings, one orientation each (w < z),
    // in lexicographic order of the ordering
    std::vector<std::array<int, 3>> out;
    std::array<int, 4> p = {0, 1, 2, 3};
    do {
      if (p[0] < p[3])
        out.push_back({quad_slot(std::min(p[0], p[1]), std::max(p[0], p[1])),
                       quad_slot(std::min(p[1], p[2]), std::max(p[1], p[2])),
                       quad_slot(std::min(p[2], p[3]), std::max(p[2], p[3]))});
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  switch (kind) {
    case PatternKind::K3: return k3;
    case PatternKind::K13: return k13;
    case PatternKind::P4: return p4;
  }
  return k3;
}

}  // namespace detail

// all labeled copies of the pattern inside the given sorted subset of K_n
inline std::vector<PatternCopy> pattern_copies(PatternKind kind, const std::vector<int>& subset,
                                               int n) {
  int r = pattern_vertex_count(kind);
  if (static_cast<int>(subset.size()) != r)
    throw std::invalid_argument("pattern_copies: subset size must match the pattern");
  for (int i = 0; i < r; ++i) {
    if (subset[i] < 0 || subset[i] >= n)
      throw std::invalid_argument("pattern_copies: vertex out of range");
    if (i > 0 && subset[i - 1] >= subset[i])
      throw std::invalid_argument("pattern_copies: subset must be sorted and distinct");
  }
  // subset edge ids in slot order
  std::array<EdgeId, 6> ids{};
  int t = 0;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) ids[t++] = detail::eidx(subset[i], subset[j]);
  std::vector<PatternCopy> out;
  for (const auto& slots : detail::copy_slots(kind))
    out.push_back({{ids[slots[0]], ids[slots[1]], ids[slots[2]]}});
  return out;
}

}  // namespace caring
