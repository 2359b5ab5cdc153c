#pragma once
// Edge colorings of K_n and multi-round families, with a plain text format:
// header "n r p" (vertices, rounds, palette), then one line per round holding
// C(n,2) color ids in canonical edge order.

#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "caring/graph.hpp"

namespace caring {

class EdgeColoring {
 public:
  EdgeColoring() = default;

  EdgeColoring(int n, int k, std::vector<int> colors) : n_(n), k_(k), color_(std::move(colors)) {
    if (n < 2) throw std::invalid_argument("EdgeColoring: need n >= 2");
    if (k < 1) throw std::invalid_argument("EdgeColoring: need k >= 1");
    if (static_cast<std::int64_t>(color_.size()) != edge_count(n))
      throw std::invalid_argument("EdgeColoring: need exactly C(n,2) entries");
    for (int c : color_)
      if (c < 0 || c >= k) throw std::invalid_argument("EdgeColoring: color id out of range");
  }

  int n() const { return n_; }
  int k() const { return k_; }

  int color(int u, int v) const { return color_[edge_index(u, v, n_)]; }
  int color_edge(EdgeId e) const {
    if (e < 0 || e >= static_cast<EdgeId>(color_.size()))
      throw std::invalid_argument("EdgeColoring: edge id out of range");
    return color_[e];
  }
  const std::vector<int>& colors() const { return color_; }

  int colors_used() const {
    std::vector<char> seen(k_, 0);
    for (int c : color_) seen[c] = 1;
    int t = 0;
    for (char s : seen) t += s;
    return t;
  }

 private:
  int n_ = 0, k_ = 0;
  std::vector<int> color_;
};

class ColoringRounds {
 public:
  ColoringRounds() = default;

  ColoringRounds(int n, int palette, std::vector<EdgeColoring> rounds)
      : n_(n), palette_(palette), rounds_(std::move(rounds)) {
    if (rounds_.empty()) throw std::invalid_argument("ColoringRounds: need at least one round");
    if (palette_ < 1) throw std::invalid_argument("ColoringRounds: palette must be positive");
    for (const auto& r : rounds_) {
      if (r.n() != n_) throw std::invalid_argument("ColoringRounds: round with wrong n");
      if (r.k() != palette_)
        throw std::invalid_argument("ColoringRounds: round palette differs from declared");
    }
  }

  int n() const { return n_; }
  int palette() const { return palette_; }
  int round_count() const { return static_cast<int>(rounds_.size()); }
  const EdgeColoring& round(int i) const { return rounds_.at(i); }
  const std::vector<EdgeColoring>& rounds() const { return rounds_; }

 private:
  int n_ = 0, palette_ = 0;
  std::vector<EdgeColoring> rounds_;
};

inline void write_rounds(std::ostream& os, const ColoringRounds& cr) {
  os << cr.n() << ' ' << cr.round_count() << ' ' << cr.palette() << '\n';
  for (const auto& round : cr.rounds()) {
    const auto& c = round.colors();
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << '\n';
  }
}

inline ColoringRounds read_rounds(std::istream& is) {
  long long n, r, p;
  if (!(is >> n >> r >> p)) throw std::runtime_error("rounds: line 1: expected header \"n r p\"");
  if (n < 2 || r < 1 || p < 1) throw std::runtime_error("rounds: line 1: bad header values");
  std::vector<EdgeColoring> rounds;
  std::int64_t m = edge_count(static_cast<int>(n));
  for (long long i = 0; i < r; ++i) {
    std::vector<int> colors(m);
    for (std::int64_t j = 0; j < m; ++j) {
      long long c;
      if (!(is >> c))
        throw std::runtime_error("rounds: round " + std::to_string(i) + ": expected " +
                                 std::to_string(m) + " color ids, got " + std::to_string(j));
      if (c < 0 || c >= p)
        throw std::runtime_error("rounds: round " + std::to_string(i) + ": color id " +
                                 std::to_string(c) + " outside palette " + std::to_string(p));
      colors[j] = static_cast<int>(c);
    }
    rounds.emplace_back(static_cast<int>(n), static_cast<int>(p), std::move(colors));
  }
  return ColoringRounds(static_cast<int>(n), static_cast<int>(p), std::move(rounds));
}

// single colorings travel as one-round files
inline void write_coloring(std::ostream& os, const EdgeColoring& c) {
  write_rounds(os, ColoringRounds(c.n(), c.k(), {c}));
}

inline EdgeColoring read_coloring(std::istream& is) {
  ColoringRounds cr = read_rounds(is);
  if (cr.round_count() != 1) throw std::runtime_error("coloring: expected exactly one round");
  return cr.round(0);
}

}  // namespace caring
