#pragma once
// Coloring constructions: Walecki Hamiltonian-cycle decomposition (odd n),
// paired round-robin one-factorization (even n), the binary four-color round
// family, its two-symbol ternary encoding, and three-color rounds from binary
// labels with the two-ones-of-four property.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "caring/coloring.hpp"
#include "caring/graph.hpp"

namespace caring {

// color of an edge in one four-color round
enum RoundColor : int { kBlue = 0, kGreen = 1, kRed = 2, kYellow = 3 };

// ---------------------------------------------------------------------------
// monochromatic-star-free colorings

// Walecki: hub n-1 plus the rotated zigzag path on Z_{n-1}; each of the
// (n-1)/2 classes is a Hamiltonian cycle.
inline EdgeColoring hamiltonian_decomposition_coloring(int n) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("hamiltonian_decomposition_coloring: need odd n >= 3");
  int m = n - 1;
  std::vector<int> color(edge_count(n), -1);
  auto paint = [&](int u, int v, int c) { color[edge_index(u, v, n)] = c; };
  for (int i = 0; i < m / 2; ++i) {
    std::vector<int> path = {i};
    for (int k = 1; k <= m / 2; ++k) {
      path.push_back((i + k) % m);
      if (k < m / 2) path.push_back(((i - k) % m + m) % m);
    }
    paint(m, path.front(), i);
    for (std::size_t j = 0; j + 1 < path.size(); ++j) paint(path[j], path[j + 1], i);
    paint(path.back(), m, i);
  }
  return EdgeColoring(n, m / 2, std::move(color));
}

// Round-robin one-factorization of K_n (even n), consecutive factors merged
// in pairs; n-1 is odd so the last factor keeps a color of its own.
inline EdgeColoring paired_one_factorization_coloring(int n) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("paired_one_factorization_coloring: need even n >= 4");
  int m = n - 1;
  std::vector<int> color(edge_count(n), -1);
  for (int r = 0; r < m; ++r) {
    int c = r / 2;
    color[edge_index(n - 1, r, n)] = c;
    for (int i = 1; i < n / 2; ++i)
      color[edge_index((r + i) % m, ((r - i) % m + m) % m, n)] = c;
  }
  return EdgeColoring(n, (n - 1 + 1) / 2, std::move(color));
}

// ---------------------------------------------------------------------------
// binary labels

class BinaryLabeling {
 public:
  BinaryLabeling(int t, std::vector<std::uint64_t> labels) : t_(t), labels_(std::move(labels)) {
    if (t < 1 || t > 63) throw std::invalid_argument("BinaryLabeling: need 1 <= t <= 63");
    int n = static_cast<int>(labels_.size());
    if (n < 2) throw std::invalid_argument("BinaryLabeling: need at least two labels");
    for (std::uint64_t l : labels_)
      if (l >> t) throw std::invalid_argument("BinaryLabeling: label wider than t bits");
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (labels_[i] == labels_[j]) throw std::invalid_argument("BinaryLabeling: labels must be distinct");
  }

  int n() const { return static_cast<int>(labels_.size()); }
  int t() const { return t_; }
  // coordinate i counts from the left (0 = most significant of the t bits)
  int bit(int vertex, int i) const { return (labels_.at(vertex) >> (t_ - 1 - i)) & 1; }
  std::uint64_t label(int vertex) const { return labels_.at(vertex); }

 private:
  int t_;
  std::vector<std::uint64_t> labels_;
};

// 0..n-1 written in binary, zero-padded to ceil(log2 n) digits
inline BinaryLabeling default_binary_labels(int n) {
  if (n < 2) throw std::invalid_argument("default_binary_labels: need n >= 2");
  int t = 1;
  while ((1ll << t) < n) ++t;
  std::vector<std::uint64_t> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i;
  return BinaryLabeling(t, std::move(labels));
}

namespace detail {

inline EdgeColoring four_color_round(const BinaryLabeling& lab, int i) {
  int n = lab.n();
  std::vector<int> color(edge_count(n));
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      int bu = lab.bit(u, i), bv = lab.bit(v, i);
      int c;
      if (bu == bv) {
        c = bu ? kGreen : kBlue;
      } else {
        bool first_difference = true;
        for (int j = 0; j < i; ++j)
          if (lab.bit(u, j) != lab.bit(v, j)) { first_difference = false; break; }
        c = first_difference ? kRed : kYellow;
      }
      color[eidx(u, v)] = c;
    }
  return EdgeColoring(n, 4, std::move(color));
}

}  // namespace detail

// round i colors {u,v} by coordinate i of the labels: blue/green when the
// bits agree (0/1), red at the first differing coordinate, yellow later
inline ColoringRounds binary_four_color_rounds(const BinaryLabeling& lab) {
  std::vector<EdgeColoring> rounds;
  for (int i = 0; i < lab.t(); ++i) rounds.push_back(detail::four_color_round(lab, i));
  return ColoringRounds(lab.n(), 4, std::move(rounds));
}

inline ColoringRounds binary_four_color_rounds(int n) {
  return binary_four_color_rounds(default_binary_labels(n));
}

// Each four-color round splits into two three-color rounds through the code
// blue->00 green->01 red->12 yellow->22; any three distinct colors stay
// distinct in one of the two symbol positions.
inline ColoringRounds encode_rounds_to_ternary(const ColoringRounds& rounds) {
  if (rounds.palette() != 4)
    throw std::invalid_argument("encode_rounds_to_ternary: expected a four-color family");
  static constexpr int kFirst[4] = {0, 0, 1, 2};
  static constexpr int kSecond[4] = {0, 1, 2, 2};
  std::vector<EdgeColoring> out;
  for (const auto& round : rounds.rounds()) {
    std::vector<int> a(round.colors().size()), b(round.colors().size());
    for (std::size_t e = 0; e < round.colors().size(); ++e) {
      a[e] = kFirst[round.colors()[e]];
      b[e] = kSecond[round.colors()[e]];
    }
    out.emplace_back(rounds.n(), 3, std::move(a));
    out.emplace_back(rounds.n(), 3, std::move(b));
  }
  return ColoringRounds(rounds.n(), 3, std::move(out));
}

// ---------------------------------------------------------------------------
// three-color rounds from labels where every four labels have a coordinate
// with exactly two ones

struct LabelPropertyCheck {
  bool ok = true;
  std::array<int, 4> witness{-1, -1, -1, -1};
};

inline LabelPropertyCheck has_two_ones_of_four_property(const BinaryLabeling& lab) {
  int n = lab.n(), t = lab.t();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          bool found = false;
          for (int i = 0; i < t && !found; ++i)
            found = lab.bit(a, i) + lab.bit(b, i) + lab.bit(c, i) + lab.bit(d, i) == 2;
          if (!found) return {false, {a, b, c, d}};
        }
  return {};
}

class label_property_error : public std::invalid_argument {
 public:
  label_property_error(const std::string& what, std::array<int, 4> witness)
      : std::invalid_argument(what), witness(witness) {}
  std::array<int, 4> witness;
};

// like the four-color rule with red and yellow identified: blue/green on
// agreeing bits, one mixed color on differing bits
inline ColoringRounds three_color_rounds_from_labels(const BinaryLabeling& lab) {
  LabelPropertyCheck pc = has_two_ones_of_four_property(lab);
  if (!pc.ok)
    throw label_property_error(
        "three_color_rounds_from_labels: labels {" + std::to_string(pc.witness[0]) + "," +
            std::to_string(pc.witness[1]) + "," + std::to_string(pc.witness[2]) + "," +
            std::to_string(pc.witness[3]) + "} have no coordinate with exactly two ones",
        pc.witness);
  int n = lab.n();
  std::vector<EdgeColoring> rounds;
  for (int i = 0; i < lab.t(); ++i) {
    std::vector<int> color(edge_count(n));
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u) {
        int bu = lab.bit(u, i), bv = lab.bit(v, i);
        color[detail::eidx(u, v)] = bu == bv ? (bu ? kGreen : kBlue) : 2;
      }
    rounds.emplace_back(n, 3, std::move(color));
  }
  return ColoringRounds(n, 3, std::move(rounds));
}

}  // namespace caring
