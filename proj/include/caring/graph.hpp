#pragma once
// Complete-graph combinatorics (canonical edge indexing, subset streams) and
// a bitset-backed simple graph with edge-list text I/O.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace caring {

using EdgeId = int;

inline std::int64_t edge_count(int n) {
  return static_cast<std::int64_t>(n) * (n - 1) / 2;
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace detail {
// colex rank of the pair {u,v}, u < v; independent of n
inline EdgeId eidx(int u, int v) { return v * (v - 1) / 2 + u; }
}  // namespace detail

// Canonical edge order is colexicographic by sorted pair:
// (0,1), (0,2), (1,2), (0,3), ...
inline EdgeId edge_index(int u, int v, int n) {
  if (u == v) throw std::invalid_argument("edge_index: loop");
  if (u > v) std::swap(u, v);
  if (u < 0 || v >= n) throw std::invalid_argument("edge_index: vertex out of range");
  return detail::eidx(u, v);
}

inline std::pair<int, int> edge_endpoints(EdgeId e, int n) {
  if (e < 0 || e >= edge_count(n)) throw std::invalid_argument("edge_endpoints: id out of range");
  int v = 1;
  while (detail::eidx(0, v + 1) <= e) ++v;
  return {e - detail::eidx(0, v), v};
}

// ---------------------------------------------------------------------------
// sorted r-subsets of {0..n-1} in lexicographic order

inline bool next_combination(std::vector<int>& c, int n) {
  int r = static_cast<int>(c.size());
  for (int i = r - 1; i >= 0; --i) {
    if (c[i] < n - r + i) {
      ++c[i];
      for (int j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// the subset of the given lexicographic rank
inline std::vector<int> combination_at(int n, int r, std::uint64_t rank) {
  std::vector<int> c(r);
  int v = 0;
  for (int i = 0; i < r; ++i) {
    while (true) {
      std::uint64_t block = binomial(n - 1 - v, r - 1 - i);
      if (rank < block) break;
      rank -= block;
      ++v;
    }
    c[i] = v++;
  }
  return c;
}

class SubsetRange {
 public:
  SubsetRange(int n, int r) : n_(n), r_(r) {
    if (r < 1 || r > n) throw std::invalid_argument("subsets: need 1 <= r <= n");
  }

  std::uint64_t size() const { return binomial(n_, r_); }

  class iterator {
   public:
    iterator() = default;
    iterator(int n, int r) : n_(n), cur_(r), live_(true) {
      for (int i = 0; i < r; ++i) cur_[i] = i;
    }
    const std::vector<int>& operator*() const { return cur_; }
    iterator& operator++() {
      live_ = next_combination(cur_, n_);
      return *this;
    }
    bool operator!=(const iterator&) const { return live_; }

   private:
    int n_ = 0;
    std::vector<int> cur_;
    bool live_ = false;
  };

  iterator begin() const { return iterator(n_, r_); }
  iterator end() const { return iterator(); }

 private:
  int n_, r_;
};

inline SubsetRange subsets(int n, int r) { return SubsetRange(n, r); }

// ---------------------------------------------------------------------------
// dynamic bitset, the workhorse of adjacency and clique search

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int size() const { return n_; }
  void set(int i) { w_[i >> 6] |= 1ull << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
  }

  bool any() const {
    for (auto x : w_)
      if (x) return true;
    return false;
  }

  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  void and_with(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  }

  int find_first() const { return find_next(-1); }

  int find_next(int i) const {  // first set bit > i, or -1
    int word = (i + 1) >> 6;
    if (word >= static_cast<int>(w_.size())) return -1;
    std::uint64_t x = w_[word] & (~0ull << ((i + 1) & 63));
    while (true) {
      if (x) return (word << 6) + std::countr_zero(x);
      if (++word >= static_cast<int>(w_.size())) return -1;
      x = w_[word];
    }
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n) : n_(n), adj_(n, Bitset(n)) {
    if (n < 0) throw std::invalid_argument("SimpleGraph: negative order");
  }

  int vertex_count() const { return n_; }
  std::uint64_t edge_count() const { return m_; }

  void add_edge(int u, int v) {
    check(u);
    check(v);
    if (u == v) throw std::invalid_argument("SimpleGraph: self loop");
    if (adj_[u].test(v)) return;  // no parallel edges
    adj_[u].set(v);
    adj_[v].set(u);
    ++m_;
  }

  bool adjacent(int u, int v) const {
    check(u);
    check(v);
    return u != v && adj_[u].test(v);
  }

  int degree(int v) const {
    check(v);
    return adj_[v].count();
  }

  const Bitset& neighbors(int v) const {
    check(v);
    return adj_[v];
  }

 private:
  void check(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("SimpleGraph: vertex out of range");
  }

  int n_ = 0;
  std::uint64_t m_ = 0;
  std::vector<Bitset> adj_;
};

// ---------------------------------------------------------------------------
// edge-list text format: header "n m", then m lines "u v" (0-indexed)

inline void write_edge_list(std::ostream& os, const SimpleGraph& g) {
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (int v = 1; v < g.vertex_count(); ++v)
    for (int u = 0; u < v; ++u)
      if (g.adjacent(u, v)) os << u << ' ' << v << '\n';
}

inline SimpleGraph read_edge_list(std::istream& is) {
  auto fail = [](int line, const std::string& what) {
    throw std::runtime_error("edge list: line " + std::to_string(line) + ": " + what);
  };
  std::string text;
  int line = 0;
  long long n = -1, m = -1;
  SimpleGraph g;
  std::uint64_t seen = 0;
  while (std::getline(is, text)) {
    ++line;
    std::istringstream ls(text);
    if (n < 0) {
      if (!(ls >> n >> m) || n < 0 || m < 0) fail(line, "expected header \"n m\"");
      if (m > edge_count(static_cast<int>(n))) fail(line, "more edges than K_n has");
      g = SimpleGraph(static_cast<int>(n));
      continue;
    }
    long long u, v;
    if (!(ls >> u)) continue;  // blank line
    if (!(ls >> v)) fail(line, "expected \"u v\"");
    if (u < 0 || v < 0 || u >= n || v >= n) fail(line, "vertex out of range");
    if (u == v) fail(line, "self loop");
    if (g.adjacent(static_cast<int>(u), static_cast<int>(v))) fail(line, "duplicate edge");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
    ++seen;
  }
  if (n < 0) throw std::runtime_error("edge list: line 1: empty input");
  if (seen != static_cast<std::uint64_t>(m))
    throw std::runtime_error("edge list: header promises " + std::to_string(m) + " edges, found " +
                             std::to_string(seen));
  return g;
}

}  // namespace caring
