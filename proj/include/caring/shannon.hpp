#pragma once
// OR-power graphs, the Mycielski construction, a branch-and-bound maximum
// clique solver, and clique certificates that carry zero-error capacity
// lower bounds. A clique of size s in the t-th OR-power witnesses a capacity
// of at least s^(1/t).

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "caring/extremal.hpp"
#include "caring/graph.hpp"

namespace caring {

inline SimpleGraph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

inline SimpleGraph complete_graph(int n) {
  SimpleGraph g(n);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) g.add_edge(u, v);
  return g;
}

// vertices (i,j) -> i*h.n()+j; adjacent when adjacent in either coordinate
inline SimpleGraph or_product(const SimpleGraph& g, const SimpleGraph& h,
                              int max_vertices = 20000) {
  long long nv = static_cast<long long>(g.vertex_count()) * h.vertex_count();
  if (nv > max_vertices)
    throw std::invalid_argument("or_product: result exceeds the vertex cap");
  SimpleGraph out(static_cast<int>(nv));
  int hn = h.vertex_count();
  for (int a = 0; a < out.vertex_count(); ++a) {
    int i1 = a / hn, j1 = a % hn;
    for (int b = a + 1; b < out.vertex_count(); ++b) {
      int i2 = b / hn, j2 = b % hn;
      if (g.adjacent(i1, i2) || h.adjacent(j1, j2)) out.add_edge(a, b);
    }
  }
  return out;
}

inline SimpleGraph or_power(const SimpleGraph& g, int t, int max_vertices = 20000) {
  if (t < 1) throw std::invalid_argument("or_power: need t >= 1");
  long long nv = 1;
  for (int i = 0; i < t; ++i) {
    nv *= g.vertex_count();
    if (nv > max_vertices)
      throw std::invalid_argument("or_power: result exceeds the vertex cap");
  }
  SimpleGraph out = g;
  for (int i = 1; i < t; ++i) out = or_product(out, g, max_vertices);
  return out;
}

// originals 0..n-1, shadow of i is n+i (adjacent to the neighbors of i),
// apex 2n adjacent to every shadow
inline SimpleGraph mycielskian(const SimpleGraph& g) {
  int n = g.vertex_count();
  SimpleGraph out(2 * n + 1);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (g.adjacent(u, v)) {
        out.add_edge(u, v);
        out.add_edge(u, n + v);
        out.add_edge(v, n + u);
      }
  for (int i = 0; i < n; ++i) out.add_edge(n + i, 2 * n);
  return out;
}

inline SimpleGraph grotzsch_graph() { return mycielskian(cycle_graph(5)); }

// ---------------------------------------------------------------------------

struct CliqueResult {
  int size = 0;
  std::vector<int> vertices;
  bool exact = true;
  std::uint64_t nodes = 0;
};

namespace detail {

// smallest-last elimination order
inline std::vector<int> degeneracy_order(const SimpleGraph& g) {
  int n = g.vertex_count();
  std::vector<int> deg(n), order;
  std::vector<char> alive(n, 1);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (alive[v] && (best < 0 || deg[v] < deg[best])) best = v;
    alive[best] = 0;
    order.push_back(best);
    for (int u = 0; u < n; ++u)
      if (alive[u] && g.adjacent(best, u)) --deg[u];
  }
  return order;
}

class CliqueSolver {
 public:
  CliqueSolver(const SimpleGraph& g, const SearchBudget& budget)
      : g_(g),
        budget_(budget),
        deadline_(std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(budget.max_seconds))) {}

  CliqueResult solve() {
    CliqueResult out;
    if (g_.vertex_count() == 0) return out;
    std::vector<int> p = degeneracy_order(g_);
    std::reverse(p.begin(), p.end());  // deepest cores first for the coloring
    std::vector<int> colors;
    color_sort(p, colors);
    std::vector<int> r;
    expand(r, p, colors);
    out.size = best_;
    out.vertices = best_set_;
    std::sort(out.vertices.begin(), out.vertices.end());
    out.exact = !stopped_;
    out.nodes = nodes_;
    return out;
  }

 private:
  void tick() {
    if (++nodes_ > budget_.max_nodes) stopped_ = true;
    else if ((nodes_ & 1023) == 0 && std::chrono::steady_clock::now() > deadline_)
      stopped_ = true;
  }

  // greedy classes in the given order; rewrites p sorted by class, ascending
  void color_sort(std::vector<int>& p, std::vector<int>& colors) const {
    std::vector<std::vector<int>> classes;
    for (int v : p) {
      std::size_t c = 0;
      for (; c < classes.size(); ++c) {
        bool conflict = false;
        for (int u : classes[c])
          if (g_.adjacent(u, v)) { conflict = true; break; }
        if (!conflict) break;
      }
      if (c == classes.size()) classes.emplace_back();
      classes[c].push_back(v);
    }
    p.clear();
    colors.clear();
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (int v : classes[c]) {
        p.push_back(v);
        colors.push_back(static_cast<int>(c) + 1);
      }
  }

  void expand(std::vector<int>& r, std::vector<int>& p, std::vector<int>& colors) {
    while (!p.empty()) {
      int v = p.back(), bound = colors.back();
      if (static_cast<int>(r.size()) + bound <= best_) return;
      tick();
      if (stopped_) return;
      p.pop_back();
      colors.pop_back();
      r.push_back(v);
      if (static_cast<int>(r.size()) > best_) {
        best_ = static_cast<int>(r.size());
        best_set_ = r;
      }
      std::vector<int> np;
      for (int u : p)
        if (g_.adjacent(u, v)) np.push_back(u);
      if (!np.empty()) {
        std::vector<int> nc;
        color_sort(np, nc);
        expand(r, np, nc);
        if (stopped_) return;
      }
      r.pop_back();
    }
  }

  const SimpleGraph& g_;
  SearchBudget budget_;
  std::chrono::steady_clock::time_point deadline_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
  int best_ = 0;
  std::vector<int> best_set_;
};

}  // namespace detail

// Budget exhaustion is not an error here: the incumbent is still a clique,
// so the result degrades to a lower bound with exact == false.
inline CliqueResult max_clique(const SimpleGraph& g, const SearchBudget& budget = {}) {
  return detail::CliqueSolver(g, budget).solve();
}

// ---------------------------------------------------------------------------

struct CliqueCertificate {
  std::string descriptor;                 // base graph name plus power, e.g. "C5^2"
  std::vector<std::vector<int>> members;  // one coordinate tuple per clique member
};

struct PowerDescriptor {
  std::string base;
  int t = 1;
};

inline PowerDescriptor parse_power_descriptor(const std::string& s) {
  auto pos = s.rfind('^');
  if (pos == std::string::npos) return {s, 1};
  PowerDescriptor out{s.substr(0, pos), 0};
  std::size_t used = 0;
  try {
    out.t = std::stoi(s.substr(pos + 1), &used);
  } catch (...) {
    throw std::invalid_argument("bad power descriptor: " + s);
  }
  if (out.base.empty() || out.t < 1 || used != s.size() - pos - 1)
    throw std::invalid_argument("bad power descriptor: " + s);
  return out;
}

struct CertificateCheck {
  bool ok = true;
  int first = -1;   // offending member index (or pair, with second)
  int second = -1;
  std::string reason;
};

inline CertificateCheck verify_certificate(const SimpleGraph& base,
                                           const CliqueCertificate& cert) {
  CertificateCheck out;
  PowerDescriptor d = parse_power_descriptor(cert.descriptor);
  int count = static_cast<int>(cert.members.size());
  for (int i = 0; i < count; ++i) {
    if (static_cast<int>(cert.members[i].size()) != d.t) {
      out = {false, i, -1, "member arity differs from the descriptor power"};
      return out;
    }
    for (int x : cert.members[i])
      if (x < 0 || x >= base.vertex_count()) {
        out = {false, i, -1, "coordinate out of range for the base graph"};
        return out;
      }
  }
  for (int i = 0; i < count; ++i)
    for (int j = i + 1; j < count; ++j) {
      if (cert.members[i] == cert.members[j]) {
        out = {false, i, j, "duplicate members"};
        return out;
      }
      bool adj = false;
      for (int k = 0; k < d.t; ++k)
        if (base.adjacent(cert.members[i][k], cert.members[j][k])) {
          adj = true;
          break;
        }
      if (!adj) {
        out = {false, i, j, "members not adjacent in the power graph"};
        return out;
      }
    }
  return out;
}

inline void write_certificate(std::ostream& os, const CliqueCertificate& cert) {
  PowerDescriptor d = parse_power_descriptor(cert.descriptor);
  os << cert.descriptor << "\n" << cert.members.size() << " " << d.t << "\n";
  for (const auto& mem : cert.members) {
    for (std::size_t k = 0; k < mem.size(); ++k) os << (k ? " " : "") << mem[k];
    os << "\n";
  }
}

inline CliqueCertificate read_certificate(std::istream& is) {
  CliqueCertificate cert;
  if (!std::getline(is, cert.descriptor) || cert.descriptor.empty())
    throw std::invalid_argument("certificate: missing descriptor line");
  while (!cert.descriptor.empty() &&
         (cert.descriptor.back() == '\r' || cert.descriptor.back() == ' '))
    cert.descriptor.pop_back();
  PowerDescriptor d = parse_power_descriptor(cert.descriptor);
  long long count = 0;
  int t = 0;
  if (!(is >> count >> t)) throw std::invalid_argument("certificate: bad size header");
  if (count < 1 || count > 1'000'000) throw std::invalid_argument("certificate: bad member count");
  if (t != d.t) throw std::invalid_argument("certificate: header power differs from descriptor");
  cert.members.assign(count, std::vector<int>(t));
  for (long long i = 0; i < count; ++i)
    for (int k = 0; k < t; ++k)
      if (!(is >> cert.members[i][k]))
        throw std::invalid_argument("certificate: truncated at member " + std::to_string(i));
  return cert;
}

// the standard pentagon witness: capacity of C5 is at least sqrt(5)
inline CliqueCertificate shannon_c5_clique() {
  return {"C5^2", {{0, 0}, {1, 2}, {2, 4}, {3, 1}, {4, 3}}};
}

// 28 pairwise-adjacent tuples in the 4th OR-power of the Grotzsch graph,
// beating the 25 the pentagon construction gives on 4 coordinates
inline CliqueCertificate grotzsch_pow4_clique28() {
  return {"M(C5)^4",
          {{5, 5, 0, 0},    {1, 2, 5, 0},    {2, 4, 0, 5},   {3, 1, 0, 5},  {4, 3, 5, 0},
           {0, 0, 6, 2},    {6, 7, 1, 2},    {2, 4, 6, 2},   {3, 1, 1, 7},  {4, 3, 1, 7},
           {0, 0, 2, 9},    {1, 2, 7, 4},    {7, 9, 2, 4},   {3, 1, 7, 4},  {4, 3, 2, 9},
           {0, 0, 3, 6},    {1, 2, 3, 6},    {2, 4, 8, 1},   {8, 6, 3, 1},  {4, 3, 8, 1},
           {0, 0, 9, 3},    {1, 2, 4, 8},    {2, 4, 4, 8},   {3, 1, 9, 3},  {9, 8, 4, 3},
           {5, 10, 10, 10}, {10, 5, 10, 10}, {10, 10, 10, 10}}};
}

// lookup for certificate descriptors and the command line: "c<n>", "k<n>",
// "grotzsch" / "M(C5)"
inline SimpleGraph named_graph(const std::string& name) {
  if (name == "grotzsch" || name == "M(C5)") return grotzsch_graph();
  if (name.size() >= 2 && (name[0] == 'c' || name[0] == 'C' || name[0] == 'k' || name[0] == 'K')) {
    bool digits = true;
    for (std::size_t i = 1; i < name.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) { digits = false; break; }
    if (digits) {
      int n = std::stoi(name.substr(1));
      return (name[0] == 'c' || name[0] == 'C') ? cycle_graph(n) : complete_graph(n);
    }
  }
  throw std::invalid_argument("unknown graph name: " + name);
}

// ---------------------------------------------------------------------------

struct CapacityBound {
  double value = 0.0;  // clique_size^(1/t)
  int clique_size = 0;
  int t = 1;
  bool exact = false;  // whether clique_size is the exact clique number of the power
  std::uint64_t nodes = 0;
};

inline CapacityBound capacity_lower_bound(const SimpleGraph& g, int t,
                                          const SearchBudget& budget = {},
                                          int max_vertices = 20000) {
  SimpleGraph power = or_power(g, t, max_vertices);
  CliqueResult c = max_clique(power, budget);
  CapacityBound out;
  out.value = std::pow(static_cast<double>(c.size), 1.0 / t);
  out.clique_size = c.size;
  out.t = t;
  out.exact = c.exact;
  out.nodes = c.nodes;
  return out;
}

inline CapacityBound capacity_from_certificate(const SimpleGraph& base,
                                               const CliqueCertificate& cert) {
  CertificateCheck chk = verify_certificate(base, cert);
  if (!chk.ok)
    throw std::invalid_argument("certificate rejected: " + chk.reason +
                                " (member " + std::to_string(chk.first) +
                                (chk.second >= 0 ? " / " + std::to_string(chk.second) : "") + ")");
  PowerDescriptor d = parse_power_descriptor(cert.descriptor);
  CapacityBound out;
  out.clique_size = static_cast<int>(cert.members.size());
  out.t = d.t;
  out.value = std::pow(static_cast<double>(out.clique_size), 1.0 / d.t);
  out.exact = false;
  out.nodes = 0;
  return out;
}

}  // namespace caring
