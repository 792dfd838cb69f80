// Cartan matrices of the simple types (Bourbaki numbering) and recognition of
// a Cartan matrix by Dynkin-diagram shape.
#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace legvar {

using IntMatrix = std::vector<std::vector<int>>;

struct SimpleType {
  char letter = 'A';
  int rank = 1;

  std::string label() const { return std::string(1, letter) + std::to_string(rank); }
  friend bool operator==(const SimpleType& a, const SimpleType& b) {
    return a.letter == b.letter && a.rank == b.rank;
  }
  friend bool operator<(const SimpleType& a, const SimpleType& b) {
    return a.letter != b.letter ? a.letter < b.letter : a.rank < b.rank;
  }
};

inline bool valid_type(char l, int r) {
  switch (l) {
    case 'A': return r >= 1;
    case 'B': return r >= 2;
    case 'C': return r >= 2;
    case 'D': return r >= 4;
    case 'E': return r >= 6 && r <= 8;
    case 'F': return r == 4;
    case 'G': return r == 2;
    default: return false;
  }
}

inline SimpleType parse_type(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("bad type label: " + s);
  SimpleType t{s[0], std::stoi(s.substr(1))};
  if (!valid_type(t.letter, t.rank)) throw std::invalid_argument("invalid type: " + s);
  return t;
}

/// Number of positive roots.
inline int positive_root_count(const SimpleType& t) {
  const int n = t.rank;
  switch (t.letter) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    default: return 6;
  }
}

/// A_ij = <alpha_i, alpha_j^vee> = 2(alpha_i, alpha_j)/(alpha_j, alpha_j), 0-based indices.
inline IntMatrix cartan_matrix(const SimpleType& t) {
  if (!valid_type(t.letter, t.rank)) throw std::invalid_argument("invalid type " + t.label());
  const int n = t.rank;
  IntMatrix a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (t.letter) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':  // alpha_n short
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 2][n - 1] = -2;
      break;
    case 'C':  // alpha_n long
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      a[n - 1][n - 2] = -2;
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':  // 1-3-4-5-...-n with 2 attached to 4
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':  // alpha_1, alpha_2 long
      link(0, 1);
      link(2, 3);
      a[1][2] = -2;
      a[2][1] = -1;
      break;
    case 'G':  // alpha_1 short
      a[0][1] = -1;
      a[1][0] = -3;
      break;
  }
  return a;
}

/// Splits a crystallographic Cartan matrix into simple components.
/// Each component lists its vertex indices in the canonical order of its type.
struct DynkinComponent {
  SimpleType type;
  std::vector<int> nodes;
};

namespace detail {

inline std::vector<int> walk_chain(const IntMatrix& a, const std::vector<int>& comp, int start) {
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while (true) {
    int next = -1;
    for (int v : comp)
      if (v != cur && v != prev && a[cur][v] != 0) next = v;
    if (next < 0) break;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

}  // namespace detail

inline std::vector<DynkinComponent> dynkin_components(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) {
    if (a[i][i] != 2) throw std::invalid_argument("Cartan matrix diagonal must be 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      int p = a[i][j] * a[j][i];
      if (a[i][j] > 0 || p > 3 || (a[i][j] == 0) != (a[j][i] == 0))
        throw std::invalid_argument("not a crystallographic Cartan matrix");
    }
  }
  std::vector<int> seen(n, 0);
  std::vector<DynkinComponent> out;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp, stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w = 0; w < n; ++w)
        if (w != v && a[v][w] != 0 && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    const int m = static_cast<int>(comp.size());
    std::vector<int> deg(n, 0);
    int edges = 0, max_mult = 1;
    for (int v : comp)
      for (int w : comp)
        if (v < w && a[v][w] != 0) {
          ++deg[v];
          ++deg[w];
          ++edges;
          max_mult = std::max(max_mult, a[v][w] * a[w][v]);
        }
    if (edges != m - 1) throw std::invalid_argument("Dynkin diagram contains a cycle");
    DynkinComponent dc;
    std::vector<int> leaves;
    int branch = -1;
    for (int v : comp) {
      if (deg[v] <= 1) leaves.push_back(v);
      if (deg[v] == 3) branch = v;
      if (deg[v] > 3) throw std::invalid_argument("Dynkin node of degree > 3");
    }
    if (m == 1) {
      dc = {{'A', 1}, comp};
    } else if (max_mult == 3) {
      if (m != 2) throw std::invalid_argument("triple edge outside G2");
      int s0 = comp[0], s1 = comp[1];
      // alpha_1 short: A_{21} = -3
      dc = {{'G', 2}, a[s1][s0] == -3 ? std::vector<int>{s0, s1} : std::vector<int>{s1, s0}};
    } else if (max_mult == 2) {
      if (branch >= 0) throw std::invalid_argument("double edge with branch node");
      // Orient the chain so the double edge is at the end or, for F4, in the middle.
      std::vector<int> chain = detail::walk_chain(a, comp, leaves[0]);
      int pos = -1;
      for (int k = 0; k + 1 < m; ++k)
        if (a[chain[k]][chain[k + 1]] * a[chain[k + 1]][chain[k]] == 2) pos = k;
      if (m == 2) {
        // B2: alpha_2 short, i.e. A_{12} = -2.
        int u = chain[0], w = chain[1];
        dc = {{'B', 2}, a[u][w] == -2 ? std::vector<int>{u, w} : std::vector<int>{w, u}};
      } else if (pos == 0 || pos == m - 2) {
        if (pos == 0) std::reverse(chain.begin(), chain.end());
        int inner = chain[m - 2], end = chain[m - 1];
        // end short <=> A_{inner,end} = -2
        char l = a[inner][end] == -2 ? 'B' : 'C';
        dc = {{l, m}, chain};
      } else if (m == 4 && pos == 1) {
        // F4: alpha_1, alpha_2 long, so A_{23} = -2 with 1-based labels.
        if (a[chain[1]][chain[2]] != -2) std::reverse(chain.begin(), chain.end());
        dc = {{'F', 4}, chain};
      } else {
        throw std::invalid_argument("unrecognized doubly-laced diagram");
      }
    } else if (branch < 0) {
      dc = {{'A', m}, detail::walk_chain(a, comp, leaves[0])};
    } else {
      // Legs from the branch node.
      std::vector<std::vector<int>> legs;
      for (int w : comp)
        if (w != branch && a[branch][w] != 0) {
          std::vector<int> leg{w};
          int prev = branch, cur = w;
          while (true) {
            int next = -1;
            for (int x : comp)
              if (x != cur && x != prev && a[cur][x] != 0) next = x;
            if (next < 0) break;
            leg.push_back(next);
            prev = cur;
            cur = next;
          }
          legs.push_back(leg);
        }
      std::sort(legs.begin(), legs.end(),
                [](const auto& x, const auto& y) { return x.size() < y.size(); });
      std::size_t p = legs[0].size(), q = legs[1].size(), r = legs[2].size();
      std::vector<int> order;
      if (p == 1 && q == 1) {
        // D_m: chain from the end of the long leg to the branch, then the two short legs.
        std::vector<int> longleg = legs[2];
        std::reverse(longleg.begin(), longleg.end());
        order = longleg;
        order.push_back(branch);
        order.push_back(legs[0][0]);
        order.push_back(legs[1][0]);
        dc = {{'D', m}, order};
      } else if (p == 1 && q == 2 && r >= 2 && r <= 4) {
        // E: 1 = end of leg of length 2, 2 = short leg, 3, 4 = branch, 5.. = long leg.
        order = {legs[1][1], legs[0][0], legs[1][0], branch};
        for (int v : legs[2]) order.push_back(v);
        dc = {{'E', m}, order};
      } else {
        throw std::invalid_argument("unrecognized branched diagram");
      }
    }
    out.push_back(dc);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.type < y.type; });
  return out;
}

/// True when the submatrix of a on `nodes` equals the canonical Cartan matrix of t.
inline bool matches_canonical(const IntMatrix& a, const DynkinComponent& c) {
  IntMatrix canon = cartan_matrix(c.type);
  for (std::size_t i = 0; i < c.nodes.size(); ++i)
    for (std::size_t j = 0; j < c.nodes.size(); ++j)
      if (a[c.nodes[i]][c.nodes[j]] != canon[i][j]) return false;
  return true;
}

}  // namespace legvar
