#include "polyslice/graph.hpp"

#include <algorithm>
#include <queue>

namespace polyslice {

bool induced_connected(const Graph& g, const std::vector<int>& subset) {
  if (subset.empty()) return true;
  std::vector<char> in(g.size(), 0), seen(g.size(), 0);
  for (int v : subset) in[v] = 1;
  std::vector<int> stack{subset.front()};
  seen[subset.front()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g[v]) {
      if (in[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == subset.size();
}

namespace {

struct FlowNet {
  struct Arc {
    int to;
    int cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out;

  explicit FlowNet(int n) : out(n) {}
  void add(int u, int v, int cap) {
    out[u].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({v, cap});
    out[v].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({u, 0});
  }
  // Edmonds-Karp; capacities are small so BFS augmentation is enough.
  int max_flow(int s, int t) {
    int flow = 0;
    while (true) {
      std::vector<int> via(out.size(), -1);
      std::queue<int> q;
      q.push(s);
      via[s] = -2;
      while (!q.empty() && via[t] == -1) {
        const int u = q.front();
        q.pop();
        for (int a : out[u]) {
          if (arcs[a].cap > 0 && via[arcs[a].to] == -1) {
            via[arcs[a].to] = a;
            q.push(arcs[a].to);
          }
        }
      }
      if (via[t] == -1) return flow;
      for (int v = t; v != s;) {
        const int a = via[v];
        arcs[a].cap -= 1;
        arcs[a ^ 1].cap += 1;
        v = arcs[a ^ 1].to;
      }
      ++flow;
    }
  }
};

}  // namespace

int local_connectivity(const Graph& g, int s, int t) {
  const int n = static_cast<int>(g.size());
  const int big = n + 1;
  // Vertex v splits into v_in = 2v and v_out = 2v + 1.
  FlowNet net(2 * n);
  for (int v = 0; v < n; ++v) net.add(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
  for (int v = 0; v < n; ++v) {
    for (int w : g[v]) {
      if (v == s && w == t) {
        net.add(2 * v + 1, 2 * w, 1);
      } else if (!(v == t && w == s)) {
        net.add(2 * v + 1, 2 * w, big);
      }
    }
  }
  return net.max_flow(2 * s + 1, 2 * t);
}

int vertex_connectivity(const Graph& g) {
  const int n = static_cast<int>(g.size());
  if (n <= 1) return 0;
  int best = n - 1;
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) best = std::min(best, local_connectivity(g, s, t));
  }
  return best;
}

}  // namespace polyslice
