#include "hdx/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace hdx {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
  Graph g;
  g.n = n;
  for (auto& [u, v] : edges) {
    if (u == v) throw SelfLoopError("self-loop at vertex " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n) throw DomainError("edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  for (size_t i = 1; i < edges.size(); ++i)
    if (edges[i] == edges[i - 1])
      throw OperatorError("duplicate edge (" + std::to_string(edges[i].first) + "," +
                          std::to_string(edges[i].second) + ")");
  g.edges = std::move(edges);
  g.adj.assign(n, {});
  g.incident_edge.assign(n, {});
  for (int e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges[e];
    g.adj[u].push_back(v);
    g.incident_edge[u].push_back(e);
    g.adj[v].push_back(u);
    g.incident_edge[v].push_back(e);
  }
  // adjacency built from the sorted edge list is already sorted for the
  // smaller endpoint; sort both jointly to be safe
  for (int v = 0; v < n; ++v) {
    std::vector<int> order(g.adj[v].size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.adj[v][a] < g.adj[v][b]; });
    std::vector<int> a2(order.size());
    std::vector<int> e2(order.size());
    for (size_t i = 0; i < order.size(); ++i) {
      a2[i] = g.adj[v][order[i]];
      e2[i] = g.incident_edge[v][order[i]];
    }
    g.adj[v] = std::move(a2);
    g.incident_edge[v] = std::move(e2);
  }
  return g;
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
  if (it == edges.end() || *it != std::make_pair(u, v)) return -1;
  return static_cast<int>(it - edges.begin());
}

std::optional<int> Graph::regular_degree() const {
  if (n == 0) return std::nullopt;
  size_t d = adj[0].size();
  for (const auto& a : adj)
    if (a.size() != d) return std::nullopt;
  return static_cast<int>(d);
}

bool Graph::connected() const {
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : adj[v])
      if (!seen[u]) {
        seen[u] = true;
        ++count;
        q.push(u);
      }
  }
  return count == n;
}

int Graph::diameter() const {
  int diam = 0;
  std::vector<int> dist(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<int> q;
    q.push(s);
    dist[s] = 0;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u : adj[v])
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          q.push(u);
        }
    }
    for (int v = 0; v < n; ++v) {
      if (dist[v] < 0) return -1;  // disconnected
      diam = std::max(diam, dist[v]);
    }
  }
  return diam;
}

Graph skeleton_graph(const SimplicialComplex& X) {
  std::vector<std::pair<int, int>> edges;
  if (X.dimension() >= 1) {
    edges.reserve(X.faces(1).size());
    for (const Face& e : X.faces(1)) edges.emplace_back(e[0], e[1]);
  }
  return Graph::from_edges(X.vertex_count(), std::move(edges));
}

EdgeSigning EdgeSigning::constant(int edge_count, int value) {
  EdgeSigning s(edge_count);
  for (int e = 0; e < edge_count; ++e) s.set(e, value);
  return s;
}

void EdgeSigning::set(int edge_idx, int v) {
  if (v != 1 && v != -1) throw ParameterError("edge sign must be +1 or -1");
  values_.at(edge_idx) = static_cast<signed char>(v);
}

bool EdgeSigning::complete() const {
  for (signed char v : values_)
    if (v == 0) return false;
  return true;
}

int EdgeSigning::unassigned_count() const {
  int c = 0;
  for (signed char v : values_)
    if (v == 0) ++c;
  return c;
}

EdgeSigning EdgeSigning::negated() const {
  EdgeSigning out = *this;
  for (auto& v : out.values_) v = static_cast<signed char>(-v);
  return out;
}

}  // namespace hdx
