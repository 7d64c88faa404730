#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hdx/complex.hpp"
#include "hdx/errors.hpp"

namespace hdx {

/// Simple undirected graph with a canonical edge list (u < v, lexicographic)
/// and sorted adjacency lists. No self-loops, no multi-edges.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adj;
  std::vector<std::vector<int>> incident_edge;  // parallel to adj: edge index

  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

  int edge_count() const { return static_cast<int>(edges.size()); }
  /// Index into `edges`, or -1 when {u,v} is not an edge.
  int edge_index(int u, int v) const;
  bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

  /// Common degree when the graph is regular.
  std::optional<int> regular_degree() const;

  bool connected() const;
  /// Longest shortest path; -1 when disconnected.
  int diameter() const;
};

/// The 1-skeleton (vertices and edges) of a complex.
Graph skeleton_graph(const SimplicialComplex& X);

/// Assignment of +1/-1 to the edges of a graph, possibly partial.
/// Values are stored by edge index; 0 marks an unassigned edge.
class EdgeSigning {
 public:
  EdgeSigning() = default;
  explicit EdgeSigning(int edge_count) : values_(edge_count, 0) {}
  static EdgeSigning constant(int edge_count, int value);

  int size() const { return static_cast<int>(values_.size()); }
  int value(int edge_idx) const { return values_.at(edge_idx); }
  void set(int edge_idx, int v);
  void clear(int edge_idx) { values_.at(edge_idx) = 0; }

  bool complete() const;
  int unassigned_count() const;

  EdgeSigning negated() const;
  bool operator==(const EdgeSigning&) const = default;

 private:
  std::vector<signed char> values_;
};

}  // namespace hdx
