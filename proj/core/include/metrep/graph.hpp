#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "metrep/distance_vector.hpp"

namespace metrep {

using Vertex = int;

inline constexpr int kUnreachable = -1;

/// Finite simple undirected graph on dense vertex labels 0..vertex_count-1.
class Graph {
 public:
  explicit Graph(int vertex_count = 0);
  /// Throws kInvalidArgument on self-loops, duplicates or out-of-range labels.
  Graph(int vertex_count, std::span<const std::pair<Vertex, Vertex>> edges);

  int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool is_vertex(Vertex v) const noexcept { return v >= 0 && v < vertex_count(); }
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }

  /// All edges as (u, v) with u < v, sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  bool is_connected() const;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Ordered landmark list W = (w_1, ..., w_n). Order matters: coordinate i of a
/// metric representation is the distance to members()[i].
class OrderedVertexSet {
 public:
  OrderedVertexSet() = default;
  /// Throws kInvalidArgument on repeated members or negative labels.
  explicit OrderedVertexSet(std::vector<Vertex> members);

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Vertex>& members() const noexcept { return members_; }

  /// Throws kInvalidArgument if some member is not a vertex of g.
  void validate_for(const Graph& g) const;

  friend bool operator==(const OrderedVertexSet&, const OrderedVertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

/// Shortest-path edge counts from source; kUnreachable for other components.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// rows[i][v] = d(v, w_i). Requires g connected.
std::vector<std::vector<int>> landmark_distances(const Graph& g, const OrderedVertexSet& w);

/// r(v|W). Throws kDisconnectedGraph or kInvalidArgument.
DistanceVector metric_representation(const Graph& g, const OrderedVertexSet& w, Vertex v);

/// All representations indexed by vertex.
std::vector<DistanceVector> metric_representations(const Graph& g, const OrderedVertexSet& w);

bool is_resolving_set(const Graph& g, const OrderedVertexSet& w);

/// {r(u|W) : u in V(g)}. Throws kNotResolving if two vertices collide.
VectorSet representation_set(const Graph& g, const OrderedVertexSet& w);

struct MetricBasis {
  int dimension = 0;
  OrderedVertexSet basis;
};

/// Exhaustive search by increasing subset size; the first resolving subset in
/// lexicographic order of sorted labels is returned. K1 gives dimension 0 with
/// an empty basis. Exponential: meant for graphs of a dozen vertices or so.
MetricBasis metric_dimension(const Graph& g);

}  // namespace metrep
