#pragma once

#include <optional>
#include <vector>

#include "metrep/distance_vector.hpp"
#include "metrep/graph.hpp"

namespace metrep {

/// A graph together with an ordered resolving set, plus the cached set of
/// metric representations it realizes. Construction validates connectivity and
/// the resolving property, so every live Realization satisfies both.
class Realization {
 public:
  Realization(Graph graph, OrderedVertexSet landmarks);

  const Graph& graph() const noexcept { return graph_; }
  const OrderedVertexSet& landmarks() const noexcept { return landmarks_; }
  const VectorSet& realized_set() const noexcept { return realized_set_; }
  std::size_t dimension() const noexcept { return landmarks_.size(); }

  const DistanceVector& representation(Vertex v) const { return representations_.at(v); }
  const std::vector<DistanceVector>& representations() const noexcept { return representations_; }

  /// u(x): the unique vertex whose representation is x, if any.
  std::optional<Vertex> vertex_of(const DistanceVector& x) const;

 private:
  Graph graph_;
  OrderedVertexSet landmarks_;
  std::vector<DistanceVector> representations_;
  VectorSet realized_set_;
};

/// The strong product of `dimension` copies of the path P_order, i.e. the grid
/// {0..order-1}^dimension with Chebyshev-1 adjacency.
struct StrongGrid {
  std::size_t dimension = 1;
  int order = 1;

  bool contains(const DistanceVector& x) const;
  /// Smallest grid hosting s: order = 1 + max coordinate.
  static StrongGrid minimal_for(const VectorSet& s);
};

/// G*_W: images of the edges of r's graph under v -> r(v|W).
VectorEdgeSet project_realization(const Realization& r);

struct Embedding {
  StrongGrid grid;
  /// coordinates[v] = r(v|W).
  std::vector<DistanceVector> coordinates;
  VectorEdgeSet edges;
};

/// Maps g into the strong grid through v -> r(v|W). When `order` is given it
/// must be at least 1 + max coordinate (kInvalidArgument otherwise).
/// Throws kNotResolving if w does not resolve g.
Embedding embed_graph(const Graph& g, const OrderedVertexSet& w,
                      std::optional<int> order = std::nullopt);

}  // namespace metrep
