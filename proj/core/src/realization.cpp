#include "metrep/realization.hpp"

#include <algorithm>
#include <string>

#include "metrep/error.hpp"

namespace metrep {

Realization::Realization(Graph graph, OrderedVertexSet landmarks)
    : graph_(std::move(graph)),
      landmarks_(std::move(landmarks)),
      representations_(metric_representations(graph_, landmarks_)),
      realized_set_(representation_set(graph_, landmarks_)) {}

std::optional<Vertex> Realization::vertex_of(const DistanceVector& x) const {
  auto it = std::find(representations_.begin(), representations_.end(), x);
  if (it == representations_.end()) return std::nullopt;
  return static_cast<Vertex>(it - representations_.begin());
}

bool StrongGrid::contains(const DistanceVector& x) const {
  if (x.size() != dimension) return false;
  return std::all_of(x.coords().begin(), x.coords().end(),
                     [this](int c) { return c >= 0 && c < order; });
}

StrongGrid StrongGrid::minimal_for(const VectorSet& s) {
  return StrongGrid{s.dimension(), 1 + std::max(0, s.max_coordinate())};
}

VectorEdgeSet project_realization(const Realization& r) {
  VectorEdgeSet edges;
  edges.reserve(r.graph().edge_count());
  for (const auto& [u, v] : r.graph().edges()) {
    const auto& x = r.representation(u);
    const auto& y = r.representation(v);
    // Adjacent vertices differ by at most one in every landmark distance and
    // are resolved, so the image is always a strong-grid edge.
    if (!strong_adjacent(x, y)) {
      throw Error(ErrorCode::kInternalVerification,
                  "projected edge " + x.to_string() + "-" + y.to_string() +
                      " is not strong-adjacent");
    }
    edges.push_back(make_edge(x, y));
  }
  normalize(edges);
  return edges;
}

Embedding embed_graph(const Graph& g, const OrderedVertexSet& w, std::optional<int> order) {
  Realization r(g, w);
  StrongGrid grid = StrongGrid::minimal_for(r.realized_set());
  if (order) {
    if (*order < grid.order) {
      throw Error(ErrorCode::kInvalidArgument,
                  "grid order " + std::to_string(*order) + " is below the minimum " +
                      std::to_string(grid.order));
    }
    grid.order = *order;
  }
  return Embedding{grid, r.representations(), project_realization(r)};
}

}  // namespace metrep
