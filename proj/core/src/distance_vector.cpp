#include "metrep/distance_vector.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "metrep/error.hpp"

namespace metrep {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kDisconnectedGraph: return "disconnected graph";
    case ErrorCode::kNotResolving: return "not a resolving set";
    case ErrorCode::kNotRealizable: return "not realizable";
    case ErrorCode::kBasicConditionFailure: return "basic condition failure";
    case ErrorCode::kMismatchedSets: return "mismatched realized sets";
    case ErrorCode::kBudgetExceeded: return "edge budget exceeded";
    case ErrorCode::kUnsupportedDimension: return "unsupported dimension";
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kInternalVerification: return "internal verification failure";
  }
  return "unknown error";
}

int DistanceVector::max_coordinate() const noexcept {
  return coords_.empty() ? 0 : *std::max_element(coords_.begin(), coords_.end());
}

std::size_t DistanceVector::zero_count() const noexcept {
  return static_cast<std::size_t>(std::count(coords_.begin(), coords_.end(), 0));
}

std::string DistanceVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(coords_[i]);
  }
  out += ')';
  return out;
}

std::size_t DistanceVectorHash::operator()(const DistanceVector& v) const noexcept {
  std::size_t seed = v.size();
  for (int c : v.coords()) {
    seed ^= std::hash<int>{}(c) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  }
  return seed;
}

int chebyshev_distance(const DistanceVector& x, const DistanceVector& y) {
  if (x.size() != y.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "vector length mismatch: " + x.to_string() + " vs " + y.to_string());
  }
  int best = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    best = std::max(best, std::abs(x[i] - y[i]));
  }
  return best;
}

bool strong_adjacent(const DistanceVector& x, const DistanceVector& y) {
  return chebyshev_distance(x, y) == 1;
}

VectorEdge make_edge(DistanceVector a, DistanceVector b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

void normalize(VectorEdgeSet& edges) {
  for (auto& [a, b] : edges) {
    if (b < a) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool contains_edge(const VectorEdgeSet& edges, const VectorEdge& edge) {
  VectorEdge key = edge.second < edge.first ? VectorEdge{edge.second, edge.first} : edge;
  return std::binary_search(edges.begin(), edges.end(), key);
}

VectorSet::VectorSet(std::size_t n, std::vector<DistanceVector> vectors)
    : dimension_(n), vectors_(std::move(vectors)) {
  if (dimension_ < 1) {
    throw Error(ErrorCode::kInvalidArgument, "vector set dimension must be at least 1");
  }
  if (vectors_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "vector set must not be empty");
  }
  for (const auto& v : vectors_) {
    if (v.size() != dimension_) {
      throw Error(ErrorCode::kInvalidArgument,
                  "vector " + v.to_string() + " does not have dimension " +
                      std::to_string(dimension_));
    }
  }
  std::sort(vectors_.begin(), vectors_.end());
  auto dup = std::adjacent_find(vectors_.begin(), vectors_.end());
  if (dup != vectors_.end()) {
    throw Error(ErrorCode::kInvalidArgument, "duplicate vector " + dup->to_string());
  }
}

VectorSet::VectorSet(std::vector<DistanceVector> vectors)
    : VectorSet(vectors.empty() ? 0 : vectors.front().size(), std::vector<DistanceVector>(vectors)) {}

bool VectorSet::contains(const DistanceVector& v) const {
  return std::binary_search(vectors_.begin(), vectors_.end(), v);
}

std::optional<std::size_t> VectorSet::index_of(const DistanceVector& v) const {
  auto it = std::lower_bound(vectors_.begin(), vectors_.end(), v);
  if (it == vectors_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vectors_.begin());
}

int VectorSet::max_coordinate() const noexcept {
  int best = 0;
  for (const auto& v : vectors_) best = std::max(best, v.max_coordinate());
  return best;
}

}  // namespace metrep
