#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace metrep {

/// An integer point in Z^n. As a metric representation every coordinate is a
/// distance, but parsed inputs may carry arbitrary integers so that the
/// realizability checks can report them.
class DistanceVector {
 public:
  DistanceVector() = default;
  explicit DistanceVector(std::vector<int> coords) : coords_(std::move(coords)) {}
  DistanceVector(std::initializer_list<int> coords) : coords_(coords) {}

  std::size_t size() const noexcept { return coords_.size(); }
  int operator[](std::size_t i) const { return coords_[i]; }
  std::span<const int> coords() const noexcept { return coords_; }

  /// Largest coordinate, or 0 for the empty vector.
  int max_coordinate() const noexcept;
  /// Number of coordinates equal to zero.
  std::size_t zero_count() const noexcept;

  /// "(x1,...,xn)" with no spaces.
  std::string to_string() const;

  friend auto operator<=>(const DistanceVector&, const DistanceVector&) = default;
  friend bool operator==(const DistanceVector&, const DistanceVector&) = default;

 private:
  std::vector<int> coords_;
};

struct DistanceVectorHash {
  std::size_t operator()(const DistanceVector& v) const noexcept;
};

/// Chebyshev distance max_i |x_i - y_i|. Throws kInvalidArgument on length mismatch.
int chebyshev_distance(const DistanceVector& x, const DistanceVector& y);

/// Adjacency in the strong product of paths: max_i |x_i - y_i| == 1.
bool strong_adjacent(const DistanceVector& x, const DistanceVector& y);

/// Undirected edge between two vectors, stored with first < second.
using VectorEdge = std::pair<DistanceVector, DistanceVector>;
/// Sorted, duplicate-free list of normalized edges.
using VectorEdgeSet = std::vector<VectorEdge>;

VectorEdge make_edge(DistanceVector a, DistanceVector b);
/// Sorts, normalizes and deduplicates in place.
void normalize(VectorEdgeSet& edges);
bool contains_edge(const VectorEdgeSet& edges, const VectorEdge& edge);

/// A finite set S of distinct vectors of common dimension n >= 1, kept in
/// lexicographic order. Index i in vectors() is the stable label of the
/// vector throughout the library (canonical graphs, oracle edge lists).
class VectorSet {
 public:
  /// Throws kInvalidArgument on n < 1, an empty list, a length mismatch or
  /// a duplicate vector.
  VectorSet(std::size_t n, std::vector<DistanceVector> vectors);
  /// Infers n from the first vector.
  explicit VectorSet(std::vector<DistanceVector> vectors);

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return vectors_.size(); }
  const std::vector<DistanceVector>& vectors() const noexcept { return vectors_; }
  const DistanceVector& operator[](std::size_t i) const { return vectors_[i]; }

  bool contains(const DistanceVector& v) const;
  std::optional<std::size_t> index_of(const DistanceVector& v) const;
  int max_coordinate() const noexcept;

  auto begin() const noexcept { return vectors_.begin(); }
  auto end() const noexcept { return vectors_.end(); }

  friend bool operator==(const VectorSet&, const VectorSet&) = default;

 private:
  std::size_t dimension_;
  std::vector<DistanceVector> vectors_;
};

}  // namespace metrep
