#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "metrep/distance_vector.hpp"
#include "metrep/realization.hpp"

namespace metrep {

/// Two realizations of the same set are equivalent iff their projections into
/// the strong grid have the same edge set. Throws kMismatchedSets when the
/// realized sets differ.
bool are_equivalent(const Realization& a, const Realization& b);

/// Adds the strong-grid edge {u, v} (given as representations) to r's graph.
/// Throws kInvalidArgument when u or v is not realized by r, when they are not
/// strong-adjacent, or when the edge is already present.
Realization add_edge_perturb(const Realization& r, const DistanceVector& u,
                             const DistanceVector& v);

inline constexpr int kWitnessConditionCount = 5;

/// One of the five planar point patterns whose presence makes a realizable
/// S in Z^2 admit non-equivalent realizations, anchored at (alpha, beta).
struct Witness {
  int condition = 0;
  int alpha = 0;
  int beta = 0;
  /// Pattern points, sorted.
  std::vector<DistanceVector> members;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Pattern points of `condition` at anchor (alpha, beta), sorted.
/// Throws kInvalidArgument for a condition outside 1..5.
std::vector<DistanceVector> witness_pattern(int condition, int alpha, int beta);

/// Least witness by (condition, alpha, beta). Requires n == 2 and s realizable
/// (kUnsupportedDimension / kNotRealizable otherwise).
std::optional<Witness> find_witness(const VectorSet& s);

/// Least witness of one specific condition.
std::optional<Witness> find_witness(const VectorSet& s, int condition);

struct UniquenessVerdict {
  bool unique = true;
  std::optional<Witness> witness;
};

/// Unique iff no witness exists.
UniquenessVerdict is_uniquely_realizable_2d(const VectorSet& s);

/// n == 1: always unique (the set is {0..k} and the path is forced).
/// n == 2: the witness test. n >= 3 throws kUnsupportedDimension.
UniquenessVerdict is_uniquely_realizable(const VectorSet& s);

/// Alternative uniqueness test by single edge deletion: s is unique iff no
/// canonical edge e leaves (canonical - e) a realization of s. Any n.
bool is_uniquely_realizable_by_deletion(const VectorSet& s);

struct EdgeDeletion {
  DistanceVector u;
  DistanceVector v;
};

struct Perturbation {
  EdgeDeletion deleted;
  Realization realization;
};

/// The canonical edge that the witness makes redundant.
EdgeDeletion witness_edge(const Witness& w);

/// Removes witness_edge(w) from the canonical realization and verifies the
/// result by BFS. Throws kInvalidArgument for a witness that does not match s,
/// kInternalVerification if the result fails to realize s.
Perturbation delete_edge_from_witness(const VectorSet& s, const Witness& w);

}  // namespace metrep
