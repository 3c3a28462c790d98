#include "metrep/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <string>

#include "metrep/error.hpp"
#include "metrep/realizability.hpp"

namespace metrep {

namespace {

// Checks one candidate edge subset of a fixed vector set. Buffers are reused
// across calls; an instance is not shared between threads.
class SubsetChecker {
 public:
  SubsetChecker(const VectorSet& s, const std::vector<std::pair<std::size_t, std::size_t>>& edges)
      : set_(s), edges_(edges), adjacency_(s.size()), dist_(s.size()) {
    for (std::size_t i = 0; i < s.dimension(); ++i) {
      for (std::size_t idx = 0; idx < s.size(); ++idx) {
        if (s[idx][i] == 0) landmarks_.push_back(idx);
      }
    }
  }

  // present[k] says whether candidate edge k is in the subset.
  template <typename Present>
  bool valid(Present present) {
    for (auto& row : adjacency_) row.clear();
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      if (!present(k)) continue;
      const auto [a, b] = edges_[k];
      adjacency_[a].push_back(b);
      adjacency_[b].push_back(a);
    }
    for (std::size_t i = 0; i < landmarks_.size(); ++i) {
      if (!distances_match(i)) return false;
    }
    return true;
  }

 private:
  // BFS from landmark i; every vertex must be reached at exactly its i-th
  // coordinate. Reaching all vertices also proves connectivity.
  bool distances_match(std::size_t i) {
    std::fill(dist_.begin(), dist_.end(), kUnreachable);
    queue_.clear();
    const std::size_t source = landmarks_[i];
    dist_[source] = 0;
    queue_.push_back(source);
    std::size_t reached = 0;
    while (!queue_.empty()) {
      const std::size_t u = queue_.front();
      queue_.pop_front();
      if (set_[u][i] != dist_[u]) return false;
      ++reached;
      for (std::size_t v : adjacency_[u]) {
        if (dist_[v] == kUnreachable) {
          dist_[v] = dist_[u] + 1;
          queue_.push_back(v);
        }
      }
    }
    return reached == set_.size();
  }

  const VectorSet& set_;
  const std::vector<std::pair<std::size_t, std::size_t>>& edges_;
  std::vector<std::size_t> landmarks_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<int> dist_;
  std::deque<std::size_t> queue_;
};

EdgeSubset subset_from_flags(const std::vector<char>& present) {
  EdgeSubset out;
  for (std::size_t k = 0; k < present.size(); ++k) {
    if (present[k]) out.push_back(k);
  }
  return out;
}

// Reference enumeration: every one of the 2^m subsets.
std::vector<EdgeSubset> enumerate_all(SubsetChecker& checker, std::size_t m) {
  std::vector<EdgeSubset> out;
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    auto present = [mask](std::size_t k) { return ((mask >> k) & 1U) != 0; };
    if (!checker.valid(present)) continue;
    EdgeSubset subset;
    for (std::size_t k = 0; k < m; ++k) {
      if (present(k)) subset.push_back(k);
    }
    out.push_back(std::move(subset));
  }
  return out;
}

// Removing edges never shortens a path, and inside the strong grid no
// landmark distance can drop below its coordinate. So an invalid subset has
// only invalid subsets, and every valid subset is reached from the full set by
// deleting its missing edges in increasing index order through valid sets.
void descend(SubsetChecker& checker, std::vector<char>& present, std::size_t first,
             std::vector<EdgeSubset>& out) {
  out.push_back(subset_from_flags(present));
  for (std::size_t k = first; k < present.size(); ++k) {
    present[k] = 0;
    if (checker.valid([&present](std::size_t j) { return present[j] != 0; })) {
      descend(checker, present, k + 1, out);
    }
    present[k] = 1;
  }
}

std::vector<EdgeSubset> enumerate_pruned(SubsetChecker& checker, std::size_t m) {
  std::vector<EdgeSubset> out;
  std::vector<char> present(m, 1);
  if (checker.valid([](std::size_t) { return true; })) descend(checker, present, 0, out);
  return out;
}

}  // namespace

VectorEdgeSet ClassReport::edges_of(std::size_t k) const {
  VectorEdgeSet out;
  for (std::size_t idx : valid_edge_subsets.at(k)) out.push_back(candidate_edges[idx]);
  return out;
}

bool ClassReport::contains(const VectorEdgeSet& edges) const {
  EdgeSubset subset;
  for (const auto& e : edges) {
    auto it = std::lower_bound(candidate_edges.begin(), candidate_edges.end(), e);
    if (it == candidate_edges.end() || *it != e) return false;
    subset.push_back(static_cast<std::size_t>(it - candidate_edges.begin()));
  }
  std::sort(subset.begin(), subset.end());
  return std::binary_search(valid_edge_subsets.begin(), valid_edge_subsets.end(), subset);
}

ClassReport enumerate_realization_classes(const VectorSet& s, int edge_budget,
                                          EnumerationStrategy strategy) {
  if (edge_budget < 1) {
    throw Error(ErrorCode::kInvalidArgument, "edge budget must be positive");
  }
  if (auto basic = check_basic_conditions(s); !basic) {
    throw Error(ErrorCode::kBasicConditionFailure, basic.violation->message());
  }

  // Candidate edges: every pair at Chebyshev distance one. Any realization
  // projects into this graph.
  ClassReport report{s, {}, {}};
  std::vector<std::pair<std::size_t, std::size_t>> index_edges;
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (chebyshev_distance(s[a], s[b]) == 1) {
        index_edges.emplace_back(a, b);
        report.candidate_edges.emplace_back(s[a], s[b]);
      }
    }
  }
  const std::size_t m = index_edges.size();
  if (m > static_cast<std::size_t>(edge_budget)) {
    throw Error(ErrorCode::kBudgetExceeded,
                "candidate graph has " + std::to_string(m) + " edges, budget is " +
                    std::to_string(edge_budget));
  }

  bool exhaustive = strategy == EnumerationStrategy::kExhaustive ||
                    (strategy == EnumerationStrategy::kAuto && m <= kExhaustiveEdgeLimit);
  if (exhaustive && m > kExhaustiveEdgeLimit) {
    throw Error(ErrorCode::kInvalidArgument,
                "exhaustive enumeration is limited to " + std::to_string(kExhaustiveEdgeLimit) +
                    " edges, candidate graph has " + std::to_string(m));
  }

  SubsetChecker checker(s, index_edges);
  report.valid_edge_subsets = exhaustive ? enumerate_all(checker, m) : enumerate_pruned(checker, m);
  std::sort(report.valid_edge_subsets.begin(), report.valid_edge_subsets.end());
  return report;
}

bool oracle_is_realizable(const VectorSet& s, int edge_budget) {
  if (!check_basic_conditions(s)) return false;
  return enumerate_realization_classes(s, edge_budget).class_count() >= 1;
}

bool oracle_is_uniquely_realizable(const VectorSet& s, int edge_budget) {
  const auto report = enumerate_realization_classes(s, edge_budget);
  if (report.class_count() == 0) {
    throw Error(ErrorCode::kNotRealizable, "no edge subset realizes the set");
  }
  return report.class_count() == 1;
}

}  // namespace metrep
