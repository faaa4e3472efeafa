#pragma once

// Exact brute-force oracles over the implicit graphs: enumeration, BFS
// distances, eccentricity, diameter, geodesics and antipodes.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "yoke/core.hpp"
#include "yoke/path.hpp"

namespace yoke {

struct InstanceBudget {
  std::uint64_t max_vertices = 2'000'000;
  std::uint64_t max_edges = 64'000'000;

  /// 2e6 vertices, or YOKELAB_BUDGET when set.
  static InstanceBudget single_source();
  /// 4096 vertices; all-pairs work is quadratic.
  static InstanceBudget all_pairs();
  static InstanceBudget with_vertices(std::uint64_t max_vertices);

  bool admits(const GraphParams& params) const;
  /// Throws BudgetExceeded when the instance does not fit.
  void require(const GraphParams& params) const;
};

/// Upper bound on |E|: every vertex has at most 2(m+1) neighbours.
std::uint64_t edge_bound(const GraphParams& params);

/// Every vertex once, in lexicographic order.
std::vector<Vertex> enumerate_vertices(const GraphParams& params,
                                       const InstanceBudget& budget = InstanceBudget::single_source());

/// Keeps entry `index` inside [min, max] along a search.
struct EntryBound {
  int index = 1;
  int min = -1;
  int max = 1;
};

/// Restrictions for constrained searches. Letters are directed steps.
struct SearchRules {
  std::vector<Letter> forbidden;
  std::optional<EntryBound> bound;

  bool admits(Letter letter) const;
};

/// Reusable breadth-first search over the ranks of one instance.
///
/// With `reverse` the search follows edges backwards, so distances are those
/// *to* the start vertex in the directed graph defined by `rules`. With
/// `track_parents` neighbours are expanded in lexicographic order, which makes
/// the extracted shortest paths deterministic.
class Bfs {
 public:
  explicit Bfs(const VertexIndex& index);

  struct Options {
    const SearchRules* rules = nullptr;
    bool reverse = false;
    bool track_parents = false;
    std::optional<std::size_t> target;
  };

  /// Returns the distance table (-1 = not reached).
  const std::vector<int>& run(std::size_t start, const Options& options);
  const std::vector<int>& run(std::size_t start) { return run(start, Options{}); }

  const std::vector<int>& distances() const { return dist_; }
  /// Ranks from the start to `r` along parent pointers. Requires track_parents.
  std::vector<std::size_t> trace(std::size_t r) const;
  /// Largest finite distance of the last run.
  int max_distance() const;

 private:
  const VertexIndex& index_;
  std::vector<int> dist_;
  std::vector<std::int64_t> parent_;
  std::vector<std::size_t> queue_;
};

/// Exact distances from one vertex to every vertex of its instance.
class DistanceField {
 public:
  DistanceField(Vertex source, std::vector<int> distances);

  const Vertex& source() const { return source_; }
  const VertexIndex& index() const { return index_; }
  int at(const Vertex& v) const { return dist_[index_.rank(v)]; }
  int at_rank(std::size_t r) const { return dist_[r]; }
  std::span<const int> distances() const { return dist_; }
  std::size_t size() const { return dist_.size(); }
  int max() const;

 private:
  Vertex source_;
  VertexIndex index_;
  std::vector<int> dist_;
};

/// Throws Disconnected if some vertex is not reached.
DistanceField bfs_from(const Vertex& source,
                       const InstanceBudget& budget = InstanceBudget::single_source());

int eccentricity(const Vertex& v, const InstanceBudget& budget = InstanceBudget::single_source());

/// Maximum eccentricity over all vertices. Runs one BFS per bucket-rotation
/// class, i.e. |V|/n of them.
int diameter_bfs(const GraphParams& params,
                 const InstanceBudget& budget = InstanceBudget::all_pairs());

/// Shortest path from a to b; ties broken by lexicographic expansion order.
Path geodesic(const Vertex& a, const Vertex& b,
              const InstanceBudget& budget = InstanceBudget::single_source());

/// Vertices at maximum distance from v, sorted.
std::vector<Vertex> antipodes(const Vertex& v,
                              const InstanceBudget& budget = InstanceBudget::single_source());

/// Shortest path, obeying `rules`, from `from` to `to`; nullopt if none.
std::optional<Path> constrained_geodesic(const Vertex& from, const Vertex& to,
                                         const SearchRules& rules);

/// Distances d(v, to) for every v under `rules` (reverse search); -1 if none.
std::vector<int> constrained_distances_to(const Vertex& to, const SearchRules& rules);

}  // namespace yoke
