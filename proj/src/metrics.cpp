#include "yoke/metrics.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace yoke {

InstanceBudget InstanceBudget::single_source() {
  if (const char* env = std::getenv("YOKELAB_BUDGET"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0) return with_vertices(v);
  }
  return {};
}

InstanceBudget InstanceBudget::all_pairs() { return with_vertices(4096); }

InstanceBudget InstanceBudget::with_vertices(std::uint64_t max_vertices) {
  InstanceBudget b;
  b.max_vertices = max_vertices;
  b.max_edges = max_vertices * 32;
  return b;
}

std::uint64_t edge_bound(const GraphParams& params) {
  const std::uint64_t v = vertex_count(params);
  const auto per = static_cast<std::uint64_t>(params.m + 1);
  if (v > UINT64_MAX / per) return UINT64_MAX;
  return v * per;
}

bool InstanceBudget::admits(const GraphParams& params) const {
  return vertex_count(params) <= max_vertices && edge_bound(params) <= max_edges;
}

void InstanceBudget::require(const GraphParams& params) const {
  if (!admits(params)) {
    throw Error(ErrorKind::BudgetExceeded,
                std::string(to_string(params.family)) + "(" + std::to_string(params.n) + "," +
                    std::to_string(params.m) + ") has " + std::to_string(vertex_count(params)) +
                    " vertices; budget is " + std::to_string(max_vertices));
  }
}

std::vector<Vertex> enumerate_vertices(const GraphParams& params, const InstanceBudget& budget) {
  budget.require(params);
  VertexIndex index(params);
  std::vector<Vertex> out;
  out.reserve(index.size());
  for (std::size_t r = 0; r < index.size(); ++r) out.push_back(index.unrank(r));
  return out;
}

bool SearchRules::admits(Letter letter) const {
  return std::find(forbidden.begin(), forbidden.end(), letter) == forbidden.end();
}

Bfs::Bfs(const VertexIndex& index) : index_(index) {}

const std::vector<int>& Bfs::run(std::size_t start, const Options& options) {
  const GraphParams& params = index_.params();
  const std::size_t n = index_.size();
  dist_.assign(n, -1);
  if (options.track_parents) {
    parent_.assign(n, -1);
  } else {
    parent_.clear();
  }
  queue_.clear();
  queue_.reserve(n);

  // Letter filter as a flat table: allowed[2*i + dir].
  std::vector<char> allowed(static_cast<std::size_t>(2 * (params.m + 1)), 1);
  const SearchRules* rules = options.rules;
  if (rules != nullptr) {
    for (const Letter& l : rules->forbidden) {
      if (l.index >= 0 && l.index <= params.m) {
        allowed[static_cast<std::size_t>(2 * l.index + (l.direction == Direction::Right))] = 0;
      }
    }
  }
  const bool bounded = rules != nullptr && rules->bound.has_value();
  const EntryBound bound = bounded ? *rules->bound : EntryBound{};

  std::vector<int> entries(static_cast<std::size_t>(params.length()));
  std::vector<std::size_t> next;
  next.reserve(static_cast<std::size_t>(2 * (params.m + 1)));

  dist_[start] = 0;
  queue_.push_back(start);
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const std::size_t cur = queue_[head];
    if (options.target && *options.target == cur) break;
    index_.decode(cur, entries);
    const int d = dist_[cur] + 1;
    next.clear();
    index_.for_each_shift(entries, cur, [&](Letter letter, std::size_t nb) {
      // Reverse searches walk the step nb -> cur, which uses the opposite letter.
      const Letter step = options.reverse ? Letter{letter.index, opposite(letter.direction)} : letter;
      if (!allowed[static_cast<std::size_t>(2 * step.index + (step.direction == Direction::Right))]) {
        return;
      }
      if (bounded) {
        const int gain = letter.direction == Direction::Left ? letter.index : letter.index + 1;
        const int loss = letter.direction == Direction::Left ? letter.index + 1 : letter.index;
        const int v = entries[static_cast<std::size_t>(bound.index)] + (bound.index == gain) -
                      (bound.index == loss);
        if (v < bound.min || v > bound.max) return;
      }
      if (dist_[nb] >= 0) return;
      next.push_back(nb);
    });
    if (options.track_parents) std::sort(next.begin(), next.end());
    for (std::size_t nb : next) {
      if (dist_[nb] >= 0) continue;
      dist_[nb] = d;
      if (options.track_parents) parent_[nb] = static_cast<std::int64_t>(cur);
      queue_.push_back(nb);
    }
  }
  return dist_;
}

std::vector<std::size_t> Bfs::trace(std::size_t r) const {
  std::vector<std::size_t> out;
  if (dist_[r] < 0) return out;
  for (std::int64_t cur = static_cast<std::int64_t>(r); cur >= 0;
       cur = parent_[static_cast<std::size_t>(cur)]) {
    out.push_back(static_cast<std::size_t>(cur));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

int Bfs::max_distance() const {
  int best = 0;
  for (int d : dist_) best = std::max(best, d);
  return best;
}

DistanceField::DistanceField(Vertex source, std::vector<int> distances)
    : source_(std::move(source)), index_(source_.params()), dist_(std::move(distances)) {}

int DistanceField::max() const { return *std::max_element(dist_.begin(), dist_.end()); }

DistanceField bfs_from(const Vertex& source, const InstanceBudget& budget) {
  budget.require(source.params());
  VertexIndex index(source.params());
  Bfs bfs(index);
  std::vector<int> dist = bfs.run(index.rank(source));
  if (std::find(dist.begin(), dist.end(), -1) != dist.end()) {
    throw Error(ErrorKind::Disconnected, "unreached vertex from " + render(source));
  }
  return DistanceField(source, std::move(dist));
}

int eccentricity(const Vertex& v, const InstanceBudget& budget) {
  return bfs_from(v, budget).max();
}

int diameter_bfs(const GraphParams& params, const InstanceBudget& budget) {
  budget.require(params);
  VertexIndex index(params);
  Bfs bfs(index);
  int best = 0;
  // Adding 1 to the left bucket and -1 to the right one is an automorphism, so
  // sources with left bucket 0 (the lowest ranks) see every eccentricity.
  const std::size_t sources = index.size() / static_cast<std::size_t>(params.n);
  for (std::size_t s = 0; s < sources; ++s) {
    const auto& dist = bfs.run(s);
    for (int d : dist) {
      if (d < 0) throw Error(ErrorKind::Disconnected, "unreached vertex from " + render(index.unrank(s)));
      best = std::max(best, d);
    }
  }
  return best;
}

namespace {

Path path_from_ranks(const VertexIndex& index, const std::vector<std::size_t>& ranks) {
  std::vector<Vertex> vertices;
  vertices.reserve(ranks.size());
  for (std::size_t r : ranks) vertices.push_back(index.unrank(r));
  return Path(std::move(vertices));
}

void require_same_instance(const Vertex& a, const Vertex& b) {
  if (a.params() != b.params()) throw Error(ErrorKind::ParamMismatch, "vertices from different instances");
}

}  // namespace

Path geodesic(const Vertex& a, const Vertex& b, const InstanceBudget& budget) {
  require_same_instance(a, b);
  budget.require(a.params());
  VertexIndex index(a.params());
  Bfs bfs(index);
  const std::size_t target = index.rank(b);
  bfs.run(index.rank(a), {.track_parents = true, .target = target});
  if (bfs.distances()[target] < 0) {
    throw Error(ErrorKind::Disconnected, render(b) + " unreachable from " + render(a));
  }
  return path_from_ranks(index, bfs.trace(target));
}

std::vector<Vertex> antipodes(const Vertex& v, const InstanceBudget& budget) {
  const DistanceField field = bfs_from(v, budget);
  const int ecc = field.max();
  std::vector<Vertex> out;
  for (std::size_t r = 0; r < field.size(); ++r) {
    if (field.at_rank(r) == ecc) out.push_back(field.index().unrank(r));
  }
  return out;
}

std::optional<Path> constrained_geodesic(const Vertex& from, const Vertex& to,
                                         const SearchRules& rules) {
  require_same_instance(from, to);
  VertexIndex index(from.params());
  Bfs bfs(index);
  const std::size_t target = index.rank(to);
  bfs.run(index.rank(from), {.rules = &rules, .track_parents = true, .target = target});
  if (bfs.distances()[target] < 0) return std::nullopt;
  return path_from_ranks(index, bfs.trace(target));
}

std::vector<int> constrained_distances_to(const Vertex& to, const SearchRules& rules) {
  VertexIndex index(to.params());
  Bfs bfs(index);
  return bfs.run(index.rank(to), {.rules = &rules, .reverse = true});
}

}  // namespace yoke
