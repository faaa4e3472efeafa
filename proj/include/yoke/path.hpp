#pragma once

#include <span>
#include <vector>

#include "yoke/core.hpp"

namespace yoke {

/// A simple path v^0 ~ v^1 ~ ... ~ v^d inside one instance.
class Path {
 public:
  /// Throws NotAPath if empty, mixed instances, a step is not an edge, or a
  /// vertex repeats.
  explicit Path(std::vector<Vertex> vertices);

  const GraphParams& params() const { return vertices_.front().params(); }
  std::span<const Vertex> vertices() const { return vertices_; }
  int length() const { return static_cast<int>(vertices_.size()) - 1; }
  const Vertex& front() const { return vertices_.front(); }
  const Vertex& back() const { return vertices_.back(); }
  const Vertex& operator[](int t) const { return vertices_[static_cast<std::size_t>(t)]; }

  Path reversed() const;

 private:
  std::vector<Vertex> vertices_;
};

}  // namespace yoke
