#pragma once

// Vertex model shared by Yoke graphs Y(n,m) and dYoke graphs Z(n,m).
//
// A vertex is a tuple (u_0, ..., u_{m+1}). The two ends ("buckets") live in
// Z_n and are stored as their representative in [0, n-1]. The m middle
// entries are in {0,1} for Y(n,m) and in {-1,0,1} for Z(n,m). The entry sum is
// divisible by n. Adjacent vertices differ by moving one unit between two
// neighbouring entries.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace yoke {

enum class ErrorKind {
  LengthMismatch,
  EntryOutOfDomain,
  SumNotZeroModN,
  ParamMismatch,
  ParseError,
  NotAPath,
  NotAPivot,
  DomainError,
  BudgetExceeded,
  ConstraintViolatedAtStart,
  Disconnected,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

enum class Family { Yoke, DYoke };

std::string_view to_string(Family family);

struct GraphParams {
  int n = 1;
  int m = 0;
  Family family = Family::Yoke;

  GraphParams() = default;
  /// Throws DomainError unless n >= 1 and m >= 0.
  GraphParams(int n, int m, Family family);

  static GraphParams yoke(int n, int m) { return {n, m, Family::Yoke}; }
  static GraphParams dyoke(int n, int m) { return {n, m, Family::DYoke}; }

  int length() const { return m + 2; }
  int middle_min() const { return family == Family::Yoke ? 0 : -1; }
  int middle_max() const { return 1; }
  int middle_radix() const { return family == Family::Yoke ? 2 : 3; }
  bool is_bucket(int i) const { return i == 0 || i == m + 1; }
  GraphParams with_family(Family f) const { return {n, m, f}; }

  friend bool operator==(const GraphParams&, const GraphParams&) = default;
  friend auto operator<=>(const GraphParams&, const GraphParams&) = default;
};

/// Non-negative remainder.
inline int mod(long long a, int n) {
  long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

class Vertex {
 public:
  /// Validates length, entry domains and the sum condition.
  Vertex(GraphParams params, std::vector<int> entries);

  static Vertex zero(GraphParams params);

  const GraphParams& params() const { return params_; }
  std::span<const int> entries() const { return entries_; }
  int operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  int size() const { return static_cast<int>(entries_.size()); }
  bool is_zero() const;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  /// Lexicographic on the entry sequence.
  friend std::strong_ordering operator<=>(const Vertex& a, const Vertex& b) {
    if (auto c = a.entries_ <=> b.entries_; c != 0) return c;
    return a.params_ <=> b.params_;
  }

 private:
  struct Unchecked {};
  Vertex(Unchecked, GraphParams params, std::vector<int> entries)
      : params_(params), entries_(std::move(entries)) {}
  friend class VertexIndex;

  GraphParams params_;
  std::vector<int> entries_;
};

/// Validation used by the Vertex constructor; throws Error on failure.
void validate_entries(const GraphParams& params, std::span<const int> entries);

enum class Direction { Left, Right };

inline Direction opposite(Direction d) {
  return d == Direction::Left ? Direction::Right : Direction::Left;
}

/// One unit shift between entries index and index+1. Left moves a unit from
/// entry index+1 into entry index; Right moves a unit from index to index+1.
struct Letter {
  int index = 0;
  Direction direction = Direction::Left;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// All 2(m+1) letters, by index, Left before Right.
std::vector<Letter> all_letters(int m);

/// "(3,0,-1,1,2)". Spaces after commas are accepted.
Vertex parse_vertex(std::string_view text, GraphParams params);
/// Renders without spaces; parse_vertex(render(v)) == v.
std::string render(const Vertex& v);

/// Fills in u_{m+1} from the first m+1 entries.
Vertex complete_vertex(std::span<const int> prefix, GraphParams params);

/// Applies a letter. Shifts that would push a middle entry out of its domain
/// leave the vertex unchanged.
Vertex shift(const Vertex& v, Letter letter);

/// In-place variant on a raw entry buffer. Returns false (buffer untouched) for
/// a fixed point.
bool shift_entries(std::span<int> entries, const GraphParams& params, Letter letter);

/// Distinct neighbours of v, sorted. Self-loops are excluded.
std::vector<Vertex> neighbors(const Vertex& v);

bool adjacent(const Vertex& a, const Vertex& b);

/// Entrywise negation, buckets reduced mod n. Requires a dYoke vertex.
Vertex mu(const Vertex& v);

/// v - u as a dYoke vertex, for two Yoke vertices of the same instance.
Vertex phi(const Vertex& v, const Vertex& u);

/// Returns Yoke vertices (v, u) with phi(v, u) == z.
std::pair<Vertex, Vertex> split_to_yoke_pair(const Vertex& z);

/// Number of vertices, n * k^m, saturating at UINT64_MAX.
std::uint64_t vertex_count(const GraphParams& params);

/// Mixed-radix rank of a vertex: digits (u_0, u_1 - lo, ..., u_m - lo) with
/// radices (n, k, ..., k). u_{m+1} is implied by the sum condition. Rank order
/// coincides with lexicographic vertex order.
class VertexIndex {
 public:
  explicit VertexIndex(GraphParams params);

  const GraphParams& params() const { return params_; }
  std::size_t size() const { return size_; }

  std::size_t rank(const Vertex& v) const;
  std::size_t rank(std::span<const int> entries) const;
  Vertex unrank(std::size_t r) const;
  /// Writes all m+2 entries of the vertex with rank r into out.
  void decode(std::size_t r, std::span<int> out) const;

  /// Calls fn(letter, neighbour_rank) for every letter that moves the vertex
  /// (given by its decoded entries and rank). Self-loops are skipped;
  /// duplicates (n <= 2) are not.
  template <class Fn>
  void for_each_shift(std::span<const int> entries, std::size_t r, Fn&& fn) const {
    const int m = params_.m;
    const int lo = params_.middle_min();
    const int hi = params_.middle_max();
    for (int i = 0; i <= m; ++i) {
      for (int dir = 0; dir < 2; ++dir) {
        // Left: entry i gains, entry i+1 loses.
        const int gain = dir == 0 ? i : i + 1;
        const int loss = dir == 0 ? i + 1 : i;
        long long delta = 0;
        bool ok = true;
        for (int side = 0; side < 2 && ok; ++side) {
          const int j = side == 0 ? gain : loss;
          const int step = side == 0 ? 1 : -1;
          if (j == 0) {
            const int nv = mod(entries[0] + step, params_.n);
            delta += static_cast<long long>(nv - entries[0]) *
                     static_cast<long long>(stride_[0]);
          } else if (j <= m) {
            const int nv = entries[static_cast<std::size_t>(j)] + step;
            if (nv < lo || nv > hi) ok = false;
            delta += step * static_cast<long long>(stride_[static_cast<std::size_t>(j)]);
          }
        }
        if (!ok || delta == 0) continue;
        fn(Letter{i, dir == 0 ? Direction::Left : Direction::Right},
           static_cast<std::size_t>(static_cast<long long>(r) + delta));
      }
    }
  }

 private:
  GraphParams params_;
  std::size_t size_ = 0;
  std::vector<std::size_t> stride_;  // stride_[i] for entries 0..m
};

}  // namespace yoke
