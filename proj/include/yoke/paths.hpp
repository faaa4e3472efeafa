#pragma once

// Words, walls, pivots and pivot paths of dYoke vertices.

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "yoke/core.hpp"
#include "yoke/metrics.hpp"
#include "yoke/path.hpp"

namespace yoke {

/// Letters f_1..f_d in application order.
using Word = std::vector<Letter>;

/// Letter explaining each step of the path. When two letters realise the same
/// step (only possible for m = 0, n = 2) the Left one is reported.
Word word_of_path(const Path& path);

/// "L2 R0 L2".
std::string render_word(const Word& word);
Word parse_word(std::string_view text);

/// Inner walls are indices in [0,m] that never occur; -1 is a wall when
/// (0,Left) never occurs and m+1 when (m,Right) never occurs.
std::set<int> walls(const Word& word, int m);

/// p in [-1, m+1] such that u_0 + ... + u_p is divisible by n.
std::set<int> pivots(const Vertex& v);

struct PivotStats {
  std::set<int> pivots;
  int p_l = -1;     ///< largest pivot below m/2
  int p_r = 0;      ///< smallest pivot at or above m/2
  int ic_first = 0; ///< I_c = [p_l + 1, p_r]
  int ic_last = 0;
  int h2 = 0;       ///< twice the distance from m/2 to the nearest pivot
};

PivotStats pivot_stats(const Vertex& v);

/// Twice the threshold h_{n,m}: n when m - n is even, n + 1 otherwise.
/// Requires 1 < n <= m.
int h_const2(int n, int m);

/// Path to 0 that clears entries 1..p toward the left bucket (left to right)
/// and entries m..p+1 toward the right bucket. Its length is
/// sum_{i<=p} i|v_i| + sum_{i>p} (m+1-i)|v_i|.
Path trivial_pivot_path(const Vertex& v, int p);

/// Length of the closed form above, without building the path.
int trivial_pivot_length(const Vertex& v, int p);

/// Letters a path with wall p may not use.
SearchRules wall_rules(int p, int m);

/// ps_p(v): shortest path from v to 0 with wall p, or nullopt when p is not a
/// pivot of v.
std::optional<int> pivot_distance(const Vertex& v, int p);

/// A p-pivot path of v (deterministic choice), or nullopt.
std::optional<Path> pivot_path(const Vertex& v, int p);

/// ps_p for every vertex of the instance, indexed by rank; -1 where undefined.
std::vector<int> pivot_distance_table(const GraphParams& params, int p);

/// True iff every index occurs with only one direction.
bool check_shift_direction(const Word& word);

/// Steps of the path whose two touched entries i, i+1 both lie in [a, b].
int interval_shift_count(const Path& path, int a, int b);

enum class Sign { NonNegative, NonPositive };

/// Shortest path from z to 0 keeping entry i on one side of zero; nullopt when
/// no such path exists. Throws ConstraintViolatedAtStart if z breaks it.
std::optional<int> sign_constrained_distance(const Vertex& z, int i, Sign sign);

SearchRules sign_rules(int i, Sign sign);

/// The path ends at 0 and its length equals ps_p(start) for one of its walls p.
bool is_pivot_path(const Path& path);

}  // namespace yoke
