#pragma once

// Brute-force reference implementations for the tests. Nothing here calls into
// the library: tuples are plain vectors, adjacency comes straight from the
// shift definition and searches use std::map.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using Tuple = std::vector<int>;

inline int wrap(int a, int n) { return ((a % n) + n) % n; }

/// Every tuple of length m+2 with buckets in [0,n), middles in [lo,1] and sum
/// divisible by n. Odometer over all m+2 entries, filtered.
inline std::vector<Tuple> enumerate(int n, int m, int lo) {
  std::vector<Tuple> out;
  Tuple t(static_cast<std::size_t>(m + 2));
  for (int i = 1; i <= m; ++i) t[static_cast<std::size_t>(i)] = lo;
  for (;;) {
    long sum = 0;
    for (int x : t) sum += x;
    if (sum % n == 0) out.push_back(t);
    int i = m + 1;
    for (; i >= 0; --i) {
      auto& x = t[static_cast<std::size_t>(i)];
      const bool bucket = i == 0 || i == m + 1;
      const int top = bucket ? n - 1 : 1;
      if (x < top) {
        ++x;
        break;
      }
      x = bucket ? 0 : lo;
    }
    if (i < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Move one unit: entry `to` gains, entry `from` loses. nullopt when a middle
/// entry would leave [lo,1].
inline std::optional<Tuple> move_unit(const Tuple& t, int n, int lo, int to, int from) {
  const int last = static_cast<int>(t.size()) - 1;
  Tuple r = t;
  auto bump = [&](int i, int by) {
    auto& x = r[static_cast<std::size_t>(i)];
    if (i == 0 || i == last) {
      x = wrap(x + by, n);
      return true;
    }
    x += by;
    return x >= lo && x <= 1;
  };
  if (!bump(to, 1) || !bump(from, -1)) return std::nullopt;
  return r;
}

/// Neighbours by definition: all 2(m+1) unit moves, loops dropped, deduplicated.
inline std::set<Tuple> neighbours(const Tuple& t, int n, int lo) {
  std::set<Tuple> out;
  const int m = static_cast<int>(t.size()) - 2;
  for (int i = 0; i <= m; ++i) {
    for (auto [to, from] : {std::pair{i, i + 1}, std::pair{i + 1, i}}) {
      if (auto r = move_unit(t, n, lo, to, from); r && *r != t) out.insert(*r);
    }
  }
  return out;
}

inline std::map<Tuple, int> distances(const Tuple& source, int n, int lo) {
  std::map<Tuple, int> dist{{source, 0}};
  std::deque<Tuple> queue{source};
  while (!queue.empty()) {
    const Tuple t = queue.front();
    queue.pop_front();
    const int d = dist[t];
    for (const Tuple& u : neighbours(t, n, lo)) {
      if (dist.emplace(u, d + 1).second) queue.push_back(u);
    }
  }
  return dist;
}

inline int eccentricity(const Tuple& source, int n, int lo) {
  int best = 0;
  for (const auto& [t, d] : distances(source, n, lo)) best = std::max(best, d);
  return best;
}

/// One BFS per vertex, no symmetry used.
inline int diameter(int n, int m, int lo) {
  int best = 0;
  for (const Tuple& t : enumerate(n, m, lo)) best = std::max(best, eccentricity(t, n, lo));
  return best;
}

inline Tuple zero(int m) { return Tuple(static_cast<std::size_t>(m + 2), 0); }

/// Eccentricity of 0 in Z(n,m) for every n in [1, max_n] with one search.
///
/// Search the graph whose left bucket is an unbounded integer x (the right one
/// is implied by sum 0). Z(n,m) is its quotient by x -> x + n, so the ball of
/// radius r in Z(n,m) is everything iff, for each middle pattern w, the set
/// S_w(r) of reached x covers all residues mod n. When every S_w(r) is an
/// interval that means min_w |S_w(r)| >= n. Returns nullopt if some S_w(r) is
/// not an interval.
inline std::optional<std::vector<int>> cover_eccentricities(int m, int max_n) {
  std::size_t patterns = 1;
  std::vector<std::size_t> pow3(static_cast<std::size_t>(m + 1), 1);
  for (int i = 1; i <= m; ++i) pow3[static_cast<std::size_t>(i)] = pow3[static_cast<std::size_t>(i - 1)] * 3;
  patterns = pow3[static_cast<std::size_t>(m)];

  for (long reach = std::max(8, max_n);; reach *= 2) {
    const std::size_t width = static_cast<std::size_t>(2 * reach + 1);
    auto state = [&](long x, std::size_t w) { return static_cast<std::size_t>(x + reach) * patterns + w; };
    std::vector<bool> seen(width * patterns, false);
    std::vector<long> lo(patterns, 0), hi(patterns, -1), count(patterns, 0);
    std::vector<int> ecc(static_cast<std::size_t>(max_n + 1), -1);
    // pattern digit d encodes middle entry d - 1; all-zero pattern is 11..1 in base 3
    const std::size_t zero_pattern = (patterns - 1) / 2;
    std::vector<std::size_t> layer{state(0, zero_pattern)}, next;
    seen[layer[0]] = true;
    std::vector<int> mid(static_cast<std::size_t>(m + 2), 0);
    int resolved = 0;
    for (int r = 0;; ++r) {
      for (std::size_t s : layer) {
        const std::size_t w = s % patterns;
        const long x = static_cast<long>(s / patterns) - reach;
        if (count[w] == 0) {
          lo[w] = hi[w] = x;
        } else {
          lo[w] = std::min(lo[w], x);
          hi[w] = std::max(hi[w], x);
        }
        ++count[w];
      }
      long shortest = -1;
      for (std::size_t w = 0; w < patterns; ++w) {
        const long len = count[w] == 0 ? 0 : hi[w] - lo[w] + 1;
        if (count[w] != len) return std::nullopt;
        shortest = shortest < 0 ? len : std::min(shortest, len);
      }
      while (resolved < max_n && shortest >= resolved + 1) ecc[static_cast<std::size_t>(++resolved)] = r;
      if (resolved == max_n) return ecc;
      if (r == reach || layer.empty()) break;  // the next layer could leave the window

      next.clear();
      for (std::size_t s : layer) {
        const std::size_t w = s % patterns;
        const long x = static_cast<long>(s / patterns) - reach;
        std::size_t rest = w;
        for (int i = 1; i <= m; ++i) {
          mid[static_cast<std::size_t>(i)] = static_cast<int>(rest % 3) - 1;
          rest /= 3;
        }
        for (int i = 0; i <= m; ++i) {
          for (int step : {1, -1}) {
            // entry i += step, entry i+1 -= step
            long nx = x;
            long nw = static_cast<long>(w);
            if (i == 0) {
              nx += step;
            } else {
              const int v = mid[static_cast<std::size_t>(i)] + step;
              if (v < -1 || v > 1) continue;
              nw += step * static_cast<long>(pow3[static_cast<std::size_t>(i - 1)]);
            }
            if (i + 1 <= m) {
              const int v = mid[static_cast<std::size_t>(i + 1)] - step;
              if (v < -1 || v > 1) continue;
              nw -= step * static_cast<long>(pow3[static_cast<std::size_t>(i)]);
            }
            const std::size_t t = state(nx, static_cast<std::size_t>(nw));
            if (!seen[t]) {
              seen[t] = true;
              next.push_back(t);
            }
          }
        }
      }
      std::swap(layer, next);
    }
  }
}

}  // namespace oracle
