#include "yoke/paths.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace yoke {

Path::Path(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw Error(ErrorKind::NotAPath, "empty vertex sequence");
  std::set<Vertex> seen;
  for (std::size_t t = 0; t < vertices_.size(); ++t) {
    const Vertex& v = vertices_[t];
    if (v.params() != vertices_.front().params()) {
      throw Error(ErrorKind::NotAPath, "vertices from different instances");
    }
    if (!seen.insert(v).second) throw Error(ErrorKind::NotAPath, "repeated vertex " + render(v));
    if (t > 0 && !adjacent(vertices_[t - 1], v)) {
      throw Error(ErrorKind::NotAPath,
                  render(vertices_[t - 1]) + " and " + render(v) + " are not adjacent");
    }
  }
}

Path Path::reversed() const {
  std::vector<Vertex> r(vertices_.rbegin(), vertices_.rend());
  return Path(std::move(r));
}

Word word_of_path(const Path& path) {
  const GraphParams& params = path.params();
  const std::vector<Letter> letters = all_letters(params.m);
  Word word;
  word.reserve(static_cast<std::size_t>(path.length()));
  std::vector<int> buf(static_cast<std::size_t>(params.length()));
  for (int t = 0; t < path.length(); ++t) {
    const Vertex& from = path[t];
    const Vertex& to = path[t + 1];
    bool found = false;
    for (Letter l : letters) {
      std::copy(from.entries().begin(), from.entries().end(), buf.begin());
      if (shift_entries(buf, params, l) && std::equal(buf.begin(), buf.end(), to.entries().begin())) {
        word.push_back(l);
        found = true;
        break;
      }
    }
    if (!found) throw Error(ErrorKind::NotAPath, render(from) + " and " + render(to) + " are not adjacent");
  }
  return word;
}

std::string render_word(const Word& word) {
  std::string out;
  for (std::size_t t = 0; t < word.size(); ++t) {
    if (t > 0) out += ' ';
    out += word[t].direction == Direction::Left ? 'L' : 'R';
    out += std::to_string(word[t].index);
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word word;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token.size() < 2 || (token[0] != 'L' && token[0] != 'R')) {
      throw Error(ErrorKind::ParseError, "bad letter '" + token + "'");
    }
    int index = 0;
    const char* first = token.data() + 1;
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, index);
    if (ec != std::errc{} || ptr != last || index < 0) {
      throw Error(ErrorKind::ParseError, "bad letter '" + token + "'");
    }
    word.push_back({index, token[0] == 'L' ? Direction::Left : Direction::Right});
  }
  return word;
}

std::set<int> walls(const Word& word, int m) {
  std::vector<char> used(static_cast<std::size_t>(m + 1), 0);
  bool left_outer = true;
  bool right_outer = true;
  for (const Letter& l : word) {
    if (l.index >= 0 && l.index <= m) used[static_cast<std::size_t>(l.index)] = 1;
    if (l == Letter{0, Direction::Left}) left_outer = false;
    if (l == Letter{m, Direction::Right}) right_outer = false;
  }
  std::set<int> out;
  if (left_outer) out.insert(-1);
  for (int p = 0; p <= m; ++p) {
    if (!used[static_cast<std::size_t>(p)]) out.insert(p);
  }
  if (right_outer) out.insert(m + 1);
  return out;
}

std::set<int> pivots(const Vertex& v) {
  const int n = v.params().n;
  std::set<int> out{-1};
  long long prefix = 0;
  for (int p = 0; p < v.size(); ++p) {
    prefix += v[p];
    if (mod(prefix, n) == 0) out.insert(p);
  }
  return out;
}

PivotStats pivot_stats(const Vertex& v) {
  const int m = v.params().m;
  PivotStats s;
  s.pivots = pivots(v);
  s.p_l = -1;
  s.p_r = m + 1;
  s.h2 = m + 2;  // every pivot is within m/2 + 1 of the middle
  for (int p : s.pivots) {
    if (2 * p < m) s.p_l = std::max(s.p_l, p);
    if (2 * p >= m) s.p_r = std::min(s.p_r, p);
    s.h2 = std::min(s.h2, std::abs(2 * p - m));
  }
  s.ic_first = s.p_l + 1;
  s.ic_last = s.p_r;
  return s;
}

int h_const2(int n, int m) {
  if (n <= 1 || n > m) {
    throw Error(ErrorKind::DomainError,
                "h_{n,m} needs 1 < n <= m, got n=" + std::to_string(n) + " m=" + std::to_string(m));
  }
  return (m - n) % 2 == 0 ? n : n + 1;
}

namespace {

void require_inner_pivot(const Vertex& v, int p) {
  if (p < 0 || p > v.params().m || !pivots(v).contains(p)) {
    throw Error(ErrorKind::NotAPivot, std::to_string(p) + " is not an inner pivot of " + render(v));
  }
}

}  // namespace

int trivial_pivot_length(const Vertex& v, int p) {
  require_inner_pivot(v, p);
  const int m = v.params().m;
  int total = 0;
  for (int i = 1; i <= m; ++i) total += (i <= p ? i : m + 1 - i) * std::abs(v[i]);
  return total;
}

Path trivial_pivot_path(const Vertex& v, int p) {
  require_inner_pivot(v, p);
  const GraphParams& params = v.params();
  const int m = params.m;
  std::vector<int> e(v.entries().begin(), v.entries().end());
  std::vector<Vertex> steps{v};
  auto apply = [&](int index, Direction dir) {
    if (!shift_entries(e, params, {index, dir})) {
      throw Error(ErrorKind::NotAPath, "trivial path blocked at " + render(steps.back()));
    }
    steps.emplace_back(params, e);
  };
  // A 1 travels to its bucket as a unit, a -1 travels there as a hole. Either
  // way sum_j weight_j |x_j| drops by one per step, so no vertex repeats.
  for (int i = 1; i <= p; ++i) {
    if (v[i] == 0) continue;
    const Direction dir = v[i] == 1 ? Direction::Left : Direction::Right;
    for (int j = i - 1; j >= 0; --j) apply(j, dir);
  }
  for (int i = m; i > p; --i) {
    if (v[i] == 0) continue;
    const Direction dir = v[i] == 1 ? Direction::Right : Direction::Left;
    for (int j = i; j <= m; ++j) apply(j, dir);
  }
  return Path(std::move(steps));
}

SearchRules wall_rules(int p, int m) {
  SearchRules rules;
  if (p == -1) {
    rules.forbidden = {{0, Direction::Left}};
  } else if (p == m + 1) {
    rules.forbidden = {{m, Direction::Right}};
  } else if (p >= 0 && p <= m) {
    rules.forbidden = {{p, Direction::Left}, {p, Direction::Right}};
  } else {
    throw Error(ErrorKind::DomainError, "wall " + std::to_string(p) + " outside [-1, m+1]");
  }
  return rules;
}

std::optional<Path> pivot_path(const Vertex& v, int p) {
  return constrained_geodesic(v, Vertex::zero(v.params()), wall_rules(p, v.params().m));
}

std::optional<int> pivot_distance(const Vertex& v, int p) {
  const SearchRules rules = wall_rules(p, v.params().m);
  VertexIndex index(v.params());
  Bfs bfs(index);
  const std::size_t target = index.rank(Vertex::zero(v.params()));
  const int d = bfs.run(index.rank(v), {.rules = &rules, .target = target})[target];
  if (d < 0) return std::nullopt;
  return d;
}

std::vector<int> pivot_distance_table(const GraphParams& params, int p) {
  return constrained_distances_to(Vertex::zero(params), wall_rules(p, params.m));
}

bool check_shift_direction(const Word& word) {
  // index -> first direction seen
  std::vector<std::pair<int, Direction>> seen;
  for (const Letter& l : word) {
    auto it = std::find_if(seen.begin(), seen.end(), [&](const auto& s) { return s.first == l.index; });
    if (it == seen.end()) {
      seen.emplace_back(l.index, l.direction);
    } else if (it->second != l.direction) {
      return false;
    }
  }
  return true;
}

int interval_shift_count(const Path& path, int a, int b) {
  int count = 0;
  for (const Letter& l : word_of_path(path)) {
    if (a <= l.index && l.index + 1 <= b) ++count;
  }
  return count;
}

SearchRules sign_rules(int i, Sign sign) {
  SearchRules rules;
  rules.bound = sign == Sign::NonNegative ? EntryBound{i, 0, 1} : EntryBound{i, -1, 0};
  return rules;
}

std::optional<int> sign_constrained_distance(const Vertex& z, int i, Sign sign) {
  if (i < 1 || i > z.params().m) {
    throw Error(ErrorKind::DomainError, "entry " + std::to_string(i) + " is not a middle entry");
  }
  if ((sign == Sign::NonNegative && z[i] < 0) || (sign == Sign::NonPositive && z[i] > 0)) {
    throw Error(ErrorKind::ConstraintViolatedAtStart,
                render(z) + " breaks the sign constraint on entry " + std::to_string(i));
  }
  const SearchRules rules = sign_rules(i, sign);
  VertexIndex index(z.params());
  Bfs bfs(index);
  const std::size_t target = index.rank(Vertex::zero(z.params()));
  const int d = bfs.run(index.rank(z), {.rules = &rules, .target = target})[target];
  if (d < 0) return std::nullopt;
  return d;
}

bool is_pivot_path(const Path& path) {
  if (!path.back().is_zero()) return false;
  const Vertex& start = path.front();
  for (int p : walls(word_of_path(path), start.params().m)) {
    const std::optional<int> ps = pivot_distance(start, p);
    if (ps && *ps == path.length()) return true;
  }
  return false;
}

}  // namespace yoke
