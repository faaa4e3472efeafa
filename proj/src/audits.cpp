#include "yoke/audits.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "yoke/formulas.hpp"
#include "yoke/paths.hpp"

namespace yoke {

namespace {

constexpr std::size_t kPerVertexCap = 200'000;

/// Collects the first failure and a count of checked cases.
class Tally {
 public:
  explicit Tally(std::string name) { result_.name = std::move(name); }

  template <class... Parts>
  void fail(const Parts&... parts) {
    ++failures_;
    if (!result_.passed) return;
    result_.passed = false;
    std::ostringstream out;
    (out << ... << parts);
    result_.detail = out.str();
  }
  void tick(std::size_t k = 1) { checked_ += k; }

  AuditResult finish(const std::string& what = "cases") {
    if (result_.passed) {
      result_.detail = std::to_string(checked_) + " " + what + " checked";
    } else {
      result_.detail += " (" + std::to_string(failures_) + " failures)";
    }
    return result_;
  }

 private:
  AuditResult result_;
  std::size_t checked_ = 0;
  std::size_t failures_ = 0;
};

AuditResult skipped(std::string name, std::string why) {
  return {std::move(name), true, "skipped: " + std::move(why)};
}

/// All ranks when size <= cap, otherwise `cap` distinct ranks drawn at random.
std::vector<std::size_t> sample_ranks(std::size_t size, std::size_t cap, std::mt19937_64& rng) {
  std::vector<std::size_t> out(size);
  std::iota(out.begin(), out.end(), std::size_t{0});
  if (size <= cap) return out;
  std::shuffle(out.begin(), out.end(), rng);
  out.resize(cap);
  std::sort(out.begin(), out.end());
  return out;
}

/// Word of a rank sequence; Left wins ties because for_each_shift visits it
/// first.
Word word_of_ranks(const VertexIndex& index, std::span<const std::size_t> ranks) {
  std::vector<int> e(static_cast<std::size_t>(index.params().length()));
  Word word;
  for (std::size_t t = 0; t + 1 < ranks.size(); ++t) {
    index.decode(ranks[t], e);
    bool found = false;
    index.for_each_shift(e, ranks[t], [&](Letter l, std::size_t nb) {
      if (!found && nb == ranks[t + 1]) {
        word.push_back(l);
        found = true;
      }
    });
    if (!found) throw Error(ErrorKind::NotAPath, "rank sequence is not a walk");
  }
  return word;
}

std::string render_set(const std::set<int>& s) {
  std::string out = "{";
  for (int x : s) {
    if (out.size() > 1) out += ',';
    out += std::to_string(x);
  }
  return out + "}";
}

/// Checks the shift counts of every P-interval of a path to 0, where the
/// intervals are cut by the inner walls of the path. Intervals touching a bucket
/// are skipped when the path moves a unit out of that bucket while it is empty.
/// With `require_uniform`, mixed directions inside an interval are a failure;
/// otherwise such intervals are ignored.
bool interval_counts_ok(const Path& path, bool require_uniform, std::string& why) {
  const GraphParams& params = path.params();
  const int m = params.m;
  const Vertex& v = path.front();
  const Word word = word_of_path(path);
  bool left_violation = false;
  bool right_violation = false;
  for (std::size_t t = 0; t < word.size(); ++t) {
    const Vertex& x = path[static_cast<int>(t)];
    if (word[t] == Letter{m, Direction::Left} && x[m + 1] == 0) right_violation = true;
    if (word[t] == Letter{0, Direction::Right} && x[0] == 0) left_violation = true;
  }
  std::vector<int> cuts{-1};
  for (int p : walls(word, m)) {
    if (p >= 0 && p <= m) cuts.push_back(p);
  }
  cuts.push_back(m + 1);
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const int a = cuts[k] + 1;
    const int b = cuts[k + 1];
    if ((a == 0 && left_violation) || (b == m + 1 && right_violation)) continue;
    int lefts = 0;
    int rights = 0;
    for (const Letter& l : word) {
      if (a <= l.index && l.index + 1 <= b) (l.direction == Direction::Left ? lefts : rights)++;
    }
    long long left_sum = 0;
    long long right_sum = 0;
    for (int i = a; i <= b; ++i) {
      left_sum += static_cast<long long>(i) * v[i];
      right_sum += static_cast<long long>(m + 1 - i) * v[i];
    }
    std::ostringstream out;
    out << render(v) << " interval [" << a << "," << b << "]: ";
    if (lefts > 0 && rights > 0) {
      if (!require_uniform) continue;
      out << "mixed directions";
      why = out.str();
      return false;
    }
    const bool ok = lefts > 0    ? lefts == left_sum
                    : rights > 0 ? rights == right_sum
                                 : left_sum == 0 && right_sum == 0;
    if (!ok) {
      out << "left shifts " << lefts << ", right shifts " << rights << ", weighted sums "
          << left_sum << "/" << right_sum;
      why = out.str();
      return false;
    }
  }
  return true;
}

}  // namespace

struct LemmaAuditor::State {
  GraphParams zparams;
  GraphParams yparams;
  VertexIndex zindex;
  VertexIndex yindex;
  Bfs tree;  // BFS from 0 in Z with parent pointers
  std::vector<int> dist0;
  mutable std::vector<std::vector<int>> pivot_tables;  // index p + 1

  State(int n, int m)
      : zparams(GraphParams::dyoke(n, m)),
        yparams(GraphParams::yoke(n, m)),
        zindex(zparams),
        yindex(yparams),
        tree(zindex) {
    dist0 = tree.run(zindex.rank(Vertex::zero(zparams)), {.track_parents = true});
    if (std::find(dist0.begin(), dist0.end(), -1) != dist0.end()) {
      throw Error(ErrorKind::Disconnected, "Z(" + std::to_string(n) + "," + std::to_string(m) +
                                               ") is not connected");
    }
  }

  const std::vector<int>& table(int p) const {
    if (pivot_tables.empty()) pivot_tables.resize(static_cast<std::size_t>(zparams.m + 3));
    auto& t = pivot_tables[static_cast<std::size_t>(p + 1)];
    if (t.empty()) t = pivot_distance_table(zparams, p);
    return t;
  }

  /// Extracted geodesic from rank r to 0, as ranks.
  std::vector<std::size_t> geodesic_to_zero(std::size_t r) const {
    std::vector<std::size_t> ranks = tree.trace(r);
    std::reverse(ranks.begin(), ranks.end());
    return ranks;
  }
};

LemmaAuditor::LemmaAuditor(int n, int m, const InstanceBudget& budget, std::uint64_t seed)
    : n_(n), m_(m), seed_(seed) {
  budget.require(GraphParams::dyoke(n, m));
  state_ = std::make_unique<State>(n, m);
}

LemmaAuditor::~LemmaAuditor() = default;

int LemmaAuditor::distance_to_zero(const Vertex& v) const {
  return state_->dist0[state_->zindex.rank(v)];
}

int LemmaAuditor::eccentricity_of_zero() const {
  return *std::max_element(state_->dist0.begin(), state_->dist0.end());
}

AuditResult LemmaAuditor::cardinality() const {
  Tally tally("cardinality");
  for (Family f : {Family::Yoke, Family::DYoke}) {
    const GraphParams params(n_, m_, f);
    const std::vector<Vertex> all = enumerate_vertices(params);
    std::uint64_t expected = static_cast<std::uint64_t>(n_);
    for (int i = 0; i < m_; ++i) expected *= static_cast<std::uint64_t>(params.middle_radix());
    if (all.size() != expected) {
      tally.fail(to_string(f), " has ", all.size(), " vertices, expected ", expected);
    }
    if (!std::is_sorted(all.begin(), all.end()) ||
        std::adjacent_find(all.begin(), all.end()) != all.end()) {
      tally.fail(to_string(f), " enumeration not strictly increasing");
    }
    tally.tick();
  }
  return tally.finish("families");
}

AuditResult LemmaAuditor::shift_invariants() const {
  Tally tally("shift-invariants");
  std::mt19937_64 rng(seed_);
  for (Family f : {Family::Yoke, Family::DYoke}) {
    const GraphParams params(n_, m_, f);
    const VertexIndex index(params);
    std::vector<int> e(static_cast<std::size_t>(params.length()));
    for (std::size_t r : sample_ranks(index.size(), kPerVertexCap / 2, rng)) {
      const Vertex v = index.unrank(r);
      const std::vector<Vertex> nbrs = neighbors(v);
      if (std::find(nbrs.begin(), nbrs.end(), v) != nbrs.end()) tally.fail(render(v), " has a loop");
      for (Letter l : all_letters(m_)) {
        const Vertex w = shift(v, l);
        if (w == v) continue;
        const int gain = l.direction == Direction::Left ? l.index : l.index + 1;
        const int loss = l.direction == Direction::Left ? l.index + 1 : l.index;
        for (int j = 0; j < params.length(); ++j) {
          const int expected = j == gain ? 1 : j == loss ? -1 : 0;
          if (mod(w[j] - v[j] - expected, n_) != 0 ||
              (!params.is_bucket(j) && w[j] - v[j] != expected)) {
            tally.fail(render(v), " -> ", render(w), " changes entry ", j, " wrongly");
          }
        }
        if (shift(w, {l.index, opposite(l.direction)}) != v) {
          tally.fail("shift at ", l.index, " not undone on ", render(w));
        }
      }
      for (const Vertex& w : nbrs) {
        const std::vector<Vertex> back = neighbors(w);
        if (!std::binary_search(back.begin(), back.end(), v)) {
          tally.fail(render(w), " does not list ", render(v), " as neighbour");
        }
      }
      // Second route: rank-level neighbour generation.
      index.decode(r, e);
      std::vector<std::size_t> ranks;
      index.for_each_shift(e, r, [&](Letter, std::size_t nb) { ranks.push_back(nb); });
      std::sort(ranks.begin(), ranks.end());
      ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
      std::vector<std::size_t> expected;
      for (const Vertex& w : nbrs) expected.push_back(index.rank(w));
      if (ranks != expected) tally.fail("rank neighbours of ", render(v), " disagree");
      tally.tick();
    }
  }
  return tally.finish("vertices");
}

AuditResult LemmaAuditor::mu_automorphism() const {
  Tally tally("mu-automorphism");
  const State& s = *state_;
  const Vertex zero = Vertex::zero(s.zparams);
  if (mu(zero) != zero) tally.fail("mu(0) != 0");
  std::mt19937_64 rng(seed_ + 1);
  for (std::size_t r : sample_ranks(s.zindex.size(), kPerVertexCap / 2, rng)) {
    const Vertex v = s.zindex.unrank(r);
    const Vertex mv = mu(v);
    if (mu(mv) != v) tally.fail("mu(mu(", render(v), ")) != itself");
    std::vector<Vertex> mapped;
    for (const Vertex& w : neighbors(v)) mapped.push_back(mu(w));
    std::sort(mapped.begin(), mapped.end());
    if (mapped != neighbors(mv)) tally.fail("mu does not map the neighbourhood of ", render(v));
    if (s.dist0[r] != s.dist0[s.zindex.rank(mv)]) {
      tally.fail("d(", render(v), ",0) = ", s.dist0[r], " but d(mu v,0) = ", s.dist0[s.zindex.rank(mv)]);
    }
    const PivotStats a = pivot_stats(v);
    const PivotStats b = pivot_stats(mv);
    if (a.ic_first != b.ic_first || a.ic_last != b.ic_last) {
      tally.fail("I_c differs between ", render(v), " and its image");
    }
    tally.tick();
  }
  return tally.finish("vertices");
}

AuditResult LemmaAuditor::phi_embedding(int samples) const {
  Tally tally("phi-embedding");
  const State& s = *state_;
  std::mt19937_64 rng(seed_ + 2);
  const std::vector<std::size_t> us =
      sample_ranks(s.yindex.size(), static_cast<std::size_t>(samples), rng);
  const std::vector<Vertex> ys = enumerate_vertices(s.yparams);
  for (std::size_t ur : us) {
    const Vertex& u = ys[ur];
    std::set<Vertex> image;
    for (const Vertex& v : ys) image.insert(phi(v, u));
    if (image.size() != ys.size()) tally.fail("phi_", render(u), " is not injective");
    if (phi(u, u) != Vertex::zero(s.zparams)) tally.fail("phi_u(u) != 0 for u = ", render(u));
    for (const Vertex& v : ys) {
      std::vector<Vertex> mapped;
      for (const Vertex& w : neighbors(v)) mapped.push_back(phi(w, u));
      std::sort(mapped.begin(), mapped.end());
      std::vector<Vertex> induced;
      for (const Vertex& z : neighbors(phi(v, u))) {
        if (image.contains(z)) induced.push_back(z);
      }
      if (mapped != induced) tally.fail("phi_", render(u), " breaks adjacency at ", render(v));
      tally.tick();
    }
  }
  return tally.finish("vertex images");
}

AuditResult LemmaAuditor::split_left_inverse() const {
  Tally tally("split-left-inverse");
  const State& s = *state_;
  std::mt19937_64 rng(seed_ + 3);
  for (std::size_t r : sample_ranks(s.zindex.size(), kPerVertexCap, rng)) {
    const Vertex z = s.zindex.unrank(r);
    const auto [v, u] = split_to_yoke_pair(z);
    if (phi(v, u) != z) tally.fail("split of ", render(z), " does not map back");
    tally.tick();
  }
  return tally.finish("vertices");
}

AuditResult LemmaAuditor::shift_direction(int random_walks) const {
  Tally tally("shift-direction");
  const State& s = *state_;
  std::mt19937_64 rng(seed_ + 4);
  std::vector<int> e(static_cast<std::size_t>(s.zparams.length()));
  for (std::size_t r : sample_ranks(s.zindex.size(), kPerVertexCap, rng)) {
    const std::vector<std::size_t> ranks = s.geodesic_to_zero(r);
    if (static_cast<int>(ranks.size()) != s.dist0[r] + 1) tally.fail("bad extracted geodesic");
    if (!check_shift_direction(word_of_ranks(s.zindex, ranks))) {
      tally.fail("extracted geodesic of ", render(s.zindex.unrank(r)), " mixes directions");
    }
    tally.tick();
    for (int walk = 0; walk < random_walks; ++walk) {
      std::vector<std::size_t> path{r};
      std::vector<std::size_t> closer;
      while (s.dist0[path.back()] > 0) {
        const std::size_t cur = path.back();
        s.zindex.decode(cur, e);
        closer.clear();
        s.zindex.for_each_shift(e, cur, [&](Letter, std::size_t nb) {
          if (s.dist0[nb] == s.dist0[cur] - 1) closer.push_back(nb);
        });
        std::sort(closer.begin(), closer.end());
        closer.erase(std::unique(closer.begin(), closer.end()), closer.end());
        path.push_back(closer[std::uniform_int_distribution<std::size_t>(0, closer.size() - 1)(rng)]);
      }
      if (!check_shift_direction(word_of_ranks(s.zindex, path))) {
        tally.fail("random geodesic of ", render(s.zindex.unrank(r)), " mixes directions");
      }
      tally.tick();
    }
  }
  return tally.finish("geodesics");
}

AuditResult LemmaAuditor::pivot_paths() const {
  Tally tally("geodesic-is-pivot-path");
  const State& s = *state_;
  std::mt19937_64 rng(seed_ + 5);
  const bool cross_check = s.zindex.size() <= 800;
  for (std::size_t r : sample_ranks(s.zindex.size(), kPerVertexCap, rng)) {
    const Vertex v = s.zindex.unrank(r);
    const std::set<int> piv = pivots(v);
    int best = -1;
    for (int p = -1; p <= m_ + 1; ++p) {
      const int ps = s.table(p)[r];
      if ((ps >= 0) != piv.contains(p)) {
        tally.fail("wall ", p, " of ", render(v), ": constrained path exists = ", ps >= 0,
                   ", pivot = ", piv.contains(p));
      }
      if (ps >= 0 && (best < 0 || ps < best)) best = ps;
      if (cross_check) {
        const std::optional<int> fwd = pivot_distance(v, p);
        if (fwd.value_or(-1) != ps) tally.fail("forward and reverse ps_", p, " of ", render(v), " differ");
      }
    }
    if (best != s.dist0[r]) {
      tally.fail("d(", render(v), ",0) = ", s.dist0[r], " but min ps_p = ", best);
    }
    const Word word = word_of_ranks(s.zindex, s.geodesic_to_zero(r));
    bool has_pivot_wall = false;
    for (int p : walls(word, m_)) has_pivot_wall |= s.table(p)[r] == s.dist0[r];
    if (!has_pivot_wall) tally.fail("extracted geodesic of ", render(v), " is not a pivot path");
    tally.tick();
  }
  return tally.finish("vertices");
}

AuditResult LemmaAuditor::pivot_shift_direction() const {
  Tally tally("pivot-shift-direction");
  const State& s = *state_;
  std::mt19937_64 rng(seed_ + 6);
  std::string why;
  for (std::size_t r : sample_ranks(s.zindex.size(), 600, rng)) {
    const Vertex v = s.zindex.unrank(r);
    for (int p : pivots(v)) {
      const std::optional<Path> path = pivot_path(v, p);
      if (!path || path->length() != s.table(p)[r]) {
        tally.fail("p-pivot path of ", render(v), " for p = ", p, " has the wrong length");
        continue;
      }
      const Word word = word_of_path(*path);
      if (!walls(word, m_).contains(p)) tally.fail("pivot path of ", render(v), " crosses wall ", p);
      if (!check_shift_direction(word)) {
        tally.fail(p, "-pivot path of ", render(v), " mixes directions: ", render_word(word));
      }
      if (!interval_counts_ok(*path, true, why)) tally.fail(why);
      tally.tick();
    }
  }
  return tally.finish("pivot paths");
}

AuditResult LemmaAuditor::trivial_paths() const {
  Tally tally("trivial-path-bound");
  const State& s = *state_;
  std::mt19937_64 rng(seed_ + 7);
  std::string why;
  for (std::size_t r : sample_ranks(s.zindex.size(), 20'000, rng)) {
    const Vertex v = s.zindex.unrank(r);
    for (int p : pivots(v)) {
      if (p < 0 || p > m_) continue;
      const int len = trivial_pivot_length(v, p);
      const Path path = trivial_pivot_path(v, p);
      const auto cap = triangular(p) + triangular(m_ - p);
      if (path.length() != len || !path.back().is_zero()) {
        tally.fail("trivial path of ", render(v), " at ", p, " has length ", path.length(),
                   ", expected ", len);
      }
      if (!walls(word_of_path(path), m_).contains(p)) {
        tally.fail("trivial path of ", render(v), " crosses its pivot ", p);
      }
      if (s.table(p)[r] > len || len > cap) {
        tally.fail("ps_", p, "(", render(v), ") = ", s.table(p)[r], ", trivial ", len, ", cap ", cap);
      }
      if (!interval_counts_ok(path, false, why)) tally.fail(why);
      tally.tick();
    }
  }
  return tally.finish("trivial paths");
}

AuditResult LemmaAuditor::sign_constrained_geodesics() const {
  Tally tally("sign-constrained-geodesics");
  const State& s = *state_;
  const Vertex zero = Vertex::zero(s.zparams);
  const bool cross_check = s.zindex.size() <= 300;
  std::vector<int> e(static_cast<std::size_t>(s.zparams.length()));
  for (int i = 1; i <= m_; ++i) {
    for (Sign sign : {Sign::NonNegative, Sign::NonPositive}) {
      const std::vector<int> table = constrained_distances_to(zero, sign_rules(i, sign));
      for (std::size_t r = 0; r < s.zindex.size(); ++r) {
        s.zindex.decode(r, e);
        if (e[static_cast<std::size_t>(i)] != 0) continue;
        if (table[r] != s.dist0[r]) {
          tally.fail("entry ", i, (sign == Sign::NonNegative ? " >= 0" : " <= 0"), ": constrained d(",
                     render(s.zindex.unrank(r)), ",0) = ", table[r], " vs ", s.dist0[r]);
        }
        if (cross_check) {
          const auto fwd = sign_constrained_distance(s.zindex.unrank(r), i, sign);
          if (fwd.value_or(-1) != table[r]) tally.fail("forward and reverse sign searches differ");
        }
        tally.tick();
      }
    }
  }
  return tally.finish("(z, i, sign) triples");
}

AuditResult LemmaAuditor::distance_preservation(std::uint64_t exhaustive_limit, int random_pairs) const {
  Tally tally("distance-preservation");
  const State& s = *state_;
  const std::size_t ny = s.yindex.size();
  Bfs bfs(s.yindex);
  std::vector<int> ve(static_cast<std::size_t>(s.yparams.length()));
  std::vector<int> ue(ve.size());
  std::vector<int> ze(ve.size());
  auto check = [&](std::size_t ur, std::size_t vr, int dy) {
    s.yindex.decode(ur, ue);
    s.yindex.decode(vr, ve);
    for (int j = 0; j < s.yparams.length(); ++j) {
      const auto k = static_cast<std::size_t>(j);
      ze[k] = s.yparams.is_bucket(j) ? mod(ve[k] - ue[k], n_) : ve[k] - ue[k];
    }
    const int dz = s.dist0[s.zindex.rank(ze)];
    if (dz != dy) {
      tally.fail("d_Y(", render(s.yindex.unrank(vr)), ",", render(s.yindex.unrank(ur)), ") = ", dy,
                 " but d_Z(v-u,0) = ", dz);
    }
    tally.tick();
  };
  if (ny <= exhaustive_limit) {
    for (std::size_t ur = 0; ur < ny; ++ur) {
      const std::vector<int>& dist = bfs.run(ur);
      for (std::size_t vr = 0; vr < ny; ++vr) check(ur, vr, dist[vr]);
    }
    return tally.finish("pairs (exhaustive)");
  }
  std::mt19937_64 rng(seed_ + 8);
  std::uniform_int_distribution<std::size_t> pick(0, ny - 1);
  for (int k = 0; k < random_pairs; ++k) {
    const std::size_t ur = pick(rng);
    const std::size_t vr = pick(rng);
    check(ur, vr, bfs.run(ur, {.target = vr})[vr]);
  }
  return tally.finish("random pairs");
}

AuditResult LemmaAuditor::diameter_equals_eccentricity() const {
  const InstanceBudget budget = InstanceBudget::all_pairs();
  if (!budget.admits(state_->yparams)) {
    return skipped("diameter-equals-eccentricity", "Y exceeds the all-pairs budget");
  }
  const int diam = diameter_bfs(state_->yparams, budget);
  const int ecc = eccentricity_of_zero();
  return {"diameter-equals-eccentricity", diam == ecc,
          "diam(Y) = " + std::to_string(diam) + ", ecc_Z(0) = " + std::to_string(ecc)};
}

AuditResult LemmaAuditor::diameter_formula_matches() const {
  const DiameterCase c = diameter_formula(n_, m_);
  const int ecc = eccentricity_of_zero();
  return {"diameter-formula", c.value == ecc,
          "formula " + std::to_string(c.value) + " (" + std::string(to_string(c.tag)) +
              "), ecc_Z(0) = " + std::to_string(ecc)};
}

AuditResult LemmaAuditor::lower_bound_witness_check() const {
  if (n_ % 2 == 1 && m_ == 0) return skipped("lower-bound-witness", "no middle entry for odd n");
  const Vertex w = lower_bound_witness(n_, m_);
  const int d = distance_to_zero(w);
  const std::int64_t bound = floor_half(std::int64_t{n_} * (m_ + 1));
  return {"lower-bound-witness", d >= bound,
          "d(" + render(w) + ",0) = " + std::to_string(d) + ", bound " + std::to_string(bound)};
}

AuditResult LemmaAuditor::extremal_vertices() const {
  if (!(1 < n_ && n_ <= m_)) return skipped("extremal-vertices", "needs 1 < n <= m");
  Tally tally("extremal-vertices");
  const Vertex u0 = u0_vertex(n_, m_);
  if (distance_to_zero(u0) != d0(n_, m_)) {
    tally.fail("d(u0,0) = ", distance_to_zero(u0), ", D0 = ", d0(n_, m_));
  }
  tally.tick();
  const bool odd = (m_ - n_) % 2 == 1;
  if (odd && n_ < m_) {
    const Vertex u1 = u1_vertex(n_, m_);
    if (distance_to_zero(u1) != d1(n_, m_)) {
      tally.fail("d(u1,0) = ", distance_to_zero(u1), ", D1 = ", d1(n_, m_));
    }
    if (d1(n_, m_) - d0(n_, m_) != n_ - ceil_half(m_ + 1)) tally.fail("D1 - D0 identity fails");
    tally.tick();
  }
  const int h2 = pivot_stats(u0).h2;
  const int expected = odd ? h_const2(n_, m_) - 2 : h_const2(n_, m_);
  if (h2 != expected) tally.fail("2h(u0) = ", h2, ", expected ", expected);
  tally.tick();
  return tally.finish("identities");
}

AuditResult LemmaAuditor::case_bounds() const {
  if (!(1 < n_ && n_ <= m_)) return skipped("case-bounds", "needs 1 < n <= m");
  Tally tally("case-bounds");
  const State& s = *state_;
  const std::int64_t dz = d0(n_, m_);
  const std::int64_t dmax = d_max(n_, m_);
  const int hc2 = h_const2(n_, m_);
  const std::int64_t half = floor_half(std::int64_t{n_} * (m_ + 1));
  std::size_t near = 0, full = 0, empty = 0;
  for (std::size_t r = 0; r < s.zindex.size(); ++r) {
    const Vertex v = s.zindex.unrank(r);
    const PivotStats st = pivot_stats(v);
    const int d = s.dist0[r];
    long long sum = 0;
    for (int i = st.ic_first; i <= st.ic_last; ++i) sum += v[i];
    const std::int64_t outside = triangular(st.p_l) + triangular(m_ - st.p_r);
    if (sum != 0 && sum != n_ && sum != -n_) tally.fail("sum over I_c of ", render(v), " is ", sum);
    if (d > dmax) tally.fail("d(", render(v), ",0) = ", d, " exceeds D(n,m) = ", dmax);
    if (st.h2 < hc2) {
      ++near;
      if (d > dz) tally.fail("near-middle pivot: d(", render(v), ",0) = ", d, " > D0 = ", dz);
    }
    if (sum == n_) {
      ++full;
      if (d > outside + half) tally.fail("I_c sum n: d(", render(v), ",0) = ", d, " > ", outside + half);
    }
    if (sum == 0 && st.ic_first >= 1 && st.ic_last <= m_) {
      ++empty;
      const std::int64_t gamma = st.ic_last - st.ic_first + 1;
      const std::int64_t cap = outside + floor_half(gamma) * ceil_half(gamma);
      if (d > cap) tally.fail("I_c sum 0: d(", render(v), ",0) = ", d, " > ", cap);
    }
    tally.tick();
  }
  AuditResult out = tally.finish("vertices");
  out.detail += " (h < h_nm: " + std::to_string(near) + ", I_c sum n: " + std::to_string(full) +
                ", inner I_c sum 0: " + std::to_string(empty) + ")";
  return out;
}

AuditResult LemmaAuditor::pivot_example() const {
  if (n_ != 3 || m_ != 8) return skipped("pivot-example", "only defined for Z(3,8)");
  const Vertex v = parse_vertex("(0,1,-1,0,1,1,-1,-1,1,2)", GraphParams::dyoke(3, 8));
  const std::set<int> piv = pivots(v);
  const std::set<int> expected{-1, 0, 2, 3, 7, 9};
  return {"pivot-example", piv == expected, "pivots of " + render(v) + " = " + render_set(piv)};
}

std::vector<AuditResult> LemmaAuditor::run_all() const {
  const std::size_t size = state_->zindex.size();
  std::vector<AuditResult> out;
  out.push_back(cardinality());
  out.push_back(shift_invariants());
  out.push_back(mu_automorphism());
  out.push_back(phi_embedding(10));
  out.push_back(split_left_inverse());
  out.push_back(shift_direction(size <= 50'000 ? 2 : 0));
  out.push_back(pivot_paths());
  out.push_back(pivot_shift_direction());
  out.push_back(trivial_paths());
  out.push_back(sign_constrained_geodesics());
  out.push_back(distance_preservation(1024, 200));
  out.push_back(diameter_equals_eccentricity());
  out.push_back(diameter_formula_matches());
  out.push_back(lower_bound_witness_check());
  out.push_back(extremal_vertices());
  out.push_back(case_bounds());
  out.push_back(pivot_example());
  return out;
}

}  // namespace yoke
