#include <random>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "yoke/core.hpp"
#include "yoke/metrics.hpp"

using namespace yoke;

namespace {

std::vector<int> tuple(const Vertex& v) { return {v.entries().begin(), v.entries().end()}; }

Vertex Z(int n, int m, std::vector<int> e) { return Vertex(GraphParams::dyoke(n, m), std::move(e)); }
Vertex Y(int n, int m, std::vector<int> e) { return Vertex(GraphParams::yoke(n, m), std::move(e)); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::DomainError;
}

// Instances small enough for the map-based oracle.
const std::vector<std::pair<int, int>> kSmall = {{1, 0}, {1, 1}, {1, 3}, {2, 0}, {2, 1}, {2, 3},
                                                 {3, 0}, {3, 2}, {3, 3}, {4, 2}, {5, 1}, {2, 4}};

}  // namespace

TEST_CASE("parse and render") {
  const auto p = GraphParams::dyoke(5, 3);
  CHECK(tuple(parse_vertex("(3,0,-1,1,2)", p)) == std::vector<int>{3, 0, -1, 1, 2});
  CHECK(tuple(parse_vertex("(3, 0, -1, 1, 2)", p)) == std::vector<int>{3, 0, -1, 1, 2});
  CHECK(parse_vertex("(0,0)", GraphParams::yoke(3, 0)).is_zero());
  CHECK(render(parse_vertex("(3, 0,-1, 1,2)", p)) == "(3,0,-1,1,2)");
  CHECK(parse_vertex("(2,1,1,1,1,1,2)", GraphParams::dyoke(3, 5)) ==
        Z(3, 5, {2, 1, 1, 1, 1, 1, 2}));

  CHECK(kind_of([&] { parse_vertex("3,0,-1,1,2", p); }) == ErrorKind::ParseError);
  CHECK(kind_of([&] { parse_vertex("(3,0,x,1,2)", p); }) == ErrorKind::ParseError);
  CHECK(kind_of([&] { parse_vertex("(3,0,-1,1)", p); }) == ErrorKind::LengthMismatch);
  CHECK(kind_of([&] { parse_vertex("(3,0,-1,1,3)", p); }) == ErrorKind::SumNotZeroModN);
  CHECK(kind_of([&] { parse_vertex("(5,0,-1,1,0)", p); }) == ErrorKind::EntryOutOfDomain);
  CHECK(kind_of([&] { parse_vertex("(3,0,-1,1,2)", GraphParams::yoke(5, 3)); }) ==
        ErrorKind::EntryOutOfDomain);
  CHECK(kind_of([] { GraphParams::yoke(0, 1); }) == ErrorKind::DomainError);
  CHECK(kind_of([] { GraphParams::yoke(2, -1); }) == ErrorKind::DomainError);
}

TEST_CASE("round trip over whole instances") {
  for (auto [n, m] : kSmall) {
    for (Family f : {Family::Yoke, Family::DYoke}) {
      const GraphParams p(n, m, f);
      const VertexIndex index(p);
      for (const Vertex& v : enumerate_vertices(p)) {
        CHECK(parse_vertex(render(v), p) == v);
        CHECK(index.unrank(index.rank(v)) == v);
      }
    }
  }
}

TEST_CASE("complete_vertex fills the right bucket") {
  const std::vector<int> a{0, 0, 0};
  CHECK(complete_vertex(a, GraphParams::dyoke(3, 2)) == Z(3, 2, {0, 0, 0, 0}));
  const std::vector<int> b{2, 1, 1, 1, 1, 1};
  CHECK(complete_vertex(b, GraphParams::dyoke(3, 5)) == Z(3, 5, {2, 1, 1, 1, 1, 1, 2}));
  const std::vector<int> c{0, 1, 1};
  CHECK(complete_vertex(c, GraphParams::yoke(3, 2)) == Y(3, 2, {0, 1, 1, 1}));
  CHECK(kind_of([&] { complete_vertex(c, GraphParams::yoke(3, 3)); }) == ErrorKind::LengthMismatch);
}

TEST_CASE("shift examples") {
  const Vertex v = Z(5, 3, {3, 0, -1, 1, 2});
  CHECK(shift(v, {2, Direction::Left}) == Z(5, 3, {3, 0, 0, 0, 2}));
  CHECK(shift(v, {1, Direction::Right}) == Z(5, 3, {3, -1, 0, 1, 2}));
  // fixed point: entry 2 would become -1 in Y
  const Vertex zy = Vertex::zero(GraphParams::yoke(3, 3));
  CHECK(shift(zy, {1, Direction::Left}) == zy);
  CHECK(shift(zy, {0, Direction::Right}) == Y(3, 3, {2, 1, 0, 0, 0}));
  CHECK(shift(Vertex::zero(GraphParams::dyoke(3, 1)), {0, Direction::Left}) == Z(3, 1, {1, -1, 0}));
}

TEST_CASE("neighbour examples") {
  const auto n0 = neighbors(Vertex::zero(GraphParams::yoke(3, 3)));
  CHECK(n0 == std::vector<Vertex>{Y(3, 3, {0, 0, 0, 1, 2}), Y(3, 3, {2, 1, 0, 0, 0})});
  CHECK(neighbors(Vertex::zero(GraphParams::dyoke(5, 0))) ==
        std::vector<Vertex>{Z(5, 0, {1, 4}), Z(5, 0, {4, 1})});
  CHECK(neighbors(Vertex::zero(GraphParams::dyoke(3, 2))).size() == 6);
  // both letters give (1,1); loops vanish for n = 1
  CHECK(neighbors(Vertex::zero(GraphParams::dyoke(2, 0))) == std::vector<Vertex>{Z(2, 0, {1, 1})});
  CHECK(neighbors(Vertex::zero(GraphParams::yoke(1, 0))).empty());
}

TEST_CASE("enumeration and adjacency match the definition") {
  for (auto [n, m] : kSmall) {
    for (Family f : {Family::Yoke, Family::DYoke}) {
      const GraphParams p(n, m, f);
      const int lo = p.middle_min();
      const auto expected = oracle::enumerate(n, m, lo);
      const auto got = enumerate_vertices(p);
      REQUIRE(got.size() == expected.size());
      CHECK(vertex_count(p) == expected.size());
      for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK(tuple(got[i]) == expected[i]);
        std::set<std::vector<int>> nb;
        for (const Vertex& w : neighbors(got[i])) nb.insert(tuple(w));
        CHECK(nb == oracle::neighbours(expected[i], n, lo));
      }
    }
  }
}

TEST_CASE("for_each_shift agrees with neighbors") {
  for (auto [n, m] : kSmall) {
    const GraphParams p = GraphParams::dyoke(n, m);
    const VertexIndex index(p);
    std::vector<int> buf(static_cast<std::size_t>(p.length()));
    for (std::size_t r = 0; r < index.size(); ++r) {
      index.decode(r, buf);
      std::set<std::size_t> seen;
      index.for_each_shift(buf, r, [&](Letter, std::size_t nr) { seen.insert(nr); });
      std::set<std::size_t> want;
      for (const Vertex& w : neighbors(index.unrank(r))) want.insert(index.rank(w));
      CHECK(seen == want);
    }
  }
}

TEST_CASE("cardinalities") {
  for (int n = 1; n <= 5; ++n) {
    for (int m = 0; m <= 6; ++m) {
      std::uint64_t two = 1, three = 1;
      for (int i = 0; i < m; ++i) two *= 2, three *= 3;
      CHECK(enumerate_vertices(GraphParams::yoke(n, m)).size() == n * two);
      CHECK(enumerate_vertices(GraphParams::dyoke(n, m)).size() == n * three);
    }
  }
  CHECK(vertex_count(GraphParams::dyoke(2, 200)) == UINT64_MAX);
}

TEST_CASE("shift invariants") {
  for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 3}, {2, 4}, {1, 3}, {4, 2}}) {
    for (Family f : {Family::Yoke, Family::DYoke}) {
      for (const Vertex& v : enumerate_vertices(GraphParams(n, m, f))) {
        for (Letter l : all_letters(m)) {
          const Vertex w = shift(v, l);
          if (w == v) continue;
          // the constructor of w already checked the sum; two entries move
          int changed = 0;
          for (int i = 0; i < v.size(); ++i) changed += v[i] != w[i];
          CHECK(changed == (n == 1 && (l.index == 0 || l.index == m) ? 1 : 2));
          CHECK(shift(w, {l.index, opposite(l.direction)}) == v);
          const auto back = neighbors(w);
          CHECK(std::binary_search(back.begin(), back.end(), v));
        }
      }
    }
  }
}

TEST_CASE("mu is an involutive automorphism") {
  CHECK(mu(Z(5, 3, {3, 0, -1, 1, 2})) == Z(5, 3, {2, 0, 1, -1, 3}));
  CHECK(mu(Z(3, 5, {2, 1, 1, 1, 1, 1, 2})) == Z(3, 5, {1, -1, -1, -1, -1, -1, 1}));
  CHECK(kind_of([] { mu(Vertex::zero(GraphParams::yoke(2, 2))); }) == ErrorKind::ParamMismatch);
  for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 4}, {2, 3}, {4, 2}}) {
    const GraphParams p = GraphParams::dyoke(n, m);
    CHECK(mu(Vertex::zero(p)).is_zero());
    for (const Vertex& v : enumerate_vertices(p)) {
      CHECK(mu(mu(v)) == v);
      std::vector<Vertex> image;
      for (const Vertex& w : neighbors(v)) image.push_back(mu(w));
      std::sort(image.begin(), image.end());
      CHECK(image == neighbors(mu(v)));
    }
  }
}

TEST_CASE("phi examples and embedding") {
  CHECK(phi(Y(3, 3, {2, 1, 0, 0, 0}), Y(3, 3, {0, 0, 0, 1, 2})) == Z(3, 3, {2, 1, 0, -1, 1}));
  CHECK(phi(Y(3, 2, {0, 0, 0, 0}), Y(3, 2, {0, 1, 1, 1})) == Z(3, 2, {0, -1, -1, 2}));
  CHECK(kind_of([] { phi(Vertex::zero(GraphParams::yoke(3, 2)), Vertex::zero(GraphParams::yoke(3, 1))); }) ==
        ErrorKind::ParamMismatch);

  for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 3}, {2, 3}, {1, 4}}) {
    const auto ys = enumerate_vertices(GraphParams::yoke(n, m));
    for (const Vertex& u : ys) {
      for (const Vertex& v : ys) {
        for (const Vertex& w : ys) {
          if (!(v < w)) continue;
          CHECK(adjacent(v, w) == adjacent(phi(v, u), phi(w, u)));
        }
      }
    }
  }
}

TEST_CASE("split_to_yoke_pair inverts phi") {
  {
    auto [v, u] = split_to_yoke_pair(Vertex::zero(GraphParams::dyoke(4, 3)));
    CHECK(v.is_zero());
    CHECK(u.is_zero());
  }
  {
    auto [v, u] = split_to_yoke_pair(Z(3, 3, {2, 1, 0, -1, 1}));
    CHECK(v == Y(3, 3, {2, 1, 0, 0, 0}));
    CHECK(u == Y(3, 3, {0, 0, 0, 1, 2}));
  }
  {
    auto [v, u] = split_to_yoke_pair(Z(2, 1, {1, -1, 0}));
    CHECK(v == Y(2, 1, {1, 0, 1}));
    CHECK(u == Y(2, 1, {0, 1, 1}));
  }
  for (auto [n, m] : std::vector<std::pair<int, int>>{{3, 4}, {2, 5}, {1, 3}, {5, 2}}) {
    for (const Vertex& z : enumerate_vertices(GraphParams::dyoke(n, m))) {
      auto [v, u] = split_to_yoke_pair(z);
      CHECK(phi(v, u) == z);
    }
  }
}

TEST_CASE("random vertices survive rank, render and parse") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution(1, 9)(rng);
    const int m = std::uniform_int_distribution(0, 12)(rng);
    const GraphParams p = GraphParams::dyoke(n, m);
    const VertexIndex index(p);
    const std::size_t r = std::uniform_int_distribution<std::size_t>(0, index.size() - 1)(rng);
    const Vertex v = index.unrank(r);
    CHECK(index.rank(v) == r);
    CHECK(parse_vertex(render(v), p) == v);
    if (r + 1 < index.size()) CHECK(v < index.unrank(r + 1));
  }
}
