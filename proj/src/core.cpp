#include "yoke/core.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

namespace yoke {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::EntryOutOfDomain: return "EntryOutOfDomain";
    case ErrorKind::SumNotZeroModN: return "SumNotZeroModN";
    case ErrorKind::ParamMismatch: return "ParamMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotAPath: return "NotAPath";
    case ErrorKind::NotAPivot: return "NotAPivot";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ConstraintViolatedAtStart: return "ConstraintViolatedAtStart";
    case ErrorKind::Disconnected: return "Disconnected";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

std::string_view to_string(Family family) {
  return family == Family::Yoke ? "yoke" : "dyoke";
}

GraphParams::GraphParams(int n_, int m_, Family family_) : n(n_), m(m_), family(family_) {
  if (n < 1 || m < 0) {
    throw Error(ErrorKind::DomainError,
                "need n >= 1 and m >= 0, got n=" + std::to_string(n) + " m=" + std::to_string(m));
  }
}

void validate_entries(const GraphParams& params, std::span<const int> entries) {
  if (static_cast<int>(entries.size()) != params.length()) {
    throw Error(ErrorKind::LengthMismatch, "expected " + std::to_string(params.length()) +
                                               " entries, got " + std::to_string(entries.size()));
  }
  long long sum = 0;
  for (int i = 0; i < params.length(); ++i) {
    const int e = entries[static_cast<std::size_t>(i)];
    if (params.is_bucket(i)) {
      if (e < 0 || e >= params.n) {
        throw Error(ErrorKind::EntryOutOfDomain,
                    "bucket " + std::to_string(i) + " = " + std::to_string(e) + " not in [0," +
                        std::to_string(params.n - 1) + "]");
      }
    } else if (e < params.middle_min() || e > params.middle_max()) {
      throw Error(ErrorKind::EntryOutOfDomain,
                  "entry " + std::to_string(i) + " = " + std::to_string(e) + " outside " +
                      (params.family == Family::Yoke ? "{0,1}" : "{-1,0,1}"));
    }
    sum += e;
  }
  if (mod(sum, params.n) != 0) {
    throw Error(ErrorKind::SumNotZeroModN,
                "entry sum " + std::to_string(sum) + " not divisible by " + std::to_string(params.n));
  }
}

Vertex::Vertex(GraphParams params, std::vector<int> entries)
    : params_(params), entries_(std::move(entries)) {
  validate_entries(params_, entries_);
}

Vertex Vertex::zero(GraphParams params) {
  return Vertex(Unchecked{}, params, std::vector<int>(static_cast<std::size_t>(params.length()), 0));
}

bool Vertex::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e == 0; });
}

std::vector<Letter> all_letters(int m) {
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(2 * (m + 1)));
  for (int i = 0; i <= m; ++i) {
    out.push_back({i, Direction::Left});
    out.push_back({i, Direction::Right});
  }
  return out;
}

Vertex parse_vertex(std::string_view text, GraphParams params) {
  auto fail = [&](const std::string& why) {
    return Error(ErrorKind::ParseError, "'" + std::string(text) + "': " + why);
  };
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw fail("expected a parenthesized list");
  }
  std::string_view body = text.substr(1, text.size() - 2);
  std::vector<int> entries;
  std::size_t pos = 0;
  while (true) {
    while (pos < body.size() && body[pos] == ' ') ++pos;
    int value = 0;
    const char* first = body.data() + pos;
    const char* last = body.data() + body.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr == first) throw fail("expected an integer");
    entries.push_back(value);
    pos = static_cast<std::size_t>(ptr - body.data());
    if (pos == body.size()) break;
    if (body[pos] != ',') throw fail("expected ','");
    ++pos;
  }
  return Vertex(params, std::move(entries));
}

std::string render(const Vertex& v) {
  std::string out = "(";
  for (int i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  out += ')';
  return out;
}

Vertex complete_vertex(std::span<const int> prefix, GraphParams params) {
  if (static_cast<int>(prefix.size()) != params.m + 1) {
    throw Error(ErrorKind::LengthMismatch, "prefix needs " + std::to_string(params.m + 1) +
                                               " entries, got " + std::to_string(prefix.size()));
  }
  std::vector<int> entries(prefix.begin(), prefix.end());
  long long sum = 0;
  for (int e : entries) sum += e;
  entries.push_back(mod(-sum, params.n));
  return Vertex(params, std::move(entries));
}

bool shift_entries(std::span<int> entries, const GraphParams& params, Letter letter) {
  const int gain = letter.direction == Direction::Left ? letter.index : letter.index + 1;
  const int loss = letter.direction == Direction::Left ? letter.index + 1 : letter.index;
  auto moved = [&](int j, int step) {
    const int e = entries[static_cast<std::size_t>(j)] + step;
    return params.is_bucket(j) ? mod(e, params.n) : e;
  };
  const int g = moved(gain, 1);
  const int l = moved(loss, -1);
  auto in_domain = [&](int j, int value) {
    return params.is_bucket(j) || (value >= params.middle_min() && value <= params.middle_max());
  };
  if (!in_domain(gain, g) || !in_domain(loss, l)) return false;
  entries[static_cast<std::size_t>(gain)] = g;
  entries[static_cast<std::size_t>(loss)] = l;
  return true;
}

Vertex shift(const Vertex& v, Letter letter) {
  if (letter.index < 0 || letter.index > v.params().m) {
    throw Error(ErrorKind::DomainError, "letter index " + std::to_string(letter.index) +
                                            " outside [0," + std::to_string(v.params().m) + "]");
  }
  std::vector<int> entries(v.entries().begin(), v.entries().end());
  if (!shift_entries(entries, v.params(), letter)) return v;
  return Vertex(v.params(), std::move(entries));
}

std::vector<Vertex> neighbors(const Vertex& v) {
  std::vector<Vertex> out;
  for (Letter letter : all_letters(v.params().m)) {
    Vertex w = shift(v, letter);
    if (w != v) out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool adjacent(const Vertex& a, const Vertex& b) {
  if (a.params() != b.params() || a == b) return false;
  for (Letter letter : all_letters(a.params().m)) {
    if (shift(a, letter) == b) return true;
  }
  return false;
}

Vertex mu(const Vertex& v) {
  const GraphParams& p = v.params();
  if (p.family != Family::DYoke) {
    throw Error(ErrorKind::ParamMismatch, "mu is defined on dYoke vertices");
  }
  std::vector<int> entries(v.entries().begin(), v.entries().end());
  for (int i = 0; i < p.length(); ++i) {
    int& e = entries[static_cast<std::size_t>(i)];
    e = p.is_bucket(i) ? mod(-e, p.n) : -e;
  }
  return Vertex(p, std::move(entries));
}

Vertex phi(const Vertex& v, const Vertex& u) {
  if (v.params() != u.params() || v.params().family != Family::Yoke) {
    throw Error(ErrorKind::ParamMismatch, "phi needs two Yoke vertices of the same instance");
  }
  const GraphParams z = v.params().with_family(Family::DYoke);
  std::vector<int> entries(static_cast<std::size_t>(z.length()));
  for (int i = 0; i < z.length(); ++i) {
    const int d = v[i] - u[i];
    entries[static_cast<std::size_t>(i)] = z.is_bucket(i) ? mod(d, z.n) : d;
  }
  return Vertex(z, std::move(entries));
}

std::pair<Vertex, Vertex> split_to_yoke_pair(const Vertex& z) {
  if (z.params().family != Family::DYoke) {
    throw Error(ErrorKind::ParamMismatch, "split_to_yoke_pair needs a dYoke vertex");
  }
  const GraphParams y = z.params().with_family(Family::Yoke);
  const int m = y.m;
  std::vector<int> v(static_cast<std::size_t>(m + 1)), u(static_cast<std::size_t>(m + 1));
  v[0] = z[0];
  u[0] = 0;
  for (int i = 1; i <= m; ++i) {
    v[static_cast<std::size_t>(i)] = std::max(0, z[i]);
    u[static_cast<std::size_t>(i)] = std::max(0, -z[i]);
  }
  return {complete_vertex(v, y), complete_vertex(u, y)};
}

std::uint64_t vertex_count(const GraphParams& params) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t count = static_cast<std::uint64_t>(params.n);
  const auto k = static_cast<std::uint64_t>(params.middle_radix());
  for (int i = 0; i < params.m; ++i) {
    if (count > kMax / k) return kMax;
    count *= k;
  }
  return count;
}

VertexIndex::VertexIndex(GraphParams params) : params_(params) {
  const std::uint64_t count = vertex_count(params_);
  if (count > (std::uint64_t{1} << 40)) {
    throw Error(ErrorKind::BudgetExceeded, "instance too large to index");
  }
  size_ = static_cast<std::size_t>(count);
  const int m = params_.m;
  const auto k = static_cast<std::size_t>(params_.middle_radix());
  stride_.assign(static_cast<std::size_t>(m + 1), 1);
  for (int i = m - 1; i >= 0; --i) {
    stride_[static_cast<std::size_t>(i)] = stride_[static_cast<std::size_t>(i + 1)] * k;
  }
}

std::size_t VertexIndex::rank(std::span<const int> entries) const {
  std::size_t r = static_cast<std::size_t>(entries[0]) * stride_[0];
  const int lo = params_.middle_min();
  for (int i = 1; i <= params_.m; ++i) {
    r += static_cast<std::size_t>(entries[static_cast<std::size_t>(i)] - lo) *
         stride_[static_cast<std::size_t>(i)];
  }
  return r;
}

std::size_t VertexIndex::rank(const Vertex& v) const {
  if (v.params() != params_) throw Error(ErrorKind::ParamMismatch, "vertex from another instance");
  return rank(v.entries());
}

void VertexIndex::decode(std::size_t r, std::span<int> out) const {
  const int m = params_.m;
  const int lo = params_.middle_min();
  const auto k = static_cast<std::size_t>(params_.middle_radix());
  long long sum = 0;
  for (int i = m; i >= 1; --i) {
    const int e = static_cast<int>(r % k) + lo;
    out[static_cast<std::size_t>(i)] = e;
    sum += e;
    r /= k;
  }
  out[0] = static_cast<int>(r);
  sum += out[0];
  out[static_cast<std::size_t>(m + 1)] = mod(-sum, params_.n);
}

Vertex VertexIndex::unrank(std::size_t r) const {
  std::vector<int> entries(static_cast<std::size_t>(params_.length()));
  decode(r, entries);
  return Vertex(Vertex::Unchecked{}, params_, std::move(entries));
}

}  // namespace yoke
