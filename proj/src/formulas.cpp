#include "yoke/formulas.hpp"

#include <algorithm>
#include <string>

namespace yoke {

std::string_view to_string(DiameterCaseTag tag) {
  switch (tag) {
    case DiameterCaseTag::MLeN: return "MLeN";
    case DiameterCaseTag::NIsOne: return "NIsOne";
    case DiameterCaseTag::EvenGapOrSmallN: return "EvenGapOrSmallN";
    case DiameterCaseTag::OddGapLargeN: return "OddGapLargeN";
  }
  return "Unknown";
}

namespace {

[[noreturn]] void domain_error(const char* what, int n, int m) {
  throw Error(ErrorKind::DomainError,
              std::string(what) + " undefined for n=" + std::to_string(n) + " m=" + std::to_string(m));
}

void require_n_le_m(const char* what, int n, int m) {
  if (n <= 1 || n > m) domain_error(what, n, m);
}

void require_odd_gap(const char* what, int n, int m) {
  if (n <= 1 || n >= m || (m - n) % 2 == 0) domain_error(what, n, m);
}

}  // namespace

DiameterCase diameter_formula(int n, int m) {
  if (n < 1 || m < 0) domain_error("diameter_formula", n, m);
  if (m <= n) {
    return {DiameterCaseTag::MLeN, floor_half(std::int64_t{n} * (m + 1))};
  }
  if (n == 1) {
    return {DiameterCaseTag::NIsOne, binom2(ceil_half(m) + 1) + binom2(floor_half(m) + 1)};
  }
  if ((m - n) % 2 == 0 || n <= ceil_half(m + 1)) {
    return {DiameterCaseTag::EvenGapOrSmallN, d0(n, m)};
  }
  return {DiameterCaseTag::OddGapLargeN, d0(n, m) + n - ceil_half(m + 1)};
}

std::int64_t d0(int n, int m) {
  require_n_le_m("D0", n, m);
  return binom2(floor_half(m + n) + 1) + binom2(ceil_half(m - n) + 1);
}

std::int64_t d1(int n, int m) {
  require_odd_gap("D1", n, m);
  return binom2(ceil_half(m + n) + 1) + binom2(floor_half(m - n) + 1) - ceil_half(m + 1);
}

std::int64_t d_max(int n, int m) {
  require_n_le_m("D(n,m)", n, m);
  if ((m - n) % 2 == 0) return d0(n, m);
  return std::max(d0(n, m), d1(n, m));
}

namespace {

Vertex all_ones_with_bucket(int n, int m, int zero_at) {
  const GraphParams params = GraphParams::dyoke(n, m);
  std::vector<int> prefix(static_cast<std::size_t>(m + 1), 1);
  prefix[0] = mod(-floor_half(m - n), n);
  if (zero_at > 0) prefix[static_cast<std::size_t>(zero_at)] = 0;
  return complete_vertex(prefix, params);
}

}  // namespace

Vertex u0_vertex(int n, int m) {
  require_n_le_m("u0", n, m);
  return all_ones_with_bucket(n, m, 0);
}

Vertex u1_vertex(int n, int m) {
  require_odd_gap("u1", n, m);
  return all_ones_with_bucket(n, m, static_cast<int>(ceil_half(m + 1)));
}

Vertex lower_bound_witness(int n, int m) {
  if (n < 1 || m < 0 || (n % 2 == 1 && m == 0)) domain_error("lower_bound_witness", n, m);
  const GraphParams params = GraphParams::dyoke(n, m);
  std::vector<int> entries(static_cast<std::size_t>(m + 2), 0);
  entries.front() = n / 2;
  entries.back() = n / 2;
  if (n % 2 == 1) entries[static_cast<std::size_t>((m + 1) / 2)] = 1;
  return Vertex(params, std::move(entries));
}

}  // namespace yoke
