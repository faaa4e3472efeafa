#pragma once

// Closed-form diameter of Y(n,m) and the extremal dYoke vertices behind it.

#include <cstdint>
#include <string_view>

#include "yoke/core.hpp"

namespace yoke {

enum class DiameterCaseTag { MLeN, NIsOne, EvenGapOrSmallN, OddGapLargeN };

std::string_view to_string(DiameterCaseTag tag);

struct DiameterCase {
  DiameterCaseTag tag = DiameterCaseTag::MLeN;
  std::int64_t value = 0;
};

/// C(k, 2), zero for k < 2.
constexpr std::int64_t binom2(std::int64_t k) { return k < 2 ? 0 : k * (k - 1) / 2; }
/// 1 + 2 + ... + k.
constexpr std::int64_t triangular(std::int64_t k) { return binom2(k + 1); }

constexpr std::int64_t floor_half(std::int64_t a) { return a / 2; }
constexpr std::int64_t ceil_half(std::int64_t a) { return (a + 1) / 2; }

/// diam(Y(n,m)). For n = 1, m = 0 both the m <= n and the n = 1 branch apply
/// and give 0; the m <= n tag is reported.
DiameterCase diameter_formula(int n, int m);

/// d(u0, 0). Requires 1 < n <= m.
std::int64_t d0(int n, int m);
/// d(u1, 0). Requires 1 < n < m with m - n odd.
std::int64_t d1(int n, int m);
/// D0 for even m - n, max(D0, D1) otherwise. Requires 1 < n <= m.
std::int64_t d_max(int n, int m);

/// All middle entries 1, u_0 = -floor((m-n)/2) mod n. Requires 1 < n <= m.
Vertex u0_vertex(int n, int m);
/// As u0 but entry ceil((m+1)/2) is 0. Requires 1 < n < m, m - n odd.
Vertex u1_vertex(int n, int m);
/// Buckets floor(n/2), plus a 1 at entry floor((m+1)/2) when n is odd.
/// Requires m >= 1 for odd n.
Vertex lower_bound_witness(int n, int m);

}  // namespace yoke
