#pragma once

// Exhaustive (or sampled) checks of the structural facts behind the diameter
// formula, run against one instance (n, m). Every check compares library
// output with brute-force BFS.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "yoke/core.hpp"
#include "yoke/metrics.hpp"

namespace yoke {

struct AuditResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

class LemmaAuditor {
 public:
  /// Runs one BFS from 0 in Z(n,m) up front. Throws BudgetExceeded when Z(n,m)
  /// does not fit the budget.
  LemmaAuditor(int n, int m, const InstanceBudget& budget = InstanceBudget::single_source(),
               std::uint64_t seed = 20240101);
  ~LemmaAuditor();
  LemmaAuditor(const LemmaAuditor&) = delete;
  LemmaAuditor& operator=(const LemmaAuditor&) = delete;

  int n() const { return n_; }
  int m() const { return m_; }
  /// d(v, 0) in Z(n,m).
  int distance_to_zero(const Vertex& v) const;
  int eccentricity_of_zero() const;

  /// Vertex counts of Y(n,m) and Z(n,m) against enumeration.
  AuditResult cardinality() const;
  /// Conservation, inverse shifts, simple symmetric adjacency, in both families.
  AuditResult shift_invariants() const;
  /// mu: involution fixing 0, automorphism, preserves d(., 0) and I_c.
  AuditResult mu_automorphism() const;
  /// phi_u is an isomorphism onto its image for `samples` vertices u of Y.
  AuditResult phi_embedding(int samples) const;
  AuditResult split_left_inverse() const;
  /// Extracted BFS geodesic of every vertex, plus `random_walks` random
  /// geodesics per vertex, shift each index in one direction.
  AuditResult shift_direction(int random_walks) const;
  /// Pivots are exactly the walls with a wall-constrained path, and
  /// d(v,0) = min_p ps_p(v); every extracted geodesic is a pivot path.
  AuditResult pivot_paths() const;
  /// Extracted p-pivot paths shift each index in one direction, and each
  /// P-interval in one direction with the expected shift count.
  AuditResult pivot_shift_direction() const;
  /// ps_p <= trivial length <= split sum; trivial paths obey interval counts.
  AuditResult trivial_paths() const;
  AuditResult sign_constrained_geodesics() const;
  /// d_Y(v,u) = d_Z(v-u, 0); exhaustive when |Y| <= exhaustive_limit, else
  /// `random_pairs` random pairs.
  AuditResult distance_preservation(std::uint64_t exhaustive_limit, int random_pairs) const;
  /// All-pairs diameter of Y equals ecc of 0 in Z (skipped above 4096 vertices).
  AuditResult diameter_equals_eccentricity() const;
  AuditResult diameter_formula_matches() const;
  AuditResult lower_bound_witness_check() const;
  /// d(u0,0) = D0, d(u1,0) = D1, 2h(u0) against 2h_{n,m}. Needs 1 < n <= m.
  AuditResult extremal_vertices() const;
  /// Upper bounds of the three case lemmas. Needs 1 < n <= m.
  AuditResult case_bounds() const;
  /// Pivot example of Z(3,8); only meaningful for (3, 8).
  AuditResult pivot_example() const;

  /// All audits that apply to (n, m), in a fixed order.
  std::vector<AuditResult> run_all() const;

 private:
  struct State;
  int n_;
  int m_;
  std::uint64_t seed_;
  std::unique_ptr<State> state_;
};

}  // namespace yoke
