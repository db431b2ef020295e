#pragma once

#include "bunzeta/curve_zeta.hpp"
#include "bunzeta/root_system.hpp"
#include "bunzeta/trunc_series.hpp"

#include <vector>

namespace bunzeta {

// A split simply connected group paired with a complete curve over F_q:
// everything needed to evaluate the cohomology of the bundle moduli stack
// numerically.
struct BunGContext {
  GroupInvariants group;
  CurveZeta curve;

  BunGContext(GroupInvariants g, CurveZeta c);
};

// prod_i zeta_X(d_i) over the degrees of the group — the total Frobenius-
// inverse trace on H*(Bun_G) as an exact rational.
Rat trace_total(const BunGContext& ctx);

// q^{(g-1) dim G} * trace_total: the groupoid mass sum_P 1/|Aut P| predicted
// for Bun_G(F_q).
Rat tamagawa_rhs(const BunGContext& ctx);

// Generating series of symmetric-power traces,
//   prod_i P(q^{-d_i} t) / ((1 - q^{1-d_i} t)(1 - q^{-d_i} t)),
// truncated at t^order.
TruncSeries global_trace_series(const BunGContext& ctx, int order);

// The same series assembled from closed points: product over degrees d <=
// order of prod_i (1 - q^{-d_i d} t^d)^{-a_d}. Points of degree > order
// cannot contribute below t^{order+1}, so coefficients are exact.
TruncSeries local_trace_series(const BunGContext& ctx, int order);

struct SeriesComparison {
  bool identical = false;
  int order = 0;
  int first_mismatch = -1;  // degree of the first differing coefficient
  Rat lhs;                  // global coefficient there
  Rat rhs;                  // local coefficient there
};

SeriesComparison compare_trace_series(const BunGContext& ctx, int order);

// min_i q^{d_i - 1}: a lower bound for the modulus of every pole of the
// rational function behind the trace series. Always >= 2.
Rat convergence_radius_bound(const BunGContext& ctx);

struct EulerTruncation {
  Rat value;       // prod_{d <= cutoff} prod_i (1 - q^{-d_i d})^{-a_d}
  Rat tail_bound;  // rigorous upper bound on log(full/partial), > 0
  int degree_cutoff = 0;
};

// Partial Euler product over closed points of degree <= cutoff, with an
// exact-rational bound on the omitted log mass (see euler_tail_bound).
EulerTruncation euler_partial_product(const BunGContext& ctx, int degree_cutoff);

// The bound itself:
//   log(full/partial) = sum_{d>D} a_d sum_i -log(1 - q^{-d_i d})
// with -log(1-u) <= 2u for u <= 1/2 (true termwise since q^{-d_i d} <= 1/4)
// and a_d <= (q^d + 1 + 2g q^{ceil(d/2)})/d <= same/(D+1), summed in closed
// geometric form.
Rat euler_tail_bound(const BunGContext& ctx, int degree_cutoff);

// Traces and dimensions of H^k(Bun_G) for k = 0..degree_cutoff, read off
//   prod_i P(-q^{-d_i} s^{2d_i-1}) /
//          ((1 - q^{1-d_i} s^{2d_i-2})(1 - q^{-d_i} s^{2d_i}))
// where s tracks cohomological degree. Every Frobenius-inverse eigenvalue in
// degree k has modulus exactly q^{-k/2}, so |traces[k]| <= dims[k] 2^{-k/2}.
struct BiGradedTrace {
  int degree_cutoff = 0;
  std::vector<Rat> traces;
  std::vector<Int> dims;
};

BiGradedTrace bigraded_trace(const BunGContext& ctx, int degree_cutoff);

// Dimension series of the bigraded trace, valid for any genus:
//   prod_i (1 + s^{2d_i-1})^{2g} / ((1 - s^{2d_i-2})(1 - s^{2d_i}))
// Coefficients are nonnegative integers.
TruncSeries poincare_series(const GroupInvariants& group, int genus, int order);

// S_K = sum_{k<=K} (-1)^k traces[k]; converges to trace_total.
std::vector<Rat> alternating_partial_sums(const BiGradedTrace& trace);

}  // namespace bunzeta
