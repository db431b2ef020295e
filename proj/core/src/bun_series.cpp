#include "bunzeta/bun_series.hpp"

#include "bunzeta/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace bunzeta {

namespace {

Rat q_power(long q, long exp) { return rat_pow(Rat(q), exp); }

// sum_{m >= first} x^m = x^first / (1 - x), for 0 < x < 1
Rat geometric_tail(const Rat& x, long first) {
  return rat_pow(x, first) / (1 - x);
}

}  // namespace

BunGContext::BunGContext(GroupInvariants g, CurveZeta c)
    : group(std::move(g)), curve(std::move(c)) {
  if (curve.q < 2) throw std::invalid_argument("curve field must have q >= 2");
  for (int d : group.degrees)
    if (d < 2) throw std::invalid_argument("group degrees must all be >= 2");
}

Rat trace_total(const BunGContext& ctx) {
  Rat out(1);
  for (int d : ctx.group.degrees) out *= zeta_value(ctx.curve, d);
  return out;
}

Rat tamagawa_rhs(const BunGContext& ctx) {
  long exp = static_cast<long>(ctx.curve.genus - 1) * ctx.group.dim_g;
  return q_power(ctx.curve.q, exp) * trace_total(ctx);
}

TruncSeries global_trace_series(const BunGContext& ctx, int order) {
  const long q = ctx.curve.q;
  TruncSeries out = TruncSeries::one(order);
  for (int d : ctx.group.degrees) {
    TruncSeries numer =
        poly_eval_series(ctx.curve.numerator,
                         TruncSeries::monomial(q_power(q, -d), 1, order));
    out = out * numer * geometric_factor(q_power(q, 1 - d), 1, order) *
          geometric_factor(q_power(q, -d), 1, order);
  }
  return out;
}

TruncSeries local_trace_series(const BunGContext& ctx, int order) {
  const long q = ctx.curve.q;
  TruncSeries out = TruncSeries::one(order);
  for (int d = 1; d <= order; ++d) {
    Int points = closed_points(ctx.curve, d);
    if (points == 0) continue;
    for (int deg : ctx.group.degrees)
      out = out * binomial_factor(q_power(q, -static_cast<long>(deg) * d), d, points, order);
  }
  return out;
}

SeriesComparison compare_trace_series(const BunGContext& ctx, int order) {
  TruncSeries lhs = global_trace_series(ctx, order);
  TruncSeries rhs = local_trace_series(ctx, order);
  SeriesComparison cmp;
  cmp.order = order;
  cmp.identical = true;
  for (int k = 0; k <= order; ++k) {
    if (lhs[k] != rhs[k]) {
      cmp.identical = false;
      cmp.first_mismatch = k;
      cmp.lhs = lhs[k];
      cmp.rhs = rhs[k];
      break;
    }
  }
  return cmp;
}

Rat convergence_radius_bound(const BunGContext& ctx) {
  int min_degree = ctx.group.degrees.front();
  for (int d : ctx.group.degrees) min_degree = std::min(min_degree, d);
  Rat bound = q_power(ctx.curve.q, min_degree - 1);
  if (bound < 2) throw std::logic_error("pole bound below 2; degrees or q out of contract");
  return bound;
}

Rat euler_tail_bound(const BunGContext& ctx, int degree_cutoff) {
  const long q = ctx.curve.q;
  const long D = degree_cutoff;
  const long r = static_cast<long>(ctx.group.degrees.size());
  const long g = ctx.curve.genus;

  // sum_{d>D} q^{ceil(d/2) - 2d}, split by parity: even d = 2m gives q^{-3m},
  // odd d = 2m+1 gives q^{-3m-1}.
  Rat x = q_power(q, -3);
  long m_even = D / 2 + 1;        // smallest m with 2m > D
  long m_odd = (D - 1) / 2 + 1;   // smallest m with 2m+1 > D
  Rat half_tail = geometric_tail(x, m_even) + q_power(q, -1) * geometric_tail(x, m_odd);

  Rat tail = geometric_tail(make_rat(1, q), D + 1) +
             geometric_tail(make_rat(1, Int(q) * q), D + 1) + Rat(2 * g) * half_tail;
  return make_rat(2 * r, D + 1) * tail;
}

EulerTruncation euler_partial_product(const BunGContext& ctx, int degree_cutoff) {
  if (degree_cutoff < 1) throw std::invalid_argument("degree cutoff must be >= 1");
  const long q = ctx.curve.q;
  Rat value(1);
  for (int d = 1; d <= degree_cutoff; ++d) {
    Int points = closed_points(ctx.curve, d);
    if (points == 0) continue;
    Rat local(1);
    for (int deg : ctx.group.degrees) {
      Int qd = int_pow(Int(q), static_cast<unsigned long>(deg) * d);
      local *= make_rat(qd, qd - 1);
    }
    value *= rat_pow(local, points);
  }
  return EulerTruncation{value, euler_tail_bound(ctx, degree_cutoff), degree_cutoff};
}

BiGradedTrace bigraded_trace(const BunGContext& ctx, int degree_cutoff) {
  const long q = ctx.curve.q;
  const int K = degree_cutoff;

  TruncSeries traces = TruncSeries::one(K);
  for (int d : ctx.group.degrees) {
    traces = traces *
             poly_eval_series(ctx.curve.numerator,
                              TruncSeries::monomial(-q_power(q, -d), 2 * d - 1, K)) *
             geometric_factor(q_power(q, 1 - d), 2 * d - 2, K) *
             geometric_factor(q_power(q, -d), 2 * d, K);
  }

  TruncSeries dims = poincare_series(ctx.group, ctx.curve.genus, K);

  BiGradedTrace out;
  out.degree_cutoff = K;
  out.traces = traces.coeffs();
  out.dims.reserve(static_cast<std::size_t>(K) + 1);
  for (const Rat& c : dims.coeffs()) {
    if (c.get_den() != 1 || c < 0)
      throw std::logic_error("dimension series coefficient not a nonnegative integer");
    out.dims.emplace_back(c.get_num());
  }
  return out;
}

TruncSeries poincare_series(const GroupInvariants& group, int genus, int order) {
  if (genus < 0) throw std::invalid_argument("negative genus");
  TruncSeries out = TruncSeries::one(order);
  for (int d : group.degrees) {
    TruncSeries odd =
        (TruncSeries::one(order) + TruncSeries::monomial(Rat(1), 2 * d - 1, order))
            .pow(static_cast<unsigned>(2 * genus));
    out = out * odd * geometric_factor(Rat(1), 2 * d - 2, order) *
          geometric_factor(Rat(1), 2 * d, order);
  }
  return out;
}

std::vector<Rat> alternating_partial_sums(const BiGradedTrace& trace) {
  std::vector<Rat> sums;
  sums.reserve(trace.traces.size());
  Rat acc(0);
  for (std::size_t k = 0; k < trace.traces.size(); ++k) {
    acc += (k % 2 == 0) ? trace.traces[k] : -trace.traces[k];
    sums.push_back(acc);
  }
  return sums;
}

}  // namespace bunzeta
