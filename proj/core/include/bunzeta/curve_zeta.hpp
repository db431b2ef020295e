#pragma once

#include "bunzeta/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bunzeta {

// Zeta function of a smooth projective geometrically connected curve over
// F_q, held as the integer numerator P(t) = a_0 + ... + a_{2g} t^{2g} of
// Z(t) = P(t) / ((1-t)(1-qt)). Frobenius data is only ever accessed through
// Newton's identities on the coefficients, so everything stays exact.
struct CurveZeta {
  long q = 0;
  int genus = 0;
  std::vector<Int> numerator;  // a_0..a_{2g}, a_0 = 1

  static CurveZeta projective_line(long q);

  // Validates: a_0 = 1, length 2g+1, functional equation
  // a_{2g-j} = q^{g-j} a_j, point counts N_r >= 0 for r <= 8, and the Weil
  // bound s_r^2 <= (2g)^2 q^r for r <= 4. Throws std::invalid_argument
  // naming the failing check and r.
  static CurveZeta from_numerator(long q, int genus, std::vector<Int> coeffs);

  // Exhaustive affine point count over F_p plus the point at infinity for
  // y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6. p prime, p <= 10^4; the
  // curve must be nonsingular mod p.
  static CurveZeta elliptic_from_weierstrass(long p, long a1, long a2, long a3,
                                             long a4, long a6);
};

// s_r = sum of r-th powers of the numerator's reciprocal roots, by Newton's
// identities (exact integer).
Int frobenius_power_sum(const CurveZeta& zeta, int r);

// N_r = |X(F_{q^r})| = q^r + 1 - s_r
Int point_count(const CurveZeta& zeta, int r);

// Number of closed points of degree d (Moebius inversion of N_r). Throws if
// the numerator is exposed as non-Weil by a negative count.
Int closed_points(const CurveZeta& zeta, int d);

std::map<int, Int> closed_point_table(const CurveZeta& zeta, int max_degree);

// zeta_X(s) = P(q^{-s}) / ((1-q^{-s})(1-q^{1-s})) for integer s >= 2,
// exact and strictly positive. Throws std::domain_error for s <= 1.
Rat zeta_value(const CurveZeta& zeta, int s);

// Curve spec grammar for the CLI:
//   "p1"                          (requires the q flag)
//   "weil:q=2,g=1,num=1,0,2"
//   "elliptic:p=5,a=[0,0,0,1,0]"  (a = [a1,a2,a3,a4,a6])
// Malformed specs raise std::invalid_argument with the offending position.
CurveZeta parse_curve_spec(const std::string& spec, std::optional<long> q_flag);

}  // namespace bunzeta
