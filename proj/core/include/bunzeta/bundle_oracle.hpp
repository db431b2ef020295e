#pragma once

#include "bunzeta/rational.hpp"

#include <vector>

namespace bunzeta {

// Splitting type of a rank-n degree-0 bundle on the projective line:
// E = O(a_1) + ... + O(a_n) with a_1 >= ... >= a_n and sum a_i = 0.
struct SplittingType {
  std::vector<long> twists;

  explicit SplittingType(std::vector<long> a);
};

// |Aut(E)| over F_q: block upper-triangular with invertible diagonal,
//   q^u * prod_j |GL_{m_j}(F_q)|,
// u = sum_{j<j'} m_j m_{j'} (v_j - v_{j'} + 1) counting Hom blocks from the
// lower twist to the higher.
Int aut_order(const SplittingType& type, long q);

Int gl_order(int m, long q);

// All splitting types with a_1 <= max_twist, in lexicographic order.
std::vector<SplittingType> splitting_types_p1(int n, long max_twist);

struct MassReport {
  Rat partial_mass;  // (q-1) * sum over enumerated types of 1/|Aut|
  Rat tail_bound;    // rigorous bound on the omitted mass, > 0
  long twist_cutoff = 0;
  Rat rhs;           // the closed-form prediction for the full mass
  bool verdict = false;  // |partial - rhs| <= tail_bound
};

// Groupoid mass of SL_n-bundles on P^1 over F_q by direct enumeration of
// splitting types, compared against the zeta-product prediction. The q-1
// factor counts determinant trivializations. 2 <= n <= 4.
MassReport sl_mass_p1(int n, long q, long twist_cutoff);

// Exhaustive count of n x n matrices over F_q with determinant 1.
// n in {2,3}; q in {2,3,4} (q=4 via an explicit field table).
Int brute_sl_order(int n, long q);

}  // namespace bunzeta
