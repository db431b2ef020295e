#pragma once

#include "bunzeta/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace bunzeta {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// Cartan type of a split simple group, e.g. A1, D4, E8.
struct CartanLabel {
  Family family;
  int rank;

  std::string str() const;
  bool operator==(const CartanLabel&) const = default;
};

// Parses "A1".."E8" (case-insensitive letter, decimal rank) and checks
// admissibility: A n>=1, B n>=2, C n>=3, D n>=4, E n in {6,7,8}, F4, G2.
// Throws std::invalid_argument otherwise.
CartanLabel parse_cartan_label(const std::string& text);

// Every admissible label of rank <= max_rank, for exhaustive suites.
std::vector<CartanLabel> all_labels_up_to_rank(int max_rank);

struct RootDatum {
  CartanLabel label;
  // cartan[i][j] = <alpha_j, alpha_i^vee>; rows are indexed by coroots.
  std::vector<std::vector<int>> cartan;
  // Coordinates in the simple-root basis, sorted by (height, lex).
  std::vector<std::vector<int>> positive_roots;
};

// Generates the positive roots from the Cartan matrix by closing the
// simple roots under root strings.
RootDatum build_root_datum(const CartanLabel& label);

struct GroupInvariants {
  CartanLabel label;
  std::vector<int> exponents;  // ascending, e_1 <= ... <= e_r
  std::vector<int> degrees;    // d_i = e_i + 1
  int num_pos_roots = 0;       // N
  int dim_g = 0;               // 2N + r
  Int weyl_order = 0;
  std::map<int, int> exponent_module;  // exponent -> multiplicity
};

// Exponents are read off the height distribution of the positive roots:
// if h_k roots have height k, the exponents are the column lengths of the
// Young diagram with rows h_1 >= h_2 >= ...
GroupInvariants group_invariants(const RootDatum& datum);
GroupInvariants group_invariants(const CartanLabel& label);

// |G(F_q)| = q^N * prod_i (q^{d_i} - 1) for the split simply connected
// form. q must be a prime power.
Int chevalley_order(const GroupInvariants& inv, long q);

// q^{dim G} / |G(F_q)| as an exact rational; equals
// prod_i (1 - q^{-d_i})^{-1}.
Rat local_mass(const GroupInvariants& inv, long q);

}  // namespace bunzeta
