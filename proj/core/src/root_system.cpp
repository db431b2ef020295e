#include "bunzeta/root_system.hpp"

#include "bunzeta/arith.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <stdexcept>

namespace bunzeta {

namespace {

bool admissible(Family f, int n) {
  switch (f) {
    case Family::A: return n >= 1;
    case Family::B: return n >= 2;
    case Family::C: return n >= 3;
    case Family::D: return n >= 4;
    case Family::E: return n == 6 || n == 7 || n == 8;
    case Family::F: return n == 4;
    case Family::G: return n == 2;
  }
  return false;
}

// cartan[i][j] = <alpha_j, alpha_i^vee> = 2(alpha_i,alpha_j)/(alpha_i,alpha_i)
std::vector<std::vector<int>> cartan_matrix(const CartanLabel& label) {
  const int n = label.rank;
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto bond = [&](int i, int j) { c[i][j] = -1; c[j][i] = -1; };
  switch (label.family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case Family::B:
      // alpha_{n-1} is the short root
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      c[n - 1][n - 2] = -2;
      break;
    case Family::C:
      // alpha_{n-1} is the long root
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      c[n - 2][n - 1] = -2;
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) bond(i, i + 1);
      bond(n - 3, n - 1);
      break;
    case Family::E: {
      // Bourbaki numbering: node 1 joins node 3, node 2 joins node 4,
      // nodes 3..n form a chain (1-indexed).
      bond(0, 2);
      bond(1, 3);
      for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
      break;
    }
    case Family::F:
      bond(0, 1);
      bond(2, 3);
      c[1][2] = -1;
      c[2][1] = -2;
      break;
    case Family::G:
      c[0][1] = -3;
      c[1][0] = -1;
      break;
  }
  return c;
}

int height(const std::vector<int>& root) {
  return std::accumulate(root.begin(), root.end(), 0);
}

}  // namespace

std::string CartanLabel::str() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

CartanLabel parse_cartan_label(const std::string& text) {
  if (text.size() < 2)
    throw std::invalid_argument("bad group label '" + text + "': expected letter A-G followed by rank");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (letter < 'A' || letter > 'G')
    throw std::invalid_argument("bad group label '" + text + "': family letter must be A-G");
  for (std::size_t i = 1; i < text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("bad group label '" + text + "': rank must be decimal digits");
  long rank = std::stol(text.substr(1));
  if (rank < 1 || rank > 64)
    throw std::invalid_argument("bad group label '" + text + "': rank out of range");
  CartanLabel label{static_cast<Family>(letter), static_cast<int>(rank)};
  if (!admissible(label.family, label.rank))
    throw std::invalid_argument("inadmissible Cartan type " + label.str());
  return label;
}

std::vector<CartanLabel> all_labels_up_to_rank(int max_rank) {
  std::vector<CartanLabel> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
    for (int n = 1; n <= max_rank; ++n)
      if (admissible(f, n)) out.push_back({f, n});
  return out;
}

RootDatum build_root_datum(const CartanLabel& label) {
  if (!admissible(label.family, label.rank))
    throw std::invalid_argument("inadmissible Cartan type " + label.str());
  const int n = label.rank;
  auto cartan = cartan_matrix(label);

  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> layer;
  for (int i = 0; i < n; ++i) {
    std::vector<int> simple(n, 0);
    simple[i] = 1;
    roots.insert(simple);
    layer.push_back(simple);
  }

  // Extend height by height: beta + alpha_i is a root iff the alpha_i-string
  // through beta goes further up, i.e. p - <beta, alpha_i^vee> > 0 where p is
  // the number of steps the string goes down.
  while (!layer.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < n; ++i) {
        int pairing = 0;
        for (int j = 0; j < n; ++j) pairing += cartan[i][j] * beta[j];
        int down = 0;
        std::vector<int> probe = beta;
        while (probe[i] > 0) {
          probe[i] -= 1;
          if (!roots.count(probe)) break;
          ++down;
        }
        if (down - pairing > 0) {
          std::vector<int> up = beta;
          up[i] += 1;
          if (roots.insert(up).second) next.push_back(up);
        }
      }
    }
    layer = std::move(next);
  }

  RootDatum datum{label, std::move(cartan), {roots.begin(), roots.end()}};
  std::sort(datum.positive_roots.begin(), datum.positive_roots.end(),
            [](const auto& a, const auto& b) {
              int ha = height(a), hb = height(b);
              return ha != hb ? ha < hb : a < b;
            });
  return datum;
}

GroupInvariants group_invariants(const RootDatum& datum) {
  const int r = datum.label.rank;
  const int num_roots = static_cast<int>(datum.positive_roots.size());

  std::vector<int> height_count;
  for (const auto& root : datum.positive_roots) {
    int h = height(root);
    if (h > static_cast<int>(height_count.size())) height_count.resize(h, 0);
    height_count[h - 1] += 1;
  }

  // Conjugate partition of the height distribution.
  std::vector<int> exponents;
  for (int j = 1; j <= height_count[0]; ++j) {
    int len = 0;
    while (len < static_cast<int>(height_count.size()) && height_count[len] >= j) ++len;
    exponents.push_back(len);
  }
  std::sort(exponents.begin(), exponents.end());

  GroupInvariants inv;
  inv.label = datum.label;
  inv.exponents = exponents;
  inv.num_pos_roots = num_roots;
  inv.dim_g = 2 * num_roots + r;
  inv.weyl_order = 1;
  for (int e : exponents) {
    inv.degrees.push_back(e + 1);
    inv.weyl_order *= e + 1;
    inv.exponent_module[e] += 1;
  }

  // Consistency gates; both are identities of the height distribution.
  if (static_cast<int>(exponents.size()) != r)
    throw std::logic_error("exponent count disagrees with rank for " + datum.label.str());
  if (std::accumulate(inv.degrees.begin(), inv.degrees.end(), 0) != num_roots + r)
    throw std::logic_error("degree sum disagrees with root count for " + datum.label.str());
  return inv;
}

GroupInvariants group_invariants(const CartanLabel& label) {
  return group_invariants(build_root_datum(label));
}

Int chevalley_order(const GroupInvariants& inv, long q) {
  require_prime_power(q);
  Int out = int_pow(Int(q), static_cast<unsigned long>(inv.num_pos_roots));
  for (int d : inv.degrees)
    out *= int_pow(Int(q), static_cast<unsigned long>(d)) - 1;
  return out;
}

Rat local_mass(const GroupInvariants& inv, long q) {
  return make_rat(int_pow(Int(q), static_cast<unsigned long>(inv.dim_g)),
                  chevalley_order(inv, q));
}

}  // namespace bunzeta
