#include "bunzeta/root_system.hpp"

#include "bunzeta/arith.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <numeric>
#include <stdexcept>

using namespace bunzeta;

namespace {

std::vector<int> root_heights(const RootDatum& datum) {
  std::vector<int> out;
  for (const auto& r : datum.positive_roots)
    out.push_back(std::accumulate(r.begin(), r.end(), 0));
  return out;
}

// Weyl group orders from the classical closed forms, independent of the
// degree product the library uses.
Int reference_weyl_order(const CartanLabel& label) {
  auto factorial = [](int n) {
    Int f(1);
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  const int n = label.rank;
  switch (label.family) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return int_pow(Int(2), n) * factorial(n);
    case Family::D: return int_pow(Int(2), n - 1) * factorial(n);
    case Family::E: return n == 6 ? Int(51840) : n == 7 ? Int(2903040) : Int(696729600);
    case Family::F: return Int(1152);
    case Family::G: return Int(12);
  }
  return Int(0);
}

}  // namespace

TEST_CASE("label parsing and admissibility") {
  CHECK(parse_cartan_label("A1").str() == "A1");
  CHECK(parse_cartan_label("a1").str() == "A1");
  CHECK(parse_cartan_label("e8").str() == "E8");
  CHECK(parse_cartan_label("B2").rank == 2);

  for (const char* bad : {"Z9", "A0", "B1", "C2", "D3", "E5", "E9", "F3", "G1", "A", "", "Ax", "1A"})
    CHECK_THROWS_AS(parse_cartan_label(bad), std::invalid_argument);
}

TEST_CASE("positive root closure on small systems") {
  RootDatum a1 = build_root_datum(parse_cartan_label("A1"));
  CHECK(a1.positive_roots == std::vector<std::vector<int>>{{1}});

  RootDatum a2 = build_root_datum(parse_cartan_label("A2"));
  CHECK(a2.positive_roots.size() == 3);
  CHECK(a2.positive_roots == std::vector<std::vector<int>>{{0, 1}, {1, 0}, {1, 1}});

  RootDatum g2 = build_root_datum(parse_cartan_label("G2"));
  CHECK(g2.positive_roots.size() == 6);
  CHECK(root_heights(g2) == std::vector<int>{1, 1, 2, 3, 4, 5});

  // every coordinate nonnegative, simple roots present
  for (const char* name : {"B3", "C3", "D4", "F4"}) {
    RootDatum datum = build_root_datum(parse_cartan_label(name));
    for (const auto& root : datum.positive_roots)
      for (int c : root) CHECK(c >= 0);
    for (int i = 0; i < datum.label.rank; ++i) {
      std::vector<int> simple(datum.label.rank, 0);
      simple[i] = 1;
      CHECK(std::count(datum.positive_roots.begin(), datum.positive_roots.end(), simple) == 1);
    }
  }
}

TEST_CASE("exponents from the height distribution") {
  CHECK(group_invariants(parse_cartan_label("A1")).exponents == std::vector<int>{1});
  CHECK(group_invariants(parse_cartan_label("G2")).exponents == std::vector<int>{1, 5});
  CHECK(group_invariants(parse_cartan_label("E8")).exponents ==
        std::vector<int>{1, 7, 11, 13, 17, 19, 23, 29});

  GroupInvariants a1 = group_invariants(parse_cartan_label("A1"));
  CHECK(a1.degrees == std::vector<int>{2});
  CHECK(a1.dim_g == 3);
  CHECK(a1.weyl_order == 2);

  GroupInvariants g2 = group_invariants(parse_cartan_label("G2"));
  CHECK(g2.degrees == std::vector<int>{2, 6});
  CHECK(g2.dim_g == 14);
  CHECK(g2.weyl_order == 12);

  GroupInvariants e8 = group_invariants(parse_cartan_label("E8"));
  CHECK(std::accumulate(e8.degrees.begin(), e8.degrees.end(), 0) == 128);
  CHECK(e8.num_pos_roots == 120);

  // the classical tables, as fixtures
  CHECK(group_invariants(parse_cartan_label("A3")).exponents == std::vector<int>{1, 2, 3});
  CHECK(group_invariants(parse_cartan_label("B2")).exponents == std::vector<int>{1, 3});
  CHECK(group_invariants(parse_cartan_label("C3")).exponents == std::vector<int>{1, 3, 5});
  CHECK(group_invariants(parse_cartan_label("D4")).exponents == std::vector<int>{1, 3, 3, 5});
  CHECK(group_invariants(parse_cartan_label("E6")).exponents ==
        std::vector<int>{1, 4, 5, 7, 8, 11});
  CHECK(group_invariants(parse_cartan_label("E7")).exponents ==
        std::vector<int>{1, 5, 7, 9, 11, 13, 17});
  CHECK(group_invariants(parse_cartan_label("F4")).exponents == std::vector<int>{1, 5, 7, 11});

  GroupInvariants d4 = group_invariants(parse_cartan_label("D4"));
  CHECK(d4.exponent_module == std::map<int, int>{{1, 1}, {3, 2}, {5, 1}});
}

TEST_CASE("structural identities for every label of rank at most 8") {
  for (const CartanLabel& label : all_labels_up_to_rank(8)) {
    CAPTURE(label.str());
    RootDatum datum = build_root_datum(label);
    GroupInvariants inv = group_invariants(datum);
    const int r = label.rank;

    CHECK(std::accumulate(inv.degrees.begin(), inv.degrees.end(), 0) == inv.num_pos_roots + r);
    CHECK(inv.dim_g == 2 * inv.num_pos_roots + r);
    CHECK(inv.weyl_order == reference_weyl_order(label));

    // duality symmetry of exponents against the Coxeter number
    const int coxeter = inv.exponents.back() + 1;
    for (int i = 0; i < r; ++i) CHECK(inv.exponents[i] + inv.exponents[r - 1 - i] == coxeter);

    for (int d : inv.degrees) CHECK(d >= 2);

    int module_size = 0;
    for (const auto& [e, mult] : inv.exponent_module) {
      CHECK(e >= 1);
      module_size += mult;
    }
    CHECK(module_size == r);
  }
}

TEST_CASE("rank <= 2 Weyl orders match the reflection-permutation oracle") {
  for (const char* name : {"A1", "A2", "B2", "G2"}) {
    RootDatum datum = build_root_datum(parse_cartan_label(name));
    GroupInvariants inv = group_invariants(datum);
    CHECK(inv.weyl_order == testing::weyl_order_by_permutations(datum));
  }
}

TEST_CASE("chevalley orders") {
  GroupInvariants a1 = group_invariants(parse_cartan_label("A1"));
  GroupInvariants a2 = group_invariants(parse_cartan_label("A2"));
  // matrix-enumeration values, frozen (live cross-check in the oracle suite)
  CHECK(chevalley_order(a1, 2) == 6);
  CHECK(chevalley_order(a1, 3) == 24);
  CHECK(chevalley_order(a1, 4) == 60);
  CHECK(chevalley_order(a2, 2) == 168);

  CHECK_THROWS_AS(chevalley_order(a1, 6), std::invalid_argument);
  CHECK_THROWS_AS(chevalley_order(a1, 1), std::invalid_argument);
  CHECK_THROWS_AS(chevalley_order(a1, 12), std::invalid_argument);
  CHECK(chevalley_order(a1, 8) == 8 * 63);
  CHECK(chevalley_order(a1, 9) == 9 * 80);
}

TEST_CASE("local mass identity q^dim/|G| = prod (1 - q^-d)^-1") {
  for (const CartanLabel& label : all_labels_up_to_rank(8)) {
    GroupInvariants inv = group_invariants(label);
    for (long q : {2L, 3L, 4L, 5L}) {
      Rat product(1);
      for (int d : inv.degrees) {
        Rat u = rat_pow(Rat(q), -d);
        product *= Rat(1) / (1 - u);
      }
      CHECK(local_mass(inv, q) == product);
    }
  }
}
