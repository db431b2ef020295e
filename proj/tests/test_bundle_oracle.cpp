#include "bunzeta/bundle_oracle.hpp"

#include "bunzeta/bun_series.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace bunzeta;

TEST_CASE("automorphism orders of split bundles") {
  CHECK(gl_order(1, 2) == 1);
  CHECK(gl_order(2, 2) == 6);
  CHECK(gl_order(2, 3) == 48);
  CHECK(gl_order(3, 2) == 168);

  CHECK(aut_order(SplittingType({0, 0}), 2) == 6);
  CHECK(aut_order(SplittingType({1, -1}), 2) == 8);  // q^3 (q-1)^2
  CHECK(aut_order(SplittingType({0, 0, 0}), 2) == 168);
  CHECK(aut_order(SplittingType({2, 0, -2}), 3) ==
        int_pow(Int(3), 3 + 5 + 3) * Int(2) * 2 * 2);

  CHECK_THROWS_AS(SplittingType({1, 2, -3}), std::invalid_argument);  // not sorted
  CHECK_THROWS_AS(SplittingType({1, 0}), std::invalid_argument);      // nonzero sum
}

TEST_CASE("splitting type enumeration") {
  auto rank2 = splitting_types_p1(2, 3);
  REQUIRE(rank2.size() == 4);
  CHECK(rank2[0].twists == std::vector<long>{0, 0});
  CHECK(rank2[3].twists == std::vector<long>{3, -3});

  // rank 3, max twist 2: (0,0,0), (1,0,-1), (1,1,-2),
  // (2,-1,-1), (2,0,-2), (2,1,-3), (2,2,-4)
  CHECK(splitting_types_p1(3, 2).size() == 7);

  for (const SplittingType& t : splitting_types_p1(4, 6)) {
    long sum = 0;
    for (long a : t.twists) sum += a;
    CHECK(sum == 0);
    CHECK(t.twists.front() <= 6);
  }
}

TEST_CASE("matrix enumeration matches the Chevalley formula") {
  CHECK(brute_sl_order(2, 2) == 6);
  CHECK(brute_sl_order(2, 3) == 24);
  CHECK(brute_sl_order(3, 2) == 168);

  GroupInvariants a1 = group_invariants(parse_cartan_label("A1"));
  GroupInvariants a2 = group_invariants(parse_cartan_label("A2"));
  for (long q : {2L, 3L, 4L}) CHECK(brute_sl_order(2, q) == chevalley_order(a1, q));
  for (long q : {2L, 3L, 4L}) CHECK(brute_sl_order(3, q) == chevalley_order(a2, q));

  CHECK_THROWS_AS(brute_sl_order(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(brute_sl_order(2, 5), std::invalid_argument);
}

TEST_CASE("SL_n bundle masses on the projective line") {
  // closed form for n = 2: mass = 1/((q-1)(q^2-1))
  for (long q : {2L, 3L, 4L, 5L}) {
    MassReport report = sl_mass_p1(2, q, 20);
    Rat closed = make_rat(1, Int(q - 1) * (Int(q) * q - 1));
    CHECK(abs(report.partial_mass - closed) <= report.tail_bound);
    CHECK(report.rhs == closed);
    CHECK(report.verdict);
  }

  MassReport sl3 = sl_mass_p1(3, 2, 15);
  CHECK(sl3.rhs == make_rat(1, 63));
  CHECK(sl3.verdict);

  MassReport sl4 = sl_mass_p1(4, 2, 12);
  CHECK(sl4.rhs == make_rat(1, 6615));
  CHECK(sl4.verdict);

  // rhs always equals the zeta-product prediction from the trace module
  for (int n : {2, 3, 4}) {
    MassReport report = sl_mass_p1(n, 3, 8);
    BunGContext ctx(group_invariants(CartanLabel{Family::A, n - 1}),
                    CurveZeta::projective_line(3));
    CHECK(report.rhs == tamagawa_rhs(ctx));
    CHECK(report.verdict);
  }

  // the full supported range at the default cutoff
  for (int n : {2, 3, 4})
    for (long q : {2L, 3L, 4L, 5L}) {
      MassReport report = sl_mass_p1(n, q, 20);
      CAPTURE(n);
      CAPTURE(q);
      CHECK(report.verdict);
    }
}

TEST_CASE("mass is monotone in the cutoff, tail bound shrinks") {
  Rat last_mass(0);
  Rat last_tail;
  for (long cutoff = 1; cutoff <= 10; ++cutoff) {
    MassReport report = sl_mass_p1(3, 2, cutoff);
    CHECK(report.partial_mass > 0);
    CHECK(report.tail_bound > 0);
    CHECK(report.partial_mass >= last_mass);
    if (cutoff > 1) CHECK(report.tail_bound < last_tail);
    last_mass = report.partial_mass;
    last_tail = report.tail_bound;
  }
}

TEST_CASE("oracle input validation") {
  CHECK_THROWS_AS(sl_mass_p1(5, 2, 20), std::invalid_argument);
  CHECK_THROWS_AS(sl_mass_p1(1, 2, 20), std::invalid_argument);
  CHECK_THROWS_AS(sl_mass_p1(2, 6, 20), std::invalid_argument);
  CHECK_THROWS_AS(sl_mass_p1(2, 2, 0), std::invalid_argument);
}
