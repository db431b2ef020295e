#include "bunzeta/rational.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace bunzeta;

TEST_CASE("rational canonical form and text round trip") {
  CHECK(rat_to_string(make_rat(2, 4)) == "1/2");
  CHECK(rat_to_string(make_rat(-2, 4)) == "-1/2");
  CHECK(rat_to_string(make_rat(3, -9)) == "-1/3");
  CHECK(rat_to_string(make_rat(0, 7)) == "0");
  CHECK(rat_to_string(make_rat(6, 3)) == "2");

  CHECK(rat_from_string("3/4") == make_rat(3, 4));
  CHECK(rat_from_string("-7") == Rat(-7));
  CHECK(rat_from_string("0") == Rat(0));
  CHECK(rat_from_string(rat_to_string(make_rat(-1234, 5678))) == make_rat(-1234, 5678));

  CHECK_THROWS_AS(rat_from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("3.5"), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_string("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(make_rat(1, 0), std::invalid_argument);
}

TEST_CASE("integer and rational powers") {
  CHECK(int_pow(Int(2), 10) == 1024);
  CHECK(int_pow(Int(5), 0) == 1);
  CHECK(rat_pow(make_rat(1, 2), 3) == make_rat(1, 8));
  CHECK(rat_pow(make_rat(2, 3), -2) == make_rat(9, 4));
  CHECK(rat_pow(Rat(7), 0) == 1);
  CHECK(rat_pow(make_rat(3, 2), Int(5)) == make_rat(243, 32));
  CHECK_THROWS_AS(rat_pow(Rat(0), -1), std::invalid_argument);
}

TEST_CASE("decimal rendering rounds half away from zero") {
  CHECK(decimal_string(make_rat(1, 3), 4) == "0.3333");
  CHECK(decimal_string(make_rat(8, 3), 3) == "2.667");
  CHECK(decimal_string(make_rat(-1, 8), 2) == "-0.13");
  CHECK(decimal_string(Rat(5), 2) == "5.00");
  CHECK(decimal_string(make_rat(1, 2), 0) == "1");
  CHECK(decimal_string(make_rat(1, 200000), 3) == "0.000");
}
