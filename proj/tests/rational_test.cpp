#include "rational.hpp"

#include "doctest.h"

using namespace mg;

TEST_CASE("parsing accepts n and n/d and rejects junk") {
  CHECK(*parse_rat("3") == 3);
  CHECK(*parse_rat("-7/2") == rat(-7, 2));
  CHECK(*parse_rat("4/6") == rat(2, 3));  // canonical form
  CHECK_FALSE(parse_rat("1/0").has_value());
  CHECK_FALSE(parse_rat("").has_value());
  CHECK_FALSE(parse_rat("a/b").has_value());
  CHECK_FALSE(parse_rat("1/-2").has_value());
  CHECK_FALSE(parse_rat("1.5").has_value());
}

TEST_CASE("canonical rendering") {
  CHECK(rat_str(rat(4, 6)) == "2/3");
  CHECK(rat_str(rat(-4, 6)) == "-2/3");
  CHECK(rat_str(rat(8, 2)) == "4");
  CHECK(rat_str(Rat(0)) == "0");
}

TEST_CASE("decimal rendering rounds half to even") {
  CHECK(rat_decimal(rat(1, 3), 6) == "0.333333");
  CHECK(rat_decimal(rat(1, 2), 0) == "0");   // ties to even: 0
  CHECK(rat_decimal(rat(3, 2), 0) == "2");   // ties to even: 2
  CHECK(rat_decimal(rat(25, 100), 1) == "0.2");
  CHECK(rat_decimal(rat(35, 100), 1) == "0.4");
  CHECK(rat_decimal(rat(-7, 2), 0) == "-4");
  CHECK(rat_decimal(rat(7, 48), 6) == "0.145833");
}

TEST_CASE("floor is exact on negatives") {
  CHECK(rat_floor(rat(7, 2)) == 3);
  CHECK(rat_floor(rat(-7, 2)) == -4);
  CHECK(rat_floor(Rat(5)) == 5);
}
