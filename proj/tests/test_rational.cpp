#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

#include "qstab/rational.hpp"
#include "qstab/sampling.hpp"

using qstab::parse_rational;
using qstab::rational;
using qstab::to_string;

TEST_CASE("rationals are kept in canonical form") {
  CHECK(rational(2, 4) == rational(1, 2));
  CHECK(rational(1, -2) == rational(-1, 2));
  CHECK(rational(-3, -6) == rational(1, 2));
  CHECK(rational(0, 7).den() == 1);
  CHECK(rational(0, -5) == rational(0));
  CHECK(rational(42, 6).num() == 7);
  CHECK_THROWS_AS(rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational arithmetic") {
  CHECK(rational(1, 2) + rational(1, 3) == rational(5, 6));
  CHECK(rational(1, 2) - rational(1, 3) == rational(1, 6));
  CHECK(rational(2, 3) * rational(9, 4) == rational(3, 2));
  CHECK(rational(2, 3) / rational(4, 9) == rational(3, 2));
  CHECK(-rational(3, 7) == rational(-3, 7));
  CHECK(rational(1, 6) + rational(-1, 6) == rational(0));
  CHECK_THROWS_AS(rational(1) / rational(0), std::domain_error);
}

TEST_CASE("rational ordering") {
  CHECK(rational(1, 3) < rational(1, 2));
  CHECK(rational(-1, 2) < rational(-1, 3));
  CHECK(rational(7, 3) > rational(2));
  CHECK(rational(2, 4) <= rational(1, 2));
  CHECK(rational(-5) < rational(0));
}

TEST_CASE("printing and parsing") {
  CHECK(to_string(rational(7, 3)) == "7/3");
  CHECK(to_string(rational(-4)) == "-4");
  CHECK(to_string(rational(4, 2)) == "2");
  CHECK(to_string(rational(-1, 2)) == "-1/2");
  CHECK(parse_rational("7/3") == rational(7, 3));
  CHECK(parse_rational("-4") == rational(-4));
  CHECK(parse_rational("0/5") == rational(0));
  CHECK(parse_rational("-6/4") == rational(-3, 2));
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
}

TEST_CASE("parse/print round trip on sampled values") {
  qstab::charge_sampler sampler(7);
  for (int i = 0; i < 500; ++i) {
    const rational x = sampler.weight_entry();
    CHECK(parse_rational(to_string(x)) == x);
  }
}

TEST_CASE("overflow is detected, not wrapped") {
  const rational big((1LL << 62) - 1);
  CHECK_THROWS_AS(big * big, std::overflow_error);
  CHECK_NOTHROW(rational(1, (1LL << 62)) + rational(1, (1LL << 62)));
}
