#include <doctest.h>

#include "fuzz.hpp"

TEST_CASE("parser fuzz") {
  for (std::uint64_t seed : {0u, 1u, 2u}) {
    fuzz::Outcome o = fuzz::run(10000, seed);
    CHECK(o.other == 0);
    CHECK(o.parsed > 0);
    CHECK(o.rejected > 0);
  }
}

TEST_CASE("pathological inputs") {
  std::string deep(100000, '(');
  CHECK_THROWS_AS(signumcalc::parse(deep), signumcalc::ParseError);
  std::string long_chain;
  for (int i = 0; i < 300; ++i) long_chain += "dr ";
  CHECK(signumcalc::evaluate(long_chain + "delta").space() == signumcalc::Space::Dist);
  CHECK_THROWS_AS(signumcalc::parse("dr^999999999999 delta"), signumcalc::ParseError);
  CHECK_THROWS_AS(signumcalc::parse(std::string("delta\0", 6)), signumcalc::ParseError);
}
