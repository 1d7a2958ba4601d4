#include "doctest.h"
#include "helpers.hpp"
#include "mcmgr/analysis.hpp"

using namespace mcmgr;
using testutil::pres;

namespace {
IntSeries H(std::initializer_list<std::int64_t> v) { return IntSeries(v); }
}

TEST_CASE("minimal multiplicity example") {
  auto rep = analyze(pres({{"y^2", "0"}, {"x^2", "y"}}));
  CHECK(rep.h.h == H({2, 1}));
  CHECK(rep.depth.depth == 1);
  CHECK(rep.depth.cohen_macaulay);
  CHECK(rep.flags.minimal_multiplicity);
  CHECK_FALSE(rep.flags.ulrich);
  CHECK(rep.e == H({3, 1}));
  CHECK(rep.reduction_number == 1u);
  CHECK(rep.depth.r_poly.empty());
}

TEST_CASE("depth zero example") {
  auto rep = analyze(pres({{"y^2", "0"}, {"x", "y"}}));
  CHECK(rep.h.h == H({2, 0, 1}));
  CHECK(rep.depth.depth == 0);
  CHECK_FALSE(rep.depth.cohen_macaulay);
  CHECK_FALSE(rep.depth.r_poly.empty());
  CHECK(rep.depth.rr_residual.empty());
  REQUIRE(!rep.depth.rr_lengths.empty());
  CHECK(rep.depth.rr_lengths[0] >= 1);
}

TEST_CASE("three variable corpus") {
  const std::vector<std::string> v{"x", "y", "z"};
  auto d0 = analyze(pres({{"x", "y", "z"}, {"x^2", "x^2", "0"}, {"0", "0", "x^2"}}, v));
  CHECK(d0.depth.depth == 0);
  auto d1 = analyze(pres({{"x", "y", "0"}, {"x^2", "x^2", "0"}, {"0", "0", "x^2"}}, v));
  CHECK(d1.depth.depth == 1);
  auto d2 = analyze(pres({{"x", "0", "0"}, {"0", "x^2", "0"}, {"0", "0", "x^2"}}, v));
  CHECK(d2.depth.depth == 2);
  CHECK(d2.depth.cohen_macaulay);
}
