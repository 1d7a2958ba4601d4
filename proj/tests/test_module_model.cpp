#include "doctest.h"
#include "helpers.hpp"
#include "mcmgr/error.hpp"
#include "mcmgr/module_model.hpp"

using namespace mcmgr;
using testutil::pres;

TEST_CASE("graded lengths of small modules") {
  SUBCASE("depth one, h = 2 + z") {
    auto tm = TruncatedModule::build(pres({{"y^2", "0"}, {"x^2", "y"}}), 6);
    CHECK(tm.graded_lengths() == std::vector<std::int64_t>{2, 3, 3, 3, 3, 3});
  }
  SUBCASE("depth zero, h = 2 + z^2") {
    auto tm = TruncatedModule::build(pres({{"y^2", "0"}, {"x", "y"}}), 6);
    CHECK(tm.graded_lengths() == std::vector<std::int64_t>{2, 2, 3, 3, 3, 3});
  }
  SUBCASE("free module over the hypersurface") {
    auto tm = TruncatedModule::build(pres({{"y"}}), 5);
    CHECK(tm.graded_lengths() == std::vector<std::int64_t>{1, 1, 1, 1, 1});
    CHECK(tm.hilbert_function(3) == 4);
  }
}

TEST_CASE("b series detects the superficial element") {
  const auto p = pres({{"y^2", "0"}, {"x^2", "y"}});
  auto tm = TruncatedModule::build(p, 7);
  const auto bx = b_series(tm, {1, 0});
  // x is a nonzerodivisor on this CM module.
  for (auto v : bx) CHECK(v == 0);
  const auto by = b_series(tm, {0, 1});
  // y kills e_2, which is not in mM.
  CHECK(by[0] == 0);
  CHECK(by[1] > 0);
}

TEST_CASE("normal form of relations vanishes") {
  const auto p = pres({{"y^2", "0"}, {"x^2", "y"}});
  auto tm = TruncatedModule::build(p, 6);
  const PrimeField f;
  std::vector<Poly> col{p.entry(0, 0), p.entry(1, 0)};
  for (auto v : tm.normal_form(col)) CHECK(v == 0);
  std::vector<Poly> e0{Poly::constant(f, 2, 1), Poly(f, 2)};
  auto nf = tm.normal_form(e0);
  int nonzero = 0;
  for (auto v : nf) nonzero += v != 0;
  CHECK(nonzero == 1);
}

TEST_CASE("ambient budget raises exhaustion") {
  CHECK_THROWS_AS(TruncatedModule::build(pres({{"y"}}), 50, 100), ExhaustionError);
}

TEST_CASE("quotient by a form") {
  const auto p = pres({{"y^2", "0"}, {"x^2", "y"}}, {"x", "y"}, "y^3");
  auto step = quotient_by_form(p, {1, 0});
  CHECK(step.eliminated == 0);
  CHECK(step.result.nvars() == 1);
  CHECK(step.result.vars() == std::vector<std::string>{"y"});
  CHECK(step.result.hypersurface()->to_string({"y"}) == "y^3");
  CHECK_THROWS_AS(quotient_by_form(p, {0, 1}), InputError);
  CHECK_THROWS_AS(quotient_by_form(p, {0, 0}), InputError);
  CHECK(reduce_form(step, {3, 5}) == Form{5});
  CHECK(lift_form(step, {7}) == Form{0, 7});

  // x + 2y: eliminate y = -x/2.
  const PrimeField f;
  auto general = quotient_by_form(pres({{"y^2", "0"}, {"x^2", "y"}}), {1, 2});
  CHECK(general.eliminated == 1);
  CHECK(reduce_form(general, {0, 1}) == Form{f.neg(f.inv(2))});
}
