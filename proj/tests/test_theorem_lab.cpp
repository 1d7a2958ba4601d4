#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "mcmgr/error.hpp"
#include "mcmgr/theorem_lab.hpp"

using namespace mcmgr;
using testutil::pres;

namespace {

AnalysisOptions with_seed(std::uint64_t seed) {
  AnalysisOptions o;
  o.seed = seed;
  return o;
}

}  // namespace

TEST_CASE("corpus entries match their stated invariants") {
  for (const auto& entry : example_corpus()) {
    CAPTURE(entry.name);
    const auto rep = analyze(entry.pres, with_seed(7));
    if (entry.h) CHECK(rep.h.h == *entry.h);
    CHECK(rep.depth.depth == entry.depth);
    CHECK(rep.depth.cohen_macaulay == entry.cohen_macaulay);
  }
}

TEST_CASE("universal suite passes on the corpus") {
  for (const auto& entry : example_corpus()) {
    CAPTURE(entry.name);
    const auto rep = analyze(entry.pres, with_seed(3));
    for (const auto& v : universal_property_suite(entry.pres, rep)) {
      CAPTURE(v.theorem_id);
      CAPTURE(v.detail);
      CHECK(v.verdict != Verdict::fail);
    }
  }
}

TEST_CASE("next-to-minimal verdicts") {
  const auto cm = check_next_to_minimal(example_matrix("quadratic-tail-2"), 1);
  CHECK(cm.verdict == Verdict::pass);
  CHECK(cm.witness.at("s") == "1");
  const auto d0 = check_next_to_minimal(example_matrix("depth-zero"), 1);
  CHECK(d0.verdict == Verdict::pass);
  CHECK(d0.witness.at("s") == "2");
  const auto ulrich = check_next_to_minimal(example_matrix("generic-linear"), 1);
  CHECK(ulrich.verdict == Verdict::not_applicable);
  CHECK(ulrich.hypotheses_met == false);
}

TEST_CASE("det-order verdicts pick the branch from h") {
  for (std::size_t r = 2; r <= 3; ++r) {
    const auto q = check_det_order(example_matrix("quadratic-tail-" + std::to_string(r)), 2);
    CHECK(q.verdict == Verdict::pass);
    CHECK(q.witness.at("branch") == "r + z");
    const auto l = check_det_order(example_matrix("linear-tail-" + std::to_string(r)), 2);
    CHECK(l.verdict == Verdict::pass);
    CHECK(l.witness.at("branch") == "r + z^2");
  }
  CHECK(check_det_order(diagonal_presentation({1, 1}), 2).verdict == Verdict::not_applicable);
}

TEST_CASE("e3 verdicts") {
  const auto mm = check_e3(example_matrix("minimal-multiplicity"), 1, 2);
  CHECK(mm.verdict == Verdict::pass);
  CHECK(mm.witness.at("g") == "y^3");
  CHECK(check_e3(example_matrix("three-depth-zero"), 1, 3).verdict == Verdict::pass);
  CHECK(check_e3(example_matrix("three-depth-zero"), 1, 2).verdict == Verdict::not_applicable);
  // ord det = 4 and no recorded hypersurface: the hypothesis cannot be decided.
  const auto unknown = check_e3(diagonal_presentation({2, 2}), 1, 2);
  CHECK(unknown.verdict == Verdict::inconclusive);
  CHECK_FALSE(unknown.hypotheses_met.has_value());
}

TEST_CASE("annihilation is decided exactly") {
  const auto p = example_matrix("depth-zero");
  const PrimeField f;
  CHECK(annihilates(p, parse_poly("y^3", p.vars(), f)));
  CHECK(annihilates(p, parse_poly("y^2*x", p.vars(), f)) == false);
  CHECK(order_three_annihilator(diagonal_presentation({1, 1})).has_value());
  CHECK_FALSE(order_three_annihilator(diagonal_presentation({2, 2})).has_value());
}

TEST_CASE("transforms preserve invariants") {
  const auto base = example_matrix("depth-zero");
  const auto ref = analyze(base, with_seed(5));
  for (std::uint64_t s = 1; s <= 4; ++s) {
    CAPTURE(s);
    const auto t = random_transform(base, s, s % 2);
    const auto rep = analyze(t, with_seed(5));
    CHECK(rep.h.h == ref.h.h);
    CHECK(rep.depth.depth == ref.depth.depth + s % 2);
    CHECK(rep.basic.mu == ref.basic.mu);
    CHECK(rep.basic.i_m == ref.basic.i_m);
    CHECK(rep.basic.dim == ref.basic.dim + s % 2);
  }
}

TEST_CASE("families are deterministic") {
  const auto spec = default_family(kDetOrder);
  const auto a = generate_family(spec, 6, 11);
  const auto b = generate_family(spec, 6, 11);
  REQUIRE(a.size() == 6);
  for (std::size_t k = 0; k < a.size(); ++k) CHECK(fingerprint(a[k], 0) == fingerprint(b[k], 0));
  const auto c = generate_family(spec, 6, 12);
  CHECK(fingerprint(a[0], 0) != fingerprint(c[0], 0));
  const auto r = generate_family(default_family(kUniversal), 5, 3);
  CHECK(r.size() == 5);
}

TEST_CASE("verify summary does not depend on the job count") {
  const auto spec = default_family(kNextToMinimal);
  const auto one = verify_family(kNextToMinimal, spec, 6, 9, 1);
  const auto four = verify_family(kNextToMinimal, spec, 6, 9, 4);
  CHECK(one.pass == four.pass);
  CHECK(one.fail == 0);
  CHECK(four.fail == 0);
  CHECK(one.not_applicable == four.not_applicable);
  CHECK(one.inconclusive == four.inconclusive);
  CHECK_THROWS_AS(verify_family("nope", spec, 1, 1), InputError);
}
