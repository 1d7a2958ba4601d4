#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "helpers.hpp"
#include "mcmgr/error.hpp"
#include "mcmgr/instance_io.hpp"
#include "mcmgr/invariants.hpp"
#include "mcmgr/report_json.hpp"
#include "mcmgr/superficial.hpp"

using namespace mcmgr;
using testutil::pres;

namespace {

std::size_t error_line(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

struct CliResult {
  int code;
  std::string out, err;
};

CliResult cli_run(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"mcmgr"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o, e;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), o, e);
  return {code, o.str(), e.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("mcmgr-test-" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("Hilbert coefficients from h") {
  const HData h{{3, 0, 3, -1}, 2};
  CHECK(h.e(0) == 5);
  CHECK(h.e(1) == 3);
  CHECK(h.e(2) == 0);
  CHECK(h.e(3) == -1);
  CHECK(h.graded_length(0) == 3);
  CHECK(h.graded_length(1) == 6);
  CHECK(h.graded_length(2) == 12);
  CHECK(h.graded_length(3) == 17);
  CHECK(h.hilbert_samuel(1) == 9);
  CHECK(h.to_string() == "3 + 3z^2 - z^3");
  CHECK(series_to_string({}) == "0");
}

TEST_CASE("direct fit needs trailing zeros") {
  const auto h = fit_h_direct({2, 3, 3, 3, 3, 3}, 1);
  REQUIRE(h);
  CHECK(h->h == IntSeries{2, 1});
  CHECK_FALSE(fit_h_direct({2, 3, 3}, 1).has_value());
  CHECK(h_from_quotient(HData{{2, 1}, 0}, {0, 1}, 1).h == IntSeries{2, 0, 1});
}

TEST_CASE("elementary divisors over k[[y]]") {
  const std::vector<std::string> y{"y"};
  CHECK(dvr_decomposition(pres({{"y", "0"}, {"0", "y^2"}}, y), 10).a == std::vector<unsigned>{1, 2});
  CHECK(dvr_decomposition(pres({{"y^2", "0"}, {"5*y", "y"}}, y), 10).a == std::vector<unsigned>{1, 2});
  CHECK(dvr_decomposition(pres({{"y^2", "y"}, {"y^3", "y^3"}}, y), 12).a == std::vector<unsigned>{1, 3});
  const auto d = dvr_decomposition(pres({{"y^3", "0"}, {"0", "y"}}, y), 10);
  CHECK(d.total() == 4);
  CHECK(d.has_free_summand(3));
  CHECK_FALSE(d.has_free_summand(2));
  CHECK_THROWS_AS(dvr_decomposition(pres({{"y^8"}}, y), 6), ExhaustionError);
}

TEST_CASE("superficial checks name the failing condition") {
  const auto p = pres({{"y^2", "0"}, {"x", "y"}});
  auto failure = [&](const Form& form, Flavor flavor) { return verify_form(p, form, flavor).value_or(""); };
  CHECK(failure({0, 1}, Flavor::module).starts_with("not regular"));
  CHECK(failure({0, 0}, Flavor::module) == "zero form");
  CHECK(failure({1, 0}, Flavor::phi) == "order of entry (2, 1) changes");
  std::vector<std::string> passed;
  CHECK(verify_form(p, {1, 0}, Flavor::module, 8, &passed) == std::nullopt);
  CHECK(passed == std::vector<std::string>{"nonzero", "regular", "multiplicity", "b-tail"});
  const auto a = find_phi_superficial(p, 42);
  const auto b = find_phi_superficial(p, 42);
  CHECK(a.coefficients == b.coefficients);
  CHECK(derive_seed(1, 2) != derive_seed(1, 3));
  CHECK(derive_seed(1, 2) == derive_seed(1, 2));
  CHECK_THROWS_AS(find_superficial(pres({{"y"}}, {"y"}), 1), InputError);
}

TEST_CASE("instance files parse") {
  const auto inst = parse_instance(
      "# comment\nvariables: x, y\nmatrix:\n  [y^2, 0]\n  [x^2, y]\nhypersurface: y^3\ntruncation: 9\nseed: 4\n");
  CHECK(inst.pres.size() == 2);
  CHECK(inst.truncation == 9u);
  CHECK(inst.seed == 4u);
  CHECK(inst.pres.hypersurface()->to_string(inst.pres.vars()) == "y^3");
  const auto again = parse_instance(dump_instance(inst.pres, inst.truncation, inst.seed, "round trip"));
  CHECK(dump_instance(again.pres, again.truncation, again.seed) == dump_instance(inst.pres, inst.truncation, inst.seed));
  CHECK(parse_instance("characteristic: 101\nvariables: x\nmatrix:\n [x]\n").pres.field().characteristic() == 101);
  CHECK(parse_instance("characteristic: 101\nvariables: x\nmatrix:\n [x]\n", 7).pres.field().characteristic() == 7);
}

TEST_CASE("instance errors report the line") {
  CHECK(error_line("variables: x, y\nmatrix:\n  [y^2, 0]\n  [x^2, q]\n") == 4);
  CHECK(error_line("variables: x, y\nmatrix:\n  [y^2, 0]\n  [x^2]\n") == 4);
  CHECK(error_line("variables: x, y\ncolour: red\n") == 2);
  CHECK(error_line("variables: x, y\nvariables: x\n") == 2);
  CHECK(error_line("variables: x, y\nmatrix:\n  [y^2, 0]\n  [x, y]\nhypersurface: x^5\n") == 5);
  CHECK(error_line("variables: x, y\nmatrix:\n  [1, 0]\n  [0, y]\n") == 2);
  CHECK_THROWS_AS(parse_instance("matrix:\n  [x]\n"), InputError);
}

TEST_CASE("family files keep file-relative lines") {
  const std::string two = "variables: x, y\nmatrix:\n  [y]\nextra-variables: 1..2\n---\nvariables: x, y\nmatrix:\n  [y^2]\n";
  const auto all = parse_instances(two);
  REQUIRE(all.size() == 2);
  CHECK(all[0].extra_variables == std::pair<unsigned, unsigned>{1, 2});
  try {
    parse_instances(two + "---\nvariables: x, y\nmatrix:\n  [y +]\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 12);
  }
  CHECK_THROWS_AS(parse_instances("# nothing\n---\n"), InputError);
}

TEST_CASE("structured reports round trip") {
  const auto rep = analyze(pres({{"y^2", "0"}, {"x", "y"}}, {"x", "y"}, "y^3"));
  const auto doc = report_to_json(rep);
  const auto back = report_from_json(doc);
  CHECK(report_to_json(back) == doc);
  CHECK(back.h.h == rep.h.h);
  CHECK(back.depth.depth == rep.depth.depth);
  CHECK(back.basic == rep.basic);
  CHECK(doc.at("h_text") == "2 + z^2");
  CHECK_THROWS_AS(report_from_json(nlohmann::json::parse("{\"mu\": 2}")), InputError);
}

TEST_CASE("reports do not depend on the seed beyond the seed fields") {
  const auto p = pres({{"x", "y", "0"}, {"x^2", "x^2", "0"}, {"0", "0", "x^2"}}, {"x", "y", "z"});
  auto strip_seeded = [](nlohmann::json d) {
    for (const char* k : {"seed", "chain_attempt", "forms", "lifted_forms", "truncations"}) d.erase(k);
    return d;
  };
  AnalysisOptions a, b;
  a.seed = 1;
  b.seed = 99;
  CHECK(strip_seeded(report_to_json(analyze(p, a))) == strip_seeded(report_to_json(analyze(p, b))));
}

TEST_CASE("cli exit codes") {
  const auto good = temp_file("good.txt", "variables: x, y\nmatrix:\n  [y^2, 0]\n  [x^2, y]\n");
  const auto bad = temp_file("bad.txt", "variables: x, y\nmatrix:\n  [y^2, 0]\n  [x^2, y +]\n");
  const auto big = temp_file("big.txt", "variables: x, y\nmatrix:\n  [y^30]\n");

  auto r = cli_run({"report", good});
  CHECK(r.code == 0);
  CHECK(r.out.find("2 + z") != std::string::npos);
  r = cli_run({"--format", "structured", "report", good});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).at("depth") == 1);
  r = cli_run({"report", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 4") != std::string::npos);
  CHECK(cli_run({"report", big}).code == 3);
  CHECK(cli_run({}).code == 2);
  CHECK(cli_run({"--format", "xml", "examples"}).code == 2);
  CHECK(cli_run({"verify", "no-such-theorem"}).code == 2);
  CHECK(cli_run({"verify", "det-order", "--trials", "3", "--jobs", "2"}).code == 0);
  r = cli_run({"rr", good, "--n-max", "0"});
  CHECK(r.code == 0);
  CHECK(r.out.find('1') == std::string::npos);
  CHECK(cli_run({"--help"}).code == 0);
  for (const auto& f : {good, bad, big}) std::filesystem::remove(f);
}
