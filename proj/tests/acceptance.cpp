// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <filesystem>
#include <iomanip>
#include <map>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include "cli.hpp"
#include "json.hpp"
#include "mcmgr/instance_io.hpp"
#include "mcmgr/report_json.hpp"
#include "mcmgr/theorem_lab.hpp"

using namespace mcmgr;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int run_cli(const std::vector<std::string>& args, std::string& out) {
  std::vector<const char*> argv{"mcmgr"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o, e;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), o, e);
  out = o.str();
  return code;
}

unsigned jobs() { return std::max(2u, std::thread::hardware_concurrency()); }

Outcome golden_corpus() {
  Outcome r;
  const auto t0 = Clock::now();
  std::string out;
  const int code = run_cli({"examples", "--format", "structured"}, out);
  r.require(code == 0, "examples exit code " + std::to_string(code));
  const auto doc = nlohmann::json::parse(out);
  std::set<std::string> names;
  for (const auto& row : doc) {
    names.insert(row["name"].get<std::string>());
    r.require(row["match"].get<bool>(), "mismatch in " + row["name"].get<std::string>());
  }
  for (const char* required :
       {"generic-linear", "diagonal-1-1", "diagonal-2-3", "minimal-multiplicity", "depth-zero", "three-depth-zero",
        "three-depth-one", "three-cohen-macaulay", "quadratic-tail-2", "linear-tail-2", "quadratic-tail-3",
        "linear-tail-3", "quadratic-tail-4", "linear-tail-4", "depth-zero-transformed"}) {
    r.require(names.count(required) == 1, std::string("missing row ") + required);
  }
  const double dt = seconds_since(t0);
  r.require(dt < 10, "took " + std::to_string(dt) + " s");
  r.detail += (r.detail.empty() ? "" : "; ") + std::to_string(doc.size()) + " rows";
  return r;
}

Outcome next_to_minimal() {
  Outcome r;
  const auto t0 = Clock::now();
  const std::size_t count = 60;
  const auto family = generate_family(default_family(kNextToMinimal), count, 31);
  std::set<std::size_t> dims;
  for (const auto& p : family) dims.insert(p.module_dim());
  const auto s = verify_family(kNextToMinimal, default_family(kNextToMinimal), count, 31, jobs());
  r.require(s.fail == 0, std::to_string(s.fail) + " failures");
  r.require(s.pass >= 50, "only " + std::to_string(s.pass) + " instances with hypotheses met");
  r.require(dims == std::set<std::size_t>{1, 2, 3}, "dimensions 1..3 not all covered");
  const double dt = seconds_since(t0);
  r.require(dt < 120, "took " + std::to_string(dt) + " s");
  r.detail += (r.detail.empty() ? "" : "; ") + std::to_string(s.pass) + " passed";
  return r;
}

Outcome det_order() {
  Outcome r;
  const auto family = generate_family(default_family(kDetOrder), 48, 32);
  std::size_t branched = 0, failed = 0;
  for (std::size_t k = 0; k < family.size(); ++k) {
    const auto v = check_det_order(family[k], derive_seed(32, k));
    if (v.verdict == Verdict::fail) ++failed;
    if (v.verdict == Verdict::pass && v.witness.at("branch") != "depth bound only") ++branched;
  }
  r.require(failed == 0, std::to_string(failed) + " failures");
  r.require(branched >= 30, "only " + std::to_string(branched) + " instances with red <= 2");
  r.detail += (r.detail.empty() ? "" : "; ") + std::to_string(branched) + " dichotomy instances";
  return r;
}

Outcome e3_theorems() {
  Outcome r;
  std::size_t seeds = 0;
  for (const auto& entry : example_corpus()) {
    const std::size_t mu = entry.pres.size();
    if (mu != 2 && mu != 3) continue;
    const auto v = check_e3(entry.pres, 1, mu);
    r.require(v.verdict != Verdict::fail, entry.name + ": " + v.detail);
    if (v.verdict == Verdict::pass) ++seeds;
  }
  std::size_t passed = 0;
  for (const char* id : {kE3Mu2, kE3Mu3}) {
    const auto s = verify_family(id, default_family(id), 60, 33, jobs());
    r.require(s.fail == 0, std::string(id) + ": " + std::to_string(s.fail) + " failures");
    passed += s.pass;
  }
  r.require(passed >= 100, "only " + std::to_string(passed) + " transforms with hypotheses met");
  r.detail += (r.detail.empty() ? "" : "; ") + std::to_string(seeds) + " seeds, " + std::to_string(passed) +
              " transforms";
  return r;
}

Outcome universal() {
  Outcome r;
  const auto t0 = Clock::now();
  const auto family = generate_family(default_family(kUniversal), 200, 34);
  std::map<std::string, std::size_t> passes;
  std::size_t failed = 0;
  for (std::size_t k = 0; k < family.size(); ++k) {
    for (const auto& v : universal_property_suite(family[k], derive_seed(34, k))) {
      if (v.verdict == Verdict::fail) {
        ++failed;
        r.require(false, v.theorem_id + " " + v.detail + " on " + v.fingerprint);
      }
      if (v.verdict == Verdict::pass) ++passes[v.theorem_id];
    }
  }
  for (const char* name : {"singh-equality", "multiplicity-lower-bound", "e2-nonnegative",
                           "hilbert-coefficients-invariance", "top-coefficient-correction", "h-recursion-matches-fit",
                           "ratliff-rush-identity", "reduction-sequence", "dimension-one-colon-sequence",
                           "dimension-two-colon-sequence", "quotient-graded-shape"}) {
    r.require(passes[std::string(kUniversal) + "/" + name] > 0, std::string("never exercised: ") + name);
  }
  const double dt = seconds_since(t0);
  r.require(dt < 600, "took " + std::to_string(dt) + " s");
  r.detail += (r.detail.empty() ? "" : "; ") + std::to_string(failed) + " failures";
  return r;
}

nlohmann::json without_truncations(nlohmann::json doc) {
  doc.erase("truncations");
  doc.erase("truncation_confirmed");
  return doc;
}

Outcome truncation_robustness() {
  Outcome r;
  for (const auto& entry : example_corpus()) {
    const auto base = analyze(entry.pres);
    r.require(base.truncation_confirmed, entry.name + " not confirmed");
    AnalysisOptions deeper;
    deeper.truncation = *std::max_element(base.truncations.begin(), base.truncations.end()) + 2;
    const auto again = analyze(entry.pres, deeper);
    r.require(without_truncations(report_to_json(base)) == without_truncations(report_to_json(again)),
              entry.name + " changes at N+2");
  }
  return r;
}

Outcome determinism() {
  Outcome r;
  const auto dir = std::filesystem::temp_directory_path() / "mcmgr-acceptance";
  std::filesystem::create_directories(dir);
  for (const auto& entry : example_corpus()) {
    const auto file = (dir / (entry.name + ".txt")).string();
    std::ofstream(file) << dump_instance(entry.pres);
    std::string a, b;
    run_cli({"--seed", "17", "--format", "structured", "report", file}, a);
    run_cli({"--seed", "17", "--format", "structured", "report", file}, b);
    r.require(!a.empty() && a == b, entry.name + " reports differ");
  }
  std::string one, many;
  run_cli({"--seed", "5", "--jobs", "1", "--format", "structured", "verify", "universal", "--trials", "30"}, one);
  run_cli({"--seed", "5", "--jobs", "4", "--format", "structured", "verify", "universal", "--trials", "30"}, many);
  r.require(one == many, "verify summary depends on --jobs");
  std::filesystem::remove_all(dir);
  return r;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "example corpus reproduced exactly", golden_corpus},
      {2, "e = mu i + 1 family", next_to_minimal},
      {3, "ord det = mu + 1 dichotomy", det_order},
      {4, "order-3 hypersurface depth bounds and h case lists", e3_theorems},
      {5, "universal identities on 200 random instances", universal},
      {6, "invariants stable at truncation N+2", truncation_robustness},
      {7, "identical seeds give byte-identical reports", determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = Clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("threw: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.name << " ["
              << o.detail << "] " << std::fixed << std::setprecision(2) << seconds_since(t0) << " s" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
