#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "mcmgr/error.hpp"
#include "mcmgr/instance_io.hpp"
#include "mcmgr/report_json.hpp"
#include "mcmgr/theorem_lab.hpp"

namespace mcmgr::cli {
namespace {

enum class Format { human, structured };

struct Globals {
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> truncation;
  std::optional<std::uint64_t> characteristic;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  Format format = Format::human;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string series(const IntSeries& s) {
  std::vector<std::string> parts;
  for (auto v : s) parts.push_back(std::to_string(v));
  return "(" + join(parts, ", ") + ")";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void row(std::ostream& out, const std::string& key, const std::string& value) {
  out << "  " << std::left << std::setw(22) << key << value << '\n';
}

AnalysisOptions options_for(const Globals& g, const Instance& inst) {
  AnalysisOptions o;
  o.seed = g.seed.value_or(inst.seed.value_or(1));
  o.truncation = g.truncation.value_or(inst.truncation.value_or(0));
  return o;
}

void print_report(std::ostream& out, const InvariantReport& r) {
  out << "M = coker phi over k[" << join(r.vars, ", ") << "], char " << r.characteristic << '\n';
  for (const auto& entries : r.matrix) out << "  [" << join(entries, ", ") << "]\n";
  if (r.hypersurface) row(out, "hypersurface", *r.hypersurface);
  row(out, "mu(M)", std::to_string(r.basic.mu));
  row(out, "i(M)", std::to_string(r.basic.i_m));
  row(out, "ord det(phi)", std::to_string(r.basic.ord_det));
  row(out, "dim M", std::to_string(r.basic.dim));
  row(out, "h(z)", r.h.to_string());
  row(out, "e_0 .. e_d", series(r.e));
  row(out, "Hilbert polynomial", r.h.hilbert_polynomial());
  row(out, "reduction number", r.reduction_number ? std::to_string(*r.reduction_number) : "unknown");
  row(out, "depth G(M)", std::to_string(r.depth.depth));
  row(out, "Cohen-Macaulay", yes_no(r.depth.cohen_macaulay));
  std::vector<std::string> trace;
  for (bool b : r.depth.trace) trace.push_back(b ? "1" : "0");
  row(out, "Sally trace", join(trace, " "));
  row(out, "Ratliff-Rush lengths", series(r.depth.rr_lengths));
  row(out, "r_M(z)", series_to_string(r.depth.r_poly));
  row(out, "Ulrich", yes_no(r.flags.ulrich));
  row(out, "minimal multiplicity", yes_no(r.flags.minimal_multiplicity));
  if (r.dvr) {
    std::vector<std::string> a;
    for (auto v : r.dvr->a) a.push_back(std::to_string(v));
    row(out, "DVR divisors", "y^(" + join(a, ", ") + ")");
  }
  std::vector<std::string> truncs;
  for (auto n : r.truncations) truncs.push_back(std::to_string(n));
  row(out, "truncations", join(truncs, " ") + (r.truncation_confirmed ? " (confirmed at N+2)" : ""));
  row(out, "seed", std::to_string(r.seed) + " (chain attempt " + std::to_string(r.chain_attempt) + ")");
}

int cmd_report(const Globals& g, const std::string& path, std::ostream& out) {
  const Instance inst = load_instance(path, g.characteristic);
  const InvariantReport r = analyze(inst.pres, options_for(g, inst));
  if (g.format == Format::structured) {
    out << report_to_json(r).dump(2) << '\n';
  } else {
    print_report(out, r);
  }
  return ok;
}

int cmd_rr(const Globals& g, const std::string& path, unsigned n_max, std::ostream& out) {
  const Instance inst = load_instance(path, g.characteristic);
  const IntSeries lengths = ratliff_rush_table(inst.pres, n_max, options_for(g, inst));
  if (g.format == Format::structured) {
    nlohmann::json doc = nlohmann::json::array();
    for (std::size_t k = 0; k < lengths.size(); ++k) doc.push_back({{"n", k + 1}, {"length", lengths[k]}});
    out << doc.dump(2) << '\n';
    return ok;
  }
  out << std::right << std::setw(4) << "n" << "  " << "l(m~^n M / m^n M)" << '\n';
  for (std::size_t k = 0; k < lengths.size(); ++k) out << std::setw(4) << k + 1 << "  " << lengths[k] << '\n';
  return ok;
}

FamilySpec family_from_file(const std::string& path, const Globals& g) {
  FamilySpec spec;
  for (auto& inst : load_instances(path, g.characteristic)) {
    const auto [lo, hi] = inst.extra_variables.value_or(std::pair<unsigned, unsigned>{0, 0});
    spec.seeds.push_back(FamilySeed{std::move(inst.pres), lo, hi});
  }
  return spec;
}

std::string write_reproducer(const std::filesystem::path& dir, const std::string& id, std::size_t index,
                             const Presentation& pres, const TheoremVerdict& v) {
  std::filesystem::create_directories(dir);
  std::string stem = id;
  for (char& c : stem) {
    if (c == '/') c = '_';
  }
  const auto file = dir / (stem + "-" + std::to_string(index) + ".txt");
  std::ofstream os(file);
  os << dump_instance(pres, std::nullopt, std::nullopt, v.theorem_id + ": " + v.detail + "\n" + v.fingerprint);
  return file.string();
}

int cmd_verify(const Globals& g, const std::string& id, std::size_t trials, const std::string& family_path,
               const std::string& reproducer_dir, std::ostream& out) {
  if (!known_theorem(id)) throw InputError("unknown theorem id '" + id + "'");
  const FamilySpec family = family_path.empty() ? default_family(id) : family_from_file(family_path, g);
  const std::uint64_t seed = g.seed.value_or(1);
  const VerifySummary s = verify_family(id, family, trials, seed, g.jobs);
  std::vector<std::string> paths;
  for (std::size_t k = 0; k < s.failures.size(); ++k) {
    paths.push_back(write_reproducer(reproducer_dir, s.failures[k].second.theorem_id, k, s.failures[k].first,
                                     s.failures[k].second));
  }
  if (g.format == Format::structured) {
    nlohmann::json doc = {{"theorem", id},   {"trials", trials}, {"seed", seed},
                          {"pass", s.pass},  {"fail", s.fail},   {"not_applicable", s.not_applicable},
                          {"inconclusive", s.inconclusive}, {"reproducers", paths}};
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& [pres, v] : s.failures) {
      failures.push_back({{"theorem", v.theorem_id}, {"detail", v.detail}, {"fingerprint", v.fingerprint}});
    }
    doc["failures"] = failures;
    out << doc.dump(2) << '\n';
  } else {
    out << "theorem " << id << ", " << trials << " trials, seed " << seed << '\n';
    row(out, "pass", std::to_string(s.pass));
    row(out, "fail", std::to_string(s.fail));
    row(out, "not applicable", std::to_string(s.not_applicable));
    row(out, "inconclusive", std::to_string(s.inconclusive));
    for (std::size_t k = 0; k < s.failures.size(); ++k) {
      out << "FAIL " << s.failures[k].second.theorem_id << ": " << s.failures[k].second.detail << "\n  reproducer "
          << paths[k] << '\n';
    }
  }
  return s.fail == 0 ? ok : verification;
}

int cmd_examples(const Globals& g, std::ostream& out) {
  const std::uint64_t seed = g.seed.value_or(1);
  bool all = true;
  nlohmann::json doc = nlohmann::json::array();
  if (g.format == Format::human) {
    out << std::left << std::setw(24) << "example" << std::setw(16) << "h expected" << std::setw(16) << "h computed"
        << std::setw(8) << "depth" << std::setw(6) << "CM" << "result" << '\n';
  }
  for (const auto& entry : example_corpus()) {
    AnalysisOptions o;
    o.seed = seed;
    if (g.truncation) o.truncation = *g.truncation;
    const InvariantReport r = analyze(entry.pres, o);
    const bool match = (!entry.h || r.h.h == *entry.h) && r.depth.depth == entry.depth &&
                       r.depth.cohen_macaulay == entry.cohen_macaulay && r.truncation_confirmed;
    all = all && match;
    const std::string expected = entry.h ? HData{*entry.h, static_cast<unsigned>(r.basic.dim)}.to_string() : "-";
    if (g.format == Format::structured) {
      doc.push_back({{"name", entry.name},
                     {"h_expected", expected},
                     {"h", r.h.to_string()},
                     {"depth_expected", entry.depth},
                     {"depth", r.depth.depth},
                     {"cohen_macaulay", r.depth.cohen_macaulay},
                     {"match", match}});
    } else {
      out << std::left << std::setw(24) << entry.name << std::setw(16) << expected << std::setw(16)
          << r.h.to_string() << std::setw(8) << (std::to_string(r.depth.depth) + "/" + std::to_string(entry.depth))
          << std::setw(6) << (r.depth.cohen_macaulay ? "yes" : "no") << (match ? "ok" : "MISMATCH") << '\n';
    }
  }
  if (g.format == Format::structured) out << doc.dump(2) << '\n';
  return all ? ok : verification;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of maximal Cohen-Macaulay modules over hypersurfaces", "mcmgr"};
  app.require_subcommand(1);
  Globals g;
  std::string format = "human";
  app.add_option("--seed", g.seed, "Master seed for superficial element search and families");
  app.add_option("--truncation", g.truncation, "Minimum truncation degree N")->check(CLI::Range(1u, 60u));
  app.add_option("--char", g.characteristic, "Prime characteristic of the coefficient field");
  app.add_option("--jobs", g.jobs, "Worker threads for verify")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "structured"}));

  std::string path;
  auto* report = app.add_subcommand("report", "Compute the invariant report of an instance file");
  report->add_option("file", path, "Instance file")->required();

  unsigned n_max = 4;
  auto* rr = app.add_subcommand("rr", "Ratliff-Rush lengths l(m~^n M / m^n M) for n = 1 .. n-max");
  rr->add_option("file", path, "Instance file")->required();
  rr->add_option("--n-max", n_max, "Largest n");

  std::string theorem;
  std::size_t trials = 20;
  std::string family_path;
  std::string reproducer_dir = "reproducers";
  auto* verify = app.add_subcommand("verify", "Check a theorem over a seeded family of instances");
  verify->add_option("theorem", theorem, "next-to-minimal, det-order, e3mu2, e3mu3 or universal")->required();
  verify->add_option("--trials", trials, "Number of instances");
  verify->add_option("--family", family_path, "Instance file of seed matrices separated by '---' lines");
  verify->add_option("--reproducers", reproducer_dir, "Directory for failing-instance dumps");

  auto* examples = app.add_subcommand("examples", "Run the built-in example corpus against expected results");

  for (auto* sub : {report, rr, verify, examples}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return input;
  }
  g.format = format == "structured" ? Format::structured : Format::human;

  try {
    if (*report) return cmd_report(g, path, out);
    if (*rr) return cmd_rr(g, path, n_max, out);
    if (*verify) return cmd_verify(g, theorem, trials, family_path, reproducer_dir, out);
    if (*examples) return cmd_examples(g, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return input;
  } catch (const ExhaustionError& e) {
    err << "exhausted: " << e.what() << '\n';
    return exhaustion;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return internal;
  }
  return internal;
}

}  // namespace mcmgr::cli
