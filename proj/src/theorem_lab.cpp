#include "mcmgr/theorem_lab.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <sstream>
#include <thread>

#include "mcmgr/error.hpp"
#include "mcmgr/parse.hpp"

namespace mcmgr {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::not_applicable:
      return "not-applicable";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

std::string fingerprint(const Presentation& pres, std::uint64_t seed) {
  std::ostringstream out;
  out << '[';
  const auto rows = pres.entry_strings();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << (i ? "; " : "");
    for (std::size_t j = 0; j < rows[i].size(); ++j) out << (j ? ", " : "") << rows[i][j];
  }
  out << "] seed=" << seed;
  return out.str();
}

bool annihilates(const Presentation& pres, const Poly& g) {
  const std::size_t t = pres.size();
  const PrimeField& f = pres.field();
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      Poly minor = Poly::constant(f, pres.nvars(), 1);
      if (t > 1) {
        PolyMatrix sub;
        for (std::size_t a = 0; a < t; ++a) {
          if (a == i) continue;
          auto& row = sub.emplace_back();
          for (std::size_t b = 0; b < t; ++b) {
            if (b != j) row.push_back(pres.entry(a, b));
          }
        }
        minor = determinant(sub);
      }
      const Poly product = g * minor;
      if (!product.is_zero() && !divides(pres.det(), product)) return false;
    }
  }
  return true;
}

std::optional<Poly> order_three_annihilator(const Presentation& pres) {
  if (const auto& g = pres.hypersurface(); g && g->ord() == Order(3) && annihilates(pres, *g)) return *g;
  const unsigned od = pres.det().ord().value();
  if (od > 3) return std::nullopt;
  const Poly x = Poly::variable(pres.field(), pres.nvars(), 0);
  return pres.det() * power(x, 3 - od);
}

namespace {

TheoremVerdict make(const std::string& id, const Presentation& pres, const InvariantReport& report) {
  TheoremVerdict v;
  v.theorem_id = id;
  v.fingerprint = fingerprint(pres, report.seed);
  v.witness["h"] = report.h.to_string();
  v.witness["depth"] = std::to_string(report.depth.depth);
  v.witness["dim"] = std::to_string(report.basic.dim);
  v.witness["mu"] = std::to_string(report.basic.mu);
  v.witness["i"] = std::to_string(report.basic.i_m);
  v.witness["e"] = std::to_string(report.h.multiplicity());
  return v;
}

TheoremVerdict not_applicable(TheoremVerdict v, const std::string& why) {
  v.hypotheses_met = false;
  v.verdict = Verdict::not_applicable;
  v.detail = why;
  return v;
}

TheoremVerdict conclude(TheoremVerdict v, const std::vector<std::string>& problems) {
  v.hypotheses_met = true;
  v.conclusion_holds = problems.empty();
  v.verdict = problems.empty() ? Verdict::pass : Verdict::fail;
  for (const auto& p : problems) v.detail += (v.detail.empty() ? "" : "; ") + p;
  return v;
}

TheoremVerdict inconclusive(const std::string& id, const Presentation& pres, std::uint64_t seed,
                            const std::string& why) {
  TheoremVerdict v;
  v.theorem_id = id;
  v.fingerprint = fingerprint(pres, seed);
  v.verdict = Verdict::inconclusive;
  v.detail = why;
  return v;
}

IntSeries repeated(std::int64_t mu, unsigned i) { return IntSeries(i, mu); }

bool depth_at_least(const InvariantReport& r, std::int64_t bound) {
  return static_cast<std::int64_t>(r.depth.depth) >= bound;
}

AnalysisOptions options_for(std::uint64_t seed, bool ratliff_rush) {
  AnalysisOptions o;
  o.seed = seed;
  o.ratliff_rush = ratliff_rush;
  return o;
}

}  // namespace

TheoremVerdict check_next_to_minimal(const Presentation& pres, const InvariantReport& report) {
  TheoremVerdict v = make(kNextToMinimal, pres, report);
  const auto mu = static_cast<std::int64_t>(report.basic.mu);
  const unsigned i = report.basic.i_m;
  const std::int64_t e = report.h.multiplicity();
  if (e != mu * i + 1) return not_applicable(v, "e(M) != mu(M) i(M) + 1");
  std::vector<std::string> problems;
  const auto d = static_cast<std::int64_t>(report.basic.dim);
  if (!depth_at_least(report, d - 1)) problems.push_back("depth below d - 1");
  const IntSeries rest = strip(subtract(report.h.h, repeated(mu, i)));
  std::size_t s = 0;
  std::size_t nonzero = 0;
  for (std::size_t k = 0; k < rest.size(); ++k) {
    if (rest[k] != 0) {
      ++nonzero;
      s = k;
    }
  }
  if (nonzero != 1 || rest[s] != 1 || s < i) {
    problems.push_back("h is not mu(1 + .. + z^{i-1}) + z^s with s >= i");
  } else {
    v.witness["s"] = std::to_string(s);
    if (report.depth.cohen_macaulay != (s == i)) problems.push_back("Cohen-Macaulay flag disagrees with s = i");
  }
  return conclude(v, problems);
}

TheoremVerdict check_det_order(const Presentation& pres, const InvariantReport& report) {
  TheoremVerdict v = make(kDetOrder, pres, report);
  const std::size_t r = report.basic.mu;
  if (report.basic.ord_det != r + 1) return not_applicable(v, "ord det(phi) != mu + 1");
  std::vector<std::string> problems;
  const auto d = static_cast<std::int64_t>(report.basic.dim);
  if (!depth_at_least(report, d - 1)) problems.push_back("depth below d - 1");
  const auto rr = static_cast<std::int64_t>(r);
  if (report.reduction_number && *report.reduction_number <= 2) {
    if (report.h.h == IntSeries{rr, 1}) {
      v.witness["branch"] = "r + z";
      if (!report.depth.cohen_macaulay) problems.push_back("h = r + z but G(M) is not Cohen-Macaulay");
    } else if (report.h.h == IntSeries{rr, 0, 1}) {
      v.witness["branch"] = "r + z^2";
      if (static_cast<std::int64_t>(report.depth.depth) != d - 1 || report.depth.cohen_macaulay) {
        problems.push_back("h = r + z^2 but depth != d - 1");
      }
    } else {
      problems.push_back("red <= 2 but h is neither r + z nor r + z^2");
    }
  } else {
    v.witness["branch"] = "depth bound only";
  }
  return conclude(v, problems);
}

TheoremVerdict check_e3(const Presentation& pres, const InvariantReport& report, std::size_t mu) {
  TheoremVerdict v = make(mu == 2 ? kE3Mu2 : kE3Mu3, pres, report);
  if (report.basic.mu != mu) return not_applicable(v, "mu(M) != " + std::to_string(mu));
  const auto g = order_three_annihilator(pres);
  if (!g) {
    v.verdict = Verdict::inconclusive;
    v.detail = "hypotheses unknown: no order-3 annihilator on record and ord det(phi) > 3";
    return v;
  }
  v.witness["g"] = g->to_string(pres.vars());
  std::vector<std::string> problems;
  const auto d = static_cast<std::int64_t>(report.basic.dim);
  const std::int64_t bound = d - (mu == 2 ? 1 : 2);
  if (!depth_at_least(report, bound)) problems.push_back("depth below d - " + std::to_string(mu - 1));
  if (!report.reduction_number || *report.reduction_number > 2) problems.push_back("reduction number above 2");
  const bool free_summand = report.dvr && report.dvr->has_free_summand(3);
  if (free_summand) {
    v.witness["free_summand"] = "yes";
  } else {
    static const std::vector<IntSeries> mu2 = {{2}, {2, 1}, {2, 0, 1}, {2, 2}};
    static const std::vector<IntSeries> mu3 = {{3}, {3, 1}, {3, 0, 1}, {3, 2}, {3, 1, 1}, {3, 0, 3, -1}, {3, 3}};
    const auto& cases = mu == 2 ? mu2 : mu3;
    if (std::find(cases.begin(), cases.end(), report.h.h) == cases.end()) {
      problems.push_back("h = " + report.h.to_string() + " is outside the case list");
    }
  }
  return conclude(v, problems);
}

namespace {

template <typename Check>
TheoremVerdict run_check(const std::string& id, const Presentation& pres, std::uint64_t seed, Check check) {
  try {
    return check(analyze(pres, options_for(seed, false)));
  } catch (const ExhaustionError& e) {
    return inconclusive(id, pres, seed, e.what());
  }
}

}  // namespace

TheoremVerdict check_next_to_minimal(const Presentation& pres, std::uint64_t seed) {
  return run_check(kNextToMinimal, pres, seed, [&](const InvariantReport& r) { return check_next_to_minimal(pres, r); });
}

TheoremVerdict check_det_order(const Presentation& pres, std::uint64_t seed) {
  return run_check(kDetOrder, pres, seed, [&](const InvariantReport& r) { return check_det_order(pres, r); });
}

TheoremVerdict check_e3(const Presentation& pres, std::uint64_t seed, std::size_t mu) {
  return run_check(mu == 2 ? kE3Mu2 : kE3Mu3, pres, seed,
                   [&](const InvariantReport& r) { return check_e3(pres, r, mu); });
}

// ---------------------------------------------------------------------------
// Universal suite

namespace {

class Suite {
 public:
  Suite(const Presentation& pres, const InvariantReport& report) : pres_(pres), report_(report) {}

  void record(const std::string& name, bool applicable, bool holds, const std::string& detail = "") {
    TheoremVerdict v = make(std::string(kUniversal) + "/" + name, pres_, report_);
    if (!applicable) {
      out_.push_back(not_applicable(v, detail.empty() ? "not applicable" : detail));
      return;
    }
    out_.push_back(conclude(v, holds ? std::vector<std::string>{} : std::vector<std::string>{detail}));
  }

  void undecided(const std::string& name, const std::string& why) {
    TheoremVerdict v = make(std::string(kUniversal) + "/" + name, pres_, report_);
    v.verdict = Verdict::inconclusive;
    v.detail = why;
    out_.push_back(v);
  }

  std::vector<TheoremVerdict> take() { return std::move(out_); }

 private:
  const Presentation& pres_;
  const InvariantReport& report_;
  std::vector<TheoremVerdict> out_;
};

std::int64_t samuel(const LevelReport& level, unsigned n) {
  if (n < level.graded.size()) {
    std::int64_t s = 0;
    for (unsigned k = 0; k <= n; ++k) s += level.graded[k];
    return s;
  }
  return level.h_direct.hilbert_samuel(n);
}

std::int64_t sum(const IntSeries& s) {
  std::int64_t out = 0;
  for (auto v : s) out += v;
  return out;
}

std::int64_t sdim(const Subspace& s) { return static_cast<std::int64_t>(s.dim()); }

}  // namespace

std::vector<TheoremVerdict> universal_property_suite(const Presentation& pres, const InvariantReport& report) {
  if (report.levels.empty()) throw Error("universal suite needs a report with level data");
  Suite suite(pres, report);
  const auto& levels = report.levels;
  const std::size_t r = report.basic.dim;
  const auto mu = static_cast<std::int64_t>(report.basic.mu);
  const unsigned i_m = report.basic.i_m;
  const std::int64_t e = report.h.multiplicity();

  {
    std::string bad;
    for (std::size_t c = 0; c < r && bad.empty(); ++c) {
      for (unsigned n = 0; n < levels[c].graded.size(); ++n) {
        if (levels[c].graded[n] != samuel(levels[c + 1], n) - levels[c].b[n]) {
          bad = "level " + std::to_string(c) + ", n = " + std::to_string(n);
          break;
        }
      }
    }
    suite.record("singh-equality", r >= 1, bad.empty(), "fails at " + bad);
  }
  suite.record("multiplicity-lower-bound", true, e >= mu * i_m, "e(M) < mu(M) i(M)");
  suite.record("e2-nonnegative", true, report.h.e(2) >= 0, "e_2 < 0");
  {
    std::string bad_inv, bad_corr, bad_coherence;
    for (std::size_t c = 0; c < r; ++c) {
      const HData& hm = levels[c].h_direct;
      const HData& hn = levels[c + 1].h_direct;
      const auto rc = static_cast<unsigned>(r - c);
      for (unsigned i = 0; i < rc; ++i) {
        if (hm.e(i) != hn.e(i)) bad_inv = "e_" + std::to_string(i) + " at level " + std::to_string(c);
      }
      const std::int64_t sign = rc % 2 == 0 ? 1 : -1;
      if (hm.e(rc) != hn.e(rc) - sign * sum(levels[c].b)) bad_corr = "level " + std::to_string(c);
      const bool b_zero = strip(levels[c].b).empty();
      const bool h_equal = hm.h == hn.h;
      const bool er_equal = hm.e(rc) == hn.e(rc);
      if (b_zero != h_equal || b_zero != er_equal) bad_coherence = "level " + std::to_string(c);
    }
    suite.record("hilbert-coefficients-invariance", r >= 1, bad_inv.empty(), "changes: " + bad_inv);
    suite.record("top-coefficient-correction", r >= 1, bad_corr.empty(), "fails at " + bad_corr);
    suite.record("b-vanishing-criteria", r >= 1, bad_coherence.empty(),
                 "b == 0, h equality and e_r equality disagree at " + bad_coherence);
  }
  {
    bool same = true;
    for (const auto& level : levels) same = same && level.h == level.h_direct;
    suite.record("h-recursion-matches-fit", true, same, "recursion and direct fit differ");
  }
  if (r >= 1 && levels[0].rr_lengths) {
    suite.record("ratliff-rush-identity", true, report.depth.rr_residual.empty(),
                 "residual " + series_to_string(report.depth.rr_residual));
    suite.record("ratliff-rush-depth-criterion", true, report.depth.r_poly.empty() == (report.depth.depth >= 1),
                 "r_M = 0 disagrees with depth >= 1");
  } else {
    suite.record("ratliff-rush-identity", false, true, "needs dim M >= 1 and closure data");
  }
  suite.record("ulrich-bound-cohen-macaulay", e == mu * i_m,
               report.depth.cohen_macaulay && report.h.h == repeated(mu, i_m), "e = mu i but not Cohen-Macaulay");
  suite.record("principal-cohen-macaulay", mu == 1, report.depth.cohen_macaulay, "t = 1 but not Cohen-Macaulay");
  if (r >= 1) {
    const HData& h1 = levels[r - 1].h;
    bool ok = true;
    for (unsigned k = 0; k < i_m; ++k) ok = ok && h1.coeff(k) == mu;
    for (auto c : h1.h) ok = ok && c >= 0;
    suite.record("dimension-one-h-shape", true, ok, "h of the dimension-one reduction is " + h1.to_string());
  }
  suite.record("elementary-divisors-sum", report.dvr.has_value(), report.dvr && report.dvr->total() == e,
               "sum of divisors differs from e(M)");
  {
    bool monotone = true;
    bool seen_false = false;
    for (bool f : report.depth.trace) {
      if (!f) seen_false = true;
      if (f && seen_false) monotone = false;
    }
    suite.record("sally-monotone", true, monotone, "Sally flags not monotone");
  }
  const auto g3 = order_three_annihilator(pres);
  suite.record("reduction-bound-e3", g3.has_value(), report.reduction_number && *report.reduction_number <= 2,
               "reduction number above 2 over an order-3 hypersurface");

  if (r == 0) return suite.take();

  // Checks that need the truncated models of the top two levels.
  const TruncatedModule tm0 = TruncatedModule::build(levels[0].pres, levels[0].truncation);
  const TruncatedModule tm1 = TruncatedModule::build(levels[1].pres, levels[1].truncation);
  const Form& x = report.forms[0];
  // Forms 1.. in level-1 variables: drop the coordinate eliminated by x.
  std::vector<Form> j_bar;
  for (std::size_t c = 1; c < r; ++c) {
    Form f = report.lifted_forms[c];
    std::size_t k0 = 0;
    for (std::size_t k = f.size(); k-- > 0;) {
      if (report.lifted_forms[0][k] != 0) {
        k0 = k;
        break;
      }
    }
    f.erase(f.begin() + static_cast<std::ptrdiff_t>(k0));
    j_bar.push_back(std::move(f));
  }
  const std::vector<Form>& j = report.lifted_forms;
  const IntSeries v0 = reduction_defects(tm0, j);
  const IntSeries v1 = reduction_defects(tm1, j_bar);

  {
    // b_1(x) + l(m^2 N / J' m N) = l(m^2 M / J m M).
    if (v0.size() < 2 || v1.size() < 2 || levels[0].b.size() < 2) {
      suite.undecided("reduction-sequence", "truncation too small");
    } else {
      const std::int64_t lhs = levels[0].b[1] + v1[1];
      suite.record("reduction-sequence", true, lhs == v0[1],
                   std::to_string(lhs) + " != " + std::to_string(v0[1]));
    }
  }
  if (r == 1) {
    // l((m^2 M : x) / m^2 M) + l(m^2 N) = l(m^2 M / x m^2 M).
    const Subspace c2 = colon(tm0, tm0.level(2), {x}, 2);
    const std::int64_t colon_len = sdim(c2) - sdim(tm0.level(2));
    const std::int64_t n2 = static_cast<std::int64_t>(tm1.dim() - tm1.level_start(2));
    const Mat xt = transpose(tm0.form_action(x));
    const Subspace xm2 = Subspace::span(tm0.field(), xt.block(tm0.level_start(2), tm0.dim(), 0, tm0.dim()));
    const std::int64_t quotient = sdim(tm0.level(2)) - sdim(xm2);
    suite.record("dimension-one-colon-sequence", true, colon_len + n2 == quotient,
                 std::to_string(colon_len) + " + " + std::to_string(n2) + " != " + std::to_string(quotient));
  }
  if (r == 2) {
    const IntSeries& b = levels[0].b;
    const IntSeries w1 = reduction_defects(tm1, {j_bar[0]});
    std::string bad;
    const std::size_t limit = std::min({v0.size(), w1.size(), b.size()});
    for (unsigned n = 1; n < limit; ++n) {
      const Subspace cj = colon(tm0, tm0.level(n), j, n);
      const std::int64_t a = sdim(cj) - sdim(tm0.level(n - 1));
      const std::int64_t alt = a - b[n - 1] + b[n] - v0[n] + w1[n];
      if (alt != 0) {
        bad = "n = " + std::to_string(n) + ", alternating sum " + std::to_string(alt);
        break;
      }
    }
    suite.record("dimension-two-colon-sequence", true, bad.empty(), bad);
  }
  if (g3) {
    if (tm0.truncation() < 4) {
      suite.undecided("quotient-graded-shape", "truncation too small");
    } else {
      const Subspace jv = ideal_times_level(tm0, j, 0);
      const Subspace jw1 = ideal_times_level(tm0, j, 1);
      const std::int64_t alpha = sdim(tm0.level(1)) - sdim(sum(tm0.level(2), jv));
      const std::int64_t beta = sdim(tm0.level(2)) - sdim(sum(tm0.level(3), jw1));
      suite.record("quotient-graded-shape", true, beta <= alpha && alpha <= mu,
                   "alpha = " + std::to_string(alpha) + ", beta = " + std::to_string(beta));
    }
  }
  {
    const DeltaReport dv = delta_and_vv(tm0, {x});
    if (dv.vv.size() < 2) {
      suite.undecided("first-coefficient-criterion", "truncation too small");
    } else {
      const bool h1_equal = levels[0].h.coeff(1) == levels[1].h.coeff(1);
      suite.record("first-coefficient-criterion", true, h1_equal == (dv.vv[1] == 0),
                   "h_1 equality disagrees with m^2 M cap xM = x m M");
    }
  }
  if (r >= 2 && levels[0].rr_lengths && levels[1].rr_lengths && !levels[0].rr_lengths->empty() &&
      !levels[1].rr_lengths->empty()) {
    suite.record("ratliff-rush-injection", true, (*levels[0].rr_lengths)[0] <= (*levels[1].rr_lengths)[0],
                 "closure length of M exceeds that of M/xM");
  }
  return suite.take();
}

std::vector<TheoremVerdict> universal_property_suite(const Presentation& pres, std::uint64_t seed) {
  try {
    return universal_property_suite(pres, analyze(pres, options_for(seed, true)));
  } catch (const ExhaustionError& e) {
    return {inconclusive(kUniversal, pres, seed, e.what())};
  }
}

bool known_theorem(const std::string& id) {
  return id == kNextToMinimal || id == kDetOrder || id == kE3Mu2 || id == kE3Mu3 || id == kUniversal;
}

std::vector<TheoremVerdict> run_theorem(const std::string& id, const Presentation& pres, std::uint64_t seed) {
  if (id == kNextToMinimal) return {check_next_to_minimal(pres, seed)};
  if (id == kDetOrder) return {check_det_order(pres, seed)};
  if (id == kE3Mu2) return {check_e3(pres, seed, 2)};
  if (id == kE3Mu3) return {check_e3(pres, seed, 3)};
  if (id == kUniversal) return universal_property_suite(pres, seed);
  throw InputError("unknown theorem id '" + id + "'");
}

// ---------------------------------------------------------------------------
// Families

namespace {

using Rng = std::mt19937_64;

std::uint64_t below(Rng& rng, std::uint64_t n) { return rng() % n; }

Poly extend(const Poly& p, std::size_t nvars) {
  Poly out(p.field(), nvars);
  for (const auto& [e, c] : p.terms()) {
    Exponent wide = e;
    wide.resize(nvars, 0);
    out.add_term(wide, c);
  }
  return out;
}

std::vector<std::string> extended_names(const std::vector<std::string>& vars, unsigned extra) {
  static const char* pool[] = {"z", "w", "v", "u", "s", "t", "a", "b", "c"};
  std::vector<std::string> out = vars;
  for (const char* name : pool) {
    if (out.size() == vars.size() + extra) break;
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  }
  for (std::size_t k = 0; out.size() < vars.size() + extra; ++k) out.push_back("x" + std::to_string(k + 100));
  return out;
}

Mat random_invertible(Rng& rng, std::size_t n, const PrimeField& f) {
  while (true) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<Elem>(below(rng, f.characteristic()));
    }
    if (rank(m, f) == n) return m;
  }
}

Elem nonzero(Rng& rng, const PrimeField& f) { return static_cast<Elem>(1 + below(rng, f.characteristic() - 1)); }

// Constant or a constant times a random variable.
Poly multiplier(Rng& rng, const PrimeField& f, std::size_t nvars) {
  const Elem c = nonzero(rng, f);
  if (below(rng, 2) == 0) return Poly::constant(f, nvars, c);
  return Poly::variable(f, nvars, below(rng, nvars)).scaled(c);
}

}  // namespace

Presentation random_transform(const Presentation& pres, std::uint64_t seed, unsigned extra_vars, unsigned row_ops,
                              bool coordinate_change) {
  Rng rng(seed);
  const PrimeField& f = pres.field();
  const std::size_t t = pres.size();
  const std::size_t n = pres.nvars() + extra_vars;
  const auto vars = extended_names(pres.vars(), extra_vars);

  PolyMatrix phi;
  for (const auto& row : pres.matrix()) {
    auto& out = phi.emplace_back();
    for (const auto& p : row) out.push_back(extend(p, n));
  }
  std::optional<Poly> g;
  if (pres.hypersurface()) g = extend(*pres.hypersurface(), n);

  if (coordinate_change) {
    const Mat change = random_invertible(rng, n, f);
    for (auto& row : phi) {
      for (auto& p : row) p = linear_substitute(p, change);
    }
    if (g) g = linear_substitute(*g, change);
  }

  for (unsigned k = 0; k < row_ops; ++k) {
    if (t == 1) {
      phi[0][0] = phi[0][0].scaled(nonzero(rng, f));
      continue;
    }
    const std::size_t a = below(rng, t);
    std::size_t b = below(rng, t - 1);
    if (b >= a) ++b;
    // row a += m * row b
    const Poly m = multiplier(rng, f, n);
    for (std::size_t j = 0; j < t; ++j) phi[a][j] += m * phi[b][j];
    // column b += m' * column a
    const Poly m2 = multiplier(rng, f, n);
    for (std::size_t i = 0; i < t; ++i) phi[i][b] += m2 * phi[i][a];
  }
  if (t > 1 && below(rng, 2) == 0) std::swap(phi[0], phi[1]);
  return Presentation(f, vars, std::move(phi), std::move(g));
}

Presentation diagonal_presentation(const std::vector<unsigned>& exponents) {
  const PrimeField f;
  const std::size_t t = exponents.size();
  PolyMatrix phi(t, std::vector<Poly>(t, Poly(f, 2)));
  for (std::size_t i = 0; i < t; ++i) phi[i][i] = power(Poly::variable(f, 2, 1), exponents[i]);
  return Presentation(f, {"x", "y"}, std::move(phi));
}

namespace {

std::optional<Presentation> random_instance(Rng& rng, std::size_t max_size, std::size_t max_vars) {
  const PrimeField f;
  const std::size_t t = 1 + below(rng, max_size);
  const std::size_t n = 2 + below(rng, max_vars - 1);
  static const std::vector<std::string> names = {"x", "y", "z", "w", "v"};
  std::vector<std::string> vars(names.begin(), names.begin() + static_cast<std::ptrdiff_t>(n));
  PolyMatrix phi(t, std::vector<Poly>(t, Poly(f, n)));
  for (auto& row : phi) {
    for (auto& p : row) {
      if (t > 1 && below(rng, 4) == 0) continue;
      const std::size_t terms = 1 + below(rng, 2);
      for (std::size_t k = 0; k < terms; ++k) {
        Exponent e(n, 0);
        const unsigned deg = 1 + static_cast<unsigned>(below(rng, 2));
        for (unsigned d = 0; d < deg; ++d) ++e[below(rng, n)];
        p.add_term(e, nonzero(rng, f));
      }
    }
  }
  if (Presentation::check(f, vars, phi, std::nullopt)) return std::nullopt;
  return Presentation(f, vars, std::move(phi));
}

}  // namespace

std::vector<Presentation> generate_family(const FamilySpec& spec, std::size_t count, std::uint64_t seed) {
  std::vector<Presentation> out;
  if (spec.kind == FamilySpec::Kind::random) {
    for (std::uint64_t k = 0; out.size() < count; ++k) {
      Rng rng(derive_seed(seed, k));
      if (auto p = random_instance(rng, spec.max_size, spec.max_vars)) out.push_back(std::move(*p));
    }
    return out;
  }
  if (spec.seeds.empty()) throw InputError("family has no seed matrices");
  for (std::size_t k = 0; k < count; ++k) {
    const FamilySeed& s = spec.seeds[k % spec.seeds.size()];
    Rng rng(derive_seed(seed, k));
    const unsigned span = s.max_extra_vars - s.min_extra_vars + 1;
    const unsigned extra = s.min_extra_vars + static_cast<unsigned>(below(rng, span));
    out.push_back(random_transform(s.pres, rng(), extra, spec.row_ops, spec.coordinate_change));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Corpus

namespace {

Presentation from_rows(const std::vector<std::vector<std::string>>& rows, const std::vector<std::string>& vars,
                       const std::string& g = "") {
  const PrimeField f;
  PolyMatrix phi;
  for (const auto& row : rows) {
    auto& r = phi.emplace_back();
    for (const auto& s : row) r.push_back(parse_poly(s, vars, f));
  }
  std::optional<Poly> hyp;
  if (!g.empty()) hyp = parse_poly(g, vars, f);
  return Presentation(f, vars, std::move(phi), std::move(hyp));
}

// r x r: first column (y^2, tail, 0, ..), then y on the rest of the diagonal.
Presentation tail_family(std::size_t r, const std::string& tail) {
  std::vector<std::vector<std::string>> rows(r, std::vector<std::string>(r, "0"));
  rows[0][0] = "y^2";
  rows[1][0] = tail;
  for (std::size_t i = 1; i < r; ++i) rows[i][i] = "y";
  return from_rows(rows, {"x", "y"});
}

}  // namespace

Presentation example_matrix(const std::string& name) {
  const std::vector<std::string> xy{"x", "y"};
  const std::vector<std::string> xyz{"x", "y", "z"};
  if (name == "generic-linear") return from_rows({{"x", "y"}, {"y", "x + y"}}, xy);
  if (name == "minimal-multiplicity") return from_rows({{"y^2", "0"}, {"x^2", "y"}}, xy, "y^3");
  if (name == "depth-zero") return from_rows({{"y^2", "0"}, {"x", "y"}}, xy, "y^3");
  if (name == "three-depth-zero") return from_rows({{"x", "y", "z"}, {"x^2", "x^2", "0"}, {"0", "0", "x^2"}}, xyz, "x^2*(x - y)");
  if (name == "three-depth-one") return from_rows({{"x", "y", "0"}, {"x^2", "x^2", "0"}, {"0", "0", "x^2"}}, xyz, "x^2*(x - y)");
  if (name == "three-cohen-macaulay") return from_rows({{"x", "0", "0"}, {"0", "x^2", "0"}, {"0", "0", "x^2"}}, xyz);
  for (std::size_t r = 2; r <= 6; ++r) {
    if (name == "quadratic-tail-" + std::to_string(r)) return tail_family(r, "x^2");
    if (name == "linear-tail-" + std::to_string(r)) return tail_family(r, "x");
  }
  throw InputError("unknown example matrix '" + name + "'");
}

std::vector<CorpusEntry> example_corpus() {
  std::vector<CorpusEntry> out;
  out.push_back({"generic-linear", example_matrix("generic-linear"), IntSeries{2}, 1, true});
  for (unsigned a1 = 1; a1 <= 3; ++a1) {
    for (unsigned a2 = a1; a2 <= 3; ++a2) {
      IntSeries h(a2, 0);
      for (unsigned k = 0; k < a1; ++k) ++h[k];
      for (unsigned k = 0; k < a2; ++k) ++h[k];
      out.push_back({"diagonal-" + std::to_string(a1) + "-" + std::to_string(a2), diagonal_presentation({a1, a2}), h,
                     1, true});
    }
  }
  out.push_back({"minimal-multiplicity", example_matrix("minimal-multiplicity"), IntSeries{2, 1}, 1, true});
  out.push_back({"depth-zero", example_matrix("depth-zero"), IntSeries{2, 0, 1}, 0, false});
  out.push_back({"three-depth-zero", example_matrix("three-depth-zero"), std::nullopt, 0, false});
  out.push_back({"three-depth-one", example_matrix("three-depth-one"), std::nullopt, 1, false});
  out.push_back({"three-cohen-macaulay", example_matrix("three-cohen-macaulay"), std::nullopt, 2, true});
  for (std::int64_t r = 2; r <= 4; ++r) {
    const auto rs = std::to_string(r);
    out.push_back({"quadratic-tail-" + rs, example_matrix("quadratic-tail-" + rs), IntSeries{r, 1}, 1, true});
    out.push_back({"linear-tail-" + rs, example_matrix("linear-tail-" + rs), IntSeries{r, 0, 1}, 0, false});
  }
  out.push_back({"principal", diagonal_presentation({1}), IntSeries{1}, 1, true});
  out.push_back({"scalar-three", diagonal_presentation({1, 1, 1}), IntSeries{3}, 1, true});
  out.push_back({"depth-zero-transformed", random_transform(example_matrix("depth-zero"), 20240601), IntSeries{2, 0, 1},
                 0, false});
  return out;
}

FamilySpec default_family(const std::string& id) {
  FamilySpec spec;
  auto add = [&](Presentation p, unsigned lo, unsigned hi) { spec.seeds.push_back(FamilySeed{std::move(p), lo, hi}); };
  if (id == kNextToMinimal) {
    for (const auto& profile : std::vector<std::vector<unsigned>>{{1, 2}, {2, 3}, {1, 1, 2}, {2, 2, 3}, {1, 1, 1, 2}}) {
      add(diagonal_presentation(profile), 0, profile.size() >= 3 ? 1 : 2);
    }
    add(example_matrix("quadratic-tail-2"), 0, 2);
    add(example_matrix("linear-tail-2"), 0, 2);
    add(example_matrix("quadratic-tail-3"), 0, 1);
    add(example_matrix("linear-tail-3"), 0, 1);
  } else if (id == kDetOrder) {
    for (std::size_t r = 2; r <= 4; ++r) {
      const unsigned hi = r == 2 ? 2 : 1;
      add(example_matrix("quadratic-tail-" + std::to_string(r)), 0, hi);
      add(example_matrix("linear-tail-" + std::to_string(r)), 0, hi);
    }
    add(diagonal_presentation({1, 2}), 0, 2);
    add(diagonal_presentation({1, 1, 2}), 0, 1);
  } else if (id == kE3Mu2) {
    add(example_matrix("generic-linear"), 0, 2);
    for (unsigned a1 = 1; a1 <= 3; ++a1) {
      for (unsigned a2 = a1; a2 <= 3; ++a2) {
        Presentation p = diagonal_presentation({a1, a2});
        if (a1 + a2 >= 3) p = p.with_hypersurface(parse_poly("y^3", p.vars(), p.field()));
        add(std::move(p), 0, 1);
      }
    }
    add(example_matrix("minimal-multiplicity"), 0, 2);
    add(example_matrix("depth-zero"), 0, 2);
  } else if (id == kE3Mu3) {
    add(example_matrix("three-depth-zero"), 0, 0);
    add(example_matrix("three-depth-one"), 0, 0);
    auto with_g = [](Presentation p, const std::string& g) {
      return p.with_hypersurface(parse_poly(g, p.vars(), p.field()));
    };
    add(with_g(example_matrix("three-cohen-macaulay"), "x^3"), 0, 0);
    add(diagonal_presentation({1, 1, 1}), 0, 1);
    add(with_g(example_matrix("quadratic-tail-3"), "y^3"), 0, 1);
    add(with_g(example_matrix("linear-tail-3"), "y^3"), 0, 1);
  } else if (id == kUniversal) {
    spec.kind = FamilySpec::Kind::random;
  } else {
    throw InputError("unknown theorem id '" + id + "'");
  }
  return spec;
}

VerifySummary verify_family(const std::string& id, const FamilySpec& family, std::size_t count, std::uint64_t seed,
                            unsigned jobs) {
  if (!known_theorem(id)) throw InputError("unknown theorem id '" + id + "'");
  const auto instances = generate_family(family, count, seed);
  std::vector<std::vector<TheoremVerdict>> results(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < instances.size(); k = next++) {
      results[k] = run_theorem(id, instances[k], derive_seed(seed, 1000000 + k));
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(instances.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < n; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  VerifySummary summary;
  for (std::size_t k = 0; k < instances.size(); ++k) {
    for (const auto& v : results[k]) {
      switch (v.verdict) {
        case Verdict::pass:
          ++summary.pass;
          break;
        case Verdict::fail:
          ++summary.fail;
          summary.failures.emplace_back(instances[k], v);
          break;
        case Verdict::not_applicable:
          ++summary.not_applicable;
          break;
        case Verdict::inconclusive:
          ++summary.inconclusive;
          break;
      }
    }
  }
  return summary;
}

}  // namespace mcmgr
