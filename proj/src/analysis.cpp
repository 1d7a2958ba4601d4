#include "mcmgr/analysis.hpp"

#include <algorithm>

#include "mcmgr/error.hpp"

namespace mcmgr {

namespace {

// Raised when two exact computations disagree; a fresh chain is tried.
class Inconsistent : public Error {
 public:
  using Error::Error;
};

struct Measure {
  IntSeries graded;
  IntSeries b;
  HData h_direct;
  HData h;
  std::optional<unsigned> red;
  std::optional<IntSeries> rr;

  bool agrees_with(const Measure& wider) const {
    auto prefix = [](const IntSeries& a, const IntSeries& b) {
      return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
    };
    return prefix(graded, wider.graded) && prefix(b, wider.b) && h_direct == wider.h_direct && h == wider.h &&
           red == wider.red && rr == wider.rr;
  }
};

struct LevelInput {
  const Presentation* pres;
  const VerifiedForm* form;   // null at dimension zero
  const HData* below;         // null at dimension zero
  std::vector<Form> reduction_forms;
  bool ratliff_rush = false;
};

bool zero_tail(const IntSeries& s) { return s.size() >= 2 && s[s.size() - 1] == 0 && s[s.size() - 2] == 0; }

std::optional<Measure> measure(const LevelInput& in, unsigned n, const AnalysisOptions& options) {
  const TruncatedModule tm = TruncatedModule::build(*in.pres, n, options.max_ambient);
  const unsigned r = static_cast<unsigned>(in.pres->module_dim());
  Measure m;
  m.graded = tm.graded_lengths();
  auto direct = fit_h_direct(m.graded, r);
  if (!direct) return std::nullopt;
  m.h_direct = *direct;
  if (in.form) {
    m.b = b_series(tm, in.form->coefficients);
    if (!zero_tail(m.b)) return std::nullopt;
    m.h = h_from_quotient(*in.below, strip(m.b), r);
  } else {
    m.h = m.h_direct;
  }
  if (!in.reduction_forms.empty()) {
    m.red = reduction_number(tm, in.reduction_forms);
    if (!m.red) return std::nullopt;
  }
  if (in.ratliff_rush) {
    const unsigned n_max = std::max(m.h_direct.degree(), m.red.value_or(0)) + 2;
    try {
      m.rr = ratliff_rush_lengths(tm, n_max);
    } catch (const ExhaustionError&) {
      return std::nullopt;
    }
    if (!rr_decomposition(m.h, m.graded, *m.rr)) return std::nullopt;
  }
  return m;
}

LevelReport compute_level(const LevelInput& in, unsigned start, const AnalysisOptions& options) {
  for (unsigned n = start;; n += 2) {
    if (n + 2 > options.max_truncation) {
      throw ExhaustionError("truncation cap " + std::to_string(options.max_truncation) + " reached");
    }
    auto first = measure(in, n, options);
    if (!first) continue;
    auto second = measure(in, n + 2, options);
    if (!second || !first->agrees_with(*second)) continue;
    LevelReport out{*in.pres,
                    in.form ? std::optional<VerifiedForm>(*in.form) : std::nullopt,
                    n,
                    first->graded,
                    first->b,
                    first->h_direct,
                    first->h,
                    first->red,
                    first->rr};
    return out;
  }
}

}  // namespace

InvariantReport analyze(const Presentation& pres, const AnalysisOptions& options) {
  const std::size_t r = pres.module_dim();
  InvariantReport report;
  report.basic = basic_invariants(pres);
  report.vars = pres.vars();
  report.matrix = pres.entry_strings();
  if (pres.hypersurface()) report.hypersurface = pres.hypersurface()->to_string(pres.vars());
  report.characteristic = pres.field().characteristic();
  report.seed = options.seed;

  std::string last_problem;
  for (unsigned attempt = 0; attempt < options.chain_attempts; ++attempt) {
    try {
      const SuperficialChain chain =
          superficial_sequence(pres, r, Flavor::phi, derive_seed(options.seed, attempt), options.retries);
      std::vector<LevelReport> levels(r + 1, LevelReport{pres, {}, 0, {}, {}, {}, {}, {}, {}});

      const Presentation& bottom = chain.levels[r];
      const unsigned e = bottom.det().ord().value();
      levels[r] = compute_level(LevelInput{&bottom, nullptr, nullptr, {}, false},
                                std::max(options.truncation, e + 2), options);
      for (std::size_t c = r; c-- > 0;) {
        LevelInput in{&chain.levels[c], &chain.forms[c], &levels[c + 1].h, {}, false};
        if (c == 0) in.reduction_forms = chain.lifted();
        in.ratliff_rush = options.ratliff_rush && c <= 1;
        const unsigned dim_c = static_cast<unsigned>(r - c);
        levels[c] = compute_level(in, std::max(options.truncation, levels[c + 1].h.degree() + dim_c + 4), options);
        if (!(levels[c].h == levels[c].h_direct)) {
          throw Inconsistent("h by recursion " + levels[c].h.to_string() + " differs from direct fit " +
                             levels[c].h_direct.to_string() + " at level " + std::to_string(c));
        }
      }

      DepthReport depth;
      for (std::size_t c = 0; c < r; ++c) depth.trace.push_back(levels[c].h.h == levels[c + 1].h.h);
      std::size_t leading = 0;
      while (leading < depth.trace.size() && depth.trace[leading]) ++leading;
      for (std::size_t c = leading; c < depth.trace.size(); ++c) {
        if (depth.trace[c]) throw Inconsistent("Sally descent flags are not monotone");
      }
      depth.depth = static_cast<unsigned>(leading);
      depth.cohen_macaulay = leading == r;

      if (r >= 1 && levels[0].rr_lengths) {
        const auto dec = rr_decomposition(levels[0].h, levels[0].graded, *levels[0].rr_lengths);
        if (!dec) throw Inconsistent("Ratliff-Rush decomposition unavailable");
        depth.rr_lengths = *levels[0].rr_lengths;
        depth.r_poly = dec->r_poly;
        depth.h_tilde = dec->h_tilde;
        depth.rr_residual = dec->residual;
        if (depth.r_poly.empty() != (depth.depth >= 1)) {
          throw Inconsistent("Ratliff-Rush criterion disagrees with Sally descent");
        }
      }

      report.h = levels[0].h;
      report.h_direct = levels[0].h_direct;
      report.e = report.h.hilbert_coefficients(static_cast<unsigned>(r + 1));
      // In finite length J = 0, so the reduction number is the last nonzero degree.
      report.reduction_number = r == 0 ? std::optional<unsigned>(report.h.degree()) : levels[0].reduction_number;
      report.depth = depth;
      report.flags = predicates(report.h);
      report.dvr = dvr_decomposition(bottom, levels[r].truncation);
      report.chain_attempt = attempt;
      for (const auto& f : chain.forms) report.forms.push_back(f.coefficients);
      report.lifted_forms = chain.lifted();
      for (const auto& level : levels) report.truncations.push_back(level.truncation);
      report.truncation_confirmed = true;
      report.levels = std::move(levels);
      return report;
    } catch (const Inconsistent& e) {
      last_problem = e.what();
    }
  }
  throw ExhaustionError("no consistent superficial chain after " + std::to_string(options.chain_attempts) +
                        " attempts: " + last_problem);
}

DepthReport depth_G(const Presentation& pres, std::uint64_t seed) {
  AnalysisOptions options;
  options.seed = seed;
  return analyze(pres, options).depth;
}

IntSeries rr_decomposition_check(const Presentation& pres, std::uint64_t seed) {
  if (pres.module_dim() == 0) throw InputError("the Ratliff-Rush identity needs dim M >= 1");
  return depth_G(pres, seed).rr_residual;
}

IntSeries ratliff_rush_table(const Presentation& pres, unsigned n_max, const AnalysisOptions& options) {
  if (n_max == 0) return {};
  std::optional<IntSeries> previous;
  for (unsigned n = std::max(options.truncation, n_max + 4); n <= options.max_truncation + 2; n += 2) {
    std::optional<IntSeries> current;
    try {
      current = ratliff_rush_lengths(TruncatedModule::build(pres, n, options.max_ambient), n_max);
    } catch (const ExhaustionError&) {
      if (n + 2 > options.max_truncation + 2) throw;
    }
    if (current && previous && *current == *previous) return *current;
    previous = current;
  }
  throw ExhaustionError("Ratliff-Rush lengths did not stabilize by truncation " +
                        std::to_string(options.max_truncation + 2));
}

}  // namespace mcmgr
