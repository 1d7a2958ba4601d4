#pragma once

// Full invariant computation for one presentation.
//
// A phi-superficial chain M = M_0 -> M_1 -> ... -> M_r (dim 0) is chosen top
// down. Truncated models are then built bottom up: the h-polynomial of M_c is
// obtained from h(M_{c+1}) and the b-series of the form (recursion), and
// independently by fitting the graded lengths of M_c (direct). Every level is
// rebuilt at truncation N + 2 and all derived numbers must agree.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcmgr/depth.hpp"
#include "mcmgr/invariants.hpp"
#include "mcmgr/superficial.hpp"

namespace mcmgr {

struct AnalysisOptions {
  std::uint64_t seed = 1;
  unsigned truncation = 0;  ///< minimum truncation; 0 picks one automatically
  unsigned max_truncation = 24;
  unsigned retries = 25;
  unsigned chain_attempts = 4;  ///< fresh chains tried when consistency checks fail
  bool ratliff_rush = true;
  std::size_t max_ambient = TruncatedModule::kDefaultMaxAmbient;
};

struct LevelReport {
  Presentation pres;
  std::optional<VerifiedForm> form;  ///< form taking this level to the next
  unsigned truncation = 0;
  IntSeries graded;                  ///< l(m^n M_c / m^{n+1} M_c), n < truncation
  IntSeries b;                       ///< b-series of the form, n < truncation
  HData h_direct;
  HData h;                           ///< by recursion from the level below
  std::optional<unsigned> reduction_number;
  std::optional<IntSeries> rr_lengths;
};

struct InvariantReport {
  BasicInvariants basic;
  std::vector<std::string> vars;
  std::vector<std::vector<std::string>> matrix;
  std::optional<std::string> hypersurface;
  std::uint32_t characteristic = 0;

  HData h;
  HData h_direct;
  IntSeries e;  ///< e_0 .. e_r
  std::optional<unsigned> reduction_number;
  DepthReport depth;
  Predicates flags;
  std::optional<DvrDecomposition> dvr;  ///< of the dimension-zero reduction

  std::uint64_t seed = 0;
  unsigned chain_attempt = 0;
  std::vector<Form> forms;         ///< in the variables of each level
  std::vector<Form> lifted_forms;  ///< in the input variables
  std::vector<unsigned> truncations;
  bool truncation_confirmed = false;

  std::vector<LevelReport> levels;  ///< levels[c] describes M_c; not serialized
};

/// Throws ExhaustionError when truncation or retries run out.
InvariantReport analyze(const Presentation& pres, const AnalysisOptions& options = {});

/// Depth G(M) via Sally descent, with the Ratliff-Rush witness.
DepthReport depth_G(const Presentation& pres, std::uint64_t seed);

/// Checks h = h~ + (1 - z)^{r+1} r_M; returns the residual (zero when it holds).
IntSeries rr_decomposition_check(const Presentation& pres, std::uint64_t seed);

/// l(m~^n M / m^n M) for n = 1 .. n_max, confirmed at two consecutive
/// truncations starting from max(options.truncation, n_max + 4).
IntSeries ratliff_rush_table(const Presentation& pres, unsigned n_max, const AnalysisOptions& options = {});

}  // namespace mcmgr
