#pragma once

// Ratliff-Rush side of the depth computation: lengths of the closures
// m~^n M = union_i (m^{n+i} M : m^i) inside the truncated model, the
// polynomial r_M(z), and the Ratliff-Rush h-polynomial.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "mcmgr/invariants.hpp"
#include "mcmgr/module_model.hpp"

namespace mcmgr {

struct DepthReport {
  unsigned depth = 0;
  bool cohen_macaulay = false;
  /// trace[c]: h(M_c) == h(M_{c+1}) along the superficial chain.
  std::vector<bool> trace;
  /// l(m~^n M / m^n M) for n = 1 .. size.
  IntSeries rr_lengths;
  /// r_M(z) = sum_n l(m~^{n+1} M / m^{n+1} M) z^n.
  IntSeries r_poly;
  std::optional<HData> h_tilde;
  /// h - h~ - (1 - z)^{r+1} r_M; must be zero.
  IntSeries rr_residual;
};

/// Colon chains (m^L M : m^i) built on demand, one chain per level L.
class RatliffRush {
 public:
  explicit RatliffRush(const TruncatedModule& tm);

  /// dim (m^{n+i} M : m^i) - dim m^n M, for n + i <= N.
  std::int64_t colon_length(unsigned n, unsigned i);
  /// l(m~^n M / m^n M): iterate i until two consecutive values agree and two
  /// more confirm. Nothing when the truncation runs out first.
  std::optional<std::int64_t> length(unsigned n);

 private:
  const Subspace& chain(unsigned level, unsigned steps);

  const TruncatedModule& tm_;
  std::vector<Form> variables_;
  std::map<unsigned, std::vector<Subspace>> chains_;
};

/// Lengths for n = 1 .. n_max; throws ExhaustionError if some n fails to
/// stabilize within the truncation.
IntSeries ratliff_rush_lengths(const TruncatedModule& tm, unsigned n_max);

struct RrDecomposition {
  HData h_tilde;
  IntSeries r_poly;
  IntSeries residual;  ///< h - h~ - (1 - z)^{r+1} r_M
};

/// From graded lengths g_n of M (n < graded.size()) and the closure lengths
/// rr[n-1] = l(m~^n M / m^n M). Nothing unless the closure lengths end in two
/// zeros and the Ratliff-Rush graded lengths give a polynomial h~.
std::optional<RrDecomposition> rr_decomposition(const HData& h, const IntSeries& graded, const IntSeries& rr);

}  // namespace mcmgr
