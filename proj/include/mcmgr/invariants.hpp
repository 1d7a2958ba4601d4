#pragma once

// Headline invariants: h-polynomial data, Hilbert coefficients, the basic
// presentation numbers, reduction numbers, and the one-variable elementary
// divisor decomposition.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcmgr/module_model.hpp"
#include "mcmgr/presentation.hpp"

namespace mcmgr {

using IntSeries = std::vector<std::int64_t>;

/// Drops trailing zero coefficients.
IntSeries strip(IntSeries a);
/// a * (1 - z)^k, keeping every coefficient.
IntSeries times_one_minus_z(IntSeries a, unsigned k);
/// a - b coefficientwise.
IntSeries subtract(IntSeries a, const IntSeries& b);
/// Text form "3 + 3z^2 - z^3"; "0" for the zero polynomial.
std::string series_to_string(const IntSeries& a);

/// Hilbert series data H_M(z) = h(z) / (1 - z)^r.
struct HData {
  IntSeries h;  ///< h_0 .. h_s, trailing zeros stripped
  unsigned r = 0;

  unsigned degree() const { return h.empty() ? 0 : static_cast<unsigned>(h.size() - 1); }
  std::int64_t coeff(std::size_t i) const { return i < h.size() ? h[i] : 0; }
  /// e_i = h^{(i)}(1) / i!, defined for every i >= 0.
  std::int64_t e(unsigned i) const;
  /// e_0 .. e_{count-1}.
  IntSeries hilbert_coefficients(unsigned count) const;
  std::int64_t multiplicity() const { return e(0); }
  /// l(m^n M / m^{n+1} M): the coefficient of z^n in h / (1 - z)^r.
  std::int64_t graded_length(unsigned n) const;
  /// l(M / m^{n+1} M): the coefficient of z^n in h / (1 - z)^{r+1}.
  std::int64_t hilbert_samuel(unsigned n) const;

  std::string to_string() const { return series_to_string(h); }
  /// P_M(X) = sum_i (-1)^i e_i binom(X + r - i, r - i), rendered as text.
  std::string hilbert_polynomial() const;

  bool operator==(const HData&) const = default;
};

/// h from graded lengths: (1 - z)^r * sum_n g_n z^n cut at the known length.
/// Returns nothing unless the top min_trailing_zeros coefficients vanish,
/// which is how the caller knows the truncation was large enough.
std::optional<HData> fit_h_direct(const IntSeries& graded, unsigned r, unsigned min_trailing_zeros = 2);

/// h_M = h_N - (1 - z)^r b, r = dim M.
HData h_from_quotient(const HData& h_quotient, const IntSeries& b, unsigned r);

struct BasicInvariants {
  std::size_t mu = 0;
  unsigned i_m = 0;
  unsigned ord_det = 0;
  std::size_t dim = 0;
  bool operator==(const BasicInvariants&) const = default;
};
BasicInvariants basic_invariants(const Presentation& pres);

struct Predicates {
  bool ulrich = false;
  bool minimal_multiplicity = false;
};
Predicates predicates(const HData& h);

/// Least n with m^{n+1}M = J m^n M; nothing if not reached below N - 1.
std::optional<unsigned> reduction_number(const TruncatedModule& tm, const std::vector<Form>& forms);

/// Elementary divisor valuations of a one-variable presentation:
/// M = sum_i k[[y]] / (y^{a_i}).
struct DvrDecomposition {
  std::vector<unsigned> a;  ///< non-decreasing
  unsigned total() const;
  /// Some summand is k[[y]]/(g) itself, i.e. free over k[[y]]/(g).
  bool has_free_summand(unsigned ord_g) const;
};
/// Valuation-pivot elimination over k[[y]] / (y^N). Throws ExhaustionError
/// when the divisors reach N - 1.
DvrDecomposition dvr_decomposition(const Presentation& pres, unsigned truncation);

}  // namespace mcmgr
