#pragma once

// Exact finite model of M = coker(phi) modulo a power of the maximal ideal.
//
// M / m^N M = Q^t / (im phi + n^N Q^t). The k-space on the right is spanned by
// the truncations of x^a * phi_j, since every discarded term lies in n^N Q^t;
// so every length computed here is exact, not an approximation.
//
// Ambient coordinates are pairs (component, monomial of degree < N) ordered
// by degree first. Row reduction of the relations with leftmost pivots picks
// the lowest-degree term of each relation as its pivot, and the non-pivot
// ("standard") coordinates form a basis of V = M / m^N M. In that basis the
// image of m^n M is exactly the span of the standard coordinates of degree
// >= n, so the m-adic filtration is a coordinate filtration of V.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "mcmgr/linalg.hpp"
#include "mcmgr/presentation.hpp"

namespace mcmgr {

/// Coefficients of a linear form sum_i c_i x_i in the presentation's variables.
using Form = std::vector<Elem>;

class TruncatedModule {
 public:
  /// Throws ExhaustionError when the ambient space would exceed max_ambient.
  static TruncatedModule build(const Presentation& pres, unsigned truncation,
                               std::size_t max_ambient = kDefaultMaxAmbient);

  static constexpr std::size_t kDefaultMaxAmbient = 6000;

  const Presentation& presentation() const { return *pres_; }
  const PrimeField& field() const { return pres_->field(); }
  unsigned truncation() const { return truncation_; }
  std::size_t ambient_columns() const { return ambient_columns_; }

  /// dim V = length(M / m^N M).
  std::size_t dim() const { return degrees_.size(); }
  /// length(M / m^n M) for n <= N; also the first basis index of degree >= n.
  std::size_t level_start(unsigned n) const;
  /// H(M, n) = length(M / m^{n+1} M); requires n + 1 <= N.
  std::int64_t hilbert_function(unsigned n) const;
  /// length(m^n M / m^{n+1} M) for n = 0 .. N-1.
  std::vector<std::int64_t> graded_lengths() const;
  /// Image of m^n M in V.
  Subspace level(unsigned n) const;
  unsigned degree_of(std::size_t basis_index) const { return degrees_.at(basis_index); }

  /// Matrix of multiplication by x_k on V.
  const Mat& variable_action(std::size_t k) const { return actions_.at(k); }
  /// Matrix of multiplication by a linear form on V.
  Mat form_action(const Form& form) const;

  /// Class in V of an element of Q^t (one polynomial per component).
  std::vector<Elem> normal_form(const std::vector<Poly>& element) const;

 private:
  std::shared_ptr<const Presentation> pres_;
  unsigned truncation_ = 0;
  std::size_t ambient_columns_ = 0;
  std::vector<unsigned> degrees_;
  std::vector<std::size_t> level_start_;
  std::vector<Mat> actions_;
  // Normal-form data: for each ambient column, either a basis index
  // (standard) or a row of pivot_nf_ (pivot).
  std::vector<std::int64_t> column_role_;
  Mat pivot_nf_;
  struct MonomialTable;
  std::shared_ptr<const MonomialTable> monomials_;
};

/// b_n(x, M) = length((m^{n+1} M : x) / m^n M) for n = 0 .. N-1.
std::vector<std::int64_t> b_series(const TruncatedModule& tm, const Form& form);
std::vector<std::int64_t> b_series(const Presentation& pres, const Form& form, unsigned truncation);

/// rho_n = length(m^{n+1} M / x m^n M) for n = 0 .. N-2. Exact once the
/// reduction number of (x) is at most N-2.
std::vector<std::int64_t> rho_series(const TruncatedModule& tm, const Form& form);
std::vector<std::int64_t> rho_series(const Presentation& pres, const Form& form, unsigned truncation);

/// Image of J m^n M in V for J generated by the forms.
Subspace ideal_times_level(const TruncatedModule& tm, const std::vector<Form>& forms, unsigned n);

/// v_n = length(m^{n+1} M / J m^n M) for n = 0 .. N-2. A zero entry is exact
/// (Nakayama), so the first zero is the reduction number of J.
std::vector<std::int64_t> reduction_defects(const TruncatedModule& tm, const std::vector<Form>& forms);

struct DeltaReport {
  std::vector<std::int64_t> vv;  ///< length((m^{n+1}M cap JM) / J m^n M), n = 0 .. N-2
  std::int64_t delta = 0;        ///< sum of vv
};
DeltaReport delta_and_vv(const TruncatedModule& tm, const std::vector<Form>& forms);
DeltaReport delta_and_vv(const Presentation& pres, const std::vector<Form>& forms, unsigned truncation);

/// (target : J) for a subspace target of V containing the image of m^K M;
/// computed in V / m^K M, which is exact.
Subspace colon(const TruncatedModule& tm, const Subspace& target, const std::vector<Form>& forms, unsigned K);

/// Result of going modulo a linear form.
struct QuotientStep {
  Form form;                 ///< in the source presentation's variables
  std::size_t eliminated;    ///< source variable index removed
  Presentation result;
};

/// Coordinates in which the form becomes x_k (k = last variable with a
/// nonzero coefficient), then x_k = 0. Throws InputError if the form is zero,
/// the reduced matrix is singular, or the hypersurface maps to zero.
QuotientStep quotient_by_form(const Presentation& pres, const Form& form);

/// Image of a form of the source ring in the quotient ring's variables.
Form reduce_form(const QuotientStep& step, const Form& form);

/// Lifts a form of the quotient ring to the source ring (zero coefficient on
/// the eliminated variable).
Form lift_form(const QuotientStep& step, const Form& form);

/// Substitution x_k -> -(sum_{i != k} c_i x_i) / c_k applied to a polynomial,
/// with x_k removed.
Poly reduce_modulo_form(const Poly& p, const Form& form, std::size_t eliminated);

}  // namespace mcmgr
