#include "mcmgr/depth.hpp"

#include "mcmgr/error.hpp"

namespace mcmgr {

RatliffRush::RatliffRush(const TruncatedModule& tm) : tm_(tm) {
  const std::size_t nv = tm.presentation().nvars();
  for (std::size_t k = 0; k < nv; ++k) {
    Form f(nv, 0);
    f[k] = 1;
    variables_.push_back(std::move(f));
  }
}

const Subspace& RatliffRush::chain(unsigned level, unsigned steps) {
  auto& c = chains_[level];
  if (c.empty()) c.push_back(tm_.level(level));
  while (c.size() <= steps) c.push_back(colon(tm_, c.back(), variables_, level));
  return c[steps];
}

std::int64_t RatliffRush::colon_length(unsigned n, unsigned i) {
  if (n + i > tm_.truncation()) throw ExhaustionError("colon level beyond truncation");
  const auto& c = chain(n + i, i);
  return static_cast<std::int64_t>(c.dim()) - static_cast<std::int64_t>(tm_.dim() - tm_.level_start(n));
}

std::optional<std::int64_t> RatliffRush::length(unsigned n) {
  std::vector<std::int64_t> values;
  for (unsigned i = 0; n + i <= tm_.truncation(); ++i) {
    values.push_back(colon_length(n, i));
    const std::size_t k = values.size();
    if (k >= 4 && values[k - 1] == values[k - 2] && values[k - 2] == values[k - 3] &&
        values[k - 3] == values[k - 4]) {
      return values.back();
    }
  }
  return std::nullopt;
}

IntSeries ratliff_rush_lengths(const TruncatedModule& tm, unsigned n_max) {
  RatliffRush rr(tm);
  IntSeries out;
  for (unsigned n = 1; n <= n_max; ++n) {
    auto v = rr.length(n);
    if (!v) {
      throw ExhaustionError("Ratliff-Rush closure at level " + std::to_string(n) +
                            " does not stabilize below truncation " + std::to_string(tm.truncation()));
    }
    out.push_back(*v);
  }
  return out;
}

std::optional<RrDecomposition> rr_decomposition(const HData& h, const IntSeries& graded, const IntSeries& rr) {
  if (rr.size() < 2 || rr[rr.size() - 1] != 0 || rr[rr.size() - 2] != 0) return std::nullopt;
  auto closure = [&](std::size_t n) -> std::int64_t { return n == 0 || n > rr.size() ? 0 : rr[n - 1]; };
  // Closure lengths past the table are zero: the table ends in verified zeros.
  IntSeries tilde_graded;
  for (std::size_t n = 0; n < graded.size(); ++n) tilde_graded.push_back(graded[n] - closure(n + 1) + closure(n));
  auto h_tilde = fit_h_direct(tilde_graded, h.r);
  if (!h_tilde) return std::nullopt;
  RrDecomposition out;
  out.h_tilde = *h_tilde;
  IntSeries r_poly;
  for (std::size_t n = 0; n < rr.size(); ++n) r_poly.push_back(closure(n + 1));
  out.r_poly = strip(r_poly);
  out.residual = strip(subtract(subtract(h.h, h_tilde->h), times_one_minus_z(out.r_poly, h.r + 1)));
  return out;
}

}  // namespace mcmgr
