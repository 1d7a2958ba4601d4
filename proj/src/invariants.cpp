#include "mcmgr/invariants.hpp"

#include <algorithm>
#include <sstream>

#include "mcmgr/error.hpp"

namespace mcmgr {

namespace {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::int64_t out = 1;
  for (std::int64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace

IntSeries strip(IntSeries a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

IntSeries times_one_minus_z(IntSeries a, unsigned k) {
  for (unsigned step = 0; step < k; ++step) {
    a.push_back(0);
    for (std::size_t i = a.size(); i-- > 1;) a[i] -= a[i - 1];
  }
  return a;
}

IntSeries subtract(IntSeries a, const IntSeries& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return a;
}

std::string series_to_string(const IntSeries& a) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::int64_t c = a[i];
    if (c == 0) continue;
    const std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag;
    out << 'z';
    if (i > 1) out << '^' << i;
  }
  return first ? "0" : out.str();
}

std::int64_t HData::e(unsigned i) const {
  std::int64_t out = 0;
  for (std::size_t k = 0; k < h.size(); ++k) out += binomial(static_cast<std::int64_t>(k), i) * h[k];
  return out;
}

IntSeries HData::hilbert_coefficients(unsigned count) const {
  IntSeries out;
  for (unsigned i = 0; i < count; ++i) out.push_back(e(i));
  return out;
}

std::int64_t HData::graded_length(unsigned n) const {
  // Coefficient of z^j in (1 - z)^{-r} is binom(j + r - 1, r - 1); for r = 0 it is [j = 0].
  std::int64_t out = 0;
  for (std::size_t k = 0; k < h.size() && k <= n; ++k) {
    const auto j = static_cast<std::int64_t>(n - k);
    const std::int64_t c = r == 0 ? (j == 0 ? 1 : 0) : binomial(j + r - 1, r - 1);
    out += h[k] * c;
  }
  return out;
}

std::int64_t HData::hilbert_samuel(unsigned n) const {
  std::int64_t out = 0;
  for (std::size_t k = 0; k < h.size() && k <= n; ++k) {
    out += h[k] * binomial(static_cast<std::int64_t>(n - k) + r, r);
  }
  return out;
}

std::string HData::hilbert_polynomial() const {
  std::ostringstream out;
  bool first = true;
  for (unsigned i = 0; i <= r; ++i) {
    std::int64_t c = e(i);
    if (i % 2 == 1) c = -c;
    if (c == 0) continue;
    const std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const unsigned top = r - i;
    if (top == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << '*';
    out << "binom(X";
    if (top > 0) out << " + " << top;
    out << ", " << top << ')';
  }
  return first ? "0" : out.str();
}

std::optional<HData> fit_h_direct(const IntSeries& graded, unsigned r, unsigned min_trailing_zeros) {
  const std::size_t n = graded.size();
  IntSeries h = times_one_minus_z(graded, r);
  h.resize(n);
  if (n < min_trailing_zeros) return std::nullopt;
  for (std::size_t i = n - min_trailing_zeros; i < n; ++i) {
    if (h[i] != 0) return std::nullopt;
  }
  return HData{strip(std::move(h)), r};
}

HData h_from_quotient(const HData& h_quotient, const IntSeries& b, unsigned r) {
  return HData{strip(subtract(h_quotient.h, times_one_minus_z(b, r))), r};
}

BasicInvariants basic_invariants(const Presentation& pres) {
  return BasicInvariants{pres.size(), pres.entry_order(), pres.det().ord().value(), pres.module_dim()};
}

Predicates predicates(const HData& h) {
  const std::int64_t e0 = h.multiplicity();
  return Predicates{e0 == h.coeff(0), e0 == h.coeff(0) + h.coeff(1)};
}

std::optional<unsigned> reduction_number(const TruncatedModule& tm, const std::vector<Form>& forms) {
  const IntSeries v = reduction_defects(tm, forms);
  for (std::size_t n = 0; n < v.size(); ++n) {
    if (v[n] == 0) return static_cast<unsigned>(n);
  }
  return std::nullopt;
}

unsigned DvrDecomposition::total() const {
  unsigned s = 0;
  for (unsigned v : a) s += v;
  return s;
}

bool DvrDecomposition::has_free_summand(unsigned ord_g) const {
  return std::find(a.begin(), a.end(), ord_g) != a.end();
}

namespace {

using Series = std::vector<Elem>;  // coefficients of y^0 .. y^{N-1}

unsigned series_ord(const Series& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != 0) return static_cast<unsigned>(i);
  }
  return static_cast<unsigned>(s.size());
}

Series series_mul(const Series& a, const Series& b, const PrimeField& f) {
  Series out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  }
  return out;
}

Series series_inverse(const Series& u, const PrimeField& f) {
  Series out(u.size(), 0);
  const Elem c = f.inv(u[0]);
  out[0] = c;
  for (std::size_t n = 1; n < u.size(); ++n) {
    Elem acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc = f.add(acc, f.mul(u[k], out[n - k]));
    out[n] = f.neg(f.mul(acc, c));
  }
  return out;
}

// s / y^a, padded with zeros.
Series shift_down(const Series& s, unsigned a) {
  Series out(s.size(), 0);
  for (std::size_t i = a; i < s.size(); ++i) out[i - a] = s[i];
  return out;
}

}  // namespace

DvrDecomposition dvr_decomposition(const Presentation& pres, unsigned truncation) {
  if (pres.nvars() != 1) throw InputError("elementary divisors need a one-variable presentation");
  const PrimeField& f = pres.field();
  const std::size_t t = pres.size();
  const unsigned n = truncation;
  std::vector<std::vector<Series>> m(t, std::vector<Series>(t, Series(n, 0)));
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      for (const auto& [e, c] : pres.entry(i, j).terms()) {
        if (e[0] < n) m[i][j][e[0]] = c;
      }
    }
  }
  DvrDecomposition out;
  unsigned total = 0;
  for (std::size_t k = 0; k < t; ++k) {
    std::size_t pr = k, pc = k;
    unsigned best = n;
    for (std::size_t i = k; i < t; ++i) {
      for (std::size_t j = k; j < t; ++j) {
        const unsigned o = series_ord(m[i][j]);
        if (o < best) {
          best = o;
          pr = i;
          pc = j;
        }
      }
    }
    total += best;
    if (best >= n || total + 1 >= n) {
      throw ExhaustionError("elementary divisors reach the truncation " + std::to_string(n));
    }
    std::swap(m[k], m[pr]);
    for (auto& row : m) std::swap(row[k], row[pc]);
    const Series inv_unit = series_inverse(shift_down(m[k][k], best), f);
    for (std::size_t i = k + 1; i < t; ++i) {
      const Series q = series_mul(shift_down(m[i][k], best), inv_unit, f);
      for (std::size_t j = k; j < t; ++j) {
        const Series p = series_mul(q, m[k][j], f);
        for (std::size_t s = 0; s < n; ++s) m[i][j][s] = f.sub(m[i][j][s], p[s]);
      }
    }
    for (std::size_t j = k + 1; j < t; ++j) {
      const Series q = series_mul(shift_down(m[k][j], best), inv_unit, f);
      for (std::size_t i = k; i < t; ++i) {
        const Series p = series_mul(q, m[i][k], f);
        for (std::size_t s = 0; s < n; ++s) m[i][j][s] = f.sub(m[i][j][s], p[s]);
      }
    }
    out.a.push_back(best);
  }
  std::sort(out.a.begin(), out.a.end());
  return out;
}

}  // namespace mcmgr
