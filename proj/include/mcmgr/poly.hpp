#pragma once

// Sparse multivariate polynomials over F_p with order (valuation) queries.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcmgr/field.hpp"
#include "mcmgr/linalg.hpp"

namespace mcmgr {

using Exponent = std::vector<std::uint16_t>;

unsigned total_degree(const Exponent& e);

/// Degree first, then lexicographic on the exponent vector.
struct DegLexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Order of a polynomial at the origin: the least total degree of a term, or
/// +infinity for zero.
class Order {
 public:
  static Order infinite() { return Order(); }
  explicit Order(unsigned value) : value_(value) {}

  bool is_finite() const { return value_.has_value(); }
  unsigned value() const;

  bool operator==(const Order&) const = default;
  std::strong_ordering operator<=>(const Order& other) const;

  std::string to_string() const { return is_finite() ? std::to_string(*value_) : "inf"; }

 private:
  Order() = default;
  std::optional<unsigned> value_;
};

class Poly {
 public:
  using TermMap = std::map<Exponent, Elem, DegLexLess>;

  Poly(const PrimeField& f, std::size_t nvars) : field_(f), nvars_(nvars) {}

  static Poly constant(const PrimeField& f, std::size_t nvars, Elem c);
  static Poly variable(const PrimeField& f, std::size_t nvars, std::size_t index);
  static Poly monomial(const PrimeField& f, Exponent exp, Elem c);
  /// Linear form sum_i coeffs[i] * x_i.
  static Poly linear_form(const PrimeField& f, const std::vector<Elem>& coeffs);

  const PrimeField& field() const { return field_; }
  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Elem coeff(const Exponent& e) const;
  /// Adds c to the coefficient of x^e.
  void add_term(const Exponent& e, Elem c);

  Order ord() const;
  unsigned degree() const;
  /// Lowest-degree homogeneous component (zero for zero).
  Poly initial_form() const;
  /// Terms of total degree < n.
  Poly truncated(unsigned n) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(Elem c) const;

  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  /// Canonical text form: terms by descending degree, symmetric coefficients.
  std::string to_string(const std::vector<std::string>& vars) const;

 private:
  PrimeField field_;
  std::size_t nvars_;
  TermMap terms_;
};

/// a * b with every term of total degree >= n discarded.
Poly mul_truncated(const Poly& a, const Poly& b, unsigned n);
Poly power(const Poly& p, unsigned e);

/// p(change * x): variable x_i becomes sum_j change(i, j) x_j. Throws if the
/// change is singular.
Poly linear_substitute(const Poly& p, const Mat& change);

/// Substitutes 0 for x_index and removes that variable.
Poly drop_variable(const Poly& p, std::size_t index);

/// Exact test for g | f (lex-leading-term division by a single divisor).
bool divides(const Poly& g, const Poly& f);

using PolyMatrix = std::vector<std::vector<Poly>>;

/// Determinant by expansion over column subsets (2^t t products).
Poly determinant(const PolyMatrix& m);

}  // namespace mcmgr
