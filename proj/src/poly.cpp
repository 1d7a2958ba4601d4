#include "mcmgr/poly.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "mcmgr/error.hpp"

namespace mcmgr {

unsigned total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool DegLexLess::operator()(const Exponent& a, const Exponent& b) const {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

unsigned Order::value() const {
  if (!value_) throw Error("order of the zero polynomial is infinite");
  return *value_;
}

std::strong_ordering Order::operator<=>(const Order& other) const {
  if (!value_ || !other.value_) return other.value_.has_value() <=> value_.has_value();
  return *value_ <=> *other.value_;
}

Poly Poly::constant(const PrimeField& f, std::size_t nvars, Elem c) {
  Poly p(f, nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

Poly Poly::variable(const PrimeField& f, std::size_t nvars, std::size_t index) {
  Exponent e(nvars, 0);
  e.at(index) = 1;
  return monomial(f, std::move(e), 1);
}

Poly Poly::monomial(const PrimeField& f, Exponent exp, Elem c) {
  Poly p(f, exp.size());
  p.add_term(exp, c);
  return p;
}

Poly Poly::linear_form(const PrimeField& f, const std::vector<Elem>& coeffs) {
  Poly p(f, coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponent e(coeffs.size(), 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

Elem Poly::coeff(const Exponent& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void Poly::add_term(const Exponent& e, Elem c) {
  if (e.size() != nvars_) throw Error("exponent length does not match the number of variables");
  c %= field_.characteristic();
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

Order Poly::ord() const {
  if (terms_.empty()) return Order::infinite();
  return Order(total_degree(terms_.begin()->first));
}

unsigned Poly::degree() const { return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first); }

Poly Poly::initial_form() const {
  Poly out(field_, nvars_);
  if (terms_.empty()) return out;
  const unsigned low = total_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_) {
    if (total_degree(e) != low) break;
    out.terms_.emplace_hint(out.terms_.end(), e, c);
  }
  return out;
}

Poly Poly::truncated(unsigned n) const {
  Poly out(field_, nvars_);
  for (const auto& [e, c] : terms_) {
    if (total_degree(e) >= n) break;
    out.terms_.emplace_hint(out.terms_.end(), e, c);
  }
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [e, c] : out.terms_) c = field_.neg(c);
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.nvars_ != nvars_) throw Error("polynomials over different variable counts");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.nvars_ != nvars_) throw Error("polynomials over different variable counts");
  for (const auto& [e, c] : o.terms_) add_term(e, field_.neg(c));
  return *this;
}

Poly Poly::scaled(Elem c) const {
  Poly out(field_, nvars_);
  c %= field_.characteristic();
  if (c == 0) return out;
  out.terms_ = terms_;
  for (auto& [e, v] : out.terms_) v = field_.mul(v, c);
  return out;
}

namespace {

Poly multiply_bounded(const Poly& a, const Poly& b, std::optional<unsigned> bound) {
  if (a.nvars() != b.nvars()) throw Error("polynomials over different variable counts");
  const PrimeField& f = a.field();
  Poly out(f, a.nvars());
  Exponent e(a.nvars());
  for (const auto& [ea, ca] : a.terms()) {
    const unsigned da = total_degree(ea);
    if (bound && da >= *bound) break;
    for (const auto& [eb, cb] : b.terms()) {
      if (bound && da + total_degree(eb) >= *bound) break;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      out.add_term(e, f.mul(ca, cb));
    }
  }
  return out;
}

}  // namespace

Poly operator*(const Poly& a, const Poly& b) { return multiply_bounded(a, b, std::nullopt); }

Poly mul_truncated(const Poly& a, const Poly& b, unsigned n) { return multiply_bounded(a, b, n); }

Poly power(const Poly& p, unsigned e) {
  Poly result = Poly::constant(p.field(), p.nvars(), 1);
  Poly base = p;
  while (e != 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

std::string Poly::to_string(const std::vector<std::string>& vars) const {
  if (vars.size() != nvars_) throw Error("variable name count does not match the polynomial");
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::int64_t v = field_.to_signed(c);
    if (first) {
      if (v < 0) out << "-";
    } else {
      out << (v < 0 ? " - " : " + ");
    }
    first = false;
    v = v < 0 ? -v : v;
    const bool is_const = total_degree(e) == 0;
    bool need_star = false;
    if (v != 1 || is_const) {
      out << v;
      need_star = true;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (need_star) out << "*";
      out << vars[i];
      if (e[i] > 1) out << "^" << e[i];
      need_star = true;
    }
  }
  return out.str();
}

Poly linear_substitute(const Poly& p, const Mat& change) {
  const std::size_t n = p.nvars();
  const PrimeField& f = p.field();
  if (change.rows() != n || change.cols() != n) throw Error("linear_substitute: change must be nvars x nvars");
  if (rank(change, f) != n) throw InputError("linear_substitute: change of variables is not invertible");
  std::vector<Poly> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Elem> row(change.row(i), change.row(i) + n);
    images.push_back(Poly::linear_form(f, row));
  }
  // powers[i][k] = images[i]^k, grown on demand.
  std::vector<std::vector<Poly>> powers(n);
  Poly out(f, n);
  for (const auto& [e, c] : p.terms()) {
    Poly term = Poly::constant(f, n, c);
    for (std::size_t i = 0; i < n; ++i) {
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(Poly::constant(f, n, 1));
      while (cache.size() <= e[i]) cache.push_back(cache.back() * images[i]);
      if (e[i] != 0) term = term * cache[e[i]];
    }
    out += term;
  }
  return out;
}

Poly drop_variable(const Poly& p, std::size_t index) {
  if (index >= p.nvars()) throw Error("drop_variable: index out of range");
  Poly out(p.field(), p.nvars() - 1);
  Exponent e(p.nvars() - 1);
  for (const auto& [ep, c] : p.terms()) {
    if (ep[index] != 0) continue;
    for (std::size_t i = 0, j = 0; i < ep.size(); ++i) {
      if (i != index) e[j++] = ep[i];
    }
    out.add_term(e, c);
  }
  return out;
}

bool divides(const Poly& g, const Poly& f) {
  if (g.is_zero()) return f.is_zero();
  if (f.is_zero()) return true;
  // Lex leading terms: the largest exponent vector lexicographically.
  auto lex_leading = [](const Poly& p) {
    auto best = p.terms().begin();
    for (auto it = p.terms().begin(); it != p.terms().end(); ++it) {
      if (it->first > best->first) best = it;
    }
    return *best;
  };
  const auto [ge, gc] = lex_leading(g);
  const Elem ginv = g.field().inv(gc);
  Poly rem = f;
  while (!rem.is_zero()) {
    const auto [re, rc] = lex_leading(rem);
    Exponent q(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) {
      if (re[i] < ge[i]) return false;
      q[i] = static_cast<std::uint16_t>(re[i] - ge[i]);
    }
    rem -= Poly::monomial(g.field(), q, g.field().mul(rc, ginv)) * g;
  }
  return true;
}

Poly determinant(const PolyMatrix& m) {
  const std::size_t t = m.size();
  if (t == 0) throw Error("determinant of an empty matrix");
  for (const auto& row : m) {
    if (row.size() != t) throw InputError("presentation matrix is not square");
  }
  if (t > 20) throw InputError("matrix too large for determinant expansion");
  const PrimeField& f = m[0][0].field();
  const std::size_t nv = m[0][0].nvars();
  // minors[mask]: determinant of rows 0..popcount(mask)-1 restricted to the columns in mask.
  std::vector<std::optional<Poly>> minors(std::size_t{1} << t);
  minors[0] = Poly::constant(f, nv, 1);
  for (std::size_t mask = 1; mask < minors.size(); ++mask) {
    const std::size_t r = static_cast<std::size_t>(std::popcount(mask)) - 1;
    Poly acc(f, nv);
    for (std::size_t c = 0; c < t; ++c) {
      if (!(mask & (std::size_t{1} << c))) continue;
      const Poly& entry = m[r][c];
      const Poly& minor = *minors[mask & ~(std::size_t{1} << c)];
      if (!entry.is_zero() && !minor.is_zero()) {
        // Columns of mask above c count the transpositions for this expansion term.
        const std::size_t above = static_cast<std::size_t>(std::popcount(mask >> (c + 1)));
        Poly term = entry * minor;
        acc += (above % 2 == 0) ? term : -term;
      }
    }
    minors[mask] = std::move(acc);
  }
  return *minors.back();
}

}  // namespace mcmgr
