#include "mcmgr/module_model.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "mcmgr/error.hpp"

namespace mcmgr {

// Monomials of degree < N in nv variables, grouped by degree.
struct TruncatedModule::MonomialTable {
  std::size_t nvars = 0;
  unsigned bound = 0;
  std::vector<Exponent> monomials;
  std::vector<std::size_t> offset;  // offset[d] = number of monomials of degree < d; size bound + 1
  std::unordered_map<std::uint64_t, std::size_t> index;

  static std::uint64_t key(const Exponent& e) {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < e.size(); ++i) k |= static_cast<std::uint64_t>(e[i]) << (6 * i);
    return k;
  }

  MonomialTable(std::size_t nv, unsigned n) : nvars(nv), bound(n) {
    if (nv > 10) throw InputError("at most 10 variables are supported");
    if (n > 60) throw InputError("truncation degree too large");
    Exponent e(nv, 0);
    for (unsigned d = 0; d < n; ++d) {
      offset.push_back(monomials.size());
      enumerate(e, 0, d);
    }
    offset.push_back(monomials.size());
    for (std::size_t i = 0; i < monomials.size(); ++i) index.emplace(key(monomials[i]), i);
  }

  void enumerate(Exponent& e, std::size_t var, unsigned remaining) {
    if (var + 1 == nvars) {
      e[var] = static_cast<std::uint16_t>(remaining);
      monomials.push_back(e);
      return;
    }
    for (unsigned k = remaining + 1; k-- > 0;) {
      e[var] = static_cast<std::uint16_t>(k);
      enumerate(e, var + 1, remaining - k);
    }
    e[var] = 0;
  }

  std::size_t count(unsigned d) const { return offset[d + 1] - offset[d]; }

  std::size_t lookup(const Exponent& e) const { return index.at(key(e)); }
};

TruncatedModule TruncatedModule::build(const Presentation& pres, unsigned truncation, std::size_t max_ambient) {
  if (truncation < 1) throw InputError("truncation degree must be at least 1");
  const std::size_t t = pres.size();
  const std::size_t nv = pres.nvars();
  const PrimeField& f = pres.field();

  auto table = std::make_shared<MonomialTable>(nv, truncation);
  const std::size_t columns = t * table->monomials.size();
  if (columns > max_ambient) {
    throw ExhaustionError("ambient dimension " + std::to_string(columns) + " at truncation " +
                          std::to_string(truncation) + " exceeds the budget of " + std::to_string(max_ambient));
  }

  // Column of (component j, monomial index m): degree blocks, then component, then monomial.
  auto column_of = [&](std::size_t j, std::size_t m, unsigned d) {
    return t * table->offset[d] + j * table->count(d) + (m - table->offset[d]);
  };

  Mat rel(0, columns);
  std::vector<Elem> row(columns);
  Exponent sum(nv);
  for (std::size_t j = 0; j < t; ++j) {
    const Order ord = pres.column_order(j);
    if (!ord.is_finite() || ord.value() >= truncation) continue;
    const std::size_t multipliers = table->offset[truncation - ord.value()];
    for (std::size_t a = 0; a < multipliers; ++a) {
      const Exponent& alpha = table->monomials[a];
      const unsigned da = total_degree(alpha);
      std::fill(row.begin(), row.end(), 0);
      for (std::size_t i = 0; i < t; ++i) {
        for (const auto& [beta, c] : pres.entry(i, j).terms()) {
          const unsigned d = da + total_degree(beta);
          if (d >= truncation) break;
          for (std::size_t v = 0; v < nv; ++v) sum[v] = static_cast<std::uint16_t>(alpha[v] + beta[v]);
          const std::size_t col = column_of(i, table->lookup(sum), d);
          row[col] = f.add(row[col], c);
        }
      }
      rel.append_row(row);
    }
  }

  EchelonForm form = rref(std::move(rel), f);

  TruncatedModule tm;
  tm.pres_ = std::make_shared<const Presentation>(pres);
  tm.truncation_ = truncation;
  tm.ambient_columns_ = columns;
  tm.monomials_ = table;

  std::vector<bool> is_pivot(columns, false);
  for (std::size_t c : form.pivots) is_pivot[c] = true;
  tm.column_role_.assign(columns, 0);
  std::vector<std::size_t> standard;
  for (unsigned d = 0; d < truncation; ++d) {
    const std::size_t first = t * table->offset[d];
    const std::size_t last = t * table->offset[d + 1];
    for (std::size_t c = first; c < last; ++c) {
      if (is_pivot[c]) continue;
      tm.column_role_[c] = static_cast<std::int64_t>(standard.size());
      standard.push_back(c);
      tm.degrees_.push_back(d);
    }
  }
  const std::size_t dim = standard.size();
  tm.pivot_nf_ = Mat(form.pivots.size(), dim);
  for (std::size_t r = 0; r < form.pivots.size(); ++r) {
    tm.column_role_[form.pivots[r]] = -static_cast<std::int64_t>(r) - 1;
    for (std::size_t b = 0; b < dim; ++b) tm.pivot_nf_(r, b) = f.neg(form.reduced(r, standard[b]));
  }

  tm.level_start_.assign(truncation + 1, dim);
  for (unsigned n = 0; n <= truncation; ++n) {
    tm.level_start_[n] = static_cast<std::size_t>(
        std::lower_bound(tm.degrees_.begin(), tm.degrees_.end(), n) - tm.degrees_.begin());
  }

  // Multiplication by each variable: the standard monomial times x_k, reduced.
  tm.actions_.assign(nv, Mat(dim, dim));
  for (std::size_t b = 0; b < dim; ++b) {
    const unsigned d = tm.degrees_[b];
    if (d + 1 >= truncation) continue;
    const std::size_t c = standard[b];
    const std::size_t within = c - t * table->offset[d];
    const std::size_t j = within / table->count(d);
    const std::size_t m = table->offset[d] + within % table->count(d);
    Exponent e = table->monomials[m];
    for (std::size_t k = 0; k < nv; ++k) {
      ++e[k];
      const std::size_t target = column_of(j, table->lookup(e), d + 1);
      --e[k];
      Mat& x = tm.actions_[k];
      const std::int64_t role = tm.column_role_[target];
      if (role >= 0) {
        x(static_cast<std::size_t>(role), b) = 1;
      } else {
        const std::size_t r = static_cast<std::size_t>(-role - 1);
        for (std::size_t i = 0; i < dim; ++i) x(i, b) = tm.pivot_nf_(r, i);
      }
    }
  }
  return tm;
}

std::size_t TruncatedModule::level_start(unsigned n) const {
  if (n > truncation_) throw ExhaustionError("level " + std::to_string(n) + " exceeds truncation " +
                                             std::to_string(truncation_));
  return level_start_[n];
}

std::int64_t TruncatedModule::hilbert_function(unsigned n) const {
  if (n + 1 > truncation_) {
    throw ExhaustionError("Hilbert function at level " + std::to_string(n) + " needs truncation > " +
                          std::to_string(n));
  }
  return static_cast<std::int64_t>(level_start_[n + 1]);
}

std::vector<std::int64_t> TruncatedModule::graded_lengths() const {
  std::vector<std::int64_t> out;
  for (unsigned n = 0; n < truncation_; ++n) {
    out.push_back(static_cast<std::int64_t>(level_start_[n + 1] - level_start_[n]));
  }
  return out;
}

Subspace TruncatedModule::level(unsigned n) const {
  return Subspace::coordinate(field(), dim(), level_start(n), dim());
}

Mat TruncatedModule::form_action(const Form& form) const {
  if (form.size() != actions_.size()) throw Error("form has the wrong number of coefficients");
  Mat out(dim(), dim());
  for (std::size_t k = 0; k < form.size(); ++k) {
    if (form[k] != 0) out = add_scaled(out, actions_[k], form[k], field());
  }
  return out;
}

std::vector<Elem> TruncatedModule::normal_form(const std::vector<Poly>& element) const {
  const std::size_t t = pres_->size();
  if (element.size() != t) throw Error("element has the wrong number of components");
  const PrimeField& f = field();
  const MonomialTable& table = *monomials_;
  std::vector<Elem> out(dim(), 0);
  for (std::size_t j = 0; j < t; ++j) {
    for (const auto& [e, c] : element[j].terms()) {
      const unsigned d = total_degree(e);
      if (d >= truncation_) break;
      const std::size_t col = t * table.offset[d] + j * table.count(d) + (table.lookup(e) - table.offset[d]);
      const std::int64_t role = column_role_[col];
      if (role >= 0) {
        out[static_cast<std::size_t>(role)] = f.add(out[static_cast<std::size_t>(role)], c);
      } else {
        const std::size_t r = static_cast<std::size_t>(-role - 1);
        for (std::size_t i = 0; i < dim(); ++i) out[i] = f.add(out[i], f.mul(c, pivot_nf_(r, i)));
      }
    }
  }
  return out;
}

std::vector<std::int64_t> b_series(const TruncatedModule& tm, const Form& form) {
  const Mat x = tm.form_action(form);
  std::vector<std::int64_t> out;
  for (unsigned n = 0; n < tm.truncation(); ++n) {
    const std::size_t cols = tm.level_start(n);
    const std::size_t rows = tm.level_start(n + 1);
    const std::size_t r = cols == 0 ? 0 : rank(x.block(0, rows, 0, cols), tm.field());
    out.push_back(static_cast<std::int64_t>(cols - r));
  }
  return out;
}

std::vector<std::int64_t> b_series(const Presentation& pres, const Form& form, unsigned truncation) {
  return b_series(TruncatedModule::build(pres, truncation), form);
}

namespace {

// Rank of the span of {X_i e_b : b >= first} over the given action matrices.
std::size_t image_rank(const std::vector<Mat>& actions_t, std::size_t first, const PrimeField& f) {
  if (actions_t.empty()) return 0;
  const std::size_t dim = actions_t.front().cols();
  Mat rows(0, dim);
  for (const Mat& xt : actions_t) rows = rows.stacked(xt.block(first, xt.rows(), 0, dim));
  return rows.rows() == 0 ? 0 : rank(std::move(rows), f);
}

std::vector<Mat> transposed_actions(const TruncatedModule& tm, const std::vector<Form>& forms) {
  std::vector<Mat> out;
  for (const Form& form : forms) out.push_back(transpose(tm.form_action(form)));
  return out;
}

}  // namespace

std::vector<std::int64_t> rho_series(const TruncatedModule& tm, const Form& form) {
  return reduction_defects(tm, {form});
}

std::vector<std::int64_t> rho_series(const Presentation& pres, const Form& form, unsigned truncation) {
  return rho_series(TruncatedModule::build(pres, truncation), form);
}

Subspace ideal_times_level(const TruncatedModule& tm, const std::vector<Form>& forms, unsigned n) {
  const std::size_t first = tm.level_start(n);
  Mat rows(0, tm.dim());
  for (const Form& form : forms) {
    const Mat xt = transpose(tm.form_action(form));
    rows = rows.stacked(xt.block(first, xt.rows(), 0, tm.dim()));
  }
  return Subspace::span(tm.field(), rows);
}

std::vector<std::int64_t> reduction_defects(const TruncatedModule& tm, const std::vector<Form>& forms) {
  const auto actions_t = transposed_actions(tm, forms);
  std::vector<std::int64_t> out;
  bool reached = false;
  for (unsigned n = 0; n + 1 < tm.truncation(); ++n) {
    if (reached) {
      out.push_back(0);
      continue;
    }
    const std::size_t upper = tm.dim() - tm.level_start(n + 1);
    const std::size_t r = image_rank(actions_t, tm.level_start(n), tm.field());
    out.push_back(static_cast<std::int64_t>(upper - r));
    reached = upper == r;
  }
  return out;
}

DeltaReport delta_and_vv(const TruncatedModule& tm, const std::vector<Form>& forms) {
  DeltaReport report;
  const Subspace jm = ideal_times_level(tm, forms, 0);
  for (unsigned n = 0; n + 1 < tm.truncation(); ++n) {
    const std::size_t start = tm.level_start(n + 1);
    // Pivots at or beyond start count the vectors of JM inside m^{n+1}M.
    const auto& piv = jm.pivots();
    const std::size_t inside = static_cast<std::size_t>(piv.end() - std::lower_bound(piv.begin(), piv.end(), start));
    const std::size_t jmn = ideal_times_level(tm, forms, n).dim();
    const auto vv = static_cast<std::int64_t>(inside) - static_cast<std::int64_t>(jmn);
    report.vv.push_back(vv);
    report.delta += vv;
  }
  return report;
}

DeltaReport delta_and_vv(const Presentation& pres, const std::vector<Form>& forms, unsigned truncation) {
  return delta_and_vv(TruncatedModule::build(pres, truncation), forms);
}

Subspace colon(const TruncatedModule& tm, const Subspace& target, const std::vector<Form>& forms, unsigned K) {
  const PrimeField& f = tm.field();
  const std::size_t dim = tm.dim();
  const std::size_t s = tm.level_start(K);
  // Restrict target to V / m^K M: rows with a pivot beyond s lie in m^K M.
  Mat restricted(0, s);
  for (std::size_t i = 0; i < target.dim(); ++i) {
    if (target.pivots()[i] >= s) break;
    restricted.append_row(std::span<const Elem>(target.basis().row(i), s));
  }
  const Subspace target_k = Subspace::span(f, restricted.rows() == 0 ? Mat(0, s) : restricted);
  Mat constraints(0, s);
  for (const Form& form : forms) {
    const Mat x = tm.form_action(form).block(0, s, 0, s);
    const Mat columns = transpose(x);
    Mat projected_t(0, s - target_k.dim());
    if (s == target_k.dim()) continue;
    for (std::size_t j = 0; j < s; ++j) projected_t.append_row(target_k.quotient_coordinates(columns.row_span(j)));
    constraints = constraints.stacked(transpose(projected_t));
  }
  const Subspace inner = constraints.rows() == 0 ? Subspace::whole(f, s) : kernel(constraints, f);
  Mat vectors(0, dim);
  std::vector<Elem> v(dim);
  for (std::size_t i = 0; i < inner.dim(); ++i) {
    std::fill(v.begin(), v.end(), 0);
    std::copy(inner.basis().row(i), inner.basis().row(i) + s, v.begin());
    vectors.append_row(v);
  }
  for (std::size_t c = s; c < dim; ++c) {
    std::fill(v.begin(), v.end(), 0);
    v[c] = 1;
    vectors.append_row(v);
  }
  return Subspace::span(f, vectors.rows() == 0 ? Mat(0, dim) : vectors);
}

Poly reduce_modulo_form(const Poly& p, const Form& form, std::size_t eliminated) {
  const PrimeField& f = p.field();
  const std::size_t n = p.nvars();
  if (form.size() != n) throw Error("form has the wrong number of coefficients");
  if (form[eliminated] == 0) throw Error("eliminated variable has a zero coefficient");
  // New coordinates u with u_k = form; x_k = (u_k - sum_{i != k} c_i u_i) / c_k.
  Mat change = Mat::identity(n);
  const Elem inv = f.inv(form[eliminated]);
  for (std::size_t i = 0; i < n; ++i) {
    change(eliminated, i) = i == eliminated ? inv : f.neg(f.mul(form[i], inv));
  }
  return drop_variable(linear_substitute(p, change), eliminated);
}

QuotientStep quotient_by_form(const Presentation& pres, const Form& form) {
  const std::size_t n = pres.nvars();
  if (form.size() != n) throw Error("form has the wrong number of coefficients");
  if (n < 2) throw InputError("cannot go modulo a form: the module already has dimension 0");
  std::size_t k = n;
  for (std::size_t i = n; i-- > 0;) {
    if (form[i] % pres.field().characteristic() != 0) {
      k = i;
      break;
    }
  }
  if (k == n) throw InputError("cannot go modulo the zero form");
  PolyMatrix phi;
  for (const auto& row : pres.matrix()) {
    auto& out = phi.emplace_back();
    for (const auto& p : row) out.push_back(reduce_modulo_form(p, form, k));
  }
  std::optional<Poly> g;
  if (pres.hypersurface()) {
    g = reduce_modulo_form(*pres.hypersurface(), form, k);
    if (g->is_zero()) throw InputError("the form divides the hypersurface equation");
  }
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != k) vars.push_back(pres.vars()[i]);
  }
  return QuotientStep{form, k, Presentation(pres.field(), std::move(vars), std::move(phi), std::move(g))};
}

Form reduce_form(const QuotientStep& step, const Form& form) {
  const PrimeField& f = step.result.field();
  const std::size_t k = step.eliminated;
  const Elem ratio = f.mul(form.at(k), f.inv(step.form.at(k)));
  Form out;
  for (std::size_t i = 0; i < form.size(); ++i) {
    if (i != k) out.push_back(f.sub(form[i], f.mul(ratio, step.form[i])));
  }
  return out;
}

Form lift_form(const QuotientStep& step, const Form& form) {
  Form out = form;
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(step.eliminated), 0);
  return out;
}

}  // namespace mcmgr
