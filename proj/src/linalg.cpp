#include "mcmgr/linalg.hpp"

#include <algorithm>
#include <string>

#include "mcmgr/error.hpp"
#include "mcmgr/kernels.hpp"

namespace mcmgr {

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void Mat::append_row(std::span<const Elem> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw Error("append_row: expected " + std::to_string(cols_) + " entries");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void Mat::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(row(a), row(a) + cols_, row(b));
}

void Mat::truncate_rows(std::size_t rows) {
  rows_ = std::min(rows_, rows);
  data_.resize(rows_ * cols_);
}

Mat Mat::block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
  Mat out(r1 - r0, c1 - c0);
  for (std::size_t r = r0; r < r1; ++r) std::copy(row(r) + c0, row(r) + c1, out.row(r - r0));
  return out;
}

Mat Mat::stacked(const Mat& below) const {
  if (rows_ == 0) return below;
  if (below.rows_ == 0) return *this;
  if (below.cols_ != cols_) throw Error("stacked: column mismatch");
  Mat out = *this;
  out.data_.insert(out.data_.end(), below.data_.begin(), below.data_.end());
  out.rows_ += below.rows_;
  return out;
}

Mat transpose(const Mat& m) {
  Mat t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  }
  return t;
}

Mat multiply(const Mat& a, const Mat& b, const PrimeField& f) {
  if (a.cols() != b.rows()) throw Error("multiply: dimension mismatch");
  const auto& k = kernels::active_kernels();
  const Mat bt = transpose(b);
  Mat out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      out(r, c) = k.dot(a.row(r), bt.row(c), a.cols(), f.characteristic());
    }
  }
  return out;
}

std::vector<Elem> apply(const Mat& a, std::span<const Elem> v, const PrimeField& f) {
  if (a.cols() != v.size()) throw Error("apply: dimension mismatch");
  const auto& k = kernels::active_kernels();
  std::vector<Elem> out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) out[r] = k.dot(a.row(r), v.data(), v.size(), f.characteristic());
  return out;
}

Mat add_scaled(const Mat& a, const Mat& b, Elem c, const PrimeField& f) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("add_scaled: dimension mismatch");
  const auto& k = kernels::active_kernels();
  Mat out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) k.axpy(out.row(r), b.row(r), c, a.cols(), f.characteristic());
  return out;
}

EchelonForm rref(Mat m, const PrimeField& f) {
  const auto& k = kernels::active_kernels();
  const std::uint32_t p = f.characteristic();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t found = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (m(r, col) != 0) {
        found = r;
        break;
      }
    }
    if (found == rows) continue;
    m.swap_rows(found, rank);
    Elem* prow = m.row(rank);
    if (prow[col] != 1) k.scale(prow + col, f.inv(prow[col]), cols - col, p);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const Elem c = m(r, col);
      if (c != 0) k.axpy(m.row(r) + col, prow + col, f.neg(c), cols - col, p);
    }
    pivots.push_back(col);
    ++rank;
  }
  m.truncate_rows(rank);
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(Mat m, const PrimeField& f) { return rref(std::move(m), f).pivots.size(); }

Subspace::Subspace(const PrimeField& f, std::size_t ambient_dim)
    : field_(f), ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace::Subspace(const PrimeField& f, std::size_t ambient_dim, EchelonForm form)
    : field_(f), ambient_(ambient_dim), basis_(std::move(form.reduced)), pivots_(std::move(form.pivots)) {
  if (basis_.rows() == 0) basis_ = Mat(0, ambient_dim);
}

Subspace Subspace::span(const PrimeField& f, const Mat& vectors) {
  return Subspace(f, vectors.cols(), rref(vectors, f));
}

Subspace Subspace::whole(const PrimeField& f, std::size_t ambient_dim) {
  return coordinate(f, ambient_dim, 0, ambient_dim);
}

Subspace Subspace::coordinate(const PrimeField& f, std::size_t ambient_dim, std::size_t first,
                              std::size_t last) {
  EchelonForm form{Mat(last - first, ambient_dim), {}};
  for (std::size_t i = first; i < last; ++i) {
    form.reduced(i - first, i) = 1;
    form.pivots.push_back(i);
  }
  return Subspace(f, ambient_dim, std::move(form));
}

std::vector<Elem> Subspace::reduce(std::span<const Elem> v) const {
  if (v.size() != ambient_) throw Error("Subspace::reduce: ambient mismatch");
  const auto& k = kernels::active_kernels();
  std::vector<Elem> out(v.begin(), v.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const std::size_t col = pivots_[i];
    const Elem c = out[col];
    if (c != 0) k.axpy(out.data() + col, basis_.row(i) + col, field_.neg(c), ambient_ - col, field_.characteristic());
  }
  return out;
}

bool Subspace::contains(std::span<const Elem> v) const {
  const auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Elem e) { return e == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw Error("Subspace::contains: ambient mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_.row_span(i))) return false;
  }
  return true;
}

std::vector<Elem> Subspace::quotient_coordinates(std::span<const Elem> v) const {
  const auto r = reduce(v);
  std::vector<Elem> out;
  out.reserve(ambient_ - dim());
  std::size_t next = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (next < pivots_.size() && pivots_[next] == c) {
      ++next;
      continue;
    }
    out.push_back(r[c]);
  }
  return out;
}

Subspace kernel(const Mat& m, const PrimeField& f) {
  const std::size_t n = m.cols();
  const EchelonForm form = rref(m, f);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : form.pivots) is_pivot[c] = true;
  Mat vectors(0, n);
  std::vector<Elem> v(n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < form.pivots.size(); ++i) v[form.pivots[i]] = f.neg(form.reduced(i, free));
    vectors.append_row(v);
  }
  return Subspace::span(f, vectors);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error("sum: ambient mismatch");
  return Subspace::span(a.field(), a.basis().stacked(b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error("intersect: ambient mismatch");
  const PrimeField& f = a.field();
  if (a.dim() == 0 || b.dim() == 0) return Subspace(f, a.ambient_dim());
  // Combinations of a's basis whose residue modulo b vanishes.
  Mat residues(0, a.ambient_dim());
  for (std::size_t i = 0; i < a.dim(); ++i) residues.append_row(b.reduce(a.basis().row_span(i)));
  const Subspace coeffs = kernel(transpose(residues), f);
  if (coeffs.dim() == 0) return Subspace(f, a.ambient_dim());
  return Subspace::span(f, multiply(coeffs.basis(), a.basis(), f));
}

std::size_t quotient_dim(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw Error("quotient_dim: ambient mismatch");
  if (!a.contains(b)) throw Error("quotient_dim: subspace is not contained in the ambient subspace");
  return a.dim() - b.dim();
}

Subspace image(const Mat& map, const Subspace& s) {
  if (map.cols() != s.ambient_dim()) throw Error("image: dimension mismatch");
  if (s.dim() == 0) return Subspace(s.field(), map.rows());
  return Subspace::span(s.field(), multiply(s.basis(), transpose(map), s.field()));
}

Subspace preimage(const Mat& map, const Subspace& target) {
  if (map.rows() != target.ambient_dim()) throw Error("preimage: dimension mismatch");
  const PrimeField& f = target.field();
  const std::size_t source = map.cols();
  const std::size_t quotient = target.ambient_dim() - target.dim();
  if (quotient == 0) return Subspace::whole(f, source);
  // Column j of the projected map is the quotient image of map(e_j).
  const Mat columns = transpose(map);
  Mat projected_t(0, quotient);
  for (std::size_t j = 0; j < source; ++j) projected_t.append_row(target.quotient_coordinates(columns.row_span(j)));
  return kernel(transpose(projected_t), f);
}

}  // namespace mcmgr
