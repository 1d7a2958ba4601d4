#pragma once

// Dense exact linear algebra over F_p: row echelon forms, kernels, and
// subspace algebra. Pivots are always the first nonzero entry, so every
// result is reproducible bit for bit.

#include <cstddef>
#include <span>
#include <vector>

#include "mcmgr/field.hpp"

namespace mcmgr {

/// Row-major dense matrix of field elements.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Mat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Elem* row(std::size_t r) { return data_.data() + r * cols_; }
  const Elem* row(std::size_t r) const { return data_.data() + r * cols_; }
  std::span<const Elem> row_span(std::size_t r) const { return {row(r), cols_}; }

  void append_row(std::span<const Elem> values);
  void swap_rows(std::size_t a, std::size_t b);
  void truncate_rows(std::size_t rows);

  /// Rows [r0, r1) x columns [c0, c1).
  Mat block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;
  /// Stacks b below this matrix; column counts must match.
  Mat stacked(const Mat& below) const;

  bool operator==(const Mat&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

Mat transpose(const Mat& m);
Mat multiply(const Mat& a, const Mat& b, const PrimeField& f);
std::vector<Elem> apply(const Mat& a, std::span<const Elem> v, const PrimeField& f);
/// a + c * b, entrywise.
Mat add_scaled(const Mat& a, const Mat& b, Elem c, const PrimeField& f);

struct EchelonForm {
  Mat reduced;                      ///< rank rows, reduced row echelon form
  std::vector<std::size_t> pivots;  ///< strictly increasing pivot columns
};

/// Gauss-Jordan elimination with first-nonzero pivoting.
EchelonForm rref(Mat m, const PrimeField& f);
std::size_t rank(Mat m, const PrimeField& f);

/// A linear subspace of F_p^n kept as the reduced row echelon basis, so equal
/// subspaces have identical representations.
class Subspace {
 public:
  Subspace(const PrimeField& f, std::size_t ambient_dim);

  /// Row space of the given vectors.
  static Subspace span(const PrimeField& f, const Mat& vectors);
  static Subspace whole(const PrimeField& f, std::size_t ambient_dim);
  /// Span of the standard basis vectors e_first, ..., e_{last-1}.
  static Subspace coordinate(const PrimeField& f, std::size_t ambient_dim, std::size_t first,
                             std::size_t last);

  const PrimeField& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v reduced against the basis; zero exactly when v lies in the subspace.
  std::vector<Elem> reduce(std::span<const Elem> v) const;
  bool contains(std::span<const Elem> v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of v in the quotient ambient/this, indexed by non-pivot columns.
  std::vector<Elem> quotient_coordinates(std::span<const Elem> v) const;

  bool operator==(const Subspace& other) const {
    return ambient_ == other.ambient_ && basis_ == other.basis_;
  }

 private:
  Subspace(const PrimeField& f, std::size_t ambient_dim, EchelonForm form);

  PrimeField field_;
  std::size_t ambient_;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}.
Subspace kernel(const Mat& m, const PrimeField& f);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// dim a - dim b; requires b contained in a.
std::size_t quotient_dim(const Subspace& a, const Subspace& b);
/// map(s) where map is (target dim) x (source dim).
Subspace image(const Mat& map, const Subspace& s);
/// {v : map v in target}.
Subspace preimage(const Mat& map, const Subspace& target);

}  // namespace mcmgr
