#pragma once

// A square presentation matrix phi over k[x_0, ..., x_d]; the module is
// M = coker(phi), the columns of phi being the relations.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mcmgr/field.hpp"
#include "mcmgr/poly.hpp"

namespace mcmgr {

class Presentation {
 public:
  /// Validates and throws InputError when an invariant fails: phi square and
  /// nonempty, det(phi) != 0, every nonzero entry of order >= 1, and a given
  /// hypersurface g nonzero of order >= 2 dividing det(phi).
  Presentation(const PrimeField& field, std::vector<std::string> vars, PolyMatrix phi,
               std::optional<Poly> hypersurface = std::nullopt);

  /// Same checks, reported instead of thrown.
  static std::optional<std::string> check(const PrimeField& field, const std::vector<std::string>& vars,
                                          const PolyMatrix& phi, const std::optional<Poly>& hypersurface);

  const PrimeField& field() const { return field_; }
  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  /// mu(M): the size of phi.
  std::size_t size() const { return phi_.size(); }
  const PolyMatrix& matrix() const { return phi_; }
  const Poly& entry(std::size_t row, std::size_t col) const { return phi_[row][col]; }
  const std::optional<Poly>& hypersurface() const { return hypersurface_; }
  const Poly& det() const { return det_; }

  /// Krull dimension of M: nvars - 1.
  std::size_t module_dim() const { return vars_.size() - 1; }
  /// Least order over the nonzero entries of phi, i.e. i(M).
  unsigned entry_order() const;
  /// Least order of column j.
  Order column_order(std::size_t col) const;

  /// Copy with a different hypersurface (validated).
  Presentation with_hypersurface(std::optional<Poly> g) const;

  /// Instance-file rendering of the matrix entries.
  std::vector<std::vector<std::string>> entry_strings() const;

 private:
  PrimeField field_;
  std::vector<std::string> vars_;
  PolyMatrix phi_;
  std::optional<Poly> hypersurface_;
  Poly det_;
};

}  // namespace mcmgr
