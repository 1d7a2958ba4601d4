#include "mcmgr/presentation.hpp"

#include <algorithm>

#include "mcmgr/error.hpp"

namespace mcmgr {

std::optional<std::string> Presentation::check(const PrimeField& field, const std::vector<std::string>& vars,
                                               const PolyMatrix& phi, const std::optional<Poly>& hypersurface) {
  if (vars.empty()) return "at least one variable is required";
  if (phi.empty()) return "presentation matrix is empty";
  const std::size_t t = phi.size();
  for (const auto& row : phi) {
    if (row.size() != t) return "presentation matrix is not square";
    for (const auto& p : row) {
      if (p.nvars() != vars.size()) return "matrix entry over the wrong number of variables";
      if (!(p.field() == field)) return "matrix entry over a different field";
      if (!p.is_zero() && p.ord() < Order(1)) return "matrix entry is a unit (presentation is not minimal)";
    }
  }
  const Poly det = determinant(phi);
  if (det.is_zero()) return "det(phi) is zero";
  if (hypersurface) {
    const Poly& g = *hypersurface;
    if (g.nvars() != vars.size()) return "hypersurface over the wrong number of variables";
    if (g.is_zero()) return "hypersurface is zero";
    if (g.ord() < Order(2)) return "hypersurface must have order at least 2";
    if (!divides(g, det)) return "hypersurface does not divide det(phi)";
  }
  return std::nullopt;
}

Presentation::Presentation(const PrimeField& field, std::vector<std::string> vars, PolyMatrix phi,
                           std::optional<Poly> hypersurface)
    : field_(field), vars_(std::move(vars)), phi_(std::move(phi)), hypersurface_(std::move(hypersurface)),
      det_(field, vars_.size()) {
  if (auto problem = check(field_, vars_, phi_, hypersurface_)) throw InputError(*problem);
  det_ = determinant(phi_);
}

unsigned Presentation::entry_order() const {
  Order best = Order::infinite();
  for (const auto& row : phi_) {
    for (const auto& p : row) best = std::min(best, p.ord());
  }
  return best.value();
}

Order Presentation::column_order(std::size_t col) const {
  Order best = Order::infinite();
  for (const auto& row : phi_) best = std::min(best, row.at(col).ord());
  return best;
}

Presentation Presentation::with_hypersurface(std::optional<Poly> g) const {
  return Presentation(field_, vars_, phi_, std::move(g));
}

std::vector<std::vector<std::string>> Presentation::entry_strings() const {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : phi_) {
    auto& r = out.emplace_back();
    for (const auto& p : row) r.push_back(p.to_string(vars_));
  }
  return out;
}

}  // namespace mcmgr
