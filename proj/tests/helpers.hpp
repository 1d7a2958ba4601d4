#pragma once

#include <string>
#include <vector>

#include "mcmgr/parse.hpp"
#include "mcmgr/presentation.hpp"

namespace testutil {

inline mcmgr::PolyMatrix matrix(const std::vector<std::vector<std::string>>& rows,
                                const std::vector<std::string>& vars, const mcmgr::PrimeField& f) {
  mcmgr::PolyMatrix out;
  for (const auto& row : rows) {
    auto& r = out.emplace_back();
    for (const auto& s : row) r.push_back(mcmgr::parse_poly(s, vars, f));
  }
  return out;
}

inline mcmgr::Presentation pres(const std::vector<std::vector<std::string>>& rows,
                                const std::vector<std::string>& vars = {"x", "y"}, const std::string& g = "",
                                const mcmgr::PrimeField& f = mcmgr::PrimeField()) {
  std::optional<mcmgr::Poly> hyp;
  if (!g.empty()) hyp = mcmgr::parse_poly(g, vars, f);
  return mcmgr::Presentation(f, vars, matrix(rows, vars, f), hyp);
}

}  // namespace testutil
