#pragma once

// Plain-text instance files:
//
//   # comment
//   characteristic: 32003        (optional)
//   variables: x, y
//   matrix:
//     [y^2, 0]
//     [x^2, y]
//   hypersurface: y^3            (optional)
//   truncation: 8                (optional)
//   seed: 42                     (optional)
//   extra-variables: 0..2        (optional; family files only)
//
// Keys may appear in any order, each at most once. Matrix rows follow the
// "matrix:" line, one bracketed comma-separated row per line.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcmgr/presentation.hpp"

namespace mcmgr {

struct Instance {
  Presentation pres;
  std::optional<unsigned> truncation;
  std::optional<std::uint64_t> seed;
  std::optional<std::pair<unsigned, unsigned>> extra_variables;
};

/// Throws ParseError (with line and column) or InputError. A characteristic
/// override replaces the file's value.
Instance parse_instance(std::string_view text, std::optional<std::uint64_t> characteristic = std::nullopt);
Instance load_instance(const std::string& path, std::optional<std::uint64_t> characteristic = std::nullopt);

/// Several instances separated by lines starting with "---" (family files).
std::vector<Instance> parse_instances(std::string_view text,
                                      std::optional<std::uint64_t> characteristic = std::nullopt);
std::vector<Instance> load_instances(const std::string& path,
                                     std::optional<std::uint64_t> characteristic = std::nullopt);

/// Renders an instance so that parse_instance gives it back.
std::string dump_instance(const Presentation& pres, std::optional<unsigned> truncation = std::nullopt,
                          std::optional<std::uint64_t> seed = std::nullopt, const std::string& comment = "");

}  // namespace mcmgr
