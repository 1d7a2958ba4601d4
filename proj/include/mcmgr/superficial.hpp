#pragma once

// Randomized search for superficial elements, verified against the finitely
// many consequences the rest of the engine relies on.
//
// For M = coker(phi) with phi square and injective, a linear form l is
// M-regular exactly when phi stays injective modulo l, and e(M) = ord det(phi),
// so "regular and e(M / lM) = e(M)" is decided by det(phi mod l) != 0 with
// unchanged order. The b-series tail is checked too when a truncation is given.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcmgr/module_model.hpp"
#include "mcmgr/presentation.hpp"

namespace mcmgr {

enum class Flavor { module, phi };

std::string to_string(Flavor flavor);

struct VerifiedForm {
  Form coefficients;
  Flavor flavor = Flavor::phi;
  unsigned trial = 0;               ///< zero-based index of the accepted random draw
  std::vector<std::string> checks;  ///< names of the checks that ran and passed
  std::optional<unsigned> truncation;
};

/// Runs the checks for one candidate; returns the first failure, if any.
std::optional<std::string> verify_form(const Presentation& pres, const Form& form, Flavor flavor,
                                       std::optional<unsigned> truncation = std::nullopt,
                                       std::vector<std::string>* passed = nullptr);

/// Throws InputError when dim M = 0 and ExhaustionError when every trial fails.
VerifiedForm find_superficial(const Presentation& pres, std::uint64_t seed, unsigned retries = 25,
                              std::optional<unsigned> truncation = std::nullopt);
VerifiedForm find_phi_superficial(const Presentation& pres, std::uint64_t seed, unsigned retries = 25,
                                  std::optional<unsigned> truncation = std::nullopt);

struct SuperficialChain {
  std::vector<VerifiedForm> forms;   ///< forms[c] lives in the variables of levels[c]
  std::vector<QuotientStep> steps;   ///< steps[c] takes levels[c] to levels[c + 1]
  std::vector<Presentation> levels;  ///< levels[0] is the input
  /// forms lifted to the input variables.
  std::vector<Form> lifted() const;
};

SuperficialChain superficial_sequence(const Presentation& pres, std::size_t length, Flavor flavor,
                                      std::uint64_t seed, unsigned retries = 25);

/// Deterministic per-purpose seed derivation (splitmix64 of seed and salt).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace mcmgr
