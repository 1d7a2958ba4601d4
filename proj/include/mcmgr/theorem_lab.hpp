#pragma once

// Theorems as executable predicates over computed invariants, the built-in
// example corpus, and seeded instance families for fuzzing.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcmgr/analysis.hpp"

namespace mcmgr {

enum class Verdict { pass, fail, not_applicable, inconclusive };
std::string to_string(Verdict v);

struct TheoremVerdict {
  std::string theorem_id;
  std::string fingerprint;            ///< matrix text plus seed
  std::optional<bool> hypotheses_met;  ///< nothing: cannot be decided here
  bool conclusion_holds = false;
  Verdict verdict = Verdict::inconclusive;
  std::string detail;
  std::map<std::string, std::string> witness;
};

std::string fingerprint(const Presentation& pres, std::uint64_t seed);

/// g * Q^t lies in the image of phi, decided exactly: det(phi) divides g times
/// every cofactor of phi.
bool annihilates(const Presentation& pres, const Poly& g);

/// An order-3 element annihilating M, when one is known: a recorded
/// hypersurface of order 3 that annihilates M, or det(phi) times a power of
/// the first variable when ord det(phi) <= 3.
std::optional<Poly> order_three_annihilator(const Presentation& pres);

// Theorem ids accepted by run_theorem and the CLI.
inline constexpr const char* kNextToMinimal = "next-to-minimal";  ///< e = mu i + 1
inline constexpr const char* kDetOrder = "det-order";             ///< ord det = mu + 1
inline constexpr const char* kE3Mu2 = "e3mu2";
inline constexpr const char* kE3Mu3 = "e3mu3";
inline constexpr const char* kUniversal = "universal";

// Each check has an overload on a precomputed report (which must belong to
// pres) and one that runs the analysis; analysis exhaustion gives an
// inconclusive verdict.

/// e(M) = mu i + 1 implies depth G(M) >= d - 1, h = mu(1 + .. + z^{i-1}) + z^s
/// with s >= i, and G(M) Cohen-Macaulay iff s = i.
TheoremVerdict check_next_to_minimal(const Presentation& pres, const InvariantReport& report);
TheoremVerdict check_next_to_minimal(const Presentation& pres, std::uint64_t seed);
/// ord det(phi) = mu + 1 implies depth G(M) >= d - 1; with red <= 2, h = mu + z
/// exactly when G(M) is Cohen-Macaulay and h = mu + z^2 exactly when depth = d - 1.
TheoremVerdict check_det_order(const Presentation& pres, const InvariantReport& report);
TheoremVerdict check_det_order(const Presentation& pres, std::uint64_t seed);
/// Over an order-3 hypersurface: mu = 2 gives depth >= d - 1, mu = 3 gives
/// depth >= d - 2; red <= 2 and h lies in the known case list.
TheoremVerdict check_e3(const Presentation& pres, const InvariantReport& report, std::size_t mu);
TheoremVerdict check_e3(const Presentation& pres, std::uint64_t seed, std::size_t mu);

/// Unconditional identities and inequalities; ids are "universal/<name>".
std::vector<TheoremVerdict> universal_property_suite(const Presentation& pres, const InvariantReport& report);
std::vector<TheoremVerdict> universal_property_suite(const Presentation& pres, std::uint64_t seed);

bool known_theorem(const std::string& id);
std::vector<TheoremVerdict> run_theorem(const std::string& id, const Presentation& pres, std::uint64_t seed);

struct FamilySeed {
  Presentation pres;
  unsigned min_extra_vars = 0;  ///< free variables added before mixing
  unsigned max_extra_vars = 0;
};

struct FamilySpec {
  enum class Kind { transforms, random };
  Kind kind = Kind::transforms;
  std::vector<FamilySeed> seeds;  ///< transforms: used round robin
  unsigned row_ops = 3;           ///< elementary operations per side
  bool coordinate_change = true;
  std::size_t max_size = 3;       ///< random: t in 1..max_size
  std::size_t max_vars = 3;       ///< random: nvars in 2..max_vars
};

/// diag(y^{a_1}, .., y^{a_t}) over k[x, y].
Presentation diagonal_presentation(const std::vector<unsigned>& exponents);

/// Deterministic in (spec, count, seed). Unimodular operations have constant
/// determinant and linear coordinate changes are invertible, so every
/// invariant of the seed is preserved.
std::vector<Presentation> generate_family(const FamilySpec& spec, std::size_t count, std::uint64_t seed);

/// One unimodular-and-coordinate transform of pres.
Presentation random_transform(const Presentation& pres, std::uint64_t seed, unsigned extra_vars = 0,
                              unsigned row_ops = 3, bool coordinate_change = true);

struct CorpusEntry {
  std::string name;
  Presentation pres;
  std::optional<IntSeries> h;  ///< expected h-polynomial, when stated
  unsigned depth = 0;
  bool cohen_macaulay = false;
};

/// The worked examples plus two diagonal rows and one transformed row.
std::vector<CorpusEntry> example_corpus();

/// Named seed matrices reused by families and tests.
Presentation example_matrix(const std::string& name);

/// Default family used by `verify` for each theorem id.
FamilySpec default_family(const std::string& theorem_id);

struct VerifySummary {
  std::size_t pass = 0, fail = 0, not_applicable = 0, inconclusive = 0;
  std::vector<std::pair<Presentation, TheoremVerdict>> failures;
};

/// Runs the theorem over count instances of the family; trial i uses seed
/// derive_seed(seed, i). Up to jobs worker threads; the summary does not
/// depend on the job count.
VerifySummary verify_family(const std::string& theorem_id, const FamilySpec& family, std::size_t count,
                            std::uint64_t seed, unsigned jobs = 1);

}  // namespace mcmgr
