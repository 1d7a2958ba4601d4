#include "mcmgr/superficial.hpp"

#include <random>

#include "mcmgr/error.hpp"

namespace mcmgr {

std::string to_string(Flavor flavor) { return flavor == Flavor::phi ? "phi" : "module"; }

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::optional<std::string> verify_form(const Presentation& pres, const Form& form, Flavor flavor,
                                       std::optional<unsigned> truncation, std::vector<std::string>* passed) {
  bool nonzero = false;
  for (Elem c : form) nonzero = nonzero || c != 0;
  if (!nonzero) return "zero form";
  if (passed) passed->push_back("nonzero");

  std::optional<QuotientStep> step;
  try {
    step.emplace(quotient_by_form(pres, form));
  } catch (const InputError& e) {
    return std::string("not regular: ") + e.what();
  }
  if (passed) passed->push_back("regular");

  const Presentation& q = step->result;
  if (q.det().ord() != pres.det().ord()) return "multiplicity drops";
  if (passed) passed->push_back("multiplicity");

  if (flavor == Flavor::phi) {
    for (std::size_t i = 0; i < pres.size(); ++i) {
      for (std::size_t j = 0; j < pres.size(); ++j) {
        if (pres.entry(i, j).ord() != q.entry(i, j).ord()) {
          return "order of entry (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ") changes";
        }
      }
    }
    if (pres.hypersurface() && pres.hypersurface()->ord() != q.hypersurface()->ord()) {
      return "order of the hypersurface changes";
    }
    if (passed) passed->push_back("orders");
  }

  if (truncation) {
    const std::vector<std::int64_t> b = b_series(pres, form, *truncation);
    if (b.size() < 2 || b[b.size() - 1] != 0 || b[b.size() - 2] != 0) return "b-series has no zero tail";
    if (passed) passed->push_back("b-tail");
  }
  return std::nullopt;
}

namespace {

VerifiedForm search(const Presentation& pres, std::uint64_t seed, unsigned retries,
                    std::optional<unsigned> truncation, Flavor flavor) {
  if (pres.nvars() < 2) throw InputError("a dimension-zero module has no superficial elements");
  const std::uint32_t p = pres.field().characteristic();
  std::string reasons;
  for (unsigned trial = 0; trial < retries; ++trial) {
    std::mt19937_64 rng(derive_seed(seed, trial));
    Form form(pres.nvars());
    for (auto& c : form) c = static_cast<Elem>(rng() % p);
    std::vector<std::string> passed;
    auto failure = verify_form(pres, form, flavor, truncation, &passed);
    if (!failure) return VerifiedForm{form, flavor, trial, passed, truncation};
    if (!reasons.empty()) reasons += "; ";
    reasons += *failure;
  }
  throw ExhaustionError("no " + to_string(flavor) + "-superficial form after " + std::to_string(retries) +
                        " trials (" + reasons + ")");
}

}  // namespace

VerifiedForm find_superficial(const Presentation& pres, std::uint64_t seed, unsigned retries,
                              std::optional<unsigned> truncation) {
  return search(pres, seed, retries, truncation, Flavor::module);
}

VerifiedForm find_phi_superficial(const Presentation& pres, std::uint64_t seed, unsigned retries,
                                  std::optional<unsigned> truncation) {
  return search(pres, seed, retries, truncation, Flavor::phi);
}

std::vector<Form> SuperficialChain::lifted() const {
  std::vector<Form> out;
  for (std::size_t c = 0; c < forms.size(); ++c) {
    Form f = forms[c].coefficients;
    for (std::size_t k = c; k-- > 0;) f = lift_form(steps[k], f);
    out.push_back(std::move(f));
  }
  return out;
}

SuperficialChain superficial_sequence(const Presentation& pres, std::size_t length, Flavor flavor,
                                      std::uint64_t seed, unsigned retries) {
  if (length > pres.module_dim()) throw InputError("superficial sequence longer than the dimension");
  SuperficialChain chain;
  chain.levels.push_back(pres);
  for (std::size_t c = 0; c < length; ++c) {
    const Presentation& current = chain.levels.back();
    VerifiedForm form = flavor == Flavor::phi ? find_phi_superficial(current, derive_seed(seed, 1000 + c), retries)
                                              : find_superficial(current, derive_seed(seed, 1000 + c), retries);
    QuotientStep step = quotient_by_form(current, form.coefficients);
    chain.levels.push_back(step.result);
    chain.forms.push_back(std::move(form));
    chain.steps.push_back(std::move(step));
  }
  return chain;
}

}  // namespace mcmgr
