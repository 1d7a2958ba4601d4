#pragma once

#include <cstdint>
#include <string>

namespace mcmgr {

/// Element of a prime field, always stored reduced into [0, p).
using Elem = std::uint32_t;

/// The prime field F_p. Characteristics must be prime and below 2^31 so that
/// a product of two reduced elements fits into 64 bits.
class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultCharacteristic = 32003;

  explicit PrimeField(std::uint64_t characteristic = kDefaultCharacteristic);

  std::uint32_t characteristic() const { return p_; }

  Elem add(Elem a, Elem b) const {
    const Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + (p_ - b); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;

  /// Reduces an arbitrary signed integer.
  Elem from_int(std::int64_t v) const;
  /// Symmetric representative in (-p/2, p/2].
  std::int64_t to_signed(Elem a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace mcmgr
