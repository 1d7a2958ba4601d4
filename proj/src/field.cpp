#include "mcmgr/field.hpp"

#include "mcmgr/error.hpp"

namespace mcmgr {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t characteristic) {
  if (characteristic >= (std::uint64_t{1} << 31)) {
    throw InputError("characteristic " + std::to_string(characteristic) + " must be below 2^31");
  }
  if (!is_prime(characteristic)) {
    throw InputError("characteristic " + std::to_string(characteristic) + " is not prime");
  }
  p_ = static_cast<std::uint32_t>(characteristic);
}

Elem PrimeField::pow(Elem a, std::uint64_t e) const {
  Elem result = 1 % p_;
  Elem base = a;
  while (e != 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw Error("division by zero in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

Elem PrimeField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

std::int64_t PrimeField::to_signed(Elem a) const {
  return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
}

}  // namespace mcmgr
