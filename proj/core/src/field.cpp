#include "segre/field.hpp"

#include <limits>
#include <string>

namespace segre {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t RandomSource::below(std::uint64_t bound) {
  // Largest multiple of bound that fits; draws at or above it are rejected.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    std::uint64_t x = next();
    if (x < limit) return x % bound;
  }
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31)) throw ValidationError("characteristic " + std::to_string(p) + " is not below 2^31");
  if (!is_prime(p)) throw ValidationError("characteristic " + std::to_string(p) + " is not prime");
}

FieldElement PrimeField::inv(FieldElement a) const {
  if (a.value_ == 0) throw DivisionByZeroError();
  // Extended Euclid on (a, p).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a.value_;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return from_int(t);
}

FieldElement PrimeField::random(RandomSource& rng, bool nonzero) const {
  if (nonzero) return FieldElement{static_cast<std::uint32_t>(1 + rng.below(p_ - 1))};
  return FieldElement{static_cast<std::uint32_t>(rng.below(p_))};
}

}  // namespace segre
