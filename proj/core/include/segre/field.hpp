#pragma once

#include <compare>
#include <cstdint>
#include <random>

#include "segre/errors.hpp"

namespace segre {

inline constexpr std::uint32_t kDefaultCharacteristic = 32749;

/// An element of F_p, always stored as its canonical residue in [0, p-1].
/// Elements carry no reference to their field; arithmetic goes through a
/// PrimeField.
class FieldElement {
 public:
  constexpr FieldElement() = default;

  constexpr std::uint32_t value() const noexcept { return value_; }
  constexpr bool is_zero() const noexcept { return value_ == 0; }

  friend constexpr bool operator==(FieldElement, FieldElement) = default;
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;

 private:
  friend class PrimeField;
  constexpr explicit FieldElement(std::uint32_t v) : value_(v) {}

  std::uint32_t value_ = 0;
};

/// Deterministic random source. std::mt19937_64 is fully specified by the
/// standard, so a seed reproduces the same stream on every platform; we never
/// route it through std::uniform_int_distribution, whose output is not.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound) by rejection sampling. bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

/// The prime field F_p with 2 <= p < 2^31.
class PrimeField {
 public:
  /// Throws ValidationError unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p = kDefaultCharacteristic);

  std::uint32_t characteristic() const noexcept { return p_; }

  FieldElement zero() const noexcept { return FieldElement{0}; }
  FieldElement one() const noexcept { return FieldElement{1}; }

  /// Reduces an arbitrary signed integer to its canonical residue.
  FieldElement from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return FieldElement{static_cast<std::uint32_t>(r)};
  }

  FieldElement add(FieldElement a, FieldElement b) const noexcept {
    std::uint32_t s = a.value_ + b.value_;  // < 2^32 since p < 2^31
    return FieldElement{s >= p_ ? s - p_ : s};
  }
  FieldElement sub(FieldElement a, FieldElement b) const noexcept {
    return FieldElement{a.value_ >= b.value_ ? a.value_ - b.value_ : a.value_ + p_ - b.value_};
  }
  FieldElement neg(FieldElement a) const noexcept { return FieldElement{a.value_ == 0 ? 0 : p_ - a.value_}; }
  FieldElement mul(FieldElement a, FieldElement b) const noexcept {
    return FieldElement{static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value_) * b.value_ % p_)};
  }

  /// Multiplicative inverse; throws DivisionByZeroError for 0.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

  /// Uniform over F_p, or over F_p \ {0} when nonzero is set.
  FieldElement random(RandomSource& rng, bool nonzero = false) const;

  /// Residue as a signed integer in (-p/2, p/2], used for display.
  std::int64_t symmetric(FieldElement a) const noexcept {
    return a.value_ > p_ / 2 ? static_cast<std::int64_t>(a.value_) - p_ : a.value_;
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace segre
