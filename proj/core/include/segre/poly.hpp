#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "segre/field.hpp"
#include "segre/limits.hpp"

namespace segre {

inline constexpr std::size_t kMaxVariables = 32;
inline constexpr std::uint32_t kMaxExponent = (1u << 15) - 1;

/// Dense exponent vector with a cached total degree. Storage is inline so
/// monomials are cheap to copy; the number of variables is carried along.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars);
  Monomial(std::initializer_list<std::uint32_t> exponents);

  std::size_t size() const noexcept { return size_; }
  std::uint32_t degree() const noexcept { return degree_; }
  std::uint32_t operator[](std::size_t i) const noexcept { return exps_[i]; }

  /// Throws ResourceLimitError when e exceeds kMaxExponent.
  void set(std::size_t i, std::uint32_t e);

  bool is_one() const noexcept { return degree_ == 0; }
  bool divides(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept;

  /// Bit i set iff variable i occurs; a cheap divisibility pre-filter.
  std::uint32_t support_mask() const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept;
  /// Lexicographic on exponent vectors. A container order, not a monomial order.
  friend bool lex_less(const Monomial& a, const Monomial& b) noexcept;

 private:
  std::array<std::uint16_t, kMaxVariables> exps_{};
  std::uint32_t degree_ = 0;
  std::uint16_t size_ = 0;
};

bool lex_less(const Monomial& a, const Monomial& b) noexcept;
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

/// grevlex, or the block elimination order that compares the exponent of one
/// auxiliary variable first and breaks ties by grevlex on the remaining ones.
class MonomialOrder {
 public:
  enum class Kind { grevlex, block };

  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex, 0); }
  static MonomialOrder block(std::size_t auxiliary) { return MonomialOrder(Kind::block, auxiliary); }

  Kind kind() const noexcept { return kind_; }
  std::size_t auxiliary() const noexcept { return aux_; }

  /// Throws ValidationError if a and b have different lengths.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind k, std::size_t aux) : kind_(k), aux_(aux) {}

  Kind kind_;
  std::size_t aux_;
};

class PolynomialRing;
using RingPtr = std::shared_ptr<const PolynomialRing>;

/// F_p[x_0..x_k], optionally extended by one auxiliary variable that is
/// eliminated first.
class PolynomialRing {
 public:
  /// Variable names must be distinct identifiers; at most kMaxVariables.
  PolynomialRing(std::vector<std::string> names, PrimeField field);

  static RingPtr make(std::vector<std::string> names, PrimeField field = PrimeField{}) {
    return std::make_shared<const PolynomialRing>(std::move(names), field);
  }

  /// Names x0..x{count-1}.
  static RingPtr standard(std::size_t count, PrimeField field = PrimeField{});

  std::size_t num_vars() const noexcept { return names_.size(); }
  /// Variables other than the auxiliary one.
  std::size_t num_base_vars() const noexcept { return has_auxiliary() ? names_.size() - 1 : names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const PrimeField& field() const noexcept { return field_; }
  const MonomialOrder& order() const noexcept { return order_; }
  bool has_auxiliary() const noexcept { return order_.kind() == MonomialOrder::Kind::block; }
  /// Index of the auxiliary variable; only meaningful when has_auxiliary().
  std::size_t auxiliary_index() const noexcept { return order_.auxiliary(); }

  /// This ring plus one trailing auxiliary variable under the block order.
  RingPtr with_auxiliary() const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const { return order_.compare(a, b); }

  /// Index of a variable name, or nullopt.
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const PolynomialRing&, const PolynomialRing&) = default;

 private:
  PolynomialRing(std::vector<std::string> names, PrimeField field, MonomialOrder order);

  std::vector<std::string> names_;
  PrimeField field_;
  MonomialOrder order_;
};

/// Same ring object or structurally identical rings.
bool same_ring(const RingPtr& a, const RingPtr& b) noexcept;

/// All monomials of total degree d in the non-auxiliary variables, in
/// descending ring order. Throws ResourceLimitError above limits.max_monomials.
std::vector<Monomial> monomials_of_degree(const PolynomialRing& ring, std::uint32_t d, bool exclude_auxiliary = true,
                                          const ResourceLimits& limits = {});

/// Number of monomials of degree d in n variables, saturating at SIZE_MAX.
std::size_t count_monomials(std::size_t n, std::uint32_t d) noexcept;

struct Term {
  FieldElement coeff;
  Monomial mono;

  friend bool operator==(const Term&, const Term&) = default;
};

struct DegreeInfo {
  std::optional<std::uint32_t> degree;  // nullopt encodes the degree of 0 (minus infinity)
  bool homogeneous = true;
};

/// Sparse polynomial: nonzero terms strictly decreasing in the ring order.
/// The zero polynomial has no terms.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  /// Sorts, merges like monomials and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  /// Trusts that terms are already canonical.
  static Polynomial from_canonical_terms(RingPtr ring, std::vector<Term> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }
  static Polynomial constant(RingPtr ring, FieldElement c);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, FieldElement c, const Monomial& m);

  const RingPtr& ring() const noexcept { return ring_; }
  const PrimeField& field() const noexcept { return ring_->field(); }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  /// Precondition: nonzero.
  const Term& leading_term() const noexcept { return terms_.front(); }
  const Monomial& leading_monomial() const noexcept { return terms_.front().mono; }
  FieldElement leading_coefficient() const noexcept { return terms_.front().coeff; }

  DegreeInfo degree_info() const noexcept;
  bool is_homogeneous() const noexcept { return degree_info().homogeneous; }
  /// Total degree; precondition: nonzero.
  std::uint32_t degree() const noexcept { return *degree_info().degree; }

  /// Whether any term involves variable i.
  bool involves(std::size_t i) const noexcept;

  Polynomial operator-() const;
  Polynomial scaled(FieldElement c) const;
  Polynomial times_term(FieldElement c, const Monomial& m) const;
  /// Divides by the leading coefficient; zero stays zero.
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);

  /// f - c*m*g in one merge pass.
  static Polynomial sub_scaled(const Polynomial& f, FieldElement c, const Monomial& m, const Polynomial& g);

  friend bool operator==(const Polynomial& f, const Polynomial& g);

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Image of f in ring `to`, which must have the same base variables with or
/// without a trailing auxiliary variable. Dropping the auxiliary variable
/// requires that f does not involve it.
Polynomial change_ring(const Polynomial& f, const RingPtr& to);

/// Canonical text form, e.g. "3*x0^2*x1 - x2^3". Coefficients print in the
/// symmetric range (-p/2, p/2].
std::string to_string(const Polynomial& f);
std::string to_string(const Monomial& m, const PolynomialRing& ring);

}  // namespace segre
