#pragma once

#include <memory>
#include <span>
#include <vector>

#include "segre/limits.hpp"
#include "segre/poly.hpp"

namespace segre {

/// Reduced, monic Groebner basis under the ring's monomial order, sorted by
/// leading monomial descending. Two ideals of the same ring are equal iff
/// their reduced bases are equal element by element.
class GroebnerBasis {
 public:
  /// Trusts that `elements` already form a reduced monic basis in canonical order.
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements)
      : ring_(std::move(ring)), elements_(std::move(elements)) {}

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }

  bool is_zero_ideal() const noexcept { return elements_.empty(); }
  bool is_unit_ideal() const noexcept { return elements_.size() == 1 && elements_[0].is_constant(); }

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return same_ring(a.ring_, b.ring_) && a.elements_ == b.elements_;
  }

 private:
  RingPtr ring_;
  std::vector<Polynomial> elements_;
};

/// A finitely generated ideal. Generators are nonzero; an empty list is the
/// zero ideal. An ideal built from a basis keeps that basis so it is not
/// recomputed.
class Ideal {
 public:
  /// Throws ValidationError for zero generators or generators from another ring.
  Ideal(RingPtr ring, std::vector<Polynomial> generators);
  explicit Ideal(GroebnerBasis basis);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  bool is_homogeneous() const noexcept { return homogeneous_; }
  /// Largest generator degree; 0 for the zero ideal.
  std::uint32_t max_degree() const noexcept;

  /// The cached basis, if this ideal was built from one.
  const GroebnerBasis* known_basis() const noexcept { return basis_.get(); }

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<const GroebnerBasis> basis_;
  bool homogeneous_ = true;
};

/// Full reduction of f by the list G: repeatedly cancels the largest term
/// divisible by some leading monomial, using the first such element of G.
/// The result has no term divisible by any leading monomial of G.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors,
                       const ResourceLimits& limits = {});

/// Buchberger's algorithm with the product and chain criteria (Gebauer-Moeller
/// update) and the normal selection strategy (smallest lcm degree first).
/// Returns the reduced monic basis.
GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> generators,
                         const ResourceLimits& limits = {});

GroebnerBasis groebner_basis(const Ideal& ideal, const ResourceLimits& limits = {});

/// S-polynomial of two nonzero polynomials.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

bool ideal_equals(const Ideal& a, const Ideal& b, const ResourceLimits& limits = {});
bool is_unit_ideal(const Ideal& ideal, const ResourceLimits& limits = {});
/// a is a subset of b.
bool ideal_contains(const Ideal& b, const Ideal& a, const ResourceLimits& limits = {});

/// Exact quotient a / f. Throws InternalError when f does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& f);

/// A intersected with B via t*A + (1-t)*B and elimination of t.
Ideal intersect(const Ideal& a, const Ideal& b, const ResourceLimits& limits = {});

/// J : (f) = { g : g f in J }.
Ideal ideal_quotient(const Ideal& j, const Polynomial& f, const ResourceLimits& limits = {});

/// J : I, the intersection of J : (g) over the generators g of I.
Ideal quotient_by_ideal(const Ideal& j, const Ideal& i, const ResourceLimits& limits = {});

/// J : I^infinity by iterating K <- K : I until the reduced basis stops changing.
Ideal saturate_by_ideal(const Ideal& j, const Ideal& i, const ResourceLimits& limits = {});

/// J : (h)^infinity in one Groebner run: the t-free part of a basis of
/// J + (t*h - 1) under the block order.
Ideal saturate_by_element(const Ideal& j, const Polynomial& h, const ResourceLimits& limits = {});

}  // namespace segre
