// Ideal quotients, intersections and saturations over F_p[x].
#include <algorithm>
#include <optional>

#include "segre/errors.hpp"
#include "segre/groebner.hpp"

namespace segre {

namespace {

// t-free elements of a basis computed in ring.with_auxiliary(), mapped back
// to `base`. With the auxiliary variable eliminated first these form the
// reduced basis of the elimination ideal, already in descending order.
GroebnerBasis eliminate_auxiliary(const GroebnerBasis& extended, const RingPtr& base) {
  const std::size_t aux = extended.ring()->auxiliary_index();
  std::vector<Polynomial> kept;
  for (const Polynomial& g : extended.elements()) {
    if (!g.involves(aux)) kept.push_back(change_ring(g, base));
  }
  return GroebnerBasis(base, std::move(kept));
}

Ideal unit_ideal(const RingPtr& ring) {
  return Ideal(GroebnerBasis(ring, {Polynomial::constant(ring, ring->field().one())}));
}

}  // namespace

Polynomial divide_exact(const Polynomial& a, const Polynomial& f) {
  if (f.is_zero()) throw DivisionByZeroError();
  if (!same_ring(a.ring(), f.ring())) throw RingMismatchError();
  const PrimeField& F = a.field();
  const FieldElement inv_lc = F.inv(f.leading_coefficient());
  std::vector<Term> quotient;
  Polynomial r = a;
  while (!r.is_zero()) {
    if (!f.leading_monomial().divides(r.leading_monomial())) {
      throw InternalError("exact division failed: " + to_string(f) + " does not divide " + to_string(a));
    }
    const FieldElement c = F.mul(r.leading_coefficient(), inv_lc);
    const Monomial m = r.leading_monomial() / f.leading_monomial();
    quotient.push_back({c, m});
    r = Polynomial::sub_scaled(r, c, m, f);
  }
  return Polynomial::from_canonical_terms(a.ring(), std::move(quotient));
}

Ideal intersect(const Ideal& a, const Ideal& b, const ResourceLimits& limits) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatchError();
  const RingPtr& base = a.ring();
  if (a.generators().empty() || b.generators().empty()) return Ideal(base, {});
  if (is_unit_ideal(a, limits)) return b;
  if (is_unit_ideal(b, limits)) return a;

  const RingPtr ext = base->with_auxiliary();
  const Polynomial t = Polynomial::variable(ext, ext->auxiliary_index());
  const Polynomial one_minus_t = Polynomial::constant(ext, ext->field().one()) - t;
  std::vector<Polynomial> gens;
  for (const Polynomial& g : a.generators()) gens.push_back(t * change_ring(g, ext));
  for (const Polynomial& g : b.generators()) gens.push_back(one_minus_t * change_ring(g, ext));
  return Ideal(eliminate_auxiliary(buchberger(ext, gens, limits), base));
}

Ideal ideal_quotient(const Ideal& j, const Polynomial& f, const ResourceLimits& limits) {
  if (f.is_zero()) throw ValidationError("ideal quotient by the zero polynomial");
  if (!same_ring(j.ring(), f.ring())) throw RingMismatchError();
  const RingPtr& ring = j.ring();
  if (f.is_constant()) return Ideal(groebner_basis(j, limits));
  const GroebnerBasis gj = groebner_basis(j, limits);
  if (gj.contains(f)) return unit_ideal(ring);

  const Ideal meet = intersect(Ideal(gj), Ideal(ring, {f}), limits);
  std::vector<Polynomial> quotients;
  quotients.reserve(meet.generators().size());
  for (const Polynomial& g : meet.generators()) quotients.push_back(divide_exact(g, f));
  return Ideal(buchberger(ring, quotients, limits));
}

Ideal quotient_by_ideal(const Ideal& j, const Ideal& i, const ResourceLimits& limits) {
  if (!same_ring(j.ring(), i.ring())) throw RingMismatchError();
  const RingPtr& ring = j.ring();
  const GroebnerBasis gi = groebner_basis(i, limits);
  if (gi.is_zero_ideal()) return unit_ideal(ring);
  if (gi.is_unit_ideal()) return Ideal(groebner_basis(j, limits));

  const Ideal jb(groebner_basis(j, limits));
  std::optional<Ideal> result;
  for (const Polynomial& g : i.generators()) {
    Ideal q = ideal_quotient(jb, g, limits);
    if (is_unit_ideal(q, limits)) continue;
    result = result ? intersect(*result, q, limits) : std::move(q);
  }
  return result ? *result : unit_ideal(ring);
}

Ideal saturate_by_ideal(const Ideal& j, const Ideal& i, const ResourceLimits& limits) {
  Ideal current(groebner_basis(j, limits));
  for (std::size_t step = 0; step < limits.max_saturation_steps; ++step) {
    Ideal next = quotient_by_ideal(current, i, limits);
    if (groebner_basis(next, limits) == groebner_basis(current, limits)) return next;
    current = std::move(next);
  }
  throw ResourceLimitError("saturation did not stabilize within " + std::to_string(limits.max_saturation_steps) +
                           " quotient steps");
}

Ideal saturate_by_element(const Ideal& j, const Polynomial& h, const ResourceLimits& limits) {
  if (h.is_zero()) throw ValidationError("saturation by the zero polynomial");
  if (!same_ring(j.ring(), h.ring())) throw RingMismatchError();
  const RingPtr& base = j.ring();
  if (h.is_constant()) return Ideal(groebner_basis(j, limits));

  const RingPtr ext = base->with_auxiliary();
  const Polynomial t = Polynomial::variable(ext, ext->auxiliary_index());
  std::vector<Polynomial> gens;
  gens.reserve(j.generators().size() + 1);
  for (const Polynomial& g : j.generators()) gens.push_back(change_ring(g, ext));
  gens.push_back(t * change_ring(h, ext) - Polynomial::constant(ext, ext->field().one()));
  return Ideal(eliminate_auxiliary(buchberger(ext, gens, limits), base));
}

}  // namespace segre
