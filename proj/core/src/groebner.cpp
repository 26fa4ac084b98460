#include "segre/groebner.hpp"

#include <algorithm>
#include <set>

#include "segre/errors.hpp"

namespace segre {

namespace {

struct Divisor {
  const Polynomial* poly;
  std::uint32_t mask;
};

const Divisor* find_divisor(const std::vector<Divisor>& divisors, const Monomial& m) {
  const std::uint32_t mask = m.support_mask();
  for (const Divisor& d : divisors) {
    if ((d.mask & ~mask) == 0 && d.poly->leading_monomial().divides(m)) return &d;
  }
  return nullptr;
}

// h[pos..] - c*m*g with the leading terms known to cancel.
std::vector<Term> cancel_lead(const PolynomialRing& ring, const std::vector<Term>& h, std::size_t pos,
                              FieldElement c, const Monomial& m, const Polynomial& g) {
  const PrimeField& F = ring.field();
  const FieldElement nc = F.neg(c);
  const auto gt = g.terms();
  std::vector<Term> out;
  out.reserve(h.size() - pos + gt.size());
  std::size_t i = pos + 1, j = 1;
  Term cur;
  bool have = false;
  auto load = [&] {
    have = j < gt.size();
    if (have) {
      cur.coeff = F.mul(gt[j].coeff, nc);
      cur.mono = gt[j].mono * m;
    }
  };
  load();
  while (i < h.size() && have) {
    auto cmp = ring.compare(h[i].mono, cur.mono);
    if (cmp > 0) {
      out.push_back(h[i++]);
    } else if (cmp < 0) {
      out.push_back(cur);
      ++j;
      load();
    } else {
      FieldElement s = F.add(h[i].coeff, cur.coeff);
      if (!s.is_zero()) out.push_back({s, cur.mono});
      ++i;
      ++j;
      load();
    }
  }
  out.insert(out.end(), h.begin() + static_cast<std::ptrdiff_t>(i), h.end());
  while (have) {
    out.push_back(cur);
    ++j;
    load();
  }
  return out;
}

Polynomial reduce(const Polynomial& f, const std::vector<Divisor>& divisors, const ResourceLimits& limits) {
  const PolynomialRing& ring = *f.ring();
  const PrimeField& F = ring.field();
  std::vector<Term> h(f.terms().begin(), f.terms().end());
  std::size_t pos = 0;
  std::vector<Term> rest;
  while (pos < h.size()) {
    const Term& lead = h[pos];
    const Divisor* d = find_divisor(divisors, lead.mono);
    if (d == nullptr) {
      rest.push_back(lead);
      ++pos;
      continue;
    }
    const Polynomial& g = *d->poly;
    const FieldElement c = F.div(lead.coeff, g.leading_coefficient());
    const Monomial m = lead.mono / g.leading_monomial();
    h = cancel_lead(ring, h, pos, c, m, g);
    pos = 0;
    if (h.size() + rest.size() > limits.max_terms) {
      throw ResourceLimitError("polynomial exceeded " + std::to_string(limits.max_terms) + " terms during reduction");
    }
  }
  return Polynomial::from_canonical_terms(f.ring(), std::move(rest));
}

std::vector<Divisor> make_divisors(std::span<const Polynomial> polys) {
  std::vector<Divisor> out;
  out.reserve(polys.size());
  for (const Polynomial& p : polys) {
    if (!p.is_zero()) out.push_back({&p, p.leading_monomial().support_mask()});
  }
  return out;
}

struct CriticalPair {
  std::size_t i, j;  // i < j, indices into the working list
  Monomial lcm;
};

// Buchberger state with the Gebauer-Moeller installation of new elements.
class BuchbergerRun {
 public:
  BuchbergerRun(const RingPtr& ring, const ResourceLimits& limits)
      : ring_(ring), limits_(limits), pairs_(PairOrder{ring.get()}) {}

  void add_input(const Polynomial& f) {
    Polynomial h = reduce(f, divisors(), limits_);
    if (!h.is_zero()) install(h.monic());
  }

  void run() {
    while (!pairs_.empty() && !unit_) {
      CriticalPair p = *pairs_.begin();
      pairs_.erase(pairs_.begin());
      Polynomial s = s_polynomial(polys_[p.i], polys_[p.j]);
      Polynomial h = reduce(s, divisors(), limits_);
      if (!h.is_zero()) install(h.monic());
    }
  }

  GroebnerBasis finish() {
    if (unit_) return GroebnerBasis(ring_, {Polynomial::constant(ring_, ring_->field().one())});
    std::vector<Polynomial> minimal;
    for (std::size_t idx : active_) minimal.push_back(polys_[idx]);
    // Leading monomials are pairwise non-divisible; tail-reduce each element
    // against the others.
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t a = 0; a < minimal.size(); ++a) {
      std::vector<Divisor> others;
      for (std::size_t b = 0; b < minimal.size(); ++b) {
        if (b != a) others.push_back({&minimal[b], minimal[b].leading_monomial().support_mask()});
      }
      reduced.push_back(reduce(minimal[a], others, limits_).monic());
    }
    const PolynomialRing& r = *ring_;
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& x, const Polynomial& y) {
      return r.compare(x.leading_monomial(), y.leading_monomial()) > 0;
    });
    return GroebnerBasis(ring_, std::move(reduced));
  }

 private:
  struct PairOrder {
    const PolynomialRing* ring;
    bool operator()(const CriticalPair& a, const CriticalPair& b) const {
      if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
      auto c = ring->compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      if (a.j != b.j) return a.j < b.j;
      return a.i < b.i;
    }
  };

  std::vector<Divisor> divisors() const {
    std::vector<Divisor> out;
    out.reserve(active_.size());
    for (std::size_t idx : active_) out.push_back({&polys_[idx], masks_[idx]});
    return out;
  }

  void install(Polynomial h) {
    if (h.is_constant()) {
      unit_ = true;
      return;
    }
    if (polys_.size() >= limits_.max_basis_size) {
      throw ResourceLimitError("Groebner basis exceeded " + std::to_string(limits_.max_basis_size) + " elements");
    }
    const std::size_t hi = polys_.size();
    polys_.push_back(std::move(h));
    masks_.push_back(polys_[hi].leading_monomial().support_mask());
    const Monomial lh = polys_[hi].leading_monomial();

    // Chain criterion among the new pairs (h, g).
    std::vector<std::pair<std::size_t, Monomial>> candidates;
    candidates.reserve(active_.size());
    for (std::size_t g : active_) candidates.emplace_back(g, lcm(lh, polys_[g].leading_monomial()));
    std::vector<std::pair<std::size_t, Monomial>> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const auto& [g, l] = candidates[a];
      bool keep = true;
      if (!lh.coprime(polys_[g].leading_monomial())) {
        for (std::size_t b = a + 1; b < candidates.size() && keep; ++b) {
          if (candidates[b].second.divides(l)) keep = false;
        }
        for (std::size_t b = 0; b < kept.size() && keep; ++b) {
          if (kept[b].second.divides(l)) keep = false;
        }
      }
      if (keep) kept.push_back(candidates[a]);
    }

    // Chain criterion on the old pairs.
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Monomial& l = it->lcm;
      if (lh.divides(l) && !(lcm(polys_[it->i].leading_monomial(), lh) == l) &&
          !(lcm(polys_[it->j].leading_monomial(), lh) == l)) {
        it = pairs_.erase(it);
      } else {
        ++it;
      }
    }

    // Product criterion.
    for (auto& [g, l] : kept) {
      if (!lh.coprime(polys_[g].leading_monomial())) pairs_.insert(CriticalPair{std::min(g, hi), std::max(g, hi), l});
    }
    if (pairs_.size() > limits_.max_pairs) {
      throw ResourceLimitError("critical pair queue exceeded " + std::to_string(limits_.max_pairs) + " pairs");
    }

    std::erase_if(active_, [&](std::size_t g) { return lh.divides(polys_[g].leading_monomial()); });
    active_.push_back(hi);
  }

  RingPtr ring_;
  ResourceLimits limits_;
  std::vector<Polynomial> polys_;
  std::vector<std::uint32_t> masks_;
  std::vector<std::size_t> active_;
  std::set<CriticalPair, PairOrder> pairs_;
  bool unit_ = false;
};

}  // namespace

// ---------------------------------------------------------------------------

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const { return segre::normal_form(f, elements_); }

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)) {
  for (const Polynomial& g : generators_) {
    if (!same_ring(g.ring(), ring_)) throw RingMismatchError();
    if (g.is_zero()) throw ValidationError("ideal generators must be nonzero");
    homogeneous_ = homogeneous_ && g.is_homogeneous();
  }
}

Ideal::Ideal(GroebnerBasis basis) : Ideal(basis.ring(), basis.elements()) {
  basis_ = std::make_shared<const GroebnerBasis>(std::move(basis));
}

std::uint32_t Ideal::max_degree() const noexcept {
  std::uint32_t m = 0;
  for (const Polynomial& g : generators_) m = std::max(m, g.degree());
  return m;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors, const ResourceLimits& limits) {
  for (const Polynomial& g : divisors) {
    if (!same_ring(f.ring(), g.ring())) throw RingMismatchError();
  }
  return reduce(f, make_divisors(divisors), limits);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const PrimeField& F = f.field();
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  // (l/lm f)/lc f * f - (l/lm g)/lc g * g
  Polynomial a = f.times_term(F.inv(f.leading_coefficient()), l / f.leading_monomial());
  return Polynomial::sub_scaled(a, F.inv(g.leading_coefficient()), l / g.leading_monomial(), g);
}

GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> generators, const ResourceLimits& limits) {
  std::vector<const Polynomial*> inputs;
  for (const Polynomial& g : generators) {
    if (!same_ring(g.ring(), ring)) throw RingMismatchError();
    if (!g.is_zero()) inputs.push_back(&g);
  }
  const PolynomialRing& r = *ring;
  std::stable_sort(inputs.begin(), inputs.end(), [&](const Polynomial* a, const Polynomial* b) {
    return r.compare(a->leading_monomial(), b->leading_monomial()) < 0;
  });
  BuchbergerRun run(ring, limits);
  for (const Polynomial* g : inputs) run.add_input(*g);
  run.run();
  return run.finish();
}

GroebnerBasis groebner_basis(const Ideal& ideal, const ResourceLimits& limits) {
  if (const GroebnerBasis* known = ideal.known_basis()) return *known;
  return buchberger(ideal.ring(), ideal.generators(), limits);
}

bool ideal_equals(const Ideal& a, const Ideal& b, const ResourceLimits& limits) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatchError();
  return groebner_basis(a, limits) == groebner_basis(b, limits);
}

bool is_unit_ideal(const Ideal& ideal, const ResourceLimits& limits) {
  return groebner_basis(ideal, limits).is_unit_ideal();
}

bool ideal_contains(const Ideal& b, const Ideal& a, const ResourceLimits& limits) {
  if (!same_ring(a.ring(), b.ring())) throw RingMismatchError();
  const GroebnerBasis gb = groebner_basis(b, limits);
  return std::all_of(a.generators().begin(), a.generators().end(),
                     [&](const Polynomial& g) { return gb.contains(g); });
}

}  // namespace segre
