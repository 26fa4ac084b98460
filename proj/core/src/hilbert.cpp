#include "segre/hilbert.hpp"

#include <algorithm>
#include <map>

#include "segre/errors.hpp"

namespace segre {

namespace {

using IntPoly = std::vector<std::int64_t>;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("Hilbert numerator coefficient overflow");
  return r;
}

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// a - t^shift * b
IntPoly sub_shifted(IntPoly a, const IntPoly& b, std::size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = checked_add(a[i + shift], -b[i]);
  trim(a);
  return a;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : lex_less(a, b);
  });
  std::vector<Monomial> out;
  for (const Monomial& g : gens) {
    if (std::none_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); })) out.push_back(g);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

struct KeyLess {
  bool operator()(const std::vector<Monomial>& a, const std::vector<Monomial>& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), lex_less);
  }
};

class NumeratorRecursion {
 public:
  explicit NumeratorRecursion(const ResourceLimits& limits) : limits_(limits) {}

  // gens: minimal, lex-sorted.
  IntPoly operator()(const std::vector<Monomial>& gens, std::size_t depth) {
    if (depth > limits_.max_hilbert_depth) {
      throw ResourceLimitError("Hilbert numerator recursion exceeded depth " +
                               std::to_string(limits_.max_hilbert_depth));
    }
    if (gens.empty()) return {1};
    if (gens.front().is_one()) return {};  // the unit ideal; 1 is lex-smallest

    if (auto it = memo_.find(gens); it != memo_.end()) return it->second;

    IntPoly result;
    if (pairwise_coprime(gens)) {
      result = {1};
      for (const Monomial& g : gens) result = sub_shifted(result, result, g.degree());
    } else {
      const Monomial& pivot = gens.back();
      std::vector<Monomial> rest(gens.begin(), gens.end() - 1);
      std::vector<Monomial> colon;
      colon.reserve(rest.size());
      for (const Monomial& g : rest) colon.push_back(g / gcd(g, pivot));
      IntPoly without = (*this)(rest, depth + 1);
      IntPoly quotient = (*this)(minimalize(std::move(colon)), depth + 1);
      result = sub_shifted(std::move(without), quotient, pivot.degree());
    }
    memo_.emplace(gens, result);
    return result;
  }

 private:
  static bool pairwise_coprime(const std::vector<Monomial>& gens) {
    std::uint32_t seen = 0;
    for (const Monomial& g : gens) {
      const std::uint32_t mask = g.support_mask();
      if (seen & mask) return false;
      seen |= mask;
    }
    return true;
  }

  const ResourceLimits& limits_;
  std::map<std::vector<Monomial>, IntPoly, KeyLess> memo_;
};

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t num_vars, std::vector<Monomial> generators) : num_vars_(num_vars) {
  for (const Monomial& m : generators) {
    if (m.size() != num_vars) throw ValidationError("monomial does not match the number of variables");
  }
  generators_ = minimalize(std::move(generators));
}

bool MonomialIdeal::is_standard(const Monomial& m) const noexcept {
  return std::none_of(generators_.begin(), generators_.end(), [&](const Monomial& g) { return g.divides(m); });
}

std::int64_t HilbertData::multiplicity() const noexcept {
  std::int64_t s = 0;
  for (std::int64_t c : reduced_numerator) s += c;
  return s;
}

MonomialIdeal initial_ideal(const GroebnerBasis& basis) {
  std::vector<Monomial> lead;
  lead.reserve(basis.size());
  for (const Polynomial& g : basis.elements()) lead.push_back(g.leading_monomial());
  return MonomialIdeal(basis.ring()->num_vars(), std::move(lead));
}

HilbertData hilbert_numerator(const MonomialIdeal& ideal, const ResourceLimits& limits) {
  HilbertData data;
  NumeratorRecursion recursion(limits);
  data.numerator = recursion(ideal.generators(), 0);

  IntPoly reduced = data.numerator;
  std::size_t cancelled = 0;
  if (!reduced.empty()) {
    for (;;) {
      std::int64_t at_one = 0;
      for (std::int64_t c : reduced) at_one = checked_add(at_one, c);
      if (at_one != 0) break;
      // Division by (1 - t) is a running prefix sum; the final sum is N(1) = 0.
      IntPoly q(reduced.size() - 1);
      std::int64_t acc = 0;
      for (std::size_t i = 0; i + 1 < reduced.size(); ++i) q[i] = acc = checked_add(acc, reduced[i]);
      reduced = std::move(q);
      trim(reduced);
      ++cancelled;
    }
  }
  data.reduced_numerator = std::move(reduced);
  data.krull_dim = data.numerator.empty() ? 0 : ideal.num_vars() - cancelled;
  return data;
}

DimDegree dim_degree(const GroebnerBasis& basis, const ResourceLimits& limits) {
  if (basis.ring()->has_auxiliary()) throw ValidationError("dimension and degree need a grevlex ring");
  for (const Polynomial& g : basis.elements()) {
    if (!g.is_homogeneous()) throw ValidationError("dimension and degree need a homogeneous ideal");
  }
  const HilbertData data = hilbert_numerator(initial_ideal(basis), limits);
  DimDegree out;
  out.proj_dim = static_cast<int>(data.krull_dim) - 1;
  out.degree = data.krull_dim >= 1 ? data.multiplicity() : 0;
  return out;
}

DimDegree dim_degree(const Ideal& ideal, const ResourceLimits& limits) {
  if (!ideal.is_homogeneous()) {
    for (const Polynomial& g : ideal.generators()) {
      if (!g.is_homogeneous()) throw ValidationError("generator is not homogeneous: " + to_string(g));
    }
  }
  return dim_degree(groebner_basis(ideal, limits), limits);
}

}  // namespace segre
