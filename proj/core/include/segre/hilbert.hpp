#pragma once

#include <cstdint>
#include <vector>

#include "segre/groebner.hpp"
#include "segre/limits.hpp"
#include "segre/poly.hpp"

namespace segre {

/// Monomial ideal with a minimal generating set, kept in ascending
/// lexicographic order of exponent vectors.
class MonomialIdeal {
 public:
  /// Removes redundant generators.
  MonomialIdeal(std::size_t num_vars, std::vector<Monomial> generators);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const std::vector<Monomial>& generators() const noexcept { return generators_; }
  bool is_unit() const noexcept { return generators_.size() == 1 && generators_[0].is_one(); }
  /// Whether m lies outside the ideal (a standard monomial).
  bool is_standard(const Monomial& m) const noexcept;

 private:
  std::size_t num_vars_;
  std::vector<Monomial> generators_;
};

/// Hilbert series of S/M written as numerator(t) / (1-t)^num_vars, and the
/// same series after cancelling every (1-t) factor:
/// reduced_numerator(t) / (1-t)^krull_dim. Coefficient i is the coefficient
/// of t^i.
struct HilbertData {
  std::vector<std::int64_t> numerator;
  std::vector<std::int64_t> reduced_numerator;
  std::size_t krull_dim = 0;

  /// reduced_numerator(1); zero only for the unit ideal.
  std::int64_t multiplicity() const noexcept;
};

/// Dimension and degree of a projective scheme. The empty scheme has
/// proj_dim -1 and degree 0.
struct DimDegree {
  int proj_dim = -1;
  std::int64_t degree = 0;

  friend bool operator==(const DimDegree&, const DimDegree&) = default;
};

/// Leading monomials of a reduced basis.
MonomialIdeal initial_ideal(const GroebnerBasis& basis);

/// Numerator by the recursion N(M) = N(M') - t^deg(g) N(M' : g), M' = M
/// without its lexicographically last generator g. Throws ResourceLimitError
/// when the recursion is deeper than limits.max_hilbert_depth.
HilbertData hilbert_numerator(const MonomialIdeal& ideal, const ResourceLimits& limits = {});

/// Dimension and degree of Proj(S/I) for a homogeneous ideal. Throws
/// ValidationError for non-homogeneous input. The ideal need not be saturated.
DimDegree dim_degree(const Ideal& ideal, const ResourceLimits& limits = {});
DimDegree dim_degree(const GroebnerBasis& basis, const ResourceLimits& limits = {});

}  // namespace segre
