#pragma once

#include <cstddef>
#include <string_view>

namespace segre {

/// Hard caps on the size of intermediate objects. Exceeding any of them
/// raises ResourceLimitError instead of running away.
struct ResourceLimits {
  std::size_t max_basis_size = 20'000;      // polynomials ever added to a Buchberger basis
  std::size_t max_pairs = 2'000'000;        // pending critical pairs
  std::size_t max_terms = 2'000'000;        // terms in a single polynomial
  std::size_t max_monomials = 1'000'000;    // enumerated monomials of one degree / spanning set size
  std::size_t max_hilbert_depth = 10'000;   // recursion depth of the Hilbert numerator
  std::size_t max_saturation_steps = 1'000; // colon iterations before giving up

  static ResourceLimits small();
  static ResourceLimits standard() { return {}; }
  static ResourceLimits large();

  /// "small", "default" or "large"; throws ValidationError otherwise.
  static ResourceLimits profile(std::string_view name);
};

}  // namespace segre
