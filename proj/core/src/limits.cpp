#include "segre/limits.hpp"

#include <string>

#include "segre/errors.hpp"

namespace segre {

ResourceLimits ResourceLimits::small() {
  ResourceLimits l;
  l.max_basis_size = 1'000;
  l.max_pairs = 50'000;
  l.max_terms = 50'000;
  l.max_monomials = 20'000;
  l.max_hilbert_depth = 1'000;
  l.max_saturation_steps = 50;
  return l;
}

ResourceLimits ResourceLimits::large() {
  ResourceLimits l;
  l.max_basis_size = 500'000;
  l.max_pairs = 50'000'000;
  l.max_terms = 50'000'000;
  l.max_monomials = 20'000'000;
  l.max_hilbert_depth = 100'000;
  l.max_saturation_steps = 100'000;
  return l;
}

ResourceLimits ResourceLimits::profile(std::string_view name) {
  if (name == "small") return small();
  if (name == "default") return standard();
  if (name == "large") return large();
  throw ValidationError("unknown resource profile '" + std::string(name) + "' (expected small, default or large)");
}

}  // namespace segre
