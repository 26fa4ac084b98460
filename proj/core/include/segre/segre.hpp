#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "segre/field.hpp"
#include "segre/groebner.hpp"
#include "segre/limits.hpp"

namespace segre {

/// How the residual J : I^infinity is computed. single_element replaces I by
/// one extra general element h of I(m); full_ideal iterates colon ideals.
enum class SaturationStrategy { single_element, full_ideal };

std::string_view to_string(SaturationStrategy s) noexcept;
/// Accepts "single" and "full". Throws ValidationError otherwise.
SaturationStrategy parse_strategy(std::string_view text);

struct SegreConfig {
  std::uint64_t seed = 0;
  SaturationStrategy strategy = SaturationStrategy::single_element;
  /// Number of runs with derived seeds that must agree (>= 1).
  unsigned repeats = 1;
  /// Compute the residuals for different d concurrently.
  bool parallel = true;
  ResourceLimits limits{};
};

/// Degrees of the Segre classes s_0..s_n of Z = V(I) in P^k together with the
/// residual degrees they were solved from.
struct SegreResult {
  int k = 0;
  int n = 0;
  std::uint32_t m = 0;
  std::vector<std::int64_t> segre_degrees;     // deg s_0 .. deg s_n
  std::vector<std::int64_t> residual_degrees;  // deg R_d for d = k-n .. k
  std::uint64_t seed = 0;
  SaturationStrategy strategy = SaturationStrategy::single_element;
  std::vector<double> step_seconds;  // wall clock per d, same indexing as residual_degrees
};

struct ChernFultonResult {
  std::vector<std::int64_t> chern_fulton_degrees;  // deg c'_0 .. deg c'_n
  std::int64_t euler = 0;                          // deg c'_n
};

/// Exact binomial coefficient; throws OverflowError beyond int64.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// A uniformly random combination sum c_{j,a} x^a g_j over the generators g_j
/// and all monomials x^a of degree m - deg g_j, conditioned on being nonzero.
/// The result is homogeneous of degree m and lies in I.
Polynomial sample_graded_element(const Ideal& ideal, std::uint32_t m, RandomSource& rng,
                                 const ResourceLimits& limits = {});

/// Degrees of the Segre classes of the subscheme of P^k defined by the
/// homogeneous ideal. Probabilistic; the seed in cfg pins every random choice.
SegreResult segre_degrees(const Ideal& ideal, const SegreConfig& cfg = {});

/// deg c'_i = sum_{p <= i} binom(k+1, i-p) deg s_p. euler is the topological
/// Euler characteristic when Z is smooth.
ChernFultonResult chern_fulton(const SegreResult& result);

/// Inverse of the binomial transform used by chern_fulton.
std::vector<std::int64_t> segre_from_chern_fulton(int k, const std::vector<std::int64_t>& chern_fulton_degrees);

/// Re-checks m^d = deg R_d + sum_{i<=p} binom(d, p-i) m^{p-i} deg s_i for every d.
bool verify_bezout_identity(const SegreResult& result);

}  // namespace segre
