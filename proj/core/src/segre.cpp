#include "segre/segre.hpp"

#include <chrono>
#include <future>
#include <sstream>

#include "segre/errors.hpp"
#include "segre/hilbert.hpp"

namespace segre {

namespace {

std::int64_t mul_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in degree arithmetic");
  return r;
}

std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in degree arithmetic");
  return r;
}

std::int64_t pow_checked(std::int64_t base, std::int64_t e) {
  std::int64_t r = 1;
  for (std::int64_t i = 0; i < e; ++i) r = mul_checked(r, base);
  return r;
}

// sum_{i=0}^{upto} binom(d, p-i) m^{p-i} s_i
std::int64_t weighted_sum(std::int64_t d, std::int64_t p, std::int64_t m, const std::vector<std::int64_t>& s,
                          std::int64_t upto) {
  std::int64_t acc = 0;
  for (std::int64_t i = 0; i <= upto; ++i) {
    acc = add_checked(acc, mul_checked(mul_checked(binomial(d, p - i), pow_checked(m, p - i)), s[i]));
  }
  return acc;
}

std::uint64_t derived_seed(std::uint64_t seed, unsigned run) {
  return run == 0 ? seed : seed + 0x9E3779B97F4A7C15ull * run;
}

SegreResult run_once(const Ideal& ideal, const SegreConfig& cfg, std::uint64_t seed, int n) {
  const RingPtr& ring = ideal.ring();
  const int k = static_cast<int>(ring->num_vars()) - 1;
  const std::uint32_t m = ideal.max_degree();

  RandomSource rng(seed);
  std::vector<Polynomial> samples;
  samples.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) samples.push_back(sample_graded_element(ideal, m, rng, cfg.limits));
  const bool single = cfg.strategy == SaturationStrategy::single_element;
  const Polynomial h = single ? sample_graded_element(ideal, m, rng, cfg.limits) : Polynomial(ring);

  const int first_d = k - n;
  auto residual = [&](int d) -> std::pair<std::int64_t, double> {
    const auto start = std::chrono::steady_clock::now();
    Ideal j(ring, std::vector<Polynomial>(samples.begin(), samples.begin() + d));
    Ideal r = single ? saturate_by_element(j, h, cfg.limits) : saturate_by_ideal(j, ideal, cfg.limits);
    const DimDegree dd = dim_degree(r, cfg.limits);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    if (dd.proj_dim == -1) return {0, elapsed.count()};
    if (dd.proj_dim != k - d) {
      std::ostringstream msg;
      msg << "residual for d=" << d << " has dimension " << dd.proj_dim << ", expected " << (k - d)
          << " or empty; the random choices were not general (seed " << seed << ")";
      throw DegenerateSampleError(msg.str());
    }
    return {dd.degree, elapsed.count()};
  };

  std::vector<std::pair<std::int64_t, double>> steps(static_cast<std::size_t>(n + 1));
  if (cfg.parallel && n > 0) {
    std::vector<std::future<std::pair<std::int64_t, double>>> futures;
    for (int idx = 0; idx <= n; ++idx) futures.push_back(std::async(std::launch::async, residual, first_d + idx));
    for (int idx = 0; idx <= n; ++idx) steps[static_cast<std::size_t>(idx)] = futures[static_cast<std::size_t>(idx)].get();
  } else {
    for (int idx = 0; idx <= n; ++idx) steps[static_cast<std::size_t>(idx)] = residual(first_d + idx);
  }

  SegreResult out;
  out.k = k;
  out.n = n;
  out.m = m;
  out.seed = seed;
  out.strategy = cfg.strategy;
  for (int p = 0; p <= n; ++p) {
    const int d = first_d + p;
    const std::int64_t deg_r = steps[static_cast<std::size_t>(p)].first;
    std::int64_t s = add_checked(pow_checked(m, d), -deg_r);
    if (p > 0) s = add_checked(s, -weighted_sum(d, p, m, out.segre_degrees, p - 1));
    out.segre_degrees.push_back(s);
    out.residual_degrees.push_back(deg_r);
    out.step_seconds.push_back(steps[static_cast<std::size_t>(p)].second);
  }
  if (!verify_bezout_identity(out)) throw InternalError("solved Segre degrees fail the residual identity");
  return out;
}

std::string format_degrees(const std::vector<std::int64_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

}  // namespace

std::string_view to_string(SaturationStrategy s) noexcept {
  return s == SaturationStrategy::single_element ? "single" : "full";
}

SaturationStrategy parse_strategy(std::string_view text) {
  if (text == "single") return SaturationStrategy::single_element;
  if (text == "full") return SaturationStrategy::full_ideal;
  throw ValidationError("unknown saturation strategy '" + std::string(text) + "' (expected single or full)");
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) is divisible by i at every step.
    __extension__ typedef __int128 wide;
    const wide t = static_cast<wide>(r) * (n - k + i) / i;
    if (t > INT64_MAX) throw OverflowError("binomial coefficient overflow");
    r = static_cast<std::int64_t>(t);
  }
  return r;
}

Polynomial sample_graded_element(const Ideal& ideal, std::uint32_t m, RandomSource& rng,
                                 const ResourceLimits& limits) {
  const RingPtr& ring = ideal.ring();
  if (!ideal.is_homogeneous()) throw ValidationError("sampling needs a homogeneous ideal");
  std::size_t spanning = 0;
  for (const Polynomial& g : ideal.generators()) {
    if (g.degree() > m) {
      throw ValidationError("degree " + std::to_string(m) + " is below generator degree " +
                            std::to_string(g.degree()));
    }
    spanning += count_monomials(ring->num_base_vars(), m - g.degree());
    if (spanning > limits.max_monomials) {
      throw ResourceLimitError("spanning set of I(" + std::to_string(m) + ") exceeds " +
                               std::to_string(limits.max_monomials) + " elements");
    }
  }
  const PrimeField& F = ring->field();
  for (;;) {
    std::vector<Term> terms;
    for (const Polynomial& g : ideal.generators()) {
      for (const Monomial& a : monomials_of_degree(*ring, m - g.degree(), true, limits)) {
        const FieldElement c = F.random(rng);
        if (c.is_zero()) continue;
        for (const Term& t : g.terms()) terms.push_back({F.mul(c, t.coeff), t.mono * a});
      }
    }
    Polynomial f = Polynomial::from_terms(ring, std::move(terms));
    if (!f.is_zero()) return f;
  }
}

SegreResult segre_degrees(const Ideal& ideal, const SegreConfig& cfg) {
  if (cfg.repeats < 1) throw ValidationError("repeats must be at least 1");
  if (ideal.ring()->has_auxiliary()) throw ValidationError("input ring must not carry an auxiliary variable");
  if (ideal.generators().empty()) throw ValidationError("the zero ideal does not define a proper subscheme");
  if (!ideal.is_homogeneous()) {
    for (const Polynomial& g : ideal.generators()) {
      if (!g.is_homogeneous()) throw ValidationError("generator is not homogeneous: " + to_string(g));
    }
  }
  const GroebnerBasis basis = groebner_basis(ideal, cfg.limits);
  if (basis.is_unit_ideal()) throw ValidationError("the unit ideal defines the empty scheme");
  const int n = dim_degree(basis, cfg.limits).proj_dim;
  if (n < 0) throw ValidationError("the ideal defines the empty scheme (it is irrelevant)");

  std::vector<SegreResult> runs;
  for (unsigned r = 0; r < cfg.repeats; ++r) runs.push_back(run_once(ideal, cfg, derived_seed(cfg.seed, r), n));
  for (const SegreResult& run : runs) {
    if (run.segre_degrees != runs.front().segre_degrees) {
      std::vector<std::vector<std::int64_t>> outputs;
      std::string msg = "runs with derived seeds disagree:";
      for (const SegreResult& x : runs) {
        outputs.push_back(x.segre_degrees);
        msg += " " + format_degrees(x.segre_degrees);
      }
      throw InconsistentRunsError(msg, std::move(outputs));
    }
  }
  SegreResult result = std::move(runs.front());
  result.seed = cfg.seed;
  return result;
}

ChernFultonResult chern_fulton(const SegreResult& result) {
  ChernFultonResult out;
  const std::int64_t kp1 = result.k + 1;
  for (std::size_t i = 0; i < result.segre_degrees.size(); ++i) {
    std::int64_t c = 0;
    for (std::size_t p = 0; p <= i; ++p) {
      c = add_checked(c, mul_checked(binomial(kp1, static_cast<std::int64_t>(i - p)), result.segre_degrees[p]));
    }
    out.chern_fulton_degrees.push_back(c);
  }
  if (!out.chern_fulton_degrees.empty()) out.euler = out.chern_fulton_degrees.back();
  return out;
}

std::vector<std::int64_t> segre_from_chern_fulton(int k, const std::vector<std::int64_t>& cf) {
  std::vector<std::int64_t> s;
  for (std::size_t i = 0; i < cf.size(); ++i) {
    std::int64_t v = cf[i];
    for (std::size_t p = 0; p < i; ++p) {
      v = add_checked(v, -mul_checked(binomial(k + 1, static_cast<std::int64_t>(i - p)), s[p]));
    }
    s.push_back(v);
  }
  return s;
}

bool verify_bezout_identity(const SegreResult& result) {
  const std::size_t len = static_cast<std::size_t>(result.n + 1);
  if (result.segre_degrees.size() != len || result.residual_degrees.size() != len) return false;
  try {
    for (int p = 0; p <= result.n; ++p) {
      const int d = result.k - result.n + p;
      const std::int64_t lhs = pow_checked(result.m, d);
      const std::int64_t rhs =
          add_checked(result.residual_degrees[static_cast<std::size_t>(p)], weighted_sum(d, p, result.m, result.segre_degrees, p));
      if (lhs != rhs) return false;
    }
  } catch (const OverflowError&) {
    return false;
  }
  return true;
}

}  // namespace segre
