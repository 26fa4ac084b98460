#include "segre/poly.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "segre/errors.hpp"

namespace segre {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::size_t num_vars) : size_(static_cast<std::uint16_t>(num_vars)) {
  if (num_vars > kMaxVariables) {
    throw ResourceLimitError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
}

Monomial::Monomial(std::initializer_list<std::uint32_t> exponents) : Monomial(exponents.size()) {
  std::size_t i = 0;
  for (std::uint32_t e : exponents) set(i++, e);
}

void Monomial::set(std::size_t i, std::uint32_t e) {
  if (e > kMaxExponent) throw ResourceLimitError("exponent overflow: " + std::to_string(e) + " exceeds 2^15 - 1");
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = static_cast<std::uint16_t>(e);
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < size_; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < size_; ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

std::uint32_t Monomial::support_mask() const noexcept {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < size_; ++i) {
    if (exps_[i] != 0) mask |= 1u << i;
  }
  return mask;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r(a.size_);
  for (std::size_t i = 0; i < a.size_; ++i) {
    std::uint32_t e = std::uint32_t{a.exps_[i]} + b.exps_[i];
    if (e > kMaxExponent) throw ResourceLimitError("exponent overflow in monomial product");
    r.exps_[i] = static_cast<std::uint16_t>(e);
  }
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r(a.size_);
  for (std::size_t i = 0; i < a.size_; ++i) r.exps_[i] = static_cast<std::uint16_t>(a.exps_[i] - b.exps_[i]);
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size_);
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < a.size_; ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    d += r.exps_[i];
  }
  r.degree_ = d;
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a.size_);
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < a.size_; ++i) {
    r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    d += r.exps_[i];
  }
  r.degree_ = d;
  return r;
}

bool operator==(const Monomial& a, const Monomial& b) noexcept {
  if (a.size_ != b.size_ || a.degree_ != b.degree_) return false;
  return std::equal(a.exps_.begin(), a.exps_.begin() + a.size_, b.exps_.begin());
}

bool lex_less(const Monomial& a, const Monomial& b) noexcept {
  return std::lexicographical_compare(a.exps_.begin(), a.exps_.begin() + a.size_, b.exps_.begin(),
                                      b.exps_.begin() + b.size_);
}

// ---------------------------------------------------------------------------
// MonomialOrder

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) throw ValidationError("monomials have different numbers of variables");
  const std::size_t n = a.size();
  if (kind_ == Kind::grevlex) {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    for (std::size_t i = n; i-- > 0;) {
      if (a[i] != b[i]) return b[i] <=> a[i];  // smaller trailing exponent wins
    }
    return std::strong_ordering::equal;
  }
  if (a[aux_] != b[aux_]) return a[aux_] <=> b[aux_];
  const std::uint32_t da = a.degree() - a[aux_];
  const std::uint32_t db = b.degree() - b[aux_];
  if (da != db) return da <=> db;
  for (std::size_t i = n; i-- > 0;) {
    if (i == aux_) continue;
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// PolynomialRing

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(s[0])) return false;
  return std::all_of(s.begin() + 1, s.end(), [&](char c) { return alpha(c) || digit(c) || c == '_'; });
}

}  // namespace

PolynomialRing::PolynomialRing(std::vector<std::string> names, PrimeField field)
    : PolynomialRing(std::move(names), field, MonomialOrder::grevlex()) {}

PolynomialRing::PolynomialRing(std::vector<std::string> names, PrimeField field, MonomialOrder order)
    : names_(std::move(names)), field_(field), order_(order) {
  if (names_.empty()) throw ValidationError("a ring needs at least one variable");
  if (names_.size() > kMaxVariables) {
    throw ResourceLimitError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!valid_identifier(n)) throw ValidationError("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw ValidationError("duplicate variable name '" + n + "'");
  }
}

RingPtr PolynomialRing::standard(std::size_t count, PrimeField field) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.push_back("x" + std::to_string(i));
  return make(std::move(names), field);
}

RingPtr PolynomialRing::with_auxiliary() const {
  if (has_auxiliary()) throw ValidationError("ring already has an auxiliary variable");
  std::vector<std::string> names = names_;
  std::string aux = "t";
  while (index_of(aux)) aux += "_";
  names.push_back(aux);
  const std::size_t idx = names.size() - 1;
  // Constructor is private; shared_ptr needs a public one, so go through new.
  return RingPtr(new PolynomialRing(std::move(names), field_, MonomialOrder::block(idx)));
}

std::optional<std::size_t> PolynomialRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept { return a == b || (a && b && *a == *b); }

std::size_t count_monomials(std::size_t n, std::uint32_t d) noexcept {
  // binom(n - 1 + d, d), computed incrementally; each partial product is an
  // exact binomial coefficient.
  if (n == 0) return d == 0 ? 1 : 0;
  __extension__ unsigned __int128 c = 1;
  for (std::uint32_t i = 1; i <= d; ++i) {
    c = c * (n - 1 + i) / i;
    if (c > std::numeric_limits<std::size_t>::max()) return std::numeric_limits<std::size_t>::max();
  }
  return static_cast<std::size_t>(c);
}

std::vector<Monomial> monomials_of_degree(const PolynomialRing& ring, std::uint32_t d, bool exclude_auxiliary,
                                          const ResourceLimits& limits) {
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < ring.num_vars(); ++i) {
    if (exclude_auxiliary && ring.has_auxiliary() && i == ring.auxiliary_index()) continue;
    vars.push_back(i);
  }
  const std::size_t count = count_monomials(vars.size(), d);
  if (count > limits.max_monomials) {
    throw ResourceLimitError("too many monomials of degree " + std::to_string(d) + ": " + std::to_string(count));
  }
  std::vector<Monomial> out;
  out.reserve(count);
  Monomial cur(ring.num_vars());
  // Distribute d among vars[pos..].
  auto rec = [&](auto&& self, std::size_t pos, std::uint32_t left) -> void {
    if (pos + 1 == vars.size()) {
      cur.set(vars[pos], left);
      out.push_back(cur);
      cur.set(vars[pos], 0);
      return;
    }
    for (std::uint32_t e = left + 1; e-- > 0;) {
      cur.set(vars[pos], e);
      self(self, pos + 1, left - e);
    }
    cur.set(vars[pos], 0);
  };
  if (!vars.empty()) rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ring.compare(a, b) > 0; });
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial

namespace {

void require_same_ring(const Polynomial& f, const Polynomial& g) {
  if (!same_ring(f.ring(), g.ring())) throw RingMismatchError();
}

}  // namespace

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const PolynomialRing& r = *ring;
  for (const Term& t : terms) {
    if (t.mono.size() != r.num_vars()) throw ValidationError("monomial does not match ring dimension");
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) { return r.compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const Term& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = r.field().add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(t);
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  return from_canonical_terms(std::move(ring), std::move(out));
}

Polynomial Polynomial::constant(RingPtr ring, FieldElement c) {
  Monomial one(ring->num_vars());
  return monomial(std::move(ring), c, one);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Monomial m(ring->num_vars());
  m.set(index, 1);
  const FieldElement one = ring->field().one();
  return monomial(std::move(ring), one, m);
}

Polynomial Polynomial::monomial(RingPtr ring, FieldElement c, const Monomial& m) {
  Polynomial p(std::move(ring));
  if (!c.is_zero()) p.terms_.push_back({c, m});
  return p;
}

DegreeInfo Polynomial::degree_info() const noexcept {
  DegreeInfo info;
  if (terms_.empty()) return info;
  std::uint32_t lo = terms_[0].mono.degree(), hi = lo;
  for (const Term& t : terms_) {
    lo = std::min(lo, t.mono.degree());
    hi = std::max(hi, t.mono.degree());
  }
  info.degree = hi;
  info.homogeneous = lo == hi;
  return info;
}

bool Polynomial::involves(std::size_t i) const noexcept {
  return std::any_of(terms_.begin(), terms_.end(), [i](const Term& t) { return t.mono[i] != 0; });
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (Term& t : r.terms_) t.coeff = field().neg(t.coeff);
  return r;
}

Polynomial Polynomial::scaled(FieldElement c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r = *this;
  for (Term& t : r.terms_) t.coeff = field().mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::times_term(FieldElement c, const Monomial& m) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r = *this;
  for (Term& t : r.terms_) {
    t.coeff = field().mul(t.coeff, c);
    t.mono = t.mono * m;
  }
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(field().inv(leading_coefficient()));
}

Polynomial Polynomial::sub_scaled(const Polynomial& f, FieldElement c, const Monomial& m, const Polynomial& g) {
  require_same_ring(f, g);
  const PolynomialRing& r = *f.ring_;
  const PrimeField& F = r.field();
  const FieldElement nc = F.neg(c);
  std::vector<Term> out;
  out.reserve(f.terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  Term gt;
  bool have_g = false;
  auto load_g = [&]() {
    if (j < g.terms_.size()) {
      gt.coeff = F.mul(g.terms_[j].coeff, nc);
      gt.mono = g.terms_[j].mono * m;
      have_g = true;
    } else {
      have_g = false;
    }
  };
  load_g();
  while (i < f.terms_.size() && have_g) {
    auto cmp = r.compare(f.terms_[i].mono, gt.mono);
    if (cmp > 0) {
      out.push_back(f.terms_[i++]);
    } else if (cmp < 0) {
      out.push_back(gt);
      ++j;
      load_g();
    } else {
      FieldElement s = F.add(f.terms_[i].coeff, gt.coeff);
      if (!s.is_zero()) out.push_back({s, gt.mono});
      ++i;
      ++j;
      load_g();
    }
  }
  while (i < f.terms_.size()) out.push_back(f.terms_[i++]);
  while (have_g) {
    out.push_back(gt);
    ++j;
    load_g();
  }
  return from_canonical_terms(f.ring_, std::move(out));
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  Monomial one(f.ring()->num_vars());
  return Polynomial::sub_scaled(f, f.field().neg(f.field().one()), one, g);
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  Monomial one(f.ring()->num_vars());
  return Polynomial::sub_scaled(f, f.field().one(), one, g);
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  const PrimeField& F = f.field();
  std::vector<Term> terms;
  terms.reserve(f.size() * g.size());
  for (const Term& a : f.terms()) {
    for (const Term& b : g.terms()) terms.push_back({F.mul(a.coeff, b.coeff), a.mono * b.mono});
  }
  return Polynomial::from_terms(f.ring(), std::move(terms));
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  return same_ring(f.ring_, g.ring_) && f.terms_ == g.terms_;
}

Polynomial change_ring(const Polynomial& f, const RingPtr& to) {
  const PolynomialRing& from = *f.ring();
  if (from.field() != to->field()) throw RingMismatchError();
  const std::size_t nf = from.num_vars(), nt = to->num_vars();
  if (nf == nt) {
    if (!(from.names() == to->names())) throw RingMismatchError();
    return Polynomial::from_terms(to, {f.terms().begin(), f.terms().end()});
  }
  if (nt == nf + 1) {  // append the auxiliary variable with exponent 0
    if (!std::equal(from.names().begin(), from.names().end(), to->names().begin())) throw RingMismatchError();
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (const Term& t : f.terms()) {
      Monomial m(nt);
      for (std::size_t i = 0; i < nf; ++i) m.set(i, t.mono[i]);
      terms.push_back({t.coeff, m});
    }
    return Polynomial::from_terms(to, std::move(terms));
  }
  if (nf == nt + 1 && from.has_auxiliary() && from.auxiliary_index() == nt) {
    if (!std::equal(to->names().begin(), to->names().end(), from.names().begin())) throw RingMismatchError();
    std::vector<Term> terms;
    terms.reserve(f.size());
    for (const Term& t : f.terms()) {
      if (t.mono[nt] != 0) throw InternalError("polynomial still involves the auxiliary variable");
      Monomial m(nt);
      for (std::size_t i = 0; i < nt; ++i) m.set(i, t.mono[i]);
      terms.push_back({t.coeff, m});
    }
    return Polynomial::from_terms(to, std::move(terms));
  }
  throw RingMismatchError();
}

std::string to_string(const Monomial& m, const PolynomialRing& ring) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += ring.names()[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  const PolynomialRing& ring = *f.ring();
  std::string s;
  bool first = true;
  for (const Term& t : f.terms()) {
    std::int64_t c = ring.field().symmetric(t.coeff);
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      s += std::to_string(c);
    } else {
      if (c != 1) s += std::to_string(c) + '*';
      s += to_string(t.mono, ring);
    }
  }
  return s;
}

}  // namespace segre
