#include "segre/ideal_io.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "segre/errors.hpp"
#include "segre/poly.hpp"

namespace segre {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, const RingPtr& ring, std::size_t line, std::size_t column_offset)
      : text_(text), ring_(ring), field_(ring->field()), line_(line), column_offset_(column_offset) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      Term t = parse_term();
      if (negative) t.coeff = field_.neg(t.coeff);
      terms.push_back(t);
      skip_ws();
    }
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  Term parse_term() {
    Term t{field_.one(), Monomial(ring_->num_vars())};
    parse_factor(t);
    skip_ws();
    while (!at_end() && peek() == '*') {
      ++pos_;
      skip_ws();
      parse_factor(t);
      skip_ws();
    }
    return t;
  }

  void parse_factor(Term& t) {
    if (at_end()) fail("expected a coefficient or variable");
    if (is_digit(peek())) {
      t.coeff = field_.mul(t.coeff, parse_number_mod_p());
      return;
    }
    if (!is_ident_start(peek())) fail(std::string("unexpected character '") + peek() + "'");
    const std::size_t start = pos_;
    while (!at_end() && is_ident_char(peek())) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    const auto idx = ring_->index_of(name);
    if (!idx) fail("undeclared variable '" + std::string(name) + "'", start);
    std::uint64_t e = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      if (at_end() || !is_digit(peek())) fail("exponent must be a nonnegative integer");
      e = parse_exponent();
    }
    const std::uint64_t total = t.mono[*idx] + e;
    if (total > kMaxExponent) fail("exponent exceeds " + std::to_string(kMaxExponent));
    t.mono.set(*idx, static_cast<std::uint32_t>(total));
  }

  FieldElement parse_number_mod_p() {
    const std::uint64_t p = field_.characteristic();
    std::uint64_t r = 0;
    while (!at_end() && is_digit(peek())) r = (r * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0')) % p;
    if (!at_end() && (peek() == '.' || peek() == '/')) fail("coefficients must be integers");
    return field_.from_int(static_cast<std::int64_t>(r));
  }

  std::uint64_t parse_exponent() {
    const std::size_t start = pos_;
    std::uint64_t e = 0;
    while (!at_end() && is_digit(peek())) {
      e = e * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
      if (e > kMaxExponent) fail("exponent exceeds " + std::to_string(kMaxExponent), start);
    }
    if (!at_end() && (peek() == '.' || peek() == '/')) fail("exponent must be a nonnegative integer");
    return e;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) const {
    throw ParseError(what, line_, column_offset_ + at + 1);
  }

  std::string_view text_;
  const RingPtr& ring_;
  const PrimeField& field_;
  std::size_t line_;
  std::size_t column_offset_;
  std::size_t pos_ = 0;
};

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, std::size_t line, std::size_t column) {
  return PolynomialParser(text, ring, line, column - 1).parse();
}

IdealFile parse_ideal_file(std::string_view text) {
  IdealFile file;
  bool have_ring = false, have_char = false, in_ideal = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++line_no;
    start = end + 1;
    const std::string_view line = strip(raw);
    if (line.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const std::size_t indent = static_cast<std::size_t>(line.data() - raw.data());
    if (in_ideal) {
      file.generators.emplace_back(line);
      file.generator_lines.push_back(line_no);
      file.generator_columns.push_back(indent + 1);
    } else if (line.starts_with("ring:")) {
      if (have_ring) throw ParseError("duplicate ring line", line_no, indent + 1);
      file.variables = split_ws(line.substr(5));
      if (file.variables.empty()) throw ParseError("ring needs at least one variable", line_no, indent + 6);
      for (const std::string& v : file.variables) {
        if (!is_ident_start(v[0]) || !std::all_of(v.begin(), v.end(), is_ident_char)) {
          const std::size_t col = static_cast<std::size_t>(raw.find(v)) + 1;
          throw ParseError("invalid variable name '" + v + "'", line_no, col);
        }
      }
      have_ring = true;
    } else if (line.starts_with("char:")) {
      if (have_char) throw ParseError("duplicate char line", line_no, indent + 1);
      const std::string_view value = strip(line.substr(5));
      if (value.empty() || !std::all_of(value.begin(), value.end(), is_digit) || value.size() > 10) {
        const std::size_t col = value.empty() ? indent + 6 : static_cast<std::size_t>(value.data() - raw.data()) + 1;
        throw ParseError("characteristic must be a positive integer", line_no, col);
      }
      const std::uint64_t p = std::stoull(std::string(value));
      if (p >= (1ull << 31) || !is_prime(p)) {
        throw ValidationError("invalid characteristic " + std::string(value) + ": must be a prime below 2^31");
      }
      file.characteristic = static_cast<std::uint32_t>(p);
      have_char = true;
    } else if (line == "ideal:") {
      if (!have_ring) throw ParseError("'ideal:' before 'ring:'", line_no, indent + 1);
      in_ideal = true;
    } else {
      throw ParseError("expected 'ring:', 'char:' or 'ideal:'", line_no, indent + 1);
    }
    if (end == text.size()) break;
  }
  if (!have_ring) throw ParseError("missing 'ring:' line", line_no, 1);
  if (!in_ideal) throw ParseError("missing 'ideal:' line", line_no, 1);
  return file;
}

Ideal load_ideal(const IdealFile& file, const LoadOptions& options) {
  const std::uint32_t p = options.characteristic.value_or(file.characteristic);
  const PrimeField field(p);  // validates
  const RingPtr ring = PolynomialRing::make(file.variables, field);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < file.generators.size(); ++i) {
    const std::size_t line = i < file.generator_lines.size() ? file.generator_lines[i] : i + 1;
    const std::size_t column = i < file.generator_columns.size() ? file.generator_columns[i] : 1;
    Polynomial f = parse_polynomial(file.generators[i], ring, line, column);
    if (f.is_zero()) {
      throw ValidationError("generator " + std::to_string(i + 1) + " ('" + file.generators[i] + "') is zero");
    }
    if (options.require_homogeneous && !f.is_homogeneous()) {
      throw ValidationError("generator " + std::to_string(i + 1) + " ('" + file.generators[i] +
                            "') is not homogeneous");
    }
    gens.push_back(std::move(f));
  }
  return Ideal(ring, std::move(gens));
}

Ideal parse_ideal(std::string_view text, const LoadOptions& options) {
  return load_ideal(parse_ideal_file(text), options);
}

std::string render(const IdealFile& file) {
  std::string out = "ring:";
  for (const std::string& v : file.variables) out += " " + v;
  out += "\nchar: " + std::to_string(file.characteristic) + "\nideal:\n";
  for (const std::string& g : file.generators) out += g + "\n";
  return out;
}

IdealFile to_ideal_file(const Ideal& ideal) {
  IdealFile file;
  file.variables = ideal.ring()->names();
  file.characteristic = ideal.ring()->field().characteristic();
  for (const Polynomial& g : ideal.generators()) file.generators.push_back(to_string(g));
  return file;
}

// ---------------------------------------------------------------------------
// Example families

namespace {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

Polynomial determinant(const PolyMatrix& a, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  if (rows.size() == 1) return a[rows[0]][cols[0]];
  const RingPtr& ring = a[0][0].ring();
  Polynomial det(ring);
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    std::vector<std::size_t> sub_cols;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (j != c) sub_cols.push_back(cols[j]);
    }
    Polynomial term = a[rows[0]][cols[c]] * determinant(a, sub_rows, sub_cols);
    det = (c % 2 == 0) ? det + term : det - term;
  }
  return det;
}

void for_each_subset(std::size_t n, std::size_t r, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  if (r > n) return;
  for (;;) {
    fn(idx);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Polynomial> minors(const PolyMatrix& a, std::size_t r) {
  std::vector<Polynomial> out;
  for_each_subset(a.size(), r, [&](const std::vector<std::size_t>& rows) {
    for_each_subset(a[0].size(), r, [&](const std::vector<std::size_t>& cols) {
      Polynomial d = determinant(a, rows, cols);
      if (!d.is_zero()) out.push_back(std::move(d));
    });
  });
  return out;
}

void require_params(std::string_view name, const std::vector<std::int64_t>& params, std::size_t lo, std::size_t hi) {
  if (params.size() < lo || params.size() > hi) {
    throw ValidationError("example '" + std::string(name) + "' takes " +
                          (lo == hi ? std::to_string(lo) : std::to_string(lo) + "-" + std::to_string(hi)) +
                          " parameters, got " + std::to_string(params.size()));
  }
}

void require_range(std::string_view what, std::int64_t v, std::int64_t lo, std::int64_t hi) {
  if (v < lo || v > hi) {
    throw ValidationError(std::string(what) + " must be in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                          "], got " + std::to_string(v));
  }
}

IdealFile from_polys(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  return to_ideal_file(Ideal(ring, gens));
}

}  // namespace

IdealFile generate_example(std::string_view name, const std::vector<std::int64_t>& params, std::uint64_t seed,
                           std::uint32_t characteristic) {
  const PrimeField field(characteristic);
  const auto max_vars = static_cast<std::int64_t>(kMaxVariables);

  if (name == "rnc") {
    require_params(name, params, 1, 1);
    require_range("rnc k", params[0], 2, max_vars - 2);
    const auto k = static_cast<std::size_t>(params[0]);
    const RingPtr ring = PolynomialRing::standard(k + 1, field);
    PolyMatrix a(2);
    for (std::size_t c = 0; c < k; ++c) {
      a[0].push_back(Polynomial::variable(ring, c));
      a[1].push_back(Polynomial::variable(ring, c + 1));
    }
    return from_polys(ring, minors(a, 2));
  }
  if (name == "segre") {
    require_params(name, params, 2, 2);
    require_range("segre a", params[0], 1, max_vars);
    require_range("segre b", params[1], 1, max_vars);
    const auto rows = static_cast<std::size_t>(params[0] + 1), cols = static_cast<std::size_t>(params[1] + 1);
    if (rows * cols > kMaxVariables - 1) throw ValidationError("segre a b needs too many variables");
    const RingPtr ring = PolynomialRing::standard(rows * cols, field);
    PolyMatrix a(rows);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) a[r].push_back(Polynomial::variable(ring, r * cols + c));
    }
    return from_polys(ring, minors(a, 2));
  }
  if (name == "generic-minors") {
    require_params(name, params, 3, 4);
    require_range("generic-minors rows", params[1], 1, max_vars);
    require_range("generic-minors cols", params[2], 1, max_vars);
    require_range("generic-minors r", params[0], 1, std::min(params[1], params[2]));
    const std::int64_t k = params.size() == 4 ? params[3] : params[1] * params[2] - 1;
    require_range("generic-minors k", k, 1, max_vars - 2);
    const RingPtr ring = PolynomialRing::standard(static_cast<std::size_t>(k + 1), field);
    RandomSource rng(seed);
    PolyMatrix a(static_cast<std::size_t>(params[1]));
    for (auto& row : a) {
      for (std::int64_t c = 0; c < params[2]; ++c) {
        std::vector<Term> terms;
        for (std::size_t v = 0; v < ring->num_vars(); ++v) {
          Monomial m(ring->num_vars());
          m.set(v, 1);
          terms.push_back({field.random(rng), m});
        }
        row.push_back(Polynomial::from_terms(ring, std::move(terms)));
      }
    }
    std::vector<Polynomial> gens = minors(a, static_cast<std::size_t>(params[0]));
    if (gens.empty()) throw ValidationError("all minors vanished; try another seed");
    return from_polys(ring, gens);
  }
  if (name == "hypersurface") {
    require_params(name, params, 2, 2);
    require_range("hypersurface k", params[0], 1, max_vars - 2);
    require_range("hypersurface m", params[1], 1, 64);
    const RingPtr ring = PolynomialRing::standard(static_cast<std::size_t>(params[0] + 1), field);
    RandomSource rng(seed);
    for (;;) {
      std::vector<Term> terms;
      for (const Monomial& m : monomials_of_degree(*ring, static_cast<std::uint32_t>(params[1]))) {
        terms.push_back({field.random(rng), m});
      }
      Polynomial f = Polynomial::from_terms(ring, std::move(terms));
      if (!f.is_zero()) return from_polys(ring, {f});
    }
  }
  if (name == "point-scheme" || name == "cusp-lines") {
    require_params(name, params, 0, 0);
    const RingPtr ring = PolynomialRing::make({"x", "y", "z"}, field);
    auto mono = [&](std::uint32_t a, std::uint32_t b) {
      return Polynomial::monomial(ring, field.one(), Monomial{a, b, 0});
    };
    if (name == "point-scheme") return from_polys(ring, {mono(2, 0), mono(0, 2), mono(1, 1)});
    return from_polys(ring, {mono(2, 1), mono(1, 2)});
  }
  throw ValidationError("unknown example '" + std::string(name) +
                        "' (expected rnc, segre, generic-minors, hypersurface, point-scheme or cusp-lines)");
}

}  // namespace segre
