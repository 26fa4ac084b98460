#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "segre/field.hpp"
#include "segre/groebner.hpp"

namespace segre {

/// Text form of an ideal:
///
///     ring: x0 x1 x2 x3
///     char: 32749
///     ideal:
///     x1^2 - x0*x2
///     x1*x2 - x0*x3
///
/// The char line may be omitted (default 32749). Blank lines are ignored.
/// Terms are `c*v1^e1*v2^e2...` with optional coefficient and exponents,
/// separated by `+` or `-`; whitespace inside a polynomial is insignificant.
struct IdealFile {
  std::vector<std::string> variables;
  std::uint32_t characteristic = kDefaultCharacteristic;
  std::vector<std::string> generators;
  // 1-based source position of each generator, filled in by the parser
  std::vector<std::size_t> generator_lines;
  std::vector<std::size_t> generator_columns;
};

/// Syntax-level parse. Throws ParseError with line and column.
IdealFile parse_ideal_file(std::string_view text);

/// Parses one polynomial in `ring`. line/column locate `text` in its source
/// for error messages.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, std::size_t line = 1, std::size_t column = 1);

struct LoadOptions {
  std::optional<std::uint32_t> characteristic;  // overrides the file
  bool require_homogeneous = false;
};

/// Builds the ideal described by a file. Throws ParseError for bad
/// polynomials and ValidationError for a composite characteristic, a zero
/// generator, or (when required) a non-homogeneous generator.
Ideal load_ideal(const IdealFile& file, const LoadOptions& options = {});

/// parse_ideal_file followed by load_ideal.
Ideal parse_ideal(std::string_view text, const LoadOptions& options = {});

/// Renders a file in the grammar above.
std::string render(const IdealFile& file);
IdealFile to_ideal_file(const Ideal& ideal);

/// Built-in example families:
///   rnc k                         2x2 minors of [x0..x(k-1); x1..xk]
///   segre a b                     2x2 minors of the (a+1)x(b+1) matrix of coordinates
///   generic-minors r rows cols [k]  r x r minors of a rows x cols matrix of random
///                                 linear forms in x0..xk (k defaults to rows*cols-1)
///   hypersurface k m              one random form of degree m in x0..xk
///   point-scheme                  (x^2, y^2, x*y)
///   cusp-lines                    (x^2*y, x*y^2)
/// Random families draw from `seed`. Throws ValidationError for bad parameters.
IdealFile generate_example(std::string_view name, const std::vector<std::int64_t>& params, std::uint64_t seed = 0,
                           std::uint32_t characteristic = kDefaultCharacteristic);

}  // namespace segre
