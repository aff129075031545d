#pragma once

#include "factorinv/errors.hpp"
#include "factorinv/integer.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace factorinv::cli {

/// A validated semigroup definition as read from a spec file or flags.
struct SemigroupSpec {
  enum class Kind { Numerical, Affine, Equations, Block };
  Kind kind = Kind::Numerical;
  /// Numerical (as 1-vectors) and affine.
  std::vector<IntVector> generators;
  /// Equations: one row per constraint, moduli[r] empty for an equality.
  std::vector<IntVector> matrix;
  std::vector<std::optional<Integer>> moduli;
  /// Block: group moduli plus the elements of the sequence support.
  std::vector<Integer> group;
  std::vector<IntVector> elements;

  friend bool operator==(const SemigroupSpec&, const SemigroupSpec&) = default;
};

/// Every problem found while validating a spec. Malformed specs map to exit
/// code 2, semantically invalid ones (gcd, modulus, ...) to 3.
class SpecError : public Error {
 public:
  enum class Category { Malformed, Semantic };
  SpecError(Category category, std::vector<std::string> problems);
  Category category() const noexcept { return category_; }
  const std::vector<std::string>& problems() const noexcept { return problems_; }

 private:
  Category category_;
  std::vector<std::string> problems_;
};

/// JSON record with a "type" field; see the README for the exact layout.
SemigroupSpec parse_spec_text(std::string_view text);
SemigroupSpec parse_spec(const std::filesystem::path& file);

/// "10,17,24,31,43" is numerical; "(2,0),(0,2),(1,1)" is affine.
SemigroupSpec parse_gens(std::string_view text);

/// Canonical JSON form of a spec, with sorted keys; parse_spec_text reads it
/// back to an equal spec.
std::string spec_to_json(const SemigroupSpec& spec);

/// "66", "(2,4)" or "2,4".
IntVector parse_element(std::string_view text);

/// Runs one subcommand; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace factorinv::cli
