#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sturmlex/word.hpp"

namespace sturmlex {

/// Exact non-negative rational a/b with b >= 1.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const Rational&, const Rational&) = default;
};

// A finite window only; asking for letters past its end is an error.
struct Literal {
  FiniteWord word;
};

struct Periodic {
  FiniteWord seed;
};

struct UltimatelyPeriodic {
  FiniteWord preperiod;
  FiniteWord seed;
};

/// Fixed point of a substitution, prolonged from `seed`.
struct Morphic {
  std::array<std::optional<FiniteWord>, kMaxLetter + 1> images;
  char seed = '0';
};

/// Characteristic word built by s(-1) = 1, s(0) = 0, s(m) = s(m-1)^d(m) s(m-2).
/// The directive is repeated cyclically once its entries are used up.
struct StandardSequence {
  std::vector<std::uint32_t> directive;
};

/// Lower mechanical word w_i = floor((i+1)a + r) - floor(i a + r) with slope
/// a = ones / (ones + zeros) and intercept r in [0, 1).
struct MechanicalRational {
  std::int64_t ones = 0;
  std::int64_t zeros = 1;
  Rational intercept;
};

struct WordSpec {
  std::variant<Literal, Periodic, UltimatelyPeriodic, Morphic, StandardSequence, MechanicalRational>
      kind;
};

/// Checks the invariants of a spec and throws Error(MalformedSpec) on failure.
void validate(const WordSpec& spec);

/// First n letters of the infinite word described by `spec`.
FiniteWord generate_prefix(const WordSpec& spec, std::size_t n);

enum class Tristate { Yes, No, Unknown };

struct KnownFlags {
  Tristate recurrent = Tristate::Unknown;
  Tristate aperiodic = Tristate::Unknown;

  friend bool operator==(const KnownFlags&, const KnownFlags&) = default;
};

/// What the generator guarantees a priori about recurrence and aperiodicity.
KnownFlags known_flags(const WordSpec& spec);

/// True for specs whose infinite word is Sturmian by construction.
bool is_sturmian_by_construction(const WordSpec& spec) noexcept;

/// Letters of the infinite word that the generator can emit; used for the
/// alphabet size. For literals it is the literal's own alphabet.
std::uint16_t spec_alphabet(const WordSpec& spec);

/// Length of the finite window when the spec is a Literal.
std::optional<std::size_t> literal_length(const WordSpec& spec) noexcept;

/// Whether the substitution matrix restricted to letters reachable from the
/// seed is primitive.
bool is_primitive(const Morphic& morphism);

// Word-spec mini-language:
//   fib
//   morphic:0->01,1->0;seed=0
//   periodic:01
//   ultper:0|1
//   std:1,1,2,3
//   mech:2/5@0        (slope 2/5, intercept a/b or 0)
//   literal:0100101
WordSpec parse_spec(std::string_view text);

/// Canonical text of a spec, parseable by parse_spec.
std::string format_spec(const WordSpec& spec);

}  // namespace sturmlex
