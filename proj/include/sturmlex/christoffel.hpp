#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sturmlex/factor_index.hpp"

namespace sturmlex {

// Slope convention: `ones` is the number of 1s, the word length is
// ones + zeros.

/// w_i = floor((i+1)p/(p+q)) - floor(i p/(p+q)). Throws NotCoprime, or
/// MalformedSpec when either count is below 1.
FiniteWord lower_christoffel(std::int64_t ones, std::int64_t zeros);

/// All rotations of w, deduplicated and sorted.
std::vector<FiniteWord> conjugates(WordView w);

struct ChristoffelPair {
  FiniteWord lower;  // 0u1
  FiniteWord upper;  // 1u0
  FiniteWord core;   // u
};

/// The upper word is the unbordered conjugate of the lower one other than
/// itself.
ChristoffelPair christoffel_pair(std::int64_t ones, std::int64_t zeros);

struct SingularWord {
  FiniteWord word;  // xux
  char letter = '0';
  ExtremalKind kind = ExtremalKind::Min;
};

/// The length-(p+q) factor that is not a conjugate of the Christoffel word.
/// Throws NotFound when there is none (or the length is unsaturated or the
/// factor is not of the form xux, extremal) and Ambiguous when there are
/// several.
SingularWord singular_word(std::int64_t ones, std::int64_t zeros, const FactorTable& table);

struct PropertyItem {
  std::string item;  // "i" .. "v"
  bool passed = false;
  std::string detail;
  std::vector<FiniteWord> witness;
};

struct ChristoffelReport {
  std::int64_t ones = 0;
  std::int64_t zeros = 0;
  std::size_t n = 0;
  ChristoffelPair pair;
  bool saturated = false;
  std::vector<PropertyItem> items;

  bool all_passed() const noexcept;
};

/// Checks at length p+q:
///   (i)   the unbordered factors are exactly {0u1, 1u0}
///   (ii)  0u1 and 1u0 are conjugates
///   (iii) every conjugate of 0u1 is a factor
///   (iv)  exactly one of 0u0, 1u1 is a factor, and it is extremal
///   (v)   the factors are the conjugates plus that singular word, so p(n) = n+1
ChristoffelReport verify_christoffel_properties(std::int64_t ones, std::int64_t zeros, const FactorTable& table);

}  // namespace sturmlex
