#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sturmlex/word.hpp"

namespace sturmlex {

/// One distinct factor of a fixed length. The factor itself is the slice
/// prefix[first, first + n); its occurrences are the suffix-array rows
/// [rows_begin, rows_end).
struct FactorEntry {
  std::size_t first = 0;
  std::size_t count = 0;
  std::size_t rows_begin = 0;
  std::size_t rows_end = 0;
};

/// Sorted per-length factor sets of a finite prefix, for every length 1..N.
///
/// Lists are strictly increasing in lexicographic order; the successor of a
/// factor is the next entry of its list. Immutable after build().
class FactorTable {
 public:
  /// Throws Error(WindowTooLarge) unless 1 <= max_len <= |prefix|.
  static FactorTable build(FiniteWord prefix, std::size_t max_len);

  const FiniteWord& prefix() const noexcept { return prefix_; }
  std::size_t max_len() const noexcept { return max_len_; }
  std::size_t complexity(std::size_t n) const { return lists_.at(n - 1).size(); }

  std::span<const FactorEntry> entries(std::size_t n) const { return lists_.at(n - 1); }
  WordView factor(std::size_t n, std::size_t index) const {
    return WordView(prefix_).substr(lists_.at(n - 1)[index].first, n);
  }
  std::vector<FiniteWord> factors(std::size_t n) const;

  /// Index of v in the list of its length, if v is a factor. Lengths above
  /// max_len are answered by direct search and never have an index.
  std::optional<std::size_t> index_of(WordView v) const;
  bool contains(WordView v) const;

  /// Number of occurrences |prefix|_v (requires |v| <= max_len).
  std::size_t count(WordView v) const;
  /// Start positions of v, ascending.
  std::vector<std::size_t> positions(WordView v) const;

  /// True when every length-n factor already occurs inside the first half.
  bool saturated(std::size_t n) const { return saturated_.at(n - 1); }
  /// Start of the latest first occurrence among length-n factors.
  std::size_t last_new_factor(std::size_t n) const { return last_new_.at(n - 1); }

  std::uint16_t alphabet() const noexcept { return alphabet_; }
  bool binary() const noexcept { return (alphabet_ & ~0b11u) == 0; }

 private:
  FiniteWord prefix_;
  std::size_t max_len_ = 0;
  std::vector<std::size_t> suffix_rows_;  // positions sorted by their first max_len letters
  std::vector<std::vector<FactorEntry>> lists_;
  std::vector<bool> saturated_;
  std::vector<std::size_t> last_new_;
  std::uint16_t alphabet_ = 0;
};

/// Lexicographic successor of v among factors of the same length, or nullopt
/// when v is maximal. Throws Error(NotAFactor).
std::optional<FiniteWord> successor(const FactorTable& table, WordView v);

enum class ExtremalKind { Min, Max };

struct Extremal {
  FiniteWord min;
  FiniteWord max;
};
Extremal extremal(const FactorTable& table, std::size_t n);

/// Factors v of length n with both 0v and 1v factors (needs n + 1 <= N).
std::vector<FiniteWord> left_special(const FactorTable& table, std::size_t n);

/// Length-n factors with no border other than the empty word and themselves.
std::vector<FiniteWord> unbordered_factors(const FactorTable& table, std::size_t n);

struct SaturationEntry {
  std::size_t n = 0;
  bool saturated = false;
  std::size_t last_new_factor = 0;
};
struct SaturationReport {
  std::vector<SaturationEntry> lengths;

  std::vector<std::size_t> saturated_lengths() const;
  bool all_saturated() const;
};
SaturationReport saturation(const FactorTable& table);

/// `<n>\t<factor>\t<count>` lines, lengths ascending then lex ascending.
std::string dump_table(const FactorTable& table);

}  // namespace sturmlex
