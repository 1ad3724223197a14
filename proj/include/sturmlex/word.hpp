#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace sturmlex {

// Words are stored as strings of the digit characters '0'..'9'. Character
// order coincides with the letter order 0 < 1 < ... < 9, so std::string
// comparison of equal-length words is the lexicographic order on factors.
using FiniteWord = std::string;
using WordView = std::string_view;

inline constexpr int kMaxLetter = 9;

constexpr bool is_letter(char c) noexcept { return c >= '0' && c <= '9'; }
constexpr int letter_value(char c) noexcept { return c - '0'; }
constexpr char letter_char(int v) noexcept { return static_cast<char>('0' + v); }

/// Number of occurrences of letter `c` in `w` (|w|_c).
std::size_t letter_count(WordView w, char c) noexcept;

/// Bitmask of letters occurring in `w` (bit i set iff letter i occurs).
std::uint16_t alphabet_mask(WordView w) noexcept;

/// True when w has a border other than the empty word and w itself.
bool has_proper_border(WordView w) noexcept;

std::size_t hamming_distance(WordView a, WordView b) noexcept;

/// Length of the longest common prefix.
std::size_t common_prefix(WordView a, WordView b) noexcept;

bool is_binary(WordView w) noexcept;

}  // namespace sturmlex
