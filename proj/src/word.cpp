#include "sturmlex/word.hpp"

#include <algorithm>
#include <vector>

#include "sturmlex/error.hpp"

namespace sturmlex {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedSpec: return "MalformedSpec";
    case ErrorKind::LiteralTooShort: return "LiteralTooShort";
    case ErrorKind::WindowTooLarge: return "WindowTooLarge";
    case ErrorKind::NotAFactor: return "NotAFactor";
    case ErrorKind::NonBinaryAlphabet: return "NonBinaryAlphabet";
    case ErrorKind::AlphabetTooLarge: return "AlphabetTooLarge";
    case ErrorKind::NotImbalanced: return "NotImbalanced";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::Ambiguous: return "Ambiguous";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

std::size_t letter_count(WordView w, char c) noexcept {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), c));
}

std::uint16_t alphabet_mask(WordView w) noexcept {
  std::uint16_t mask = 0;
  for (char c : w) {
    if (is_letter(c)) mask |= static_cast<std::uint16_t>(1u << letter_value(c));
  }
  return mask;
}

bool has_proper_border(WordView w) noexcept {
  if (w.size() < 2) return false;
  // Prefix function; the last entry is the longest proper border.
  std::vector<std::size_t> pi(w.size(), 0);
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::size_t k = pi[i - 1];
    while (k > 0 && w[i] != w[k]) k = pi[k - 1];
    if (w[i] == w[k]) ++k;
    pi[i] = k;
  }
  return pi.back() > 0;
}

std::size_t hamming_distance(WordView a, WordView b) noexcept {
  std::size_t d = 0;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) d += a[i] != b[i];
  return d + (std::max(a.size(), b.size()) - n);
}

std::size_t common_prefix(WordView a, WordView b) noexcept {
  const auto mm = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
  return static_cast<std::size_t>(mm.first - a.begin());
}

bool is_binary(WordView w) noexcept { return (alphabet_mask(w) & ~0b11u) == 0; }

}  // namespace sturmlex
