#pragma once

// Naive quadratic reimplementations used as test oracles. They deliberately
// share no code with the library beyond plain std::string.

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline std::vector<std::string> factors(const std::string& w, std::size_t n) {
  std::set<std::string> s;
  for (std::size_t i = 0; i + n <= w.size(); ++i) s.insert(w.substr(i, n));
  return {s.begin(), s.end()};
}

inline std::size_t occurrences(const std::string& w, const std::string& v) {
  std::size_t c = 0;
  for (std::size_t i = 0; i + v.size() <= w.size(); ++i) c += w.compare(i, v.size(), v) == 0;
  return c;
}

inline bool saturated(const std::string& w, std::size_t n) {
  return factors(w.substr(0, w.size() / 2), n) == factors(w, n);
}

// All v' that an NFOp-respecting successor of v may be: swap an adjacent
// "ab" (a < b) into "ba", or raise the last letter.
inline std::set<std::string> allowed_successors(const std::string& v, int variant) {
  std::set<std::string> out;
  auto ok = [variant](char a, char b) {
    if (variant == 1) return a < b;
    if (variant == 2) return b == a + 1;
    return a == '0' && b == '1';
  };
  for (std::size_t k = 0; k + 1 < v.size(); ++k) {
    if (ok(v[k], v[k + 1])) {
      std::string s = v;
      std::swap(s[k], s[k + 1]);
      out.insert(s);
    }
  }
  for (char b = '0'; b <= '9'; ++b) {
    if (ok(v.back(), b)) {
      std::string s = v;
      s.back() = b;
      out.insert(s);
    }
  }
  return out;
}

struct PairHit {
  std::size_t n;
  std::string left, right;
  bool operator==(const PairHit&) const = default;
};

inline std::optional<PairHit> nfop(const std::string& w, std::size_t max_n, int variant) {
  for (std::size_t n = 1; n <= max_n; ++n) {
    if (!saturated(w, n)) continue;
    const auto f = factors(w, n);
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
      if (!allowed_successors(f[i], variant).count(f[i + 1])) return PairHit{n, f[i], f[i + 1]};
    }
  }
  return std::nullopt;
}

inline std::size_t ones(const std::string& v) { return static_cast<std::size_t>(std::count(v.begin(), v.end(), '1')); }

// Minimal imbalanced pair by comparing 1-counts of all equal-length factor
// pairs. Returns the core u of the (0u0, 1u1) pair found at the shortest
// imbalanced length; aborts (returns "?") if that pair is not of that form.
inline std::optional<std::string> balance_core(const std::string& w, std::size_t max_n) {
  for (std::size_t n = 2; n <= max_n; ++n) {
    const auto f = factors(w, n);
    std::optional<std::string> found;
    for (const auto& a : f) {
      for (const auto& b : f) {
        if (ones(b) < ones(a) + 2) continue;
        // At the shortest imbalanced length the pair must read 0u0 / 1u1.
        if (a.front() != '0' || a.back() != '0' || b.front() != '1' || b.back() != '1' ||
            a.substr(1, n - 2) != b.substr(1, n - 2)) {
          return std::string("?");
        }
        if (found && *found != a.substr(1, n - 2)) return std::string("?");
        found = a.substr(1, n - 2);
      }
    }
    if (found) return found;
  }
  return std::nullopt;
}

inline std::string fibonacci(std::size_t n) {
  std::string w = "0";
  while (w.size() < n) {
    std::string next;
    for (char c : w) next += c == '0' ? "01" : "0";
    w = next;
  }
  return w.substr(0, n);
}

inline std::string thue_morse(std::size_t n) {
  std::string w;
  for (std::size_t i = 0; i < n; ++i) w += static_cast<char>('0' + (__builtin_popcountll(i) & 1));
  return w;
}

inline std::string random_binary(std::mt19937_64& rng, std::size_t len) {
  std::bernoulli_distribution coin(0.5);
  std::string w(len, '0');
  for (auto& c : w) c = coin(rng) ? '1' : '0';
  return w;
}

}  // namespace oracle
