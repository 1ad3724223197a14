#include "sturmlex/christoffel.hpp"

#include <algorithm>
#include <numeric>

#include "sturmlex/error.hpp"

namespace sturmlex {

FiniteWord lower_christoffel(std::int64_t ones, std::int64_t zeros) {
  if (ones < 1 || zeros < 1) throw Error(ErrorKind::MalformedSpec, "Christoffel words need p >= 1 and q >= 1");
  if (std::gcd(ones, zeros) != 1) {
    throw Error(ErrorKind::NotCoprime, std::to_string(ones) + " and " + std::to_string(zeros) + " are not coprime");
  }
  const std::int64_t len = ones + zeros;
  FiniteWord out(static_cast<std::size_t>(len), '0');
  for (std::int64_t i = 0; i < len; ++i) {
    out[static_cast<std::size_t>(i)] = letter_char(static_cast<int>((i + 1) * ones / len - i * ones / len));
  }
  return out;
}

std::vector<FiniteWord> conjugates(WordView w) {
  std::vector<FiniteWord> out;
  out.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    FiniteWord r(w.substr(i));
    r += w.substr(0, i);
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ChristoffelPair christoffel_pair(std::int64_t ones, std::int64_t zeros) {
  ChristoffelPair pair;
  pair.lower = lower_christoffel(ones, zeros);
  std::vector<FiniteWord> others;
  for (auto& c : conjugates(pair.lower)) {
    if (c != pair.lower && !has_proper_border(c)) others.push_back(std::move(c));
  }
  if (others.size() != 1) {
    throw Error(ErrorKind::Ambiguous, "expected one other unbordered conjugate of " + pair.lower + ", found " +
                                          std::to_string(others.size()));
  }
  pair.upper = std::move(others.front());
  pair.core = pair.lower.substr(1, pair.lower.size() - 2);
  return pair;
}

SingularWord singular_word(std::int64_t ones, std::int64_t zeros, const FactorTable& table) {
  const auto pair = christoffel_pair(ones, zeros);
  const std::size_t n = pair.lower.size();
  if (n > table.max_len()) throw Error(ErrorKind::WindowTooLarge, "Christoffel length exceeds the table");
  if (!table.saturated(n)) throw Error(ErrorKind::NotFound, "length " + std::to_string(n) + " is not saturated");
  const auto conj = conjugates(pair.lower);
  std::vector<std::size_t> extra;
  for (std::size_t i = 0; i < table.complexity(n); ++i) {
    if (!std::binary_search(conj.begin(), conj.end(), table.factor(n, i))) extra.push_back(i);
  }
  if (extra.empty()) throw Error(ErrorKind::NotFound, "every length-" + std::to_string(n) + " factor is a conjugate");
  if (extra.size() > 1) {
    std::string list;
    for (std::size_t i : extra) list += " " + FiniteWord(table.factor(n, i));
    throw Error(ErrorKind::Ambiguous, "several non-conjugate factors:" + list);
  }
  const std::size_t idx = extra.front();
  SingularWord s;
  s.word = FiniteWord(table.factor(n, idx));
  s.letter = s.word.front();
  if (s.word.back() != s.letter || s.word.substr(1, n - 2) != pair.core) {
    throw Error(ErrorKind::NotFound, s.word + " is not of the form xux with u = '" + pair.core + "'");
  }
  s.kind = s.letter == '0' ? ExtremalKind::Min : ExtremalKind::Max;
  const std::size_t expected = s.kind == ExtremalKind::Min ? 0 : table.complexity(n) - 1;
  if (idx != expected) throw Error(ErrorKind::NotFound, s.word + " is not extremal");
  return s;
}

bool ChristoffelReport::all_passed() const noexcept {
  return !items.empty() && std::all_of(items.begin(), items.end(), [](const auto& i) { return i.passed; });
}

ChristoffelReport verify_christoffel_properties(std::int64_t ones, std::int64_t zeros, const FactorTable& table) {
  ChristoffelReport r;
  r.ones = ones;
  r.zeros = zeros;
  r.pair = christoffel_pair(ones, zeros);
  r.n = r.pair.lower.size();
  const std::size_t n = r.n;
  if (n > table.max_len()) {
    for (const char* item : {"i", "ii", "iii", "iv", "v"}) {
      r.items.push_back({item, false, "length " + std::to_string(n) + " exceeds the table", {}});
    }
    return r;
  }
  r.saturated = table.saturated(n);
  const auto& lower = r.pair.lower;
  const auto& upper = r.pair.upper;
  const auto conj = conjugates(lower);

  {
    auto unb = unbordered_factors(table, n);
    std::vector<FiniteWord> expected{lower, upper};
    std::sort(expected.begin(), expected.end());
    const bool ok = unb == expected;
    r.items.push_back({"i", ok, ok ? "unbordered factors are 0u1 and 1u0" : "unbordered factors differ", unb});
  }
  {
    const bool ok = std::binary_search(conj.begin(), conj.end(), upper);
    r.items.push_back({"ii", ok, ok ? "0u1 and 1u0 are conjugates" : "not conjugates", {lower, upper}});
  }
  {
    std::vector<FiniteWord> missing;
    for (const auto& c : conj) {
      if (!table.contains(c)) missing.push_back(c);
    }
    r.items.push_back({"iii", missing.empty(),
                       missing.empty() ? "all " + std::to_string(conj.size()) + " conjugates occur"
                                       : std::to_string(missing.size()) + " conjugates missing",
                       missing});
  }
  const FiniteWord zero_form = "0" + r.pair.core + "0";
  const FiniteWord one_form = "1" + r.pair.core + "1";
  const bool has_zero = table.contains(zero_form);
  const bool has_one = table.contains(one_form);
  {
    PropertyItem item{"iv", false, "", {}};
    if (has_zero == has_one) {
      item.detail = has_zero ? "both 0u0 and 1u1 occur" : "neither 0u0 nor 1u1 occurs";
      if (has_zero) item.witness = {zero_form, one_form};
    } else {
      const FiniteWord& singular = has_zero ? zero_form : one_form;
      const WordView end = has_zero ? table.factor(n, 0) : table.factor(n, table.complexity(n) - 1);
      item.passed = singular == end;
      item.detail = singular + (item.passed ? (has_zero ? " occurs and is minimal" : " occurs and is maximal")
                                            : " occurs but is not extremal");
      item.witness = {singular};
    }
    r.items.push_back(std::move(item));
  }
  {
    auto expected = conj;
    if (has_zero != has_one) expected.push_back(has_zero ? zero_form : one_form);
    std::sort(expected.begin(), expected.end());
    const auto actual = table.factors(n);
    const bool ok = actual == expected && actual.size() == n + 1;
    std::vector<FiniteWord> extra;
    std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(), std::back_inserter(extra));
    r.items.push_back({"v", ok,
                       "p(" + std::to_string(n) + ") = " + std::to_string(actual.size()) +
                           (ok ? "" : ", expected conjugates plus one singular word"),
                       extra});
  }
  return r;
}

}  // namespace sturmlex
