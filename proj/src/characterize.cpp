#include "sturmlex/characterize.hpp"

#include <algorithm>

#include "sturmlex/error.hpp"

namespace sturmlex {
namespace {

void require_binary(const FactorTable& table, const char* check) {
  if (!table.binary()) {
    throw Error(ErrorKind::NonBinaryAlphabet, std::string(check) + " needs a word over {0,1}");
  }
}

struct AdjacentScan {
  Verdict verdict;
  std::optional<NfopViolation> hit;
  std::optional<NfopViolation> hint;
};

// Runs `mismatch(v, v')` over every adjacent pair of every length. Findings at
// unsaturated lengths are kept only as hints.
template <class Mismatch>
AdjacentScan scan_adjacent(const FactorTable& table, std::string check, Mismatch mismatch) {
  AdjacentScan scan;
  scan.verdict.check = std::move(check);
  scan.verdict.saturated_lengths = saturation(table).saturated_lengths();
  std::vector<std::size_t> skipped;
  std::size_t judged = 0;
  for (std::size_t n = 1; n <= table.max_len() && !scan.hit; ++n) {
    const bool sat = table.saturated(n);
    for (std::size_t i = 0; i + 1 < table.complexity(n); ++i) {
      const WordView v = table.factor(n, i);
      const WordView next = table.factor(n, i + 1);
      if (auto reason = mismatch(v, next)) {
        NfopViolation found{n, FiniteWord(v), FiniteWord(next), NfopVariant::Binary, std::move(*reason)};
        if (sat) {
          scan.hit = std::move(found);
        } else if (!scan.hint) {
          scan.hint = std::move(found);
        }
        break;
      }
    }
    if (scan.hit) break;
    if (!sat) {
      skipped.push_back(n);
    } else if (skipped.empty()) {
      judged = n;
    }
  }

  auto& v = scan.verdict;
  v.up_to = judged;
  if (scan.hit) {
    v.status = Status::Violated;
    v.n = scan.hit->n;
    v.witness = {scan.hit->left, scan.hit->right};
    v.reason = scan.hit->reason;
  } else if (!skipped.empty()) {
    v.status = Status::Indeterminate;
    v.reason = "unsaturated lengths:";
    for (std::size_t n : skipped) v.reason += " " + std::to_string(n);
  } else {
    v.status = Status::ConsistentUpTo;
    v.up_to = table.max_len();
  }
  return scan;
}

bool letters_allowed(char a, char b, NfopVariant variant) {
  switch (variant) {
    case NfopVariant::AnyLetters: return a < b;
    case NfopVariant::NeighborLetters: return b == a + 1;
    case NfopVariant::Binary: return a == '0' && b == '1';
  }
  return false;
}

FiniteWord with_ends(char first, WordView middle, char last) {
  FiniteWord out;
  out.reserve(middle.size() + 2);
  out += first;
  out += middle;
  out += last;
  return out;
}

}  // namespace

std::string_view to_string(Status status) noexcept {
  switch (status) {
    case Status::Violated: return "Violated";
    case Status::ConsistentUpTo: return "ConsistentUpTo";
    case Status::Indeterminate: return "Indeterminate";
  }
  return "Indeterminate";
}

std::string_view to_string(ImbalanceCase c) noexcept {
  switch (c) {
    case ImbalanceCase::Unclassified: return "Unclassified";
    case ImbalanceCase::BothExtensions: return "BothExtensions";
    case ImbalanceCase::PrefixCase: return "PrefixCase";
    case ImbalanceCase::WindowIndeterminate: return "WindowIndeterminate";
  }
  return "Unclassified";
}

std::string_view to_string(Judgment j) noexcept {
  switch (j) {
    case Judgment::SturmianConsistentUpTo: return "SturmianConsistentUpTo";
    case Judgment::NotSturmian: return "NotSturmian";
    case Judgment::Indeterminate: return "Indeterminate";
  }
  return "Indeterminate";
}

std::optional<std::string> nfop_shape_mismatch(WordView v, WordView v2, NfopVariant variant) {
  const std::size_t n = v.size();
  const std::size_t k = common_prefix(v, v2);
  if (k == n) return "equal words";
  const char a = v[k];
  const char b = v2[k];
  if (a > b) return "pair is not increasing";
  auto letters_reason = [&] {
    return std::string("letters ") + a + "," + b +
           (variant == NfopVariant::NeighborLetters ? " are not consecutive" : " are not 0,1");
  };
  if (k + 1 == n) {
    if (letters_allowed(a, b, variant)) return std::nullopt;
    return letters_reason();
  }
  if (v[k + 1] == b && v2[k + 1] == a && v.substr(k + 2) == v2.substr(k + 2)) {
    if (letters_allowed(a, b, variant)) return std::nullopt;
    return letters_reason();
  }
  const std::size_t d = hamming_distance(v, v2);
  if (d == 1) return "single difference not at the last position";
  if (d == 2) return "two differences are not an adjacent transposition";
  return "differ in " + std::to_string(d) + " positions";
}

NfopOutcome check_nfop(const FactorTable& table, NfopVariant variant) {
  if (variant == NfopVariant::Binary && !table.binary()) {
    throw Error(ErrorKind::AlphabetTooLarge, "the binary NFOp condition needs a word over {0,1}");
  }
  auto scan = scan_adjacent(table, "nfop", [variant](WordView v, WordView next) {
    return nfop_shape_mismatch(v, next, variant);
  });
  if (scan.hit) scan.hit->variant = variant;
  if (scan.hint) scan.hint->variant = variant;
  return {std::move(scan.verdict), std::move(scan.hit), std::move(scan.hint)};
}

BalanceOutcome check_balance(const FactorTable& table) {
  require_binary(table, "balance");
  BalanceOutcome out;
  out.verdict.check = "balance";
  out.verdict.saturated_lengths = saturation(table).saturated_lengths();
  const std::size_t max_n = table.max_len();
  // The shortest imbalanced pair is unique, so the first hit is the witness.
  for (std::size_t m = 0; m + 2 <= max_n; ++m) {
    const std::size_t n = m + 2;
    for (std::size_t i = 0; i < table.complexity(n); ++i) {
      const WordView f = table.factor(n, i);
      if (f.front() != '0') break;
      if (f.back() != '0') continue;
      const WordView u = f.substr(1, m);
      const FiniteWord ones = with_ends('1', u, '1');
      if (!table.contains(ones)) continue;
      ImbalanceWitness w;
      w.u = FiniteWord(u);
      w.zero_form = FiniteWord(f);
      w.one_form = ones;
      out.verdict.status = Status::Violated;
      out.verdict.up_to = m == 0 ? 0 : m - 1;
      out.verdict.n = n;
      out.verdict.witness = {w.zero_form, w.one_form};
      out.verdict.reason = "u = '" + w.u + "'";
      out.witness = std::move(w);
      return out;
    }
  }
  out.verdict.status = Status::ConsistentUpTo;
  out.verdict.up_to = max_n >= 2 ? max_n - 2 : 0;
  return out;
}

std::optional<FiniteWord> find_crossed_extension(const FactorTable& table) {
  for (std::size_t m = 0; m + 3 <= table.max_len(); ++m) {
    const std::size_t n = m + 3;
    for (std::size_t i = 0; i < table.complexity(n); ++i) {
      const WordView f = table.factor(n, i);
      if (f.substr(0, 2) != "10" || f.back() != '0') continue;
      const WordView u = f.substr(2, m);
      if (table.contains("01" + FiniteWord(u) + "1")) return FiniteWord(u);
    }
  }
  return std::nullopt;
}

ImbalanceWitness classify_imbalance(const FactorTable& table) {
  auto balance = check_balance(table);
  if (!balance.witness) throw Error(ErrorKind::NotImbalanced, "the table has no imbalanced pair");
  ImbalanceWitness w = std::move(*balance.witness);
  const FiniteWord ten = "10" + w.u + "0";
  const FiniteWord one = "01" + w.u + "1";
  const bool has_ten = table.contains(ten);
  const bool has_one = table.contains(one);
  if (has_ten && has_one) {
    w.kind = ImbalanceCase::BothExtensions;
    return w;
  }

  auto undecided = [&w](std::string note) {
    w.kind = ImbalanceCase::WindowIndeterminate;
    w.note = std::move(note);
    return w;
  };
  const WordView prefix(table.prefix());
  char x;
  if (prefix.starts_with(w.zero_form)) {
    x = '0';
  } else if (prefix.starts_with(w.one_form)) {
    x = '1';
  } else {
    return undecided("neither 0u0 nor 1u1 is a prefix of the window");
  }
  const FiniteWord& xux = x == '0' ? w.zero_form : w.one_form;
  // Every internal occurrence of xux must be preceded by x.
  if ((x == '0' && has_ten) || (x == '1' && has_one)) {
    return undecided(std::string(x == '0' ? ten : one) + " occurs in the window");
  }

  std::vector<std::size_t> occ;
  if (xux.size() <= table.max_len()) {
    occ = table.positions(xux);
  } else {
    for (auto p = prefix.find(xux); p != WordView::npos; p = prefix.find(xux, p + 1)) occ.push_back(p);
  }
  for (std::size_t i = 0; i < occ.size(); ++i) {
    if (occ[i] != i) return undecided("occurrences of " + xux + " are not an initial run of positions");
  }
  if (occ.back() + xux.size() > prefix.size() / 2) {
    return undecided("occurrences of " + xux + " reach the second half of the window");
  }

  const ExtremalKind kind = x == '0' ? ExtremalKind::Min : ExtremalKind::Max;
  for (std::size_t m = 1; m <= table.max_len(); ++m) {
    const WordView expected = kind == ExtremalKind::Min ? table.factor(m, 0) : table.factor(m, table.complexity(m) - 1);
    if (prefix.substr(0, m) != expected) {
      return undecided("prefix of length " + std::to_string(m) + " is not " +
                       (kind == ExtremalKind::Min ? "minimal" : "maximal"));
    }
  }
  w.kind = ImbalanceCase::PrefixCase;
  w.prefix_letter = x;
  w.prefix_occurrences = occ.size();
  w.prefix_kind = kind;
  return w;
}

Verdict check_hamming2(const FactorTable& table) {
  require_binary(table, "hamming2");
  return scan_adjacent(table, "hamming2", [](WordView v, WordView next) -> std::optional<std::string> {
           const std::size_t d = hamming_distance(v, next);
           if (d <= 2) return std::nullopt;
           return "differ in " + std::to_string(d) + " positions";
         })
      .verdict;
}

Verdict check_ones_monotone(const FactorTable& table) {
  require_binary(table, "ones");
  return scan_adjacent(table, "ones", [](WordView v, WordView next) -> std::optional<std::string> {
           const std::size_t a = letter_count(v, '1');
           const std::size_t b = letter_count(next, '1');
           if (a <= b) return std::nullopt;
           return "1-count drops from " + std::to_string(a) + " to " + std::to_string(b);
         })
      .verdict;
}

PeriodicityCertificate periodicity_certificate(const FactorTable& table) {
  for (std::size_t n = 1; n <= table.max_len(); ++n) {
    if (table.saturated(n) && table.complexity(n) <= n) return {true, n, 0, table.complexity(n)};
  }
  return {false, 0, table.max_len(), 0};
}

Verdict check_complexity(const FactorTable& table) {
  Verdict v;
  v.check = "complexity";
  v.saturated_lengths = saturation(table).saturated_lengths();
  std::vector<std::size_t> skipped;
  for (std::size_t n = 1; n <= table.max_len(); ++n) {
    const std::size_t p = table.complexity(n);
    const bool excess = p > n + 1;
    const bool deficit = p < n + 1 && table.saturated(n);
    if (excess || deficit) {
      v.status = Status::Violated;
      v.n = n;
      const std::size_t shown = std::min(p, n + 2);
      for (std::size_t i = 0; i < shown; ++i) v.witness.emplace_back(table.factor(n, i));
      v.reason = "p(" + std::to_string(n) + ") = " + std::to_string(p);
      return v;
    }
    if (!table.saturated(n)) {
      skipped.push_back(n);
    } else if (skipped.empty()) {
      v.up_to = n;
    }
  }
  if (skipped.empty()) {
    v.status = Status::ConsistentUpTo;
    v.up_to = table.max_len();
  } else {
    v.status = Status::Indeterminate;
    v.reason = "unsaturated lengths:";
    for (std::size_t n : skipped) v.reason += " " + std::to_string(n);
  }
  return v;
}

RecurrenceResult recurrence_heuristic(const FactorTable& table, std::optional<KnownFlags> flags) {
  RecurrenceResult r;
  const std::size_t half = table.prefix().size() / 2;
  for (std::size_t n = 1; n <= table.max_len() && !r.witness; ++n) {
    const auto list = table.entries(n);
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto& e = list[i];
      if (e.count != 1 || e.first + n > half) continue;
      if (!r.witness || e.first < r.position) {
        r.witness = FiniteWord(table.factor(n, i));
        r.position = e.first;
      }
    }
  }
  r.recurrent_consistent = !r.witness;
  if (flags && flags->recurrent != Tristate::Unknown) {
    r.from_flags = true;
    r.recurrent_consistent = flags->recurrent == Tristate::Yes;
    if (r.recurrent_consistent) r.witness.reset();
  }
  return r;
}

std::optional<NonAdjacentPair> find_non_adjacent_shape_pair(const FactorTable& table, std::size_t max_n) {
  const std::size_t top = std::min(max_n, table.max_len());
  for (std::size_t n = 1; n <= top; ++n) {
    for (std::size_t i = 0; i < table.complexity(n); ++i) {
      const WordView f = table.factor(n, i);
      auto check = [&](FiniteWord partner) -> std::optional<NonAdjacentPair> {
        const auto j = table.index_of(partner);
        if (j && *j != i + 1) return NonAdjacentPair{n, FiniteWord(f), std::move(partner)};
        return std::nullopt;
      };
      if (f.back() == '0') {
        FiniteWord g(f);
        g.back() = '1';
        if (auto bad = check(std::move(g))) return bad;
      }
      for (std::size_t k = 0; k + 1 < n; ++k) {
        if (f[k] != '0' || f[k + 1] != '1') continue;
        FiniteWord g(f);
        std::swap(g[k], g[k + 1]);
        if (auto bad = check(std::move(g))) return bad;
      }
    }
  }
  return std::nullopt;
}

}  // namespace sturmlex
