#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sturmlex/factor_index.hpp"
#include "sturmlex/wordgen.hpp"

namespace sturmlex {

enum class Status { Violated, ConsistentUpTo, Indeterminate };
std::string_view to_string(Status status) noexcept;

/// Finite-window outcome of one check.
///
/// Violated carries witness factors that are verbatim substrings of the
/// prefix. ConsistentUpTo(up_to) only speaks about the window. Indeterminate
/// means no violation was seen but some lengths could not be judged
/// (unsaturated lists, unknown hypotheses); up_to is then the longest n with
/// every length 1..n judged.
struct Verdict {
  std::string check;
  Status status = Status::Indeterminate;
  std::size_t up_to = 0;
  std::optional<std::size_t> n;
  std::vector<FiniteWord> witness;
  std::string reason;
  std::vector<std::size_t> saturated_lengths;
};

// ---- NFOp -----------------------------------------------------------------

/// Which adjacency shapes are allowed for a lexicographically consecutive pair
/// (v, v'):
///   AnyLetters      v = x a b y, v' = x b a y or v = x a, v' = x b, with a < b
///   NeighborLetters same, with b = a + 1
///   Binary          the letters are exactly 0 and 1 (binary tables only)
enum class NfopVariant { AnyLetters = 1, NeighborLetters = 2, Binary = 3 };

struct NfopViolation {
  std::size_t n = 0;
  FiniteWord left;
  FiniteWord right;
  NfopVariant variant = NfopVariant::Binary;
  std::string reason;
};

/// nullopt when (v, v2) has an allowed shape, otherwise a description of the
/// mismatch. Requires |v| == |v2| and v < v2.
std::optional<std::string> nfop_shape_mismatch(WordView v, WordView v2, NfopVariant variant);

struct NfopOutcome {
  Verdict verdict;
  std::optional<NfopViolation> violation;
  /// First shape mismatch seen at an unsaturated length; never definitive.
  std::optional<NfopViolation> unsaturated_hint;
};

/// Checks every adjacent pair at every saturated length 1..N. The reported
/// violation is the one with the smallest length, then the lex-least left
/// element. Binary variant on a non-binary table throws AlphabetTooLarge.
NfopOutcome check_nfop(const FactorTable& table, NfopVariant variant = NfopVariant::Binary);

// ---- balance ----------------------------------------------------------------

enum class ImbalanceCase { Unclassified, BothExtensions, PrefixCase, WindowIndeterminate };
std::string_view to_string(ImbalanceCase c) noexcept;

struct ImbalanceWitness {
  FiniteWord u;
  FiniteWord zero_form;  // 0u0
  FiniteWord one_form;   // 1u1
  ImbalanceCase kind = ImbalanceCase::Unclassified;
  // PrefixCase only.
  char prefix_letter = '0';
  std::size_t prefix_occurrences = 0;
  ExtremalKind prefix_kind = ExtremalKind::Min;
  std::string note;
};

struct BalanceOutcome {
  Verdict verdict;
  std::optional<ImbalanceWitness> witness;
};

/// Shortest u with 0u0 and 1u1 both factors, scanning |u| = 0..N-2.
/// Throws NonBinaryAlphabet.
BalanceOutcome check_balance(const FactorTable& table);

/// Classifies the shortest imbalanced pair: both 10u0 and 01u1 occur, or xux
/// is a prefix occurring finitely often with every prefix extremal. Throws
/// NotImbalanced on balanced tables.
ImbalanceWitness classify_imbalance(const FactorTable& table);

/// Shortest u (|u| <= N-3) such that 10u0 and 01u1 are both factors.
std::optional<FiniteWord> find_crossed_extension(const FactorTable& table);

// ---- Hamming / 1-count -----------------------------------------------------

/// Adjacent factors differ in at most two positions. Throws NonBinaryAlphabet.
Verdict check_hamming2(const FactorTable& table);

/// 1-counts are non-decreasing along each sorted list. Throws NonBinaryAlphabet.
Verdict check_ones_monotone(const FactorTable& table);

// ---- complexity ------------------------------------------------------------

struct PeriodicityCertificate {
  bool ultimately_periodic = false;
  std::size_t n = 0;      // first saturated n with p(n) <= n
  std::size_t up_to = 0;  // N when apparently aperiodic
  std::size_t complexity = 0;
};
PeriodicityCertificate periodicity_certificate(const FactorTable& table);

/// p(n) = n + 1 at every length. p(n) > n + 1 is definitive anywhere; a
/// deficit only counts at saturated lengths.
Verdict check_complexity(const FactorTable& table);

// ---- recurrence ------------------------------------------------------------

struct RecurrenceResult {
  bool recurrent_consistent = true;
  std::optional<FiniteWord> witness;  // unioccurrent factor ending in the first half
  std::size_t position = 0;
  bool from_flags = false;
};
RecurrenceResult recurrence_heuristic(const FactorTable& table,
                                      std::optional<KnownFlags> flags = std::nullopt);

// ---- adjacency characterization -------------------------------------------

/// A pair of present factors with an NFOp shape that are not adjacent.
struct NonAdjacentPair {
  std::size_t n = 0;
  FiniteWord left;
  FiniteWord right;
};
/// Exhaustively looks, for n <= max_n, for present pairs (x01y, x10y) or
/// (x0, x1) that are not consecutive in the sorted list.
std::optional<NonAdjacentPair> find_non_adjacent_shape_pair(const FactorTable& table, std::size_t max_n);

// ---- composite -------------------------------------------------------------

inline constexpr std::size_t kPrefixBudget = std::size_t{1} << 22;

std::size_t default_prefix_len(std::size_t max_n) noexcept;

struct WindowedTable {
  FactorTable table;
  bool budget_hit = false;
};

/// Generates a prefix of at least `prefix_len` letters (and at least 2N),
/// doubling until every length 1..N is saturated, the budget is reached or a
/// literal runs out.
WindowedTable build_windowed_table(const WordSpec& spec, std::size_t prefix_len, std::size_t max_n);

enum class Judgment { SturmianConsistentUpTo, NotSturmian, Indeterminate };
std::string_view to_string(Judgment j) noexcept;

struct SturmianReport {
  std::string spec;
  std::size_t prefix_len = 0;
  std::size_t max_n = 0;
  KnownFlags flags;
  bool binary = true;
  NfopOutcome nfop;
  std::optional<BalanceOutcome> balance;
  PeriodicityCertificate periodicity;
  Verdict complexity;
  std::optional<Verdict> hamming2;
  std::optional<Verdict> ones;
  RecurrenceResult recurrence;
  /// Recurrence and aperiodicity both hold a priori, so hamming2 and
  /// ones-monotone consistency count as evidence.
  bool weak_conditions_applicable = false;
  Judgment judgment = Judgment::Indeterminate;
  Verdict combined;
};

SturmianReport sturmian_verdict(const WordSpec& spec, std::size_t prefix_len, std::size_t max_n);
SturmianReport sturmian_verdict(const WordSpec& spec, const FactorTable& table);

// ---- harness ---------------------------------------------------------------

enum class AssertionStatus { Pass, Fail, Skipped };
std::string_view to_string(AssertionStatus s) noexcept;

struct AssertionOutcome {
  std::string spec;
  std::string name;
  AssertionStatus status = AssertionStatus::Pass;
  std::string detail;
};

struct HarnessReport {
  std::vector<AssertionOutcome> outcomes;
  bool all_passed() const noexcept;
};

/// Assertions checked per word, in this order:
///   nfop-implies-balanced, nfop-excludes-crossed-extensions,
///   nfop-implies-aperiodic, nfop-implies-hamming2-and-ones,
///   nfop-adjacency-characterization, sturmian-spec-has-nfop,
///   weak-conditions-agreement, nfop-variants-agree.
HarnessReport equivalence_harness(const std::vector<WordSpec>& corpus, std::size_t max_n,
                                  std::optional<std::size_t> prefix_len = std::nullopt);

struct CorpusEntry {
  std::string label;
  WordSpec spec;
};
/// Same as above with caller-chosen labels (the CLI uses the corpus lines).
/// Entries are evaluated concurrently; outcomes keep corpus order.
HarnessReport equivalence_harness(const std::vector<CorpusEntry>& corpus, std::size_t max_n,
                                  std::optional<std::size_t> prefix_len = std::nullopt);

/// The per-word assertions on an already built table.
std::vector<AssertionOutcome> harness_assertions(const std::string& label, const FactorTable& table,
                                                 KnownFlags flags, bool sturmian_by_construction);

}  // namespace sturmlex
