#include <algorithm>

#include "sturmlex/characterize.hpp"
#include "sturmlex/error.hpp"

namespace sturmlex {

std::size_t default_prefix_len(std::size_t max_n) noexcept { return std::max<std::size_t>(4096, 64 * max_n); }

WindowedTable build_windowed_table(const WordSpec& spec, std::size_t prefix_len, std::size_t max_n) {
  validate(spec);
  if (max_n == 0) throw Error(ErrorKind::WindowTooLarge, "max length must be at least 1");
  if (prefix_len > kPrefixBudget || 2 * max_n > kPrefixBudget) {
    throw Error(ErrorKind::BudgetExceeded,
                "request exceeds the prefix budget of " + std::to_string(kPrefixBudget) + " letters");
  }
  std::size_t cap = kPrefixBudget;
  if (const auto lit = literal_length(spec)) cap = *lit;
  std::size_t len = std::min(std::max(prefix_len, 2 * max_n), cap);
  for (;;) {
    auto table = FactorTable::build(generate_prefix(spec, len), max_n);
    if (saturation(table).all_saturated() || len >= cap) {
      const bool hit = !saturation(table).all_saturated() && cap == kPrefixBudget;
      return {std::move(table), hit};
    }
    len = std::min(len * 2, cap);
  }
}

SturmianReport sturmian_verdict(const WordSpec& spec, std::size_t prefix_len, std::size_t max_n) {
  auto windowed = build_windowed_table(spec, prefix_len, max_n);
  return sturmian_verdict(spec, windowed.table);
}

SturmianReport sturmian_verdict(const WordSpec& spec, const FactorTable& table) {
  SturmianReport r;
  r.spec = format_spec(spec);
  r.prefix_len = table.prefix().size();
  r.max_n = table.max_len();
  r.flags = known_flags(spec);
  r.binary = table.binary();
  r.nfop = check_nfop(table, r.binary ? NfopVariant::Binary : NfopVariant::AnyLetters);
  if (r.binary) {
    r.balance = check_balance(table);
    r.hamming2 = check_hamming2(table);
    r.ones = check_ones_monotone(table);
  }
  r.periodicity = periodicity_certificate(table);
  r.complexity = check_complexity(table);
  r.recurrence = recurrence_heuristic(table, r.flags);
  r.weak_conditions_applicable = r.flags.recurrent == Tristate::Yes && r.flags.aperiodic == Tristate::Yes;

  auto& c = r.combined;
  c.check = "sturmian";
  c.saturated_lengths = saturation(table).saturated_lengths();

  // Sturmian words have NFOp, are balanced, have p(n) = n + 1, and NFOp
  // implies both hamming2 and ones-monotone, so any definitive violation
  // settles the question.
  std::vector<const Verdict*> decisive{&r.nfop.verdict};
  if (r.balance) decisive.push_back(&r.balance->verdict);
  decisive.push_back(&r.complexity);
  if (r.hamming2) decisive.push_back(&*r.hamming2);
  if (r.ones) decisive.push_back(&*r.ones);

  if (!r.binary) {
    r.judgment = Judgment::NotSturmian;
    c.status = Status::Violated;
    c.reason = "alphabet has more than two letters";
    if (r.nfop.violation) {
      c.n = r.nfop.violation->n;
      c.witness = {r.nfop.violation->left, r.nfop.violation->right};
      c.reason += "; nfop: " + r.nfop.violation->reason;
    }
    return r;
  }
  for (const Verdict* v : decisive) {
    if (v->status != Status::Violated) continue;
    r.judgment = Judgment::NotSturmian;
    c.status = Status::Violated;
    c.up_to = v->up_to;
    c.n = v->n;
    c.witness = v->witness;
    c.reason = v->check + ": " + v->reason;
    return r;
  }
  if (r.nfop.verdict.status == Status::ConsistentUpTo && r.complexity.status == Status::ConsistentUpTo) {
    r.judgment = Judgment::SturmianConsistentUpTo;
    c.status = Status::ConsistentUpTo;
    c.up_to = table.max_len();
    return r;
  }
  r.judgment = Judgment::Indeterminate;
  c.status = Status::Indeterminate;
  c.up_to = std::min(r.nfop.verdict.up_to, r.complexity.up_to);
  c.reason = r.nfop.verdict.reason.empty() ? r.complexity.reason : r.nfop.verdict.reason;
  return r;
}

}  // namespace sturmlex
