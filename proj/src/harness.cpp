#include <algorithm>
#include <future>

#include "sturmlex/characterize.hpp"
#include "sturmlex/error.hpp"

namespace sturmlex {
namespace {

std::string describe(const Verdict& v) {
  std::string out = v.check + " " + std::string(to_string(v.status));
  if (v.status == Status::Violated) {
    out += " n=" + std::to_string(v.n.value_or(0));
    for (const auto& w : v.witness) out += " " + w;
  } else {
    out += " " + std::to_string(v.up_to);
  }
  return out;
}

std::string flag_text(Tristate t) {
  switch (t) {
    case Tristate::Yes: return "yes";
    case Tristate::No: return "no";
    case Tristate::Unknown: return "unknown";
  }
  return "unknown";
}

bool same_outcome(const NfopOutcome& a, const NfopOutcome& b) {
  return a.verdict.status == b.verdict.status && a.verdict.n == b.verdict.n && a.verdict.witness == b.verdict.witness;
}

}  // namespace

std::string_view to_string(AssertionStatus s) noexcept {
  switch (s) {
    case AssertionStatus::Pass: return "PASS";
    case AssertionStatus::Fail: return "FAIL";
    case AssertionStatus::Skipped: return "SKIP";
  }
  return "SKIP";
}

bool HarnessReport::all_passed() const noexcept {
  return std::none_of(outcomes.begin(), outcomes.end(),
                      [](const auto& o) { return o.status == AssertionStatus::Fail; });
}

std::vector<AssertionOutcome> harness_assertions(const std::string& label, const FactorTable& table,
                                                 KnownFlags flags, bool sturmian_by_construction) {
  std::vector<AssertionOutcome> out;
  auto record = [&](std::string name, AssertionStatus status, std::string detail) {
    out.push_back({label, std::move(name), status, std::move(detail)});
  };
  auto verdict_of = [](bool ok) { return ok ? AssertionStatus::Pass : AssertionStatus::Fail; };

  const bool binary = table.binary();
  const NfopOutcome nfop = check_nfop(table, binary ? NfopVariant::Binary : NfopVariant::AnyLetters);
  const bool has_nfop = nfop.verdict.status == Status::ConsistentUpTo;
  const std::string not_consistent = "nfop not consistent: " + describe(nfop.verdict);

  if (has_nfop && binary) {
    const auto balance = check_balance(table);
    record("nfop-implies-balanced", verdict_of(balance.verdict.status != Status::Violated), describe(balance.verdict));

    const auto crossed = find_crossed_extension(table);
    record("nfop-excludes-crossed-extensions", verdict_of(!crossed),
           crossed ? "10u0 and 01u1 both occur for u = '" + *crossed + "'" : "no u up to N-4");

    const auto cert = periodicity_certificate(table);
    record("nfop-implies-aperiodic", verdict_of(!cert.ultimately_periodic),
           cert.ultimately_periodic ? "p(" + std::to_string(cert.n) + ") = " + std::to_string(cert.complexity)
                                    : "apparently aperiodic up to " + std::to_string(cert.up_to));

    const auto ham = check_hamming2(table);
    const auto ones = check_ones_monotone(table);
    record("nfop-implies-hamming2-and-ones",
           verdict_of(ham.status != Status::Violated && ones.status != Status::Violated),
           describe(ham) + "; " + describe(ones));

    const auto bad = find_non_adjacent_shape_pair(table, 20);
    record("nfop-adjacency-characterization", verdict_of(!bad),
           bad ? "n=" + std::to_string(bad->n) + " " + bad->left + " " + bad->right + " not adjacent"
               : "every shaped pair up to n=" + std::to_string(std::min<std::size_t>(20, table.max_len())) +
                     " is adjacent");
  } else {
    const std::string why = binary ? not_consistent : "non-binary alphabet";
    for (const char* name : {"nfop-implies-balanced", "nfop-excludes-crossed-extensions", "nfop-implies-aperiodic",
                             "nfop-implies-hamming2-and-ones", "nfop-adjacency-characterization"}) {
      record(name, AssertionStatus::Skipped, why);
    }
  }

  if (sturmian_by_construction) {
    record("sturmian-spec-has-nfop", verdict_of(nfop.verdict.status != Status::Violated), describe(nfop.verdict));
  } else {
    record("sturmian-spec-has-nfop", AssertionStatus::Skipped, "not Sturmian by construction");
  }

  if (binary && flags.recurrent == Tristate::Yes && flags.aperiodic == Tristate::Yes) {
    const auto ham = check_hamming2(table);
    const auto ones = check_ones_monotone(table);
    const bool a = nfop.verdict.status == Status::Violated;
    const bool b = ham.status == Status::Violated;
    const bool c = ones.status == Status::Violated;
    record("weak-conditions-agreement", verdict_of(a == b && b == c),
           describe(nfop.verdict) + "; " + describe(ham) + "; " + describe(ones));
  } else {
    record("weak-conditions-agreement", AssertionStatus::Skipped,
           "hypotheses unmet (recurrent=" + flag_text(flags.recurrent) + ", aperiodic=" + flag_text(flags.aperiodic) +
               (binary ? ")" : ", non-binary)"));
  }

  if (binary) {
    const auto v1 = check_nfop(table, NfopVariant::AnyLetters);
    const auto v2 = check_nfop(table, NfopVariant::NeighborLetters);
    record("nfop-variants-agree", verdict_of(same_outcome(v1, nfop) && same_outcome(v2, nfop)),
           describe(v1.verdict) + " | " + describe(v2.verdict) + " | " + describe(nfop.verdict));
  } else {
    record("nfop-variants-agree", verdict_of(nfop.verdict.status != Status::ConsistentUpTo),
           "non-binary: " + describe(nfop.verdict));
  }
  return out;
}

HarnessReport equivalence_harness(const std::vector<CorpusEntry>& corpus, std::size_t max_n,
                                  std::optional<std::size_t> prefix_len) {
  const std::size_t start = prefix_len.value_or(default_prefix_len(max_n));
  std::vector<std::future<std::vector<AssertionOutcome>>> jobs;
  jobs.reserve(corpus.size());
  for (const auto& entry : corpus) {
    jobs.push_back(std::async(std::launch::async, [&entry, max_n, start] {
      try {
        const auto windowed = build_windowed_table(entry.spec, start, max_n);
        return harness_assertions(entry.label, windowed.table, known_flags(entry.spec),
                                  is_sturmian_by_construction(entry.spec));
      } catch (const Error& e) {
        return std::vector<AssertionOutcome>{{entry.label, "build", AssertionStatus::Fail, e.what()}};
      }
    }));
  }
  HarnessReport report;
  for (auto& job : jobs) {
    auto part = job.get();
    report.outcomes.insert(report.outcomes.end(), std::make_move_iterator(part.begin()),
                           std::make_move_iterator(part.end()));
  }
  return report;
}

HarnessReport equivalence_harness(const std::vector<WordSpec>& corpus, std::size_t max_n,
                                  std::optional<std::size_t> prefix_len) {
  std::vector<CorpusEntry> labelled;
  labelled.reserve(corpus.size());
  for (const auto& spec : corpus) labelled.push_back({format_spec(spec), spec});
  return equivalence_harness(labelled, max_n, prefix_len);
}

}  // namespace sturmlex
