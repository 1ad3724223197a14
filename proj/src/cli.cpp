#include "sturmlex/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>
#include <sstream>

#include "sturmlex/characterize.hpp"
#include "sturmlex/christoffel.hpp"
#include "sturmlex/error.hpp"
#include "sturmlex/report_json.hpp"

namespace sturmlex::cli {
namespace {

int exit_code(Status s) {
  switch (s) {
    case Status::ConsistentUpTo: return kExitConsistent;
    case Status::Violated: return kExitViolated;
    case Status::Indeterminate: return kExitIndeterminate;
  }
  return kExitIndeterminate;
}

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::MalformedSpec:
    case ErrorKind::LiteralTooShort:
    case ErrorKind::NonBinaryAlphabet:
    case ErrorKind::AlphabetTooLarge:
      return kExitBadSpec;
    default:
      return kExitUsage;
  }
}

std::string line(const Verdict& v) {
  std::ostringstream os;
  os << v.check << ": " << to_string(v.status);
  if (v.status == Status::Violated) {
    os << " n=" << v.n.value_or(0);
    for (const auto& w : v.witness) os << ' ' << w;
  } else {
    os << ' ' << v.up_to;
  }
  if (!v.reason.empty()) os << " (" << v.reason << ')';
  return os.str();
}

std::string flag_text(Tristate t) {
  return t == Tristate::Yes ? "yes" : t == Tristate::No ? "no" : "unknown";
}

std::string periodicity_line(const PeriodicityCertificate& c) {
  if (c.ultimately_periodic) {
    return "periodicity: UltimatelyPeriodic n=" + std::to_string(c.n) + " p=" + std::to_string(c.complexity);
  }
  return "periodicity: ApparentlyAperiodicUpTo " + std::to_string(c.up_to);
}

std::string recurrence_line(const RecurrenceResult& r) {
  std::string out = "recurrence: ";
  out += r.recurrent_consistent ? "RecurrentConsistent" : "NonRecurrentWitness";
  if (r.witness) out += " " + *r.witness + " at " + std::to_string(r.position);
  if (r.from_flags) out += " (a priori)";
  return out;
}

std::string imbalance_line(const ImbalanceWitness& w) {
  std::string out = "imbalance: " + std::string(to_string(w.kind)) + " u='" + w.u + "'";
  if (w.kind == ImbalanceCase::PrefixCase) {
    out += std::string(" x=") + w.prefix_letter + " occurrences=" + std::to_string(w.prefix_occurrences) +
           " kind=" + (w.prefix_kind == ExtremalKind::Min ? "min" : "max");
  } else if (w.kind == ImbalanceCase::WindowIndeterminate) {
    out += " (" + w.note + ")";
  }
  return out;
}

struct CheckOptions {
  std::string spec;
  std::string what = "sturmian";
  std::size_t max_n = 0;
  std::size_t prefix_len = 0;
  int variant = 3;
  bool json = false;
};

int run_check(const CheckOptions& o, std::ostream& out) {
  const WordSpec spec = parse_spec(o.spec);
  const std::size_t start = o.prefix_len ? o.prefix_len : default_prefix_len(o.max_n);
  const auto windowed = build_windowed_table(spec, start, o.max_n);
  const FactorTable& table = windowed.table;

  if (o.what == "sturmian") {
    const auto report = sturmian_verdict(spec, table);
    if (o.json) {
      out << to_json(report).dump(2) << '\n';
    } else {
      out << line(report.nfop.verdict) << '\n';
      if (report.balance) out << line(report.balance->verdict) << '\n';
      out << line(report.complexity) << '\n';
      out << periodicity_line(report.periodicity) << '\n';
      if (report.hamming2) out << line(*report.hamming2) << '\n';
      if (report.ones) out << line(*report.ones) << '\n';
      out << recurrence_line(report.recurrence) << '\n';
      out << "flags: recurrent=" << flag_text(report.flags.recurrent)
          << " aperiodic=" << flag_text(report.flags.aperiodic)
          << (report.weak_conditions_applicable ? " weak-conditions=applicable" : " weak-conditions=not-applicable") << '\n';
      out << "sturmian: " << to_string(report.judgment);
      if (report.combined.status == Status::Violated) {
        out << " n=" << report.combined.n.value_or(0);
        for (const auto& w : report.combined.witness) out << ' ' << w;
      } else {
        out << ' ' << report.combined.up_to;
      }
      if (!report.combined.reason.empty()) out << " (" << report.combined.reason << ')';
      out << '\n';
    }
    return exit_code(report.combined.status);
  }

  Verdict verdict;
  std::vector<std::string> extra;
  if (o.what == "nfop") {
    verdict = check_nfop(table, static_cast<NfopVariant>(o.variant)).verdict;
  } else if (o.what == "balance") {
    const auto b = check_balance(table);
    verdict = b.verdict;
    if (b.witness) extra.push_back(imbalance_line(classify_imbalance(table)));
  } else if (o.what == "hamming2") {
    verdict = check_hamming2(table);
  } else if (o.what == "ones") {
    verdict = check_ones_monotone(table);
  } else {
    verdict = check_complexity(table);
    extra.push_back(periodicity_line(periodicity_certificate(table)));
  }
  if (o.json) {
    out << Json::array({to_json(verdict)}).dump(2) << '\n';
  } else {
    out << line(verdict) << '\n';
    for (const auto& e : extra) out << e << '\n';
  }
  return exit_code(verdict.status);
}

std::vector<CorpusEntry> read_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MalformedSpec, "cannot open corpus file " + path);
  std::vector<CorpusEntry> corpus;
  std::string text;
  for (std::size_t lineno = 1; std::getline(in, text); ++lineno) {
    if (const auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = text.find_last_not_of(" \t\r");
    std::string label = text.substr(first, last - first + 1);
    try {
      corpus.push_back({label, parse_spec(label)});
    } catch (const Error& e) {
      throw Error(ErrorKind::MalformedSpec, path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return corpus;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite-window checks of lexicographic-order characterizations of Sturmian words"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("generate", "Print a prefix of a word");
  std::string gen_spec;
  std::size_t gen_len = 0;
  gen->add_option("--spec", gen_spec, "Word spec")->required();
  gen->add_option("--len", gen_len, "Prefix length")->required();

  auto* fac = app.add_subcommand("factors", "Print factor complexities and optionally the factor table");
  std::string fac_spec;
  std::size_t fac_len = 0;
  std::size_t fac_n = 0;
  bool fac_dump = false;
  fac->add_option("--spec", fac_spec, "Word spec")->required();
  fac->add_option("--len", fac_len, "Prefix length")->required();
  fac->add_option("--max-n", fac_n, "Largest factor length")->required();
  fac->add_flag("--dump", fac_dump, "Print <n>\\t<factor>\\t<count> lines");

  auto* chk = app.add_subcommand("check", "Run a characterization check");
  CheckOptions copt;
  chk->add_option("--spec", copt.spec, "Word spec")->required();
  chk->add_option("--what", copt.what, "Check to run")
      ->check(CLI::IsMember({"nfop", "balance", "hamming2", "ones", "complexity", "sturmian"}))
      ->capture_default_str();
  chk->add_option("--max-n", copt.max_n, "Largest factor length")->required()->check(CLI::PositiveNumber);
  chk->add_option("--prefix-len", copt.prefix_len, "Initial prefix length (default max(4096, 64N))");
  chk->add_option("--variant", copt.variant, "NFOp condition: 1 any letters, 2 neighbor letters, 3 binary")
      ->check(CLI::Range(1, 3))
      ->capture_default_str();
  chk->add_flag("--json", copt.json, "JSON output");

  auto* chr = app.add_subcommand(
      "christoffel", "Christoffel words of slope p/(p+q): p counts ones, p+q is the length");
  std::int64_t cp = 0;
  std::int64_t cq = 0;
  bool verify = false;
  bool cjson = false;
  std::string cspec;
  std::size_t cn = 0;
  std::size_t cprefix = 10000;
  chr->add_option("--p", cp, "Number of ones")->required();
  chr->add_option("--q", cq, "Number of zeros")->required();
  auto* verify_flag = chr->add_flag("--verify", verify, "Check the Christoffel properties on --spec");
  chr->add_option("--spec", cspec, "Word spec for --verify")->needs(verify_flag);
  chr->add_option("--max-n", cn, "Table length (default p+q)");
  chr->add_option("--prefix-len", cprefix, "Prefix length for --verify")->capture_default_str();
  chr->add_flag("--json", cjson, "JSON output");

  auto* har = app.add_subcommand("harness", "Run the equivalence harness over a corpus file");
  std::string corpus_path;
  std::size_t hn = 0;
  std::size_t hprefix = 0;
  bool hjson = false;
  har->add_option("--corpus", corpus_path, "One word spec per line, # comments")->required();
  har->add_option("--max-n", hn, "Largest factor length")->required()->check(CLI::PositiveNumber);
  har->add_option("--prefix-len", hprefix, "Initial prefix length (default max(4096, 64N))");
  har->add_flag("--json", hjson, "JSON output");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      out << generate_prefix(parse_spec(gen_spec), gen_len) << '\n';
      return 0;
    }
    if (fac->parsed()) {
      const auto table = FactorTable::build(generate_prefix(parse_spec(fac_spec), fac_len), fac_n);
      for (std::size_t n = 1; n <= table.max_len(); ++n) {
        out << "# n=" << n << " complexity=" << table.complexity(n)
            << " saturated=" << (table.saturated(n) ? "yes" : "no") << '\n';
      }
      if (fac_dump) out << dump_table(table);
      return 0;
    }
    if (chk->parsed()) return run_check(copt, out);
    if (chr->parsed()) {
      const auto pair = christoffel_pair(cp, cq);
      const auto conj = conjugates(pair.lower);
      if (!verify) {
        if (cjson) {
          Json j;
          j["p"] = cp;
          j["q"] = cq;
          j["lower"] = pair.lower;
          j["upper"] = pair.upper;
          j["core"] = pair.core;
          j["conjugates"] = conj;
          out << j.dump(2) << '\n';
        } else {
          out << "lower\t" << pair.lower << "\nupper\t" << pair.upper << "\ncore\t" << pair.core << '\n';
          for (const auto& c : conj) out << "conjugate\t" << c << '\n';
        }
        return 0;
      }
      if (cspec.empty()) {
        err << "--verify needs --spec\n";
        return kExitUsage;
      }
      const std::size_t n = cn ? cn : pair.lower.size();
      const auto table = FactorTable::build(generate_prefix(parse_spec(cspec), cprefix), n);
      const auto report = verify_christoffel_properties(cp, cq, table);
      if (cjson) {
        auto j = to_json(report);
        j["conjugates"] = conj;
        out << j.dump(2) << '\n';
      } else {
        out << "lower\t" << pair.lower << "\nupper\t" << pair.upper << "\ncore\t" << pair.core << '\n';
        for (const auto& item : report.items) {
          out << '(' << item.item << ")\t" << (item.passed ? "PASS" : "FAIL") << '\t' << item.detail;
          for (const auto& w : item.witness) out << ' ' << w;
          out << '\n';
        }
      }
      return report.all_passed() ? kExitConsistent : kExitViolated;
    }
    if (har->parsed()) {
      const auto corpus = read_corpus(corpus_path);
      if (corpus.empty()) {
        err << "corpus " << corpus_path << " has no word specs\n";
        return kExitUsage;
      }
      const auto report = equivalence_harness(corpus, hn, hprefix ? std::optional(hprefix) : std::nullopt);
      if (hjson) {
        out << to_json(report).dump(2) << '\n';
      } else {
        std::size_t failed = 0;
        for (const auto& o : report.outcomes) {
          failed += o.status == AssertionStatus::Fail;
          out << to_string(o.status) << '\t' << o.spec << '\t' << o.name << '\t' << o.detail << '\n';
        }
        out << "harness: " << report.outcomes.size() << " assertions, " << failed << " failed\n";
      }
      return report.all_passed() ? kExitConsistent : kExitViolated;
    }
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_code(e);
  }
  return kExitUsage;
}

}  // namespace sturmlex::cli
