// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "sturmlex/characterize.hpp"
#include "sturmlex/christoffel.hpp"
#include "sturmlex/cli.hpp"

using namespace sturmlex;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (!passed) {
      if (++extra_failures > 3) return;
      detail += "; ";
    }
    detail += why;
    passed = false;
  }

  int extra_failures = 0;
};

FactorTable table_of(const std::string& spec, std::size_t prefix_len, std::size_t n) {
  return FactorTable::build(generate_prefix(parse_spec(spec), prefix_len), n);
}

// 00 followed by the Fibonacci word, as a finite window.
std::string fib00_spec(std::size_t len) { return "literal:00" + generate_prefix(parse_spec("fib"), len - 2); }

std::string show(const Verdict& v) {
  std::string s = std::string(to_string(v.status));
  if (v.n) s += " n=" + std::to_string(*v.n);
  for (const auto& w : v.witness) s += " " + w;
  return s;
}

const std::vector<std::string> kSturmianSpecs = {
    "fib", "std:2,1,2,1,2,1", "std:1,2,3,1,2,3", "std:3,1,4,1,5", "mech:2/5@0", "mech:3/8@0",
};

const std::vector<std::string> kCorpus = {
    "fib",
    "std:2,1,2,1,2,1",
    "std:1,2,3,1,2,3",
    "std:3,1,4,1,5",
    "std:1",
    "morphic:0->001,1->0;seed=0",
    "morphic:0->01,1->10;seed=0",
    "periodic:01",
    "periodic:011",
    "periodic:00101",
    "ultper:0|1",
    "mech:2/5@0",
    "mech:3/8@0",
};

Outcome criterion1() {
  Outcome o;
  std::ostringstream out, err;
  const int code = cli::run({"sturmlex", "generate", "--spec", "fib", "--len", "32"}, out, err);
  if (code != 0) o.fail("exit code " + std::to_string(code));
  if (out.str() != "01001010010010100101001001010010\n") o.fail("got " + out.str());
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto t = table_of("fib", 100000, 50);
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 50; ++n) {
    if (!t.saturated(n)) continue;
    ++checked;
    if (t.complexity(n) != n + 1) o.fail("p(" + std::to_string(n) + ") = " + std::to_string(t.complexity(n)));
  }
  if (checked != 50) o.fail("only " + std::to_string(checked) + " saturated lengths");
  if (o.passed) o.detail = "p(n) = n+1 for n = 1..50";
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (const auto& spec : kSturmianSpecs) {
    const auto w = build_windowed_table(parse_spec(spec), default_prefix_len(40), 40);
    const auto v = check_nfop(w.table, NfopVariant::Binary).verdict;
    if (v.status != Status::ConsistentUpTo || v.up_to != 40) o.fail(spec + ": " + show(v));
  }
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto tm = table_of("morphic:0->01,1->10;seed=0", 4096, 12);
  const auto nf = check_nfop(tm);
  if (!nf.violation || nf.violation->n != 3 || nf.violation->left != "011" || nf.violation->right != "100") {
    o.fail("Thue-Morse nfop: " + show(nf.verdict));
  }
  const auto bal = check_balance(tm);
  if (!bal.witness || !bal.witness->u.empty()) o.fail("Thue-Morse balance: " + show(bal.verdict));
  const auto per = check_nfop(table_of("periodic:01", 4096, 12));
  if (!per.violation || per.violation->n != 3 || per.violation->left != "010" || per.violation->right != "101") {
    o.fail("periodic 01 nfop: " + show(per.verdict));
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  const std::size_t n = 30;
  for (const std::string spec : {std::string("periodic:01"), fib00_spec(default_prefix_len(n))}) {
    const std::string name = spec.starts_with("literal:") ? "00.fib" : spec;
    const auto t = table_of(spec, default_prefix_len(n), n);
    const auto ones = check_ones_monotone(t);
    if (ones.status != Status::ConsistentUpTo || ones.up_to != n) o.fail(name + " ones: " + show(ones));
    const auto report = sturmian_verdict(parse_spec(spec), t);
    if (report.judgment != Judgment::NotSturmian) o.fail(name + " judged " + std::string(to_string(report.judgment)));
  }
  const auto t = table_of("ultper:0|1", default_prefix_len(n), n);
  const auto ham = check_hamming2(t);
  const auto ones = check_ones_monotone(t);
  if (ham.status != Status::ConsistentUpTo || ham.up_to != n) o.fail("01^w hamming2: " + show(ham));
  if (ones.status != Status::ConsistentUpTo || ones.up_to != n) o.fail("01^w ones: " + show(ones));
  const auto nf = check_nfop(t);
  if (!nf.violation || nf.violation->n != 2 || nf.violation->left != "01" || nf.violation->right != "11") {
    o.fail("01^w nfop: " + show(nf.verdict));
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto fib00 = classify_imbalance(table_of(fib00_spec(4096), 4096, 20));
  if (fib00.kind != ImbalanceCase::PrefixCase) o.fail("00.fib: " + std::string(to_string(fib00.kind)));
  if (fib00.zero_form != "000" || fib00.prefix_letter != '0') o.fail("00.fib xux = " + fib00.zero_form);
  if (fib00.prefix_kind != ExtremalKind::Min) o.fail("00.fib prefixes are not minimal");
  if (fib00.prefix_occurrences == 0) o.fail("00.fib xux never occurs");
  const auto tm = classify_imbalance(table_of("morphic:0->01,1->10;seed=0", 4096, 20));
  if (tm.kind != ImbalanceCase::BothExtensions) o.fail("Thue-Morse: " + std::string(to_string(tm.kind)));
  return o;
}

Outcome criterion7() {
  Outcome o;
  auto corpus = kCorpus;
  corpus.push_back(fib00_spec(4096));
  for (const auto& spec : corpus) {
    const auto t = build_windowed_table(parse_spec(spec), default_prefix_len(20), 20).table;
    const auto v3 = check_nfop(t, NfopVariant::Binary).verdict;
    for (auto variant : {NfopVariant::AnyLetters, NfopVariant::NeighborLetters}) {
      const auto v = check_nfop(t, variant).verdict;
      if (v.status != v3.status || v.n != v3.n || v.witness != v3.witness || v.up_to != v3.up_to) {
        o.fail(spec + ": variant " + std::to_string(static_cast<int>(variant)) + " " + show(v) + " vs " + show(v3));
      }
    }
  }
  const auto t012 = table_of("periodic:012", 4096, 12);
  const auto v1 = check_nfop(t012, NfopVariant::AnyLetters).verdict;
  if (v1.status != Status::Violated) o.fail("periodic 012 variant 1: " + show(v1));
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t pairs = 0;
  for (std::int64_t p = 1; p < 20; ++p) {
    for (std::int64_t q = 1; p + q <= 20; ++q) {
      if (std::gcd(p, q) != 1) continue;
      ++pairs;
      const std::string spec = "mech:" + std::to_string(p) + "/" + std::to_string(p + q) + "@0";
      const auto report = verify_christoffel_properties(p, q, table_of(spec, 10000, static_cast<std::size_t>(p + q)));
      for (const auto& item : report.items) {
        if (!item.passed) o.fail(spec + " (" + item.item + "): " + item.detail);
      }
    }
  }
  if (o.passed) o.detail = std::to_string(pairs) + " coprime pairs";
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::mt19937_64 rng(20261016);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t len = std::uniform_int_distribution<std::size_t>(1, 200)(rng);
    const std::string w = oracle::random_binary(rng, len);
    for (std::size_t max_n = 1; max_n <= std::min<std::size_t>(12, len); ++max_n) {
      const auto t = FactorTable::build(w, max_n);
      for (std::size_t n = 1; n <= max_n; ++n) {
        const auto f = oracle::factors(w, n);
        if (t.factors(n) != f) o.fail("factor table differs at n=" + std::to_string(n) + " for " + w);
        for (std::size_t i = 0; i < f.size(); ++i) {
          const auto next = successor(t, f[i]);
          const bool ok = i + 1 < f.size() ? next == std::optional<FiniteWord>(f[i + 1]) : !next;
          if (!ok) o.fail("successor of " + f[i] + " in " + w);
        }
      }
      const auto bal = check_balance(t);
      const auto core = oracle::balance_core(w, max_n);
      if (bal.witness.has_value() != core.has_value() || (core && bal.witness && bal.witness->u != *core)) {
        o.fail("balance differs for " + w + " N=" + std::to_string(max_n));
      }
      for (int variant : {1, 2, 3}) {
        const auto got = check_nfop(t, static_cast<NfopVariant>(variant));
        const auto want = oracle::nfop(w, max_n, variant);
        const bool same = got.violation ? want && want->n == got.violation->n && want->left == got.violation->left &&
                                              want->right == got.violation->right
                                        : !want;
        if (!same) o.fail("nfop variant " + std::to_string(variant) + " differs for " + w);
      }
    }
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::size_t tables = 0;
  for (const auto& spec : kCorpus) {
    const auto t = build_windowed_table(parse_spec(spec), default_prefix_len(20), 20).table;
    if (!saturation(t).all_saturated()) continue;
    if (check_nfop(t).verdict.status != Status::ConsistentUpTo) continue;
    ++tables;
    if (const auto bad = find_non_adjacent_shape_pair(t, 20)) {
      o.fail(spec + ": " + bad->left + " and " + bad->right + " are not adjacent");
    }
  }
  if (tables == 0) o.fail("no NFOp-consistent saturated table in the corpus");
  if (o.passed) o.detail = std::to_string(tables) + " tables";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"fibonacci prefix of length 32", criterion1},
      {"fibonacci complexity n+1 up to 50", criterion2},
      {"NFOp holds up to 40 on Sturmian specs", criterion3},
      {"NFOp and balance witnesses for Thue-Morse and (01)^w", criterion4},
      {"ones-monotone and hamming2 do not imply Sturmian", criterion5},
      {"imbalance classification", criterion6},
      {"NFOp variants agree on binary tables", criterion7},
      {"Christoffel properties for p+q <= 20", criterion8},
      {"oracle equivalence on random prefixes", criterion9},
      {"NFOp pairs are exactly the adjacent shape pairs", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.passed;
    std::printf("[%s] criterion %zu: %s%s%s\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.empty() ? "" : " -- ", o.detail.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
