#include "sturmlex/factor_index.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "sturmlex/error.hpp"

namespace sturmlex {
namespace {

// Stable counting sort of `order` by key(i) in [0, key_range).
template <class Key>
void counting_sort(std::vector<std::size_t>& order, std::size_t key_range, Key key) {
  std::vector<std::size_t> bucket(key_range + 1, 0);
  for (std::size_t i : order) ++bucket[key(i) + 1];
  std::partial_sum(bucket.begin(), bucket.end(), bucket.begin());
  std::vector<std::size_t> out(order.size());
  for (std::size_t i : order) out[bucket[key(i)]++] = i;
  order = std::move(out);
}

// Positions of w ordered by their first `depth` letters (shorter tails first
// on ties with their extensions), by prefix doubling over rank pairs.
std::vector<std::size_t> sort_windows(const FiniteWord& w, std::size_t depth) {
  const std::size_t len = w.size();
  std::vector<std::size_t> order(len);
  std::iota(order.begin(), order.end(), std::size_t{0});
  // rank 0 is reserved for "past the end".
  std::vector<std::size_t> rank(len);
  for (std::size_t i = 0; i < len; ++i) rank[i] = static_cast<std::size_t>(letter_value(w[i])) + 1;
  std::size_t rank_range = kMaxLetter + 2;
  counting_sort(order, rank_range, [&](std::size_t i) { return rank[i]; });

  for (std::size_t k = 1; k < depth; k *= 2) {
    auto second = [&](std::size_t i) { return i + k < len ? rank[i + k] : std::size_t{0}; };
    counting_sort(order, rank_range, second);
    counting_sort(order, rank_range, [&](std::size_t i) { return rank[i]; });
    std::vector<std::size_t> next(len);
    std::size_t r = 1;
    for (std::size_t j = 0; j < len; ++j) {
      if (j > 0) {
        const std::size_t a = order[j - 1];
        const std::size_t b = order[j];
        if (rank[a] != rank[b] || second(a) != second(b)) ++r;
      }
      next[order[j]] = r;
    }
    rank = std::move(next);
    rank_range = r + 1;
    if (r == len) break;
  }
  return order;
}

}  // namespace

FactorTable FactorTable::build(FiniteWord prefix, std::size_t max_len) {
  if (max_len < 1 || max_len > prefix.size()) {
    throw Error(ErrorKind::WindowTooLarge, "max length " + std::to_string(max_len) +
                                               " outside 1.." + std::to_string(prefix.size()));
  }
  for (char c : prefix) {
    if (!is_letter(c)) throw Error(ErrorKind::MalformedSpec, "prefix contains a non-letter character");
  }

  FactorTable t;
  t.prefix_ = std::move(prefix);
  t.max_len_ = max_len;
  t.alphabet_ = alphabet_mask(t.prefix_);
  const std::size_t len = t.prefix_.size();
  const WordView w(t.prefix_);

  t.suffix_rows_ = sort_windows(t.prefix_, max_len);
  const auto& rows = t.suffix_rows_;

  // lcp[j] = common prefix of rows j-1 and j, capped at max_len.
  std::vector<std::size_t> lcp(len, 0);
  for (std::size_t j = 1; j < len; ++j) {
    lcp[j] = common_prefix(w.substr(rows[j - 1], max_len), w.substr(rows[j], max_len));
  }

  t.lists_.resize(max_len);
  t.saturated_.resize(max_len);
  t.last_new_.resize(max_len);
  const std::size_t half = len / 2;
  for (std::size_t n = 1; n <= max_len; ++n) {
    auto& list = t.lists_[n - 1];
    // Tails shorter than n sort before all of their extensions, so each
    // group of equal length-n windows is a contiguous run of rows.
    std::size_t gap = std::numeric_limits<std::size_t>::max();
    for (std::size_t j = 0; j < len; ++j) {
      if (j > 0) gap = std::min(gap, lcp[j]);
      const std::size_t pos = rows[j];
      if (pos + n > len) continue;
      if (!list.empty() && gap >= n) {
        auto& e = list.back();
        ++e.count;
        e.first = std::min(e.first, pos);
        e.rows_end = j + 1;
      } else {
        list.push_back({pos, 1, j, j + 1});
      }
      gap = std::numeric_limits<std::size_t>::max();
    }
    std::size_t last = 0;
    for (const auto& e : list) last = std::max(last, e.first);
    t.last_new_[n - 1] = last;
    t.saturated_[n - 1] = last + n <= half;
  }
  return t;
}

std::vector<FiniteWord> FactorTable::factors(std::size_t n) const {
  std::vector<FiniteWord> out;
  out.reserve(complexity(n));
  for (std::size_t i = 0; i < complexity(n); ++i) out.emplace_back(factor(n, i));
  return out;
}

std::optional<std::size_t> FactorTable::index_of(WordView v) const {
  const std::size_t n = v.size();
  if (n == 0 || n > max_len_) return std::nullopt;
  const auto& list = lists_[n - 1];
  const WordView w(prefix_);
  const auto it = std::lower_bound(list.begin(), list.end(), v, [&](const FactorEntry& e, WordView key) {
    return w.substr(e.first, n) < key;
  });
  if (it == list.end() || w.substr(it->first, n) != v) return std::nullopt;
  return static_cast<std::size_t>(it - list.begin());
}

bool FactorTable::contains(WordView v) const {
  if (v.empty()) return true;
  if (v.size() > max_len_) return prefix_.find(v) != FiniteWord::npos;
  return index_of(v).has_value();
}

std::size_t FactorTable::count(WordView v) const {
  if (v.size() > max_len_) throw Error(ErrorKind::WindowTooLarge, "word longer than the indexed length");
  if (v.empty()) return prefix_.size() + 1;
  const auto idx = index_of(v);
  return idx ? lists_[v.size() - 1][*idx].count : 0;
}

std::vector<std::size_t> FactorTable::positions(WordView v) const {
  if (v.size() > max_len_) throw Error(ErrorKind::WindowTooLarge, "word longer than the indexed length");
  std::vector<std::size_t> out;
  if (const auto idx = index_of(v)) {
    const auto& e = lists_[v.size() - 1][*idx];
    out.assign(suffix_rows_.begin() + static_cast<std::ptrdiff_t>(e.rows_begin),
               suffix_rows_.begin() + static_cast<std::ptrdiff_t>(e.rows_end));
    std::sort(out.begin(), out.end());
  }
  return out;
}

std::optional<FiniteWord> successor(const FactorTable& table, WordView v) {
  const auto idx = table.index_of(v);
  if (!idx) throw Error(ErrorKind::NotAFactor, "'" + std::string(v) + "' is not an indexed factor");
  if (*idx + 1 == table.complexity(v.size())) return std::nullopt;
  return FiniteWord(table.factor(v.size(), *idx + 1));
}

Extremal extremal(const FactorTable& table, std::size_t n) {
  if (n < 1 || n > table.max_len()) throw Error(ErrorKind::WindowTooLarge, "length outside the table");
  return {FiniteWord(table.factor(n, 0)), FiniteWord(table.factor(n, table.complexity(n) - 1))};
}

std::vector<FiniteWord> left_special(const FactorTable& table, std::size_t n) {
  if (n + 1 > table.max_len()) throw Error(ErrorKind::WindowTooLarge, "left_special needs n + 1 <= N");
  std::vector<FiniteWord> out;
  // Extensions 0v precede 1v, so scan the length-(n+1) list once.
  for (std::size_t i = 0; i < table.complexity(n + 1); ++i) {
    const WordView f = table.factor(n + 1, i);
    if (f.front() != '0') break;
    FiniteWord other(f);
    other.front() = '1';
    if (table.contains(other)) out.emplace_back(f.substr(1));
  }
  return out;
}

std::vector<FiniteWord> unbordered_factors(const FactorTable& table, std::size_t n) {
  if (n < 1 || n > table.max_len()) throw Error(ErrorKind::WindowTooLarge, "length outside the table");
  std::vector<FiniteWord> out;
  for (std::size_t i = 0; i < table.complexity(n); ++i) {
    const WordView f = table.factor(n, i);
    if (!has_proper_border(f)) out.emplace_back(f);
  }
  return out;
}

std::vector<std::size_t> SaturationReport::saturated_lengths() const {
  std::vector<std::size_t> out;
  for (const auto& e : lengths) {
    if (e.saturated) out.push_back(e.n);
  }
  return out;
}

bool SaturationReport::all_saturated() const {
  return std::all_of(lengths.begin(), lengths.end(), [](const auto& e) { return e.saturated; });
}

SaturationReport saturation(const FactorTable& table) {
  SaturationReport report;
  for (std::size_t n = 1; n <= table.max_len(); ++n) {
    report.lengths.push_back({n, table.saturated(n), table.last_new_factor(n)});
  }
  return report;
}

std::string dump_table(const FactorTable& table) {
  std::string out;
  for (std::size_t n = 1; n <= table.max_len(); ++n) {
    const auto list = table.entries(n);
    for (std::size_t i = 0; i < list.size(); ++i) {
      out += std::to_string(n);
      out += '\t';
      out += table.factor(n, i);
      out += '\t';
      out += std::to_string(list[i].count);
      out += '\n';
    }
  }
  return out;
}

}  // namespace sturmlex
