#include "sturmlex/wordgen.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "sturmlex/error.hpp"

namespace sturmlex {
namespace {

// Keeps the floor numerators of the mechanical formula inside int64 for
// prefixes up to 2^22 letters.
constexpr std::int64_t kMaxDenominator = std::int64_t{1} << 20;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::MalformedSpec, what); }

void require_letters(WordView w, const char* field) {
  for (char c : w) {
    if (!is_letter(c)) malformed(std::string(field) + " contains a non-letter character");
  }
}

std::uint16_t reachable_letters(const Morphic& m) {
  std::uint16_t seen = static_cast<std::uint16_t>(1u << letter_value(m.seed));
  std::vector<char> stack{m.seed};
  while (!stack.empty()) {
    const char c = stack.back();
    stack.pop_back();
    const auto& image = m.images[static_cast<std::size_t>(letter_value(c))];
    if (!image) continue;
    for (char d : *image) {
      const auto bit = static_cast<std::uint16_t>(1u << letter_value(d));
      if ((seen & bit) == 0) {
        seen |= bit;
        stack.push_back(d);
      }
    }
  }
  return seen;
}

void validate_morphic(const Morphic& m) {
  if (!is_letter(m.seed)) malformed("morphic seed is not a letter");
  for (const auto& image : m.images) {
    if (!image) continue;
    if (image->empty()) malformed("morphic image is empty");
    require_letters(*image, "morphic image");
  }
  const std::uint16_t reach = reachable_letters(m);
  for (int a = 0; a <= kMaxLetter; ++a) {
    if ((reach >> a & 1u) && !m.images[static_cast<std::size_t>(a)]) {
      malformed(std::string("morphic substitution has no image for letter ") + letter_char(a));
    }
  }
  const auto& seed_image = *m.images[static_cast<std::size_t>(letter_value(m.seed))];
  if (seed_image.size() < 2 || seed_image.front() != m.seed) {
    malformed("morphic substitution is not prolongable on the seed");
  }
}

FiniteWord morphic_prefix(const Morphic& m, std::size_t n) {
  // The fixed point x satisfies x = image(x[0]) image(x[1]) ...; since
  // image(seed) is longer than one letter the read head never overtakes the
  // write end.
  FiniteWord out = *m.images[static_cast<std::size_t>(letter_value(m.seed))];
  for (std::size_t head = 1; out.size() < n; ++head) {
    out += *m.images[static_cast<std::size_t>(letter_value(out[head]))];
  }
  out.resize(n);
  return out;
}

FiniteWord standard_prefix(const StandardSequence& s, std::size_t n) {
  FiniteWord older = "1";
  FiniteWord prev = "0";
  if (n <= prev.size()) return prev.substr(0, n);
  for (std::size_t m = 0;; ++m) {
    const std::uint32_t d = s.directive[m % s.directive.size()];
    FiniteWord next;
    next.reserve(std::min<std::size_t>(n, prev.size() * d + older.size()));
    for (std::uint32_t r = 0; r < d && next.size() < n; ++r) next += prev;
    if (next.size() >= n) {
      next.resize(n);
      return next;
    }
    next += older;
    if (next.size() >= n) {
      next.resize(n);
      return next;
    }
    older = std::move(prev);
    prev = std::move(next);
  }
}

FiniteWord mechanical_prefix(const MechanicalRational& mw, std::size_t n) {
  const std::int64_t p = mw.ones;
  const std::int64_t d = mw.ones + mw.zeros;
  const std::int64_t a = mw.intercept.num;
  const std::int64_t b = mw.intercept.den;
  // floor(i p / d + a / b) = floor((i p b + a d) / (d b)), all terms >= 0.
  auto level = [&](std::int64_t i) { return (i * p * b + a * d) / (d * b); };
  FiniteWord out(n, '0');
  std::int64_t prev = level(0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t next = level(static_cast<std::int64_t>(i) + 1);
    out[i] = letter_char(static_cast<int>(next - prev));
    prev = next;
  }
  return out;
}

FiniteWord repeat_to(WordView seed, std::size_t n) {
  FiniteWord out;
  out.reserve(n);
  while (out.size() < n) out.append(seed.substr(0, std::min(seed.size(), n - out.size())));
  return out;
}

// True when pre . seed^omega is purely periodic, i.e. pre is a suffix of a
// power of seed.
bool absorbable(WordView pre, WordView seed) {
  for (std::size_t i = 0; i < pre.size(); ++i) {
    const std::size_t back = pre.size() - i;  // distance from the end of pre
    const std::size_t k = (seed.size() - back % seed.size()) % seed.size();
    if (pre[i] != seed[k]) return false;
  }
  return true;
}

// ---- parsing -------------------------------------------------------------

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  for (;;) {
    const auto pos = s.find(sep);
    parts.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) return parts;
    s.remove_prefix(pos + 1);
  }
}

template <class Int>
Int parse_int(std::string_view s, const char* what) {
  Int value{};
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, value);
  if (s.empty() || res.ec != std::errc{} || res.ptr != end) {
    malformed(std::string("cannot parse ") + what + " '" + std::string(s) + "'");
  }
  return value;
}

FiniteWord parse_word(std::string_view s, const char* what) {
  require_letters(s, what);
  return FiniteWord(s);
}

Rational parse_rational(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return {parse_int<std::int64_t>(s, "rational"), 1};
  return {parse_int<std::int64_t>(trim(s.substr(0, slash)), "rational numerator"),
          parse_int<std::int64_t>(trim(s.substr(slash + 1)), "rational denominator")};
}

Morphic fibonacci() {
  Morphic m;
  m.images[0] = "01";
  m.images[1] = "0";
  m.seed = '0';
  return m;
}

Morphic parse_morphic(std::string_view body) {
  Morphic m;
  std::string_view rules = body;
  if (const auto semi = body.find(';'); semi != std::string_view::npos) {
    rules = body.substr(0, semi);
    const auto opt = trim(body.substr(semi + 1));
    if (opt.substr(0, 5) != "seed=" || opt.size() != 6) malformed("expected ';seed=<letter>'");
    m.seed = opt[5];
  }
  for (const auto rule : split(rules, ',')) {
    const auto arrow = rule.find("->");
    if (arrow == std::string_view::npos) malformed("morphic rule without '->'");
    const auto lhs = trim(rule.substr(0, arrow));
    if (lhs.size() != 1 || !is_letter(lhs[0])) malformed("morphic rule must map a single letter");
    auto& slot = m.images[static_cast<std::size_t>(letter_value(lhs[0]))];
    if (slot) malformed("duplicate morphic rule");
    slot = parse_word(trim(rule.substr(arrow + 2)), "morphic image");
  }
  return m;
}

}  // namespace

void validate(const WordSpec& spec) {
  std::visit(Overloaded{
                 [](const Literal& l) {
                   if (l.word.empty()) malformed("literal word is empty");
                   require_letters(l.word, "literal");
                 },
                 [](const Periodic& p) {
                   if (p.seed.empty()) malformed("periodic seed is empty");
                   require_letters(p.seed, "periodic seed");
                 },
                 [](const UltimatelyPeriodic& u) {
                   if (u.seed.empty()) malformed("ultimately periodic seed is empty");
                   require_letters(u.seed, "seed");
                   require_letters(u.preperiod, "preperiod");
                 },
                 [](const Morphic& m) { validate_morphic(m); },
                 [](const StandardSequence& s) {
                   if (s.directive.empty()) malformed("directive sequence is empty");
                   if (std::any_of(s.directive.begin(), s.directive.end(), [](auto d) { return d == 0; }))
                     malformed("directive entries must be >= 1");
                 },
                 [](const MechanicalRational& mw) {
                   if (mw.ones < 0 || mw.zeros < 1) malformed("mechanical slope needs 0 <= p < p+q");
                   const std::int64_t d = mw.ones + mw.zeros;
                   if (d > kMaxDenominator) malformed("mechanical slope denominator too large");
                   if (std::gcd(mw.ones, d) != 1) malformed("mechanical slope is not in lowest terms");
                   const auto& r = mw.intercept;
                   if (r.den < 1 || r.den > kMaxDenominator) malformed("intercept denominator out of range");
                   if (r.num < 0 || r.num >= r.den) malformed("intercept must lie in [0, 1)");
                 },
             },
             spec.kind);
}

FiniteWord generate_prefix(const WordSpec& spec, std::size_t n) {
  validate(spec);
  return std::visit(Overloaded{
                        [n](const Literal& l) {
                          if (n > l.word.size()) {
                            throw Error(ErrorKind::LiteralTooShort,
                                        "literal has " + std::to_string(l.word.size()) + " letters, " +
                                            std::to_string(n) + " requested");
                          }
                          return l.word.substr(0, n);
                        },
                        [n](const Periodic& p) { return repeat_to(p.seed, n); },
                        [n](const UltimatelyPeriodic& u) {
                          if (n <= u.preperiod.size()) return u.preperiod.substr(0, n);
                          return u.preperiod + repeat_to(u.seed, n - u.preperiod.size());
                        },
                        [n](const Morphic& m) { return morphic_prefix(m, n); },
                        [n](const StandardSequence& s) { return standard_prefix(s, n); },
                        [n](const MechanicalRational& mw) { return mechanical_prefix(mw, n); },
                    },
                    spec.kind);
}

bool is_primitive(const Morphic& m) {
  const std::uint16_t reach = reachable_letters(m);
  std::vector<int> letters;
  for (int a = 0; a <= kMaxLetter; ++a) {
    if (reach >> a & 1u) letters.push_back(a);
  }
  const std::size_t k = letters.size();
  using Matrix = std::vector<std::vector<bool>>;
  Matrix incidence(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) {
    const auto& image = m.images[static_cast<std::size_t>(letters[i])];
    if (!image) return false;
    for (std::size_t j = 0; j < k; ++j) {
      incidence[i][j] = image->find(letter_char(letters[j])) != FiniteWord::npos;
    }
  }
  auto multiply = [k](const Matrix& x, const Matrix& y) {
    Matrix z(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t l = 0; l < k; ++l)
        if (x[i][l])
          for (std::size_t j = 0; j < k; ++j) z[i][j] = z[i][j] || y[l][j];
    return z;
  };
  auto positive = [](const Matrix& x) {
    return std::all_of(x.begin(), x.end(), [](const auto& row) {
      return std::all_of(row.begin(), row.end(), [](bool b) { return b; });
    });
  };
  // Wielandt: a primitive k x k matrix has a positive power of order at most
  // (k-1)^2 + 1.
  Matrix power = incidence;
  const std::size_t bound = (k - 1) * (k - 1) + 1;
  for (std::size_t e = 1; e <= bound; ++e) {
    if (positive(power)) return true;
    power = multiply(power, incidence);
  }
  return false;
}

KnownFlags known_flags(const WordSpec& spec) {
  return std::visit(
      Overloaded{
          [](const Literal&) { return KnownFlags{}; },
          [](const Periodic&) { return KnownFlags{Tristate::Yes, Tristate::No}; },
          [](const UltimatelyPeriodic& u) {
            return absorbable(u.preperiod, u.seed) ? KnownFlags{Tristate::Yes, Tristate::No}
                                                   : KnownFlags{Tristate::No, Tristate::No};
          },
          [](const Morphic& m) {
            return is_primitive(m) ? KnownFlags{Tristate::Yes, Tristate::Unknown} : KnownFlags{};
          },
          [](const StandardSequence&) { return KnownFlags{Tristate::Yes, Tristate::Yes}; },
          [](const MechanicalRational&) { return KnownFlags{Tristate::Yes, Tristate::No}; },
      },
      spec.kind);
}

bool is_sturmian_by_construction(const WordSpec& spec) noexcept {
  if (std::holds_alternative<StandardSequence>(spec.kind)) return true;
  // The Fibonacci morphism, the one morphic spec recognised here.
  const auto* m = std::get_if<Morphic>(&spec.kind);
  if (!m || m->seed != '0' || m->images[0] != FiniteWord("01") || m->images[1] != FiniteWord("0")) return false;
  for (std::size_t a = 2; a < m->images.size(); ++a) {
    if (m->images[a]) return false;
  }
  return true;
}

std::uint16_t spec_alphabet(const WordSpec& spec) {
  return std::visit(Overloaded{
                        [](const Literal& l) { return alphabet_mask(l.word); },
                        [](const Periodic& p) { return alphabet_mask(p.seed); },
                        [](const UltimatelyPeriodic& u) {
                          return static_cast<std::uint16_t>(alphabet_mask(u.preperiod) |
                                                            alphabet_mask(u.seed));
                        },
                        [](const Morphic& m) { return reachable_letters(m); },
                        [](const StandardSequence&) { return std::uint16_t{0b11}; },
                        [](const MechanicalRational& mw) {
                          return mw.ones == 0 ? std::uint16_t{0b01} : std::uint16_t{0b11};
                        },
                    },
                    spec.kind);
}

std::optional<std::size_t> literal_length(const WordSpec& spec) noexcept {
  if (const auto* l = std::get_if<Literal>(&spec.kind)) return l->word.size();
  return std::nullopt;
}

WordSpec parse_spec(std::string_view text) {
  text = trim(text);
  if (text == "fib") return {fibonacci()};
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) malformed("unknown word spec '" + std::string(text) + "'");
  const auto head = text.substr(0, colon);
  const auto body = trim(text.substr(colon + 1));
  WordSpec spec;
  if (head == "literal") {
    spec.kind = Literal{parse_word(body, "literal")};
  } else if (head == "periodic") {
    spec.kind = Periodic{parse_word(body, "periodic seed")};
  } else if (head == "ultper") {
    const auto bar = body.find('|');
    if (bar == std::string_view::npos) malformed("ultper expects <preperiod>|<seed>");
    spec.kind = UltimatelyPeriodic{parse_word(trim(body.substr(0, bar)), "preperiod"),
                                   parse_word(trim(body.substr(bar + 1)), "seed")};
  } else if (head == "morphic") {
    spec.kind = parse_morphic(body);
  } else if (head == "std") {
    StandardSequence s;
    for (const auto part : split(body, ',')) s.directive.push_back(parse_int<std::uint32_t>(part, "directive entry"));
    spec.kind = std::move(s);
  } else if (head == "mech") {
    const auto at = body.find('@');
    const Rational slope = parse_rational(trim(body.substr(0, at)));
    MechanicalRational mw;
    mw.ones = slope.num;
    mw.zeros = slope.den - slope.num;
    if (at != std::string_view::npos) mw.intercept = parse_rational(trim(body.substr(at + 1)));
    spec.kind = mw;
  } else {
    malformed("unknown word spec kind '" + std::string(head) + "'");
  }
  validate(spec);
  return spec;
}

std::string format_spec(const WordSpec& spec) {
  return std::visit(
      Overloaded{
          [](const Literal& l) { return "literal:" + l.word; },
          [](const Periodic& p) { return "periodic:" + p.seed; },
          [](const UltimatelyPeriodic& u) { return "ultper:" + u.preperiod + "|" + u.seed; },
          [](const Morphic& m) {
            std::string out = "morphic:";
            bool first = true;
            for (int a = 0; a <= kMaxLetter; ++a) {
              const auto& image = m.images[static_cast<std::size_t>(a)];
              if (!image) continue;
              if (!first) out += ',';
              first = false;
              out += letter_char(a);
              out += "->" + *image;
            }
            return out + ";seed=" + m.seed;
          },
          [](const StandardSequence& s) {
            std::string out = "std:";
            for (std::size_t i = 0; i < s.directive.size(); ++i) {
              if (i) out += ',';
              out += std::to_string(s.directive[i]);
            }
            return out;
          },
          [](const MechanicalRational& mw) {
            std::string out = "mech:" + std::to_string(mw.ones) + "/" + std::to_string(mw.ones + mw.zeros) + "@";
            if (mw.intercept.num == 0) return out + "0";
            return out + std::to_string(mw.intercept.num) + "/" + std::to_string(mw.intercept.den);
          },
      },
      spec.kind);
}

}  // namespace sturmlex
