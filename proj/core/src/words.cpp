#include "stsig/words.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "stsig/checked.hpp"

namespace stsig {

namespace {

void check_syllable_shape(const Syllable& s) {
  if (s.factor.index < 1)
    throw std::invalid_argument("factor index must be >= 1");
  if (s.factor.kind != FactorKind::RankTwoParabolic && s.b != 0)
    throw std::invalid_argument("rank-1 syllable carries a D-exponent");
}

}  // namespace

Syllable syllable_a(std::int64_t index, std::int64_t exp) {
  return {{FactorKind::Loxodromic, index}, exp, 0};
}
Syllable syllable_b(std::int64_t index, std::int64_t exp) {
  return {{FactorKind::RankOneParabolic, index}, exp, 0};
}
Syllable syllable_cd(std::int64_t index, std::int64_t c_exp, std::int64_t d_exp) {
  return {{FactorKind::RankTwoParabolic, index}, c_exp, d_exp};
}

Word reduce_word(const Word& w) {
  std::vector<Syllable> out;
  out.reserve(w.syllables.size());
  for (const Syllable& s : w.syllables) {
    check_syllable_shape(s);
    if (s.a == 0 && s.b == 0) continue;
    if (!out.empty() && out.back().factor == s.factor) {
      Syllable& top = out.back();
      top.a = checked_add(top.a, s.a);
      top.b = checked_add(top.b, s.b);
      if (top.a == 0 && top.b == 0) out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return Word{std::move(out)};
}

Word word_product(const Word& u, const Word& v) {
  Word cat;
  cat.syllables.reserve(u.size() + v.size());
  cat.syllables.insert(cat.syllables.end(), u.syllables.begin(), u.syllables.end());
  cat.syllables.insert(cat.syllables.end(), v.syllables.begin(), v.syllables.end());
  return reduce_word(cat);
}

Word word_inverse(const Word& u) {
  Word out;
  out.syllables.reserve(u.size());
  for (auto it = u.syllables.rbegin(); it != u.syllables.rend(); ++it) {
    out.syllables.push_back({it->factor, checked_sub(0, it->a), checked_sub(0, it->b)});
  }
  return reduce_word(out);
}

Word cyclic_reduce(const Word& w0) {
  std::vector<Syllable> w = reduce_word(w0).syllables;
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo].factor == w[hi - 1].factor) {
    const std::int64_t a = checked_add(w[lo].a, w[hi - 1].a);
    const std::int64_t b = checked_add(w[lo].b, w[hi - 1].b);
    const FactorId factor = w[lo].factor;
    ++lo;
    --hi;
    if (a != 0 || b != 0) {
      // conjugate: s u s' ~ u (s' s); the merged syllable moves to the back
      std::vector<Syllable> next(w.begin() + lo, w.begin() + hi);
      next.push_back({factor, a, b});
      w = std::move(next);
      lo = 0;
      hi = w.size();
    }
  }
  return Word{std::vector<Syllable>(w.begin() + lo, w.begin() + hi)};
}

ElementType element_type(const Word& w) {
  const Word c = cyclic_reduce(w);
  if (c.empty()) return ElementType::Identity;
  if (c.size() == 1 && c.syllables[0].factor.kind != FactorKind::Loxodromic)
    return ElementType::Parabolic;
  return ElementType::Loxodromic;
}

namespace {

struct TokenCursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
};

std::int64_t parse_int(TokenCursor& c, bool allow_sign, const std::string& what) {
  const char* first = c.text.data() + c.pos;
  const char* last = c.text.data() + c.text.size();
  if (!allow_sign && first != last && (*first == '-' || *first == '+'))
    throw std::invalid_argument("malformed " + what + " in word token '" + std::string(c.text) + "'");
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr == first)
    throw std::invalid_argument("malformed " + what + " in word token '" + std::string(c.text) + "'");
  c.pos = static_cast<std::size_t>(ptr - c.text.data());
  return value;
}

// <idx>[^<exp>], exponent defaults to 1
void parse_half(TokenCursor& c, std::int64_t& index, std::int64_t& exp) {
  index = parse_int(c, false, "index");
  if (index < 1)
    throw std::invalid_argument("factor index must be >= 1 in word token '" +
                                std::string(c.text) + "'");
  exp = 1;
  if (!c.done() && c.peek() == '^') {
    ++c.pos;
    exp = parse_int(c, true, "exponent");
  }
}

Syllable parse_token(std::string_view tok) {
  TokenCursor c{tok, 1};
  const char head = tok[0];
  std::int64_t index = 0, exp = 0;
  switch (head) {
    case 'A':
    case 'B': {
      parse_half(c, index, exp);
      if (!c.done())
        throw std::invalid_argument("trailing characters in word token '" + std::string(tok) + "'");
      if (exp == 0)
        throw std::invalid_argument("zero syllable in word token '" + std::string(tok) + "'");
      return head == 'A' ? syllable_a(index, exp) : syllable_b(index, exp);
    }
    case 'D': {
      parse_half(c, index, exp);
      if (!c.done())
        throw std::invalid_argument("trailing characters in word token '" + std::string(tok) + "'");
      if (exp == 0)
        throw std::invalid_argument("zero syllable in word token '" + std::string(tok) + "'");
      return syllable_cd(index, 0, exp);
    }
    case 'C': {
      parse_half(c, index, exp);
      std::int64_t d_exp = 0;
      if (!c.done()) {
        if (c.peek() != '*' || c.pos + 1 >= tok.size() || tok[c.pos + 1] != 'D')
          throw std::invalid_argument("trailing characters in word token '" + std::string(tok) + "'");
        c.pos += 2;
        std::int64_t d_index = 0;
        parse_half(c, d_index, d_exp);
        if (!c.done())
          throw std::invalid_argument("trailing characters in word token '" + std::string(tok) + "'");
        if (d_index != index)
          throw std::invalid_argument("C/D indices disagree in word token '" + std::string(tok) + "'");
      }
      if (exp == 0 && d_exp == 0)
        throw std::invalid_argument("zero syllable in word token '" + std::string(tok) + "'");
      return syllable_cd(index, exp, d_exp);
    }
    default:
      throw std::invalid_argument("unknown word token '" + std::string(tok) + "'");
  }
}

}  // namespace

Word parse_word(std::string_view text) {
  Word raw;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    const std::string_view tok = text.substr(i, j - i);
    i = j;
    if (tok == "1") continue;
    raw.syllables.push_back(parse_token(tok));
  }
  return reduce_word(raw);
}

Word parse_word(std::string_view text, const Signature& ambient) {
  Word w = parse_word(text);
  validate_indices(w, ambient);
  return w;
}

namespace {

void append_exp(std::string& out, std::int64_t e) {
  if (e != 1) {
    out += '^';
    out += std::to_string(e);
  }
}

}  // namespace

std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  bool first = true;
  for (const Syllable& s : w.syllables) {
    if (!first) out += ' ';
    first = false;
    switch (s.factor.kind) {
      case FactorKind::Loxodromic:
        out += 'A';
        out += std::to_string(s.factor.index);
        append_exp(out, s.a);
        break;
      case FactorKind::RankOneParabolic:
        out += 'B';
        out += std::to_string(s.factor.index);
        append_exp(out, s.a);
        break;
      case FactorKind::RankTwoParabolic:
        if (s.a != 0) {
          out += 'C';
          out += std::to_string(s.factor.index);
          append_exp(out, s.a);
        }
        if (s.a != 0 && s.b != 0) out += '*';
        if (s.b != 0) {
          out += 'D';
          out += std::to_string(s.factor.index);
          append_exp(out, s.b);
        }
        break;
    }
  }
  return out;
}

void validate_indices(const Word& w, const Signature& ambient) {
  for (const Syllable& s : w.syllables) {
    check_syllable_shape(s);
    std::int64_t limit = 0;
    switch (s.factor.kind) {
      case FactorKind::Loxodromic: limit = ambient.alpha; break;
      case FactorKind::RankOneParabolic: limit = ambient.beta; break;
      case FactorKind::RankTwoParabolic: limit = ambient.gamma; break;
    }
    if (s.factor.index > limit)
      throw std::invalid_argument("factor index out of range for signature " +
                                  to_string(ambient) + ": " + format_word(Word{{s}}));
  }
}

Syllable to_syllable(const GeneratorLetter& g) {
  switch (g.kind) {
    case FactorKind::Loxodromic: return syllable_a(g.index, 1);
    case FactorKind::RankOneParabolic: return syllable_b(g.index, 1);
    case FactorKind::RankTwoParabolic:
      return g.second ? syllable_cd(g.index, 0, 1) : syllable_cd(g.index, 1, 0);
  }
  throw std::invalid_argument("bad FactorKind value");
}

std::vector<GeneratorLetter> generator_letters(const Signature& sig) {
  std::vector<GeneratorLetter> out;
  out.reserve(static_cast<std::size_t>(sig.alpha + sig.beta + 2 * sig.gamma));
  for (std::int64_t i = 1; i <= sig.alpha; ++i)
    out.push_back({FactorKind::Loxodromic, i, false});
  for (std::int64_t j = 1; j <= sig.beta; ++j)
    out.push_back({FactorKind::RankOneParabolic, j, false});
  for (std::int64_t t = 1; t <= sig.gamma; ++t)
    out.push_back({FactorKind::RankTwoParabolic, t, false});
  for (std::int64_t t = 1; t <= sig.gamma; ++t)
    out.push_back({FactorKind::RankTwoParabolic, t, true});
  return out;
}

std::string to_string(const GeneratorLetter& g) {
  return format_word(Word{{to_syllable(g)}});
}

}  // namespace stsig
