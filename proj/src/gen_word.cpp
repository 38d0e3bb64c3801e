#include "ergodir/gen_word.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace ergodir {

const char* name(Generator g) { return g == Generator::HPlus ? "h+" : "h-"; }

IntMat2 matrix(Generator g) { return g == Generator::HPlus ? mat::h_plus() : mat::h_minus(); }

IntMat2 matrix_pow(Generator g, const BigInt& exponent) {
  return g == Generator::HPlus ? mat::h_plus_pow(exponent) : mat::h_minus_pow(exponent);
}

GenWord::GenWord(std::vector<Syllable> syllables) : syllables_(std::move(syllables)) {
  for (std::size_t i = 0; i < syllables_.size(); ++i) {
    if (syllables_[i].exponent == 0) throw std::invalid_argument("word exponents must be positive");
    if (i > 0 && syllables_[i].gen == syllables_[i - 1].gen) {
      throw std::invalid_argument("word syllables must alternate between h+ and h-");
    }
  }
}

GenWord GenWord::from_digits(std::span<const std::uint64_t> digits, Generator first) {
  GenWord out;
  Generator g = first;
  for (std::uint64_t d : digits) {
    if (d == 0) throw std::invalid_argument("continued-fraction digits must be positive");
    out.syllables_.push_back({g, d});
    g = other(g);
  }
  return out;
}

GenWord GenWord::parse(std::string_view text) {
  GenWord out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text.size() - i < 2 || text[i] != 'h' || (text[i + 1] != '+' && text[i + 1] != '-')) {
      throw std::invalid_argument("malformed word near '" + std::string(text.substr(i)) + "'");
    }
    const Generator g = text[i + 1] == '+' ? Generator::HPlus : Generator::HMinus;
    i += 2;
    std::uint64_t exponent = 1;
    if (i < text.size() && (text[i] == ':' || text[i] == '^')) {
      ++i;
      const auto* begin = text.data() + i;
      const auto [end, ec] = std::from_chars(begin, text.data() + text.size(), exponent);
      if (ec != std::errc() || exponent == 0) {
        throw std::invalid_argument("malformed exponent in word '" + std::string(text) + "'");
      }
      i += static_cast<std::size_t>(end - begin);
    }
    out.append(g, exponent);
    skip();
  }
  return out;
}

void GenWord::append(Generator gen, std::uint64_t exponent) {
  if (exponent == 0) throw std::invalid_argument("word exponents must be positive");
  if (!syllables_.empty() && syllables_.back().gen == gen) {
    syllables_.back().exponent += exponent;
  } else {
    syllables_.push_back({gen, exponent});
  }
}

void GenWord::append(const GenWord& tail) {
  for (const auto& s : tail.syllables_) append(s.gen, s.exponent);
}

std::uint64_t GenWord::length() const {
  std::uint64_t total = 0;
  for (const auto& s : syllables_) total += s.exponent;
  return total;
}

std::string GenWord::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < syllables_.size(); ++i) {
    if (i) os << ' ';
    os << name(syllables_[i].gen) << ':' << syllables_[i].exponent;
  }
  return os.str();
}

IntMat2 word_matrix(const GenWord& word) {
  IntMat2 out = IntMat2::identity();
  for (const auto& s : word.syllables()) {
    out = out * matrix_pow(s.gen, BigInt(static_cast<unsigned long>(s.exponent)));
  }
  return out;
}

}  // namespace ergodir
