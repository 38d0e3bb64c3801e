#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ergodir/int_mat2.hpp"

namespace ergodir {

enum class Generator : std::uint8_t { HPlus, HMinus };

inline Generator other(Generator g) {
  return g == Generator::HPlus ? Generator::HMinus : Generator::HPlus;
}
const char* name(Generator g);
IntMat2 matrix(Generator g);
IntMat2 matrix_pow(Generator g, const BigInt& exponent);

struct Syllable {
  Generator gen;
  std::uint64_t exponent;  // >= 1

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// An alternating word in h⁺ and h⁻ with positive exponents.
///
/// Consecutive syllables always use different generators: append() merges a
/// syllable into the last one when the generator repeats, while the
/// constructor rejects non-alternating input.
class GenWord {
 public:
  GenWord() = default;
  explicit GenWord(std::vector<Syllable> syllables);

  /// The alternating word h⁺^{d₁} h⁻^{d₂} h⁺^{d₃} … (or starting with h⁻).
  static GenWord from_digits(std::span<const std::uint64_t> digits,
                             Generator first = Generator::HPlus);
  /// Parses "h+:5 h-:1 h+:2" (comma or whitespace separated; "h+" means exponent 1).
  static GenWord parse(std::string_view text);

  void append(Generator gen, std::uint64_t exponent);
  void append(const GenWord& tail);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  std::size_t size() const { return syllables_.size(); }
  bool empty() const { return syllables_.empty(); }
  /// Sum of exponents, i.e. the number of elementary generator applications.
  std::uint64_t length() const;

  std::string str() const;

  friend bool operator==(const GenWord&, const GenWord&) = default;

 private:
  std::vector<Syllable> syllables_;
};

/// Left-to-right product of the syllable matrices.
IntMat2 word_matrix(const GenWord& word);

}  // namespace ergodir
