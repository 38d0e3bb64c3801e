#include "ergodir/convergents.hpp"

#include <stdexcept>

namespace ergodir {

Convergents::Convergents(std::span<const std::uint64_t> digits) : Convergents() {
  digits_.reserve(digits.size());
  p_.reserve(digits.size() + 2);
  q_.reserve(digits.size() + 2);
  for (std::uint64_t d : digits) push(d);
}

void Convergents::push(std::uint64_t digit) {
  if (digit == 0) throw std::invalid_argument("continued-fraction digits must be >= 1");
  const BigInt a(static_cast<unsigned long>(digit));
  const std::size_t n = p_.size();
  p_.push_back(a * p_[n - 1] + p_[n - 2]);
  q_.push_back(a * q_[n - 1] + q_[n - 2]);
  digits_.push_back(digit);
}

bool Convergents::determinant_identity_holds() const {
  for (long i = 0; i <= static_cast<long>(depth()); ++i) {
    const BigInt lhs = p(i - 1) * q(i) - p(i) * q(i - 1);
    if (lhs != (i % 2 == 0 ? 1 : -1)) return false;
  }
  return true;
}

}  // namespace ergodir
