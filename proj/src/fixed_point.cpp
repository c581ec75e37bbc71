// SPDX-License-Identifier: Apache-2.0
#include "qcordic/fixed_point.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qcordic {

namespace {

void check_width(int n) {
  if (n < FixWord::kMinWidth || n > FixWord::kMaxWidth) {
    throw std::invalid_argument("register width must be in [4, 62], got " +
                                std::to_string(n));
  }
}

std::uint64_t mask_of(int n) { return (std::uint64_t{1} << n) - 1; }

std::int64_t sign_extend(std::uint64_t raw, int n) {
  return static_cast<std::int64_t>(raw << (64 - n)) >> (64 - n);
}

void check_same_width(const FixWord& a, const FixWord& b) {
  if (a.width() != b.width()) {
    throw std::invalid_argument("mixed register widths in word operation");
  }
}

}  // namespace

FixWord FixWord::zero(int n) {
  check_width(n);
  return FixWord(0, n);
}

FixWord FixWord::from_raw(std::uint64_t raw, int n) {
  check_width(n);
  return FixWord(raw & mask_of(n), n);
}

FixWord FixWord::encode(double v, int n) {
  check_width(n);
  if (!(v >= -2.0 && v < 2.0)) {
    throw std::out_of_range("encode: value outside [-2, 2)");
  }
  // rint under the default rounding mode is round-to-nearest, ties-to-even,
  // which is ties-to-even on the raw integer.
  double q = std::rint(std::ldexp(v, n - 2));
  const double top = std::ldexp(1.0, n - 1);
  if (q >= top) q = top - 1.0;  // v just below 2: nearest representable is 2-ulp
  auto s = static_cast<std::int64_t>(q);
  return FixWord(static_cast<std::uint64_t>(s) & mask_of(n), n);
}

double FixWord::decode() const {
  return std::ldexp(static_cast<double>(sign_extend(raw_, n_)), -(n_ - 2));
}

std::string FixWord::hex() const {
  char buf[32];
  const int digits = (n_ + 3) / 4;
  std::snprintf(buf, sizeof buf, "%0*llx", digits,
                static_cast<unsigned long long>(raw_));
  return buf;
}

double FixWord::ulp_value(int n) {
  check_width(n);
  return std::ldexp(1.0, -(n - 2));
}

FixWord wrap_add(const FixWord& a, const FixWord& b) {
  check_same_width(a, b);
  return FixWord::from_raw(a.raw() + b.raw(), a.width());
}

FixWord wrap_sub(const FixWord& a, const FixWord& b) {
  check_same_width(a, b);
  return FixWord::from_raw(a.raw() - b.raw(), a.width());
}

FixWord neg(const FixWord& a) {
  return FixWord::from_raw(0 - a.raw(), a.width());
}

FixWord bitnot(const FixWord& a) {
  return FixWord::from_raw(~a.raw(), a.width());
}

FixWord asr(const FixWord& a, int m) {
  if (m < 0) throw std::invalid_argument("asr: negative shift");
  std::int64_t s = sign_extend(a.raw(), a.width());
  s >>= (m > 62 ? 62 : m);  // beyond the word: pure sign fill
  return FixWord::from_raw(static_cast<std::uint64_t>(s), a.width());
}

}  // namespace qcordic
