// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

namespace qcordic {

// An n-bit two's-complement word covering [-2, 2) with layout
// x0 x1 . x2 ... x(n-1): one sign bit, one integer bit, n-2 fraction bits.
// ulp = 2^-(n-2). All arithmetic wraps modulo 2^n; right shifts are
// arithmetic (sign extending), so asr(a, m) floors decode(a) * 2^-m onto
// the representable grid.
class FixWord {
 public:
  static constexpr int kMinWidth = 4;
  static constexpr int kMaxWidth = 62;

  static FixWord zero(int n);
  static FixWord from_raw(std::uint64_t raw, int n);

  // Nearest representable value; ties round to the even raw pattern.
  // v must lie in [-2, 2).
  static FixWord encode(double v, int n);

  double decode() const;
  std::uint64_t raw() const { return raw_; }
  int width() const { return n_; }
  bool sign() const { return (raw_ >> (n_ - 1)) & 1u; }

  // Zero-padded hex, most-significant bit first, ceil(n/4) digits.
  std::string hex() const;

  static double ulp_value(int n);

  friend bool operator==(const FixWord& a, const FixWord& b) = default;

 private:
  FixWord(std::uint64_t raw, int n) : raw_(raw), n_(n) {}
  std::uint64_t raw_ = 0;
  int n_ = kMinWidth;
};

FixWord wrap_add(const FixWord& a, const FixWord& b);
FixWord wrap_sub(const FixWord& a, const FixWord& b);
FixWord neg(const FixWord& a);
FixWord bitnot(const FixWord& a);

// Arithmetic shift right by m >= 0. For m >= n-1 the result collapses to
// sign fill: 0 for non-negative words, all ones (-ulp) for negative ones.
FixWord asr(const FixWord& a, int m);

}  // namespace qcordic
