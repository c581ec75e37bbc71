// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

namespace qcordic {

// Which architectural register a reversible operation addresses.
enum class Reg { Ang, X, Y, T, Aux };

// Instrumentation for the reversible-operation layer. An operation and its
// inverse increment the same counters by the same amount, so forward and
// uncompute passes cost alike.
//   additions       every in-place add/subtract of a full register
//                   (shifted adds, constant adds, the probe's t-=y / t+=y,
//                   and every addition inside mult/div)
//   swaps           controlled register swaps
//   controlled_nots single-bit controlled-NOT equivalents: 4 per direction
//                   probe (two Toffoli-equivalents plus two CNOTs on sign
//                   bits) and 1 per register-wide controlled NOT/negate
//   mult_calls      mult/div invocations (counted even when the plan is
//                   empty and the body is skipped)
//   mult_additions  the subset of `additions` issued inside mult/div
struct OpTrace {
  std::uint64_t additions = 0;
  std::uint64_t swaps = 0;
  std::uint64_t controlled_nots = 0;
  std::uint64_t mult_calls = 0;
  std::uint64_t mult_additions = 0;

  std::uint64_t non_mult_additions() const { return additions - mult_additions; }

  // Register footprint accounting. Word registers contribute n bits each,
  // the direction register n-1.
  static constexpr unsigned touch_bit(Reg r) { return 1u << static_cast<int>(r); }
  static constexpr unsigned kTouchD = 1u << 5;
  unsigned touched = 0;
  bool scaler_scope = false;  // set while inside mult/div

  void count_addition() {
    ++additions;
    if (scaler_scope) ++mult_additions;
  }

  int footprint_bits(int n) const;

  // "n,additions,swaps,controlled_nots"
  static std::string csv_header();
  std::string csv_row(int n) const;
};

}  // namespace qcordic
