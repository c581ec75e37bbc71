// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "qcordic/fixed_point.hpp"
#include "qcordic/op_trace.hpp"

namespace qcordic {

// The machine state of the reversible pipeline: five n-bit words plus the
// n-1 direction bits d_1..d_n-1 (stored at d[i-1]).
struct RegisterFile {
  explicit RegisterFile(int n);

  FixWord ang, x, y, t, aux;
  std::vector<std::uint8_t> d;
  int n;

  FixWord& reg(Reg r);
  const FixWord& reg(Reg r) const;

  bool direction(int i) const { return d.at(i - 1) != 0; }
  void xor_direction(int i, bool v) { d.at(i - 1) ^= v ? 1 : 0; }
};

// dst += asr(src, shift). dst and src must be distinct registers.
void add_shifted_into(RegisterFile& rf, Reg dst, Reg src, int shift, OpTrace& tr);
// dst -= asr(src, shift).
void sub_shifted_into(RegisterFile& rf, Reg dst, Reg src, int shift, OpTrace& tr);

// dst += c / dst -= c for a classical constant c of matching width.
void add_const_into(RegisterFile& rf, Reg dst, const FixWord& c, OpTrace& tr);
void sub_const_into(RegisterFile& rf, Reg dst, const FixWord& c, OpTrace& tr);

// Swap a and b when ctrl is set. Self-inverse.
void cswap(RegisterFile& rf, Reg a, Reg b, bool ctrl, OpTrace& tr);

// Bitwise NOT of r when ctrl is set. Self-inverse.
void cnot_register(RegisterFile& rf, Reg r, bool ctrl, OpTrace& tr);

// Two's-complement negation of r when ctrl is set. Self-inverse.
void cneg_register(RegisterFile& rf, Reg r, bool ctrl, OpTrace& tr);

// The direction probe: t -= y, XOR the comparator bit into d_i, t += y.
// Net effect on t is zero; costs exactly 2 additions. The comparator is the
// sign-bit network  d ^= [s(x) & s(t-y)] ^ s(x) ^ [s(x) & s(y)] ^ s(t-y),
// i.e. "goal below current height" while x >= 0 and "keep turning back
// toward the axis" once x has overshot past +-pi/2.
void compute_direction(RegisterFile& rf, int i, OpTrace& tr);

// The comparator bit alone, for callers that already hold t-y's sign.
bool direction_bit(bool sx, bool sy, bool s_t_minus_y);

}  // namespace qcordic
