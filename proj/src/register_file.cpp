// SPDX-License-Identifier: Apache-2.0
#include "qcordic/register_file.hpp"

#include <cstdio>
#include <stdexcept>

namespace qcordic {

int OpTrace::footprint_bits(int n) const {
  int bits = 0;
  for (Reg r : {Reg::Ang, Reg::X, Reg::Y, Reg::T, Reg::Aux}) {
    if (touched & touch_bit(r)) bits += n;
  }
  if (touched & kTouchD) bits += n - 1;
  return bits;
}

std::string OpTrace::csv_header() { return "n,additions,swaps,controlled_nots"; }

std::string OpTrace::csv_row(int n) const {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%d,%llu,%llu,%llu", n,
                static_cast<unsigned long long>(additions),
                static_cast<unsigned long long>(swaps),
                static_cast<unsigned long long>(controlled_nots));
  return buf;
}

RegisterFile::RegisterFile(int n_)
    : ang(FixWord::zero(n_)),
      x(FixWord::zero(n_)),
      y(FixWord::zero(n_)),
      t(FixWord::zero(n_)),
      aux(FixWord::zero(n_)),
      d(static_cast<std::size_t>(n_ - 1), 0),
      n(n_) {}

FixWord& RegisterFile::reg(Reg r) {
  switch (r) {
    case Reg::Ang: return ang;
    case Reg::X: return x;
    case Reg::Y: return y;
    case Reg::T: return t;
    case Reg::Aux: return aux;
  }
  throw std::invalid_argument("bad register tag");
}

const FixWord& RegisterFile::reg(Reg r) const {
  return const_cast<RegisterFile&>(*this).reg(r);
}

namespace {

void check_distinct(Reg dst, Reg src) {
  if (dst == src) {
    throw std::invalid_argument("reversible add: dst and src must be distinct");
  }
}

}  // namespace

void add_shifted_into(RegisterFile& rf, Reg dst, Reg src, int shift, OpTrace& tr) {
  check_distinct(dst, src);
  rf.reg(dst) = wrap_add(rf.reg(dst), asr(rf.reg(src), shift));
  tr.count_addition();
  tr.touched |= OpTrace::touch_bit(dst) | OpTrace::touch_bit(src);
}

void sub_shifted_into(RegisterFile& rf, Reg dst, Reg src, int shift, OpTrace& tr) {
  check_distinct(dst, src);
  rf.reg(dst) = wrap_sub(rf.reg(dst), asr(rf.reg(src), shift));
  tr.count_addition();
  tr.touched |= OpTrace::touch_bit(dst) | OpTrace::touch_bit(src);
}

void add_const_into(RegisterFile& rf, Reg dst, const FixWord& c, OpTrace& tr) {
  rf.reg(dst) = wrap_add(rf.reg(dst), c);
  tr.count_addition();
  tr.touched |= OpTrace::touch_bit(dst);
}

void sub_const_into(RegisterFile& rf, Reg dst, const FixWord& c, OpTrace& tr) {
  rf.reg(dst) = wrap_sub(rf.reg(dst), c);
  tr.count_addition();
  tr.touched |= OpTrace::touch_bit(dst);
}

void cswap(RegisterFile& rf, Reg a, Reg b, bool ctrl, OpTrace& tr) {
  if (a == b) throw std::invalid_argument("cswap: registers must be distinct");
  if (ctrl) std::swap(rf.reg(a), rf.reg(b));
  ++tr.swaps;  // the gate is applied regardless of the control value
  tr.touched |= OpTrace::touch_bit(a) | OpTrace::touch_bit(b) | OpTrace::kTouchD;
}

void cnot_register(RegisterFile& rf, Reg r, bool ctrl, OpTrace& tr) {
  if (ctrl) rf.reg(r) = bitnot(rf.reg(r));
  ++tr.controlled_nots;
  tr.touched |= OpTrace::touch_bit(r) | OpTrace::kTouchD;
}

void cneg_register(RegisterFile& rf, Reg r, bool ctrl, OpTrace& tr) {
  if (ctrl) rf.reg(r) = neg(rf.reg(r));
  ++tr.controlled_nots;
  tr.touched |= OpTrace::touch_bit(r) | OpTrace::kTouchD;
}

bool direction_bit(bool sx, bool sy, bool s_t_minus_y) {
  return ((sx && s_t_minus_y) != sx) != ((sx && sy) != s_t_minus_y);
}

void compute_direction(RegisterFile& rf, int i, OpTrace& tr) {
  if (i < 1 || i > rf.n - 1) throw std::invalid_argument("direction index out of range");
  sub_shifted_into(rf, Reg::T, Reg::Y, 0, tr);
  const bool bit = direction_bit(rf.x.sign(), rf.y.sign(), rf.t.sign());
  rf.xor_direction(i, bit);
  tr.controlled_nots += 4;  // two Toffoli-equivalents + two CNOTs on sign bits
  tr.touched |= OpTrace::touch_bit(Reg::X) | OpTrace::kTouchD;
  add_shifted_into(rf, Reg::T, Reg::Y, 0, tr);
}

}  // namespace qcordic
