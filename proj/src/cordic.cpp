// SPDX-License-Identifier: Apache-2.0
#include "qcordic/cordic.hpp"

#include <cmath>
#include <stdexcept>

namespace qcordic {

AtanTable::AtanTable(int n) : n_(n) {
  entries_.reserve(static_cast<std::size_t>(n - 1));
  for (int i = 1; i <= n - 1; ++i) {
    entries_.push_back(FixWord::encode(2.0 * std::atan(std::ldexp(1.0, -i)), n));
  }
}

const FixWord& AtanTable::entry(int i) const {
  return entries_.at(static_cast<std::size_t>(i - 1));
}

double DirectionWord::reconstructed_angle() const {
  double sum = 0.0;
  for (int i = 1; i <= n - 1; ++i) {
    const double term = 2.0 * std::atan(std::ldexp(1.0, -i));
    sum += get(i) ? -term : term;
  }
  return sum;
}

RegisterFile init_state(const FixWord& t, int n) {
  if (t.width() != n) throw std::invalid_argument("init_state: width mismatch");
  const double tv = t.decode();
  if (tv < -1.0 || tv > 1.0) {
    throw std::domain_error("init_state: goal height outside [-1, 1]");
  }
  RegisterFile rf(n);
  rf.t = t;
  rf.x = FixWord::encode(1.0, n);
  return rf;
}

void prep_sqrt(RegisterFile& rf, OpTrace& tr) {
  const double h = rf.t.decode();
  if (h < 0.0 || h > 1.0) {
    throw std::domain_error("prep_sqrt: input outside [0, 1]");
  }
  RegisterBackend b{rf, tr};
  emit_prep_sqrt(b);
}

void unprep_sqrt(RegisterFile& rf, OpTrace& tr) {
  RegisterBackend b{rf, tr};
  emit_unprep_sqrt(b);
}

void pseudo_rotation_substitution(RegisterFile& rf, int i, OpTrace& tr,
                                  const CordicOptions& opts) {
  RegisterBackend b{rf, tr, opts.clamp_iters};
  emit_pseudo_rotation(b, i);
}

namespace {

// ang += (-1)^d_i * c, realized by conjugating an unconditional constant add
// with a controlled complement (NOT or negate per options).
void angle_update(RegisterFile& rf, int i, OpTrace& tr, const FixWord& c,
                  bool inverse, const CordicOptions& opts) {
  const bool ctrl = rf.direction(i);
  const auto flip = [&] {
    if (opts.negate == NegateMode::BitwiseNot) {
      cnot_register(rf, Reg::Ang, ctrl, tr);
    } else {
      cneg_register(rf, Reg::Ang, ctrl, tr);
    }
  };
  flip();
  if (inverse) {
    sub_const_into(rf, Reg::Ang, c, tr);
  } else {
    add_const_into(rf, Reg::Ang, c, tr);
  }
  flip();
}

}  // namespace

void iterate(RegisterFile& rf, int i, OpTrace& tr, IterFlags flags,
             const AtanTable& table, const CordicOptions& opts) {
  RegisterBackend b{rf, tr, opts.clamp_iters};
  emit_iterate(b, i, flags.update_direction);
  if (flags.update_angle) angle_update(rf, i, tr, table.entry(i), false, opts);
}

void iterate_inverse(RegisterFile& rf, int i, OpTrace& tr, IterFlags flags,
                     const AtanTable& table, const CordicOptions& opts) {
  if (flags.update_angle) angle_update(rf, i, tr, table.entry(i), true, opts);
  RegisterBackend b{rf, tr, opts.clamp_iters};
  emit_iterate_inverse(b, i, flags.update_direction);
}

DirectionWord directions(RegisterFile& rf, OpTrace& tr,
                         const CordicOptions& opts) {
  RegisterBackend b{rf, tr, opts.clamp_iters};
  emit_direction_pass(b);
  DirectionWord w;
  w.bits = rf.d;
  w.n = rf.n;
  return w;
}

void uncompute_garbage(RegisterFile& rf, OpTrace& tr,
                       const CordicOptions& opts) {
  RegisterBackend b{rf, tr, opts.clamp_iters};
  emit_uncompute_pass(b);
}

void cleanup_directions(RegisterFile& rf, OpTrace& tr,
                        const CordicOptions& opts) {
  RegisterBackend b{rf, tr, opts.clamp_iters};
  emit_cleanup_pass(b);
}

ArcsinResult arcsin_value(double t, int n, const CordicOptions& opts) {
  if (!(t >= -1.0 && t <= 1.0)) {
    throw std::domain_error("arcsin_value: input outside [-1, 1]");
  }
  RegisterFile rf = init_state(FixWord::encode(t, n), n);
  OpTrace tr;
  const AtanTable table(n);
  for (int i = 1; i <= n - 1; ++i) {
    iterate(rf, i, tr, IterFlags{true, true}, table, opts);
  }
  return ArcsinResult{rf.ang, tr};
}

}  // namespace qcordic
