// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <concepts>
#include <cstdint>
#include <stdexcept>

#include "qcordic/scaler.hpp"

namespace qcordic {

// One op-set, two executors: the same emitter templates drive both the
// classical register file and the full state-vector simulator, so the two
// simulation paths apply the identical reversible sequence.
template <class B>
concept PipelineBackend = requires(B b, Reg r, int i, bool f, std::uint64_t raw) {
  { b.width() } -> std::convertible_to<int>;
  { b.clamp_iters() } -> std::convertible_to<bool>;
  b.add_shifted(r, r, i, f);   // dst +-= asr(src, shift)
  b.add_raw_const(r, raw, f);  // dst +-= constant (raw pattern)
  b.cswap_xy(i);               // swap x,y under d_i
  b.direction_probe(i);        // t -= y; d_i ^= comparator; t += y
  b.rot_t_left();              // move t's binary point (cyclic, reversible)
  b.rot_t_right();
  b.flip_x_unit();             // x ^= 1.0 (single bit flip)
  b.begin_mult();
  b.end_mult();
};

namespace detail {
inline bool fib_odd(int i) { return fibonacci(i) % 2 == 1; }
inline int fib_shift(int m, int i) {
  const std::uint64_t f = fibonacci(i);
  const std::uint64_t s = static_cast<std::uint64_t>(m) * f;
  return s > 63 ? 63 : static_cast<int>(s);
}
}  // namespace detail

// in *= (1 + 2^-m)^-1 by Fibonacci-indexed shifted additions: transfer in
// into aux, cross-feed with addend sign (-1)^F[i] and shift m*F[i], then
// subtract in back out of aux. Even passes update aux, odd passes update in.
template <PipelineBackend B>
void emit_div(B& b, Reg in, Reg aux, int m) {
  if (in == aux) throw std::invalid_argument("scaler: in and aux must be distinct");
  const ScalerPlan p = plan(m, b.width(), b.clamp_iters());
  b.begin_mult();
  if (p.iters > 0) {
    b.add_shifted(aux, in, 0, false);
    for (int i = 0; i < p.iters; ++i) {
      const int sh = detail::fib_shift(m, i);
      if (i % 2 == 0) {
        b.add_shifted(aux, in, sh, detail::fib_odd(i));
      } else {
        b.add_shifted(in, aux, sh, detail::fib_odd(i));
      }
    }
    b.add_shifted(aux, in, 0, true);
  }
  b.end_mult();
}

// in *= (1 + 2^-m): the exact reverse of emit_div (same passes, descending,
// with addend signs inverted), so div(mult(state)) is the identity bit for
// bit and vice versa.
template <PipelineBackend B>
void emit_mult(B& b, Reg in, Reg aux, int m) {
  if (in == aux) throw std::invalid_argument("scaler: in and aux must be distinct");
  const ScalerPlan p = plan(m, b.width(), b.clamp_iters());
  b.begin_mult();
  if (p.iters > 0) {
    b.add_shifted(aux, in, 0, false);
    for (int i = p.iters - 1; i >= 0; --i) {
      const int sh = detail::fib_shift(m, i);
      if (i % 2 == 0) {
        b.add_shifted(aux, in, sh, !detail::fib_odd(i));
      } else {
        b.add_shifted(in, aux, sh, !detail::fib_odd(i));
      }
    }
    b.add_shifted(aux, in, 0, true);
  }
  b.end_mult();
}

// One pseudo-rotation (x, y) <- (x - 2^-i y, y + 2^-i x): the serialized
// form  x -= y>>i;  y *= (1 + 2^-2i);  y += x>>i  where the scaling
// pre-cancels the 2^-2i y term that using the updated x would introduce.
template <PipelineBackend B>
void emit_pseudo_rotation(B& b, int i) {
  b.add_shifted(Reg::X, Reg::Y, i, true);
  emit_mult(b, Reg::Y, Reg::Aux, 2 * i);
  b.add_shifted(Reg::Y, Reg::X, i, false);
}

template <PipelineBackend B>
void emit_pseudo_rotation_inverse(B& b, int i) {
  b.add_shifted(Reg::Y, Reg::X, i, true);
  emit_div(b, Reg::Y, Reg::Aux, 2 * i);
  b.add_shifted(Reg::X, Reg::Y, i, false);
}

// Iteration i of the main loop, angle update excluded: probe the direction
// (optional), conjugate by the controlled swap so d_i = 1 turns clockwise,
// rotate twice by arctan 2^-i, and stretch the goal height t by the same
// 1 + 2^-2i factor the rotation pair applied to (x, y).
template <PipelineBackend B>
void emit_iterate(B& b, int i, bool update_direction) {
  if (update_direction) b.direction_probe(i);
  b.cswap_xy(i);
  emit_pseudo_rotation(b, i);
  emit_pseudo_rotation(b, i);
  b.cswap_xy(i);
  emit_mult(b, Reg::T, Reg::Aux, 2 * i);
}

// Exact inverse of emit_iterate. With update_direction set, the final probe
// re-evaluates the comparator in the restored pre-iteration state and XORs
// d_i back to zero.
template <PipelineBackend B>
void emit_iterate_inverse(B& b, int i, bool update_direction) {
  emit_div(b, Reg::T, Reg::Aux, 2 * i);
  b.cswap_xy(i);
  emit_pseudo_rotation_inverse(b, i);
  emit_pseudo_rotation_inverse(b, i);
  b.cswap_xy(i);
  if (update_direction) b.direction_probe(i);
}

template <PipelineBackend B>
void emit_direction_pass(B& b) {
  for (int i = 1; i <= b.width() - 1; ++i) emit_iterate(b, i, true);
}

template <PipelineBackend B>
void emit_uncompute_pass(B& b) {
  for (int i = b.width() - 1; i >= 1; --i) emit_iterate_inverse(b, i, false);
}

template <PipelineBackend B>
void emit_cleanup_pass(B& b) {
  for (int i = 1; i <= b.width() - 1; ++i) emit_iterate(b, i, false);
  for (int i = b.width() - 1; i >= 1; --i) emit_iterate_inverse(b, i, true);
}

namespace detail {
template <class B>
std::uint64_t one_raw(const B& b) {
  return std::uint64_t{1} << (b.width() - 2);
}
}  // namespace detail

// t -= 1 and x: 0 -> 1. Expects t to hold the doubled input already.
template <PipelineBackend B>
void emit_affine_prep(B& b) {
  b.add_raw_const(Reg::T, detail::one_raw(b), true);
  b.flip_x_unit();
}

template <PipelineBackend B>
void emit_affine_unprep(B& b) {
  b.flip_x_unit();
  b.add_raw_const(Reg::T, detail::one_raw(b), false);
}

// t: h -> 2h - 1 for h in [0, 1] (sign bit known zero, so the doubling is a
// reversible one-bit rotate), plus x: 0 -> 1.
template <PipelineBackend B>
void emit_prep_sqrt(B& b) {
  b.rot_t_left();
  emit_affine_prep(b);
}

template <PipelineBackend B>
void emit_unprep_sqrt(B& b) {
  emit_affine_unprep(b);
  b.rot_t_right();
}

// Backend over the classical register file; the only executor that traces.
struct RegisterBackend {
  RegisterFile& rf;
  OpTrace& tr;
  bool clamp = true;

  int width() const { return rf.n; }
  bool clamp_iters() const { return clamp; }

  void add_shifted(Reg dst, Reg src, int sh, bool negate) {
    if (negate) {
      sub_shifted_into(rf, dst, src, sh, tr);
    } else {
      add_shifted_into(rf, dst, src, sh, tr);
    }
  }
  void add_raw_const(Reg dst, std::uint64_t raw, bool negate) {
    const FixWord c = FixWord::from_raw(raw, rf.n);
    if (negate) {
      sub_const_into(rf, dst, c, tr);
    } else {
      add_const_into(rf, dst, c, tr);
    }
  }
  void cswap_xy(int i) { cswap(rf, Reg::X, Reg::Y, rf.direction(i), tr); }
  void direction_probe(int i) { compute_direction(rf, i, tr); }
  void rot_t_left() {
    const std::uint64_t r = rf.t.raw();
    rf.t = FixWord::from_raw((r << 1) | (r >> (rf.n - 1)), rf.n);
    tr.touched |= OpTrace::touch_bit(Reg::T);
  }
  void rot_t_right() {
    const std::uint64_t r = rf.t.raw();
    rf.t = FixWord::from_raw((r >> 1) | (r << (rf.n - 1)), rf.n);
    tr.touched |= OpTrace::touch_bit(Reg::T);
  }
  void flip_x_unit() {
    rf.x = FixWord::from_raw(rf.x.raw() ^ detail::one_raw(*this), rf.n);
    tr.touched |= OpTrace::touch_bit(Reg::X);
  }
  void begin_mult() {
    ++tr.mult_calls;
    tr.scaler_scope = true;
  }
  void end_mult() { tr.scaler_scope = false; }
};

// Executors for the digital-to-amplitude stage: a controlled rotation per
// direction bit. Kept separate from PipelineBackend since only state
// carriers with an output qubit implement it.
template <class B>
concept OutputBackend = requires(B b, int i, double w) {
  { b.width() } -> std::convertible_to<int>;
  b.ry_out(w);
  b.cry_out_on_d(i, w);
};

// The rotation network converting direction bits to the target amplitude:
// per bit a controlled Ry(-2 arctan 2^-i) then an offset Ry(arctan 2^-i),
// closing with Ry(pi/4) which also folds in the absent i = 0 term. Net
// rotation angle: pi/4 + sum (-1)^d_i arctan 2^-i.
template <OutputBackend B>
void emit_rotation_network(B& b) {
  for (int i = 1; i <= b.width() - 1; ++i) {
    const double mu = std::atan(std::ldexp(1.0, -i));
    b.cry_out_on_d(i, -2.0 * mu);
    b.ry_out(mu);
  }
  b.ry_out(std::atan(1.0));
}

}  // namespace qcordic
