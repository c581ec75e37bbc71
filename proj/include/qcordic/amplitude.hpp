// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qcordic/cordic.hpp"

namespace qcordic {

// Real single-qubit state (a0, a1). The pipeline only ever applies Ry
// rotations, so amplitudes stay real.
struct OutQubit {
  double a0 = 1.0;
  double a1 = 0.0;

  // Full-angle convention: Ry(w) = [[cos w, -sin w], [sin w, cos w]].
  void rotate(double omega);
  double norm() const { return a0 * a0 + a1 * a1; }
};

// Interpretation of the angle register's bits when converting it to one
// rotation. Radians reads each bit at its positional weight, so the rotation
// angle equals decode(ang). PiScaled applies the constants pi/2^(k+2) to raw
// bit k (MSB first), a convention that presumes a pi-normalized register:
// the net angle is (pi/8) * decode(ang) for non-negative words.
enum class RotationScale { Radians, PiScaled };

// Rotate |0> by the angle stored in ang (one controlled rotation per set
// bit). decode(ang) must lie in [0, pi/2].
OutQubit apply_R(const FixWord& ang, RotationScale scale = RotationScale::Radians);

// Rotate |0> through the per-bit network of emit_rotation_network, composing
// the literal gate sequence.
OutQubit apply_Rprime(const DirectionWord& d);

// Closed form of the same rotation: pi/4 + sum (-1)^d_i arctan 2^-i. Agrees
// with the gate product to 1e-12.
double rprime_angle(const DirectionWord& d);

// t-register word for an amplitude input h in [0, 1]: raw = h * 2^(n-1),
// i.e. the doubled value 2h with the h = 1 case wrapping to the sign bit.
// The input grid {j * 2^(1-n)} maps bijectively onto representable
// 2h - 1 in [-1, 1).
FixWord amplitude_input_word(double h, int n);

struct AmplitudeResult {
  OutQubit out;
  OpTrace trace;
  RegisterFile state;
  DirectionWord d;
};

// Full digital-to-amplitude conversion for h in [0, 1]: load 2h, subtract 1,
// run the direction pass, uncompute the garbage, rotate the output qubit,
// and (by default) clear the direction bits and restore the input register.
// Off-grid h quantizes to the nearest grid point first.
// out approaches (sqrt(1-h), sqrt(h)); |a1^2 - h| <= 2^(-n+6) over the grid.
AmplitudeResult amplitude_encode(double h, int n, const CordicOptions& opts = {},
                                 bool cleanup = true);

}  // namespace qcordic
