// SPDX-License-Identifier: Apache-2.0
#include "qcordic/amplitude.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qcordic {

void OutQubit::rotate(double omega) {
  const double c = std::cos(omega), s = std::sin(omega);
  const double b0 = c * a0 - s * a1;
  const double b1 = s * a0 + c * a1;
  a0 = b0;
  a1 = b1;
}

OutQubit apply_R(const FixWord& ang, RotationScale scale) {
  const double v = ang.decode();
  if (v < 0.0 || v > std::numbers::pi / 2.0) {
    throw std::domain_error("apply_R: angle outside [0, pi/2]");
  }
  const int n = ang.width();
  OutQubit q;
  for (int k = 0; k < n; ++k) {  // k = 0 is the sign bit (never set here)
    if (((ang.raw() >> (n - 1 - k)) & 1u) == 0) continue;
    const double w = scale == RotationScale::Radians
                         ? std::ldexp(1.0, 1 - k)
                         : std::numbers::pi * std::ldexp(1.0, -(k + 2));
    q.rotate(w);
  }
  return q;
}

namespace {

// Output-qubit executor over classically known direction bits.
struct HybridOutBackend {
  const DirectionWord& d;
  OutQubit& q;
  int width() const { return d.n; }
  void ry_out(double w) { q.rotate(w); }
  void cry_out_on_d(int i, double w) {
    if (d.get(i)) q.rotate(w);
  }
};

}  // namespace

OutQubit apply_Rprime(const DirectionWord& d) {
  OutQubit q;
  HybridOutBackend b{d, q};
  emit_rotation_network(b);
  return q;
}

double rprime_angle(const DirectionWord& d) {
  double sum = std::numbers::pi / 4.0;
  for (int i = 1; i <= d.n - 1; ++i) {
    const double mu = std::atan(std::ldexp(1.0, -i));
    sum += d.get(i) ? -mu : mu;
  }
  return sum;
}

FixWord amplitude_input_word(double h, int n) {
  if (!(h >= 0.0 && h <= 1.0)) {
    throw std::domain_error("amplitude input outside [0, 1]");
  }
  const auto j = static_cast<std::uint64_t>(std::rint(std::ldexp(h, n - 1)));
  return FixWord::from_raw(j, n);
}

AmplitudeResult amplitude_encode(double h, int n, const CordicOptions& opts,
                                 bool cleanup) {
  RegisterFile rf(n);
  rf.t = amplitude_input_word(h, n);
  OpTrace tr;
  RegisterBackend b{rf, tr, opts.clamp_iters};
  emit_affine_prep(b);  // the doubling is absorbed in the input word
  DirectionWord d = directions(rf, tr, opts);
  uncompute_garbage(rf, tr, opts);
  OutQubit q = apply_Rprime(d);
  if (cleanup) {
    cleanup_directions(rf, tr, opts);
    emit_affine_unprep(b);
  }
  return AmplitudeResult{q, tr, rf, std::move(d)};
}

}  // namespace qcordic
