// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "qcordic/pipeline.hpp"

namespace qcordic {

// How the conditional sign flip of the angle register is realized. Bitwise
// NOT saves the increment of a full negation; conjugating the constant add
// with either flavor yields ang -+ c exactly (the complement offsets cancel),
// so the two modes produce identical angle words.
enum class NegateMode { BitwiseNot, TwosComplement };

struct CordicOptions {
  NegateMode negate = NegateMode::BitwiseNot;
  bool clamp_iters = true;
};

// Rotation constants 2 * arctan(2^-i) for i = 1..n-1, rounded to width n.
// Each entry is within ulp/2 of the real constant.
class AtanTable {
 public:
  explicit AtanTable(int n);
  const FixWord& entry(int i) const;  // i in [1, n-1]
  int width() const { return n_; }

 private:
  int n_;
  std::vector<FixWord> entries_;
};

// The direction bits produced by a full pass, d_1..d_(n-1).
struct DirectionWord {
  std::vector<std::uint8_t> bits;  // bits[i-1] = d_i
  int n = 0;

  bool get(int i) const { return bits.at(i - 1) != 0; }
  // sum of (-1)^d_i * 2 * arctan 2^-i in doubles; always inside (-pi, pi).
  double reconstructed_angle() const;
};

struct IterFlags {
  bool update_direction = true;
  bool update_angle = false;
};

// Registers at the loop entry: ang = y = aux = 0, x = 1, t = goal height.
// Rejects |decode(t)| > 1.
RegisterFile init_state(const FixWord& t, int n);

// t: h -> 2h - 1 (one-bit rotate and subtract, reversible because h in [0,1]
// keeps t's sign bit zero) and x: 0 -> 1. Rejects decode(t) outside [0, 1].
void prep_sqrt(RegisterFile& rf, OpTrace& tr);
// Exact inverse of prep_sqrt.
void unprep_sqrt(RegisterFile& rf, OpTrace& tr);

// One pseudo-rotation; see emit_pseudo_rotation for the serialized form.
void pseudo_rotation_substitution(RegisterFile& rf, int i, OpTrace& tr,
                                  const CordicOptions& opts = {});

// Main-loop iteration i (direction probe, conjugated double pseudo-rotation,
// goal stretch, optional angle accumulation ang += (-1)^d_i * table[i]).
void iterate(RegisterFile& rf, int i, OpTrace& tr, IterFlags flags,
             const AtanTable& table, const CordicOptions& opts = {});
void iterate_inverse(RegisterFile& rf, int i, OpTrace& tr, IterFlags flags,
                     const AtanTable& table, const CordicOptions& opts = {});

// Forward pass i = 1..n-1 computing d; x, y, t, aux end as garbage.
DirectionWord directions(RegisterFile& rf, OpTrace& tr,
                         const CordicOptions& opts = {});

// Inverse pass that keeps d: restores x, y, t, aux to their loop-entry
// values bit for bit.
void uncompute_garbage(RegisterFile& rf, OpTrace& tr,
                       const CordicOptions& opts = {});

// From the uncomputed state, re-derives the garbage forward (steering by the
// stored d) and unwinds it with the probe active, XOR-clearing every d_i.
void cleanup_directions(RegisterFile& rf, OpTrace& tr,
                        const CordicOptions& opts = {});

struct ArcsinResult {
  FixWord theta;
  OpTrace trace;
};

// Fixed-point arcsine of t in [-1, 1] at width n: runs the loop with the
// angle register active and returns it. Away from the poles the error is a
// few ulp times the iteration count; near |t| = 1 the vanishing horizontal
// component inflates it to O(sqrt(ulp)), so full-grid maxima track
// 2^(-(n-2)/2) rather than the interior's 2^(-n) scale.
ArcsinResult arcsin_value(double t, int n, const CordicOptions& opts = {});

}  // namespace qcordic
