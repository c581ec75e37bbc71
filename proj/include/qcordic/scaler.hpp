// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "qcordic/register_file.hpp"

namespace qcordic {

// Fibonacci table as used by the scaling loops: 1, 1, 2, 3, 5, 8, 13, ...
// (fibonacci(0) = fibonacci(1) = 1).
std::uint64_t fibonacci(int i);

// Iteration plan for scaling a register by (1 + 2^-m)^(+-1) at width n.
//   formula_iters = ceil(sqrt(5) * phi^-m * n), phi the golden ratio
//   iters         = formula_iters clamped to the smallest J with
//                   m * fibonacci(J) >= n; shifts at or beyond that point are
//                   pure sign fill and cannot improve accuracy. iters = 0
//                   (m >= n) turns the ops into identities.
// Pass clamp = false to execute the raw formula count instead; the clamped
// count is still reported.
struct ScalerPlan {
  int m = 0;
  int n = 0;
  int formula_iters = 0;
  int clamped_iters = 0;
  int iters = 0;  // the count actually executed
};

ScalerPlan plan(int m, int n, bool clamp = true);

// in *= (1 + 2^-m), up to (iters+2) ulp of truncation and a 2^(-m*F[iters]+1)
// series tail. aux must start near zero (|decode| <= 4 ulp) for the accuracy
// claim and returns there; the bit-exact inverse property needs no
// precondition. in and aux must be distinct.
void mult_in_place(RegisterFile& rf, Reg in, Reg aux, int m, OpTrace& tr,
                   bool clamp = true);

// in *= (1 + 2^-m)^-1; exact reverse of mult_in_place.
void div_in_place(RegisterFile& rf, Reg in, Reg aux, int m, OpTrace& tr,
                  bool clamp = true);

}  // namespace qcordic
