// SPDX-License-Identifier: Apache-2.0
#include "qcordic/scaler.hpp"

#include <cmath>
#include <stdexcept>

#include "qcordic/pipeline.hpp"

namespace qcordic {

std::uint64_t fibonacci(int i) {
  if (i < 0) throw std::invalid_argument("fibonacci: negative index");
  if (i > 86) throw std::invalid_argument("fibonacci: index too large for u64");
  std::uint64_t a = 1, b = 1;  // fibonacci(0), fibonacci(1)
  for (int k = 0; k < i; ++k) {
    const std::uint64_t next = a + b;
    a = b;
    b = next;
  }
  return a;
}

ScalerPlan plan(int m, int n, bool clamp) {
  if (m < 1) throw std::invalid_argument("scaler plan: m must be >= 1");
  if (n < FixWord::kMinWidth || n > FixWord::kMaxWidth) {
    throw std::invalid_argument("scaler plan: width out of range");
  }
  ScalerPlan p;
  p.m = m;
  p.n = n;
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  p.formula_iters =
      static_cast<int>(std::ceil(std::sqrt(5.0) * std::pow(phi, -m) * n));
  // Executed count: the smallest J with m*F[J] >= n, i.e. run until the
  // addend shift falls off the word. The printed golden-ratio formula both
  // overshoots for small m (extra sub-ulp passes) and undershoots for large
  // m (too few passes to feed `in` at all), so it is kept for cost reporting
  // only unless clamping is explicitly disabled.
  int j = 0;
  while (static_cast<std::uint64_t>(m) * fibonacci(j) <
         static_cast<std::uint64_t>(n)) {
    ++j;
  }
  p.clamped_iters = j;
  p.iters = clamp ? p.clamped_iters : p.formula_iters;
  return p;
}

void mult_in_place(RegisterFile& rf, Reg in, Reg aux, int m, OpTrace& tr,
                   bool clamp) {
  RegisterBackend b{rf, tr, clamp};
  emit_mult(b, in, aux, m);
}

void div_in_place(RegisterFile& rf, Reg in, Reg aux, int m, OpTrace& tr,
                  bool clamp) {
  RegisterBackend b{rf, tr, clamp};
  emit_div(b, in, aux, m);
}

}  // namespace qcordic
