// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "qcordic/amplitude.hpp"

namespace qcordic {

// Full simulation of the 5n-qubit machine: the five word registers minus the
// angle register (t, x, y, aux of n bits, d of n-1 bits) plus the output
// qubit. Arithmetic steps act as basis permutations; only the output-qubit
// rotations mix amplitudes. Limited to n <= 5 so the dense amplitude array
// stays within 2^25 complex values.
//
// Basis-index bit layout, LSB first: out (1 bit), aux (n), y (n), x (n),
// d (n-1), t (n).
class StateVector {
 public:
  explicit StateVector(int n);

  int width() const { return n_; }
  int qubit_count() const { return 5 * n_; }
  std::size_t size() const { return amps_.size(); }

  struct Layout {
    int out, aux, y, x, d, t;  // bit offsets of each field
  };
  Layout layout() const { return Layout{0, 1, 1 + n_, 1 + 2 * n_, 1 + 3 * n_, 4 * n_}; }

  std::uint64_t field(std::size_t idx, Reg r) const;       // word registers
  std::uint64_t direction_bits(std::size_t idx) const;
  bool out_bit(std::size_t idx) const { return idx & 1u; }

  std::complex<double>& amp(std::size_t idx) { return amps_[idx]; }
  const std::complex<double>& amp(std::size_t idx) const { return amps_[idx]; }

  double norm() const;
  double max_abs_imag() const;

  // Applies a basis permutation: amplitude at i moves to target(i).
  template <class F>
  void permute(F&& target) {
    visited_.assign(amps_.size(), false);
    for (std::size_t s = 0; s < amps_.size(); ++s) {
      if (visited_[s]) continue;
      visited_[s] = true;
      std::size_t j = target(s);
      if (j == s) continue;
      std::complex<double> carry = amps_[s];
      while (j != s) {
        visited_[j] = true;
        std::swap(carry, amps_[j]);
        j = target(j);
      }
      amps_[s] = carry;
    }
  }

  void ry_out(double omega);
  // Ry on out controlled by direction bit d_i.
  void cry_out_on_d(int i, double omega);

  // Nonzero amplitudes as "basis-index,real,imag" rows.
  void write_csv(std::ostream& os) const;

 private:
  int n_;
  std::vector<std::complex<double>> amps_;
  std::vector<bool> visited_;
};

double fidelity(const StateVector& a, const StateVector& b);

struct SvInput {
  double alpha;  // real amplitude
  double h;      // grid value in [0, 1)
};

// Runs the whole conversion on a superposition of inputs. Amplitudes must be
// normalized (sum alpha^2 = 1 within 1e-9) and the h values distinct on the
// width-n grid.
StateVector statevector_pipeline(int n, const std::vector<SvInput>& inputs,
                                 const CordicOptions& opts = {},
                                 bool cleanup = true);

// The same state assembled from per-branch classical runs, for cross checks.
StateVector hybrid_reference_state(int n, const std::vector<SvInput>& inputs,
                                   const CordicOptions& opts = {},
                                   bool cleanup = true);

}  // namespace qcordic
