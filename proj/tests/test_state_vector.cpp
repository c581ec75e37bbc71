// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "qcordic/state_vector.hpp"

using namespace qcordic;

namespace {

std::vector<SvInput> uniform_inputs(int n) {
  const int count = 1 << (n - 1);
  std::vector<SvInput> in;
  in.reserve(count);
  const double alpha = 1.0 / std::sqrt(static_cast<double>(count));
  for (int j = 0; j < count; ++j) {
    in.push_back(SvInput{alpha, std::ldexp(static_cast<double>(j), 1 - n)});
  }
  return in;
}

}  // namespace

TEST_CASE("dense mode is gated to small widths") {
  CHECK_THROWS_AS(StateVector(6), std::invalid_argument);
  CHECK_THROWS_AS(StateVector(3), std::invalid_argument);
  const StateVector sv(4);
  CHECK(sv.qubit_count() == 20);
  CHECK(sv.size() == (std::size_t{1} << 20));
}

TEST_CASE("single basis input reproduces the per-branch classical run") {
  const int n = 4;
  const double h = 0.375;
  const StateVector sv = statevector_pipeline(n, {{1.0, h}});
  const AmplitudeResult r = amplitude_encode(h, n);

  // Exactly two nonzero amplitudes: the cleaned registers with out in {0,1}.
  const auto lo = sv.layout();
  const std::size_t base = static_cast<std::size_t>(r.state.t.raw()) << lo.t;
  CHECK(std::abs(sv.amp(base).real() - r.out.a0) <= 1e-12);
  CHECK(std::abs(sv.amp(base | 1u).real() - r.out.a1) <= 1e-12);
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < sv.size(); ++i) {
    if (std::abs(sv.amp(i)) > 1e-13) {
      ++nonzero;
      CHECK(sv.field(i, Reg::X) == 0);
      CHECK(sv.field(i, Reg::Y) == 0);
      CHECK(sv.field(i, Reg::Aux) == 0);
      CHECK(sv.direction_bits(i) == 0);
      CHECK(sv.field(i, Reg::T) == r.state.t.raw());
    }
  }
  CHECK(nonzero == 2);
  CHECK(std::abs(sv.norm() - 1.0) <= 1e-10);

  const StateVector ref = hybrid_reference_state(n, {{1.0, h}});
  CHECK(fidelity(sv, ref) >= 1.0 - 1e-12);
}

TEST_CASE("uniform superposition matches the hybrid oracle branch by branch") {
  const int n = 4;
  const auto inputs = uniform_inputs(n);
  const StateVector sv = statevector_pipeline(n, inputs);
  const StateVector ref = hybrid_reference_state(n, inputs);

  CHECK(std::abs(sv.norm() - 1.0) <= 1e-10);
  CHECK(sv.max_abs_imag() <= 1e-14);
  CHECK(fidelity(sv, ref) >= 1.0 - 1e-12);

  // Every surviving branch is garbage-free after cleanup: only t and out
  // carry information.
  for (std::size_t i = 0; i < sv.size(); ++i) {
    if (std::abs(sv.amp(i)) <= 1e-13) continue;
    CHECK(sv.field(i, Reg::X) == 0);
    CHECK(sv.field(i, Reg::Y) == 0);
    CHECK(sv.field(i, Reg::Aux) == 0);
    CHECK(sv.direction_bits(i) == 0);
  }
}

TEST_CASE("without cleanup each branch keeps its own direction bits") {
  const int n = 4;
  const std::vector<SvInput> inputs = {{std::sqrt(0.5), 0.125},
                                       {-std::sqrt(0.5), 0.75}};
  const StateVector sv = statevector_pipeline(n, inputs, {}, false);
  CHECK(std::abs(sv.norm() - 1.0) <= 1e-10);

  for (const auto& e : inputs) {
    const AmplitudeResult r = amplitude_encode(e.h, n, {}, false);
    std::uint64_t dbits = 0;
    for (int i = 1; i <= n - 1; ++i) {
      if (r.state.direction(i)) dbits |= std::uint64_t{1} << (i - 1);
    }
    // The branch lives exactly at the classical run's register values.
    const auto lo = sv.layout();
    const std::size_t idx =
        (static_cast<std::size_t>(r.state.t.raw()) << lo.t) |
        (static_cast<std::size_t>(dbits) << lo.d) |
        (static_cast<std::size_t>(r.state.x.raw()) << lo.x) |
        (static_cast<std::size_t>(r.state.y.raw()) << lo.y) |
        (static_cast<std::size_t>(r.state.aux.raw()) << lo.aux);
    CHECK(std::abs(sv.amp(idx).real() - e.alpha * r.out.a0) <= 1e-12);
    CHECK(std::abs(sv.amp(idx | 1u).real() - e.alpha * r.out.a1) <= 1e-12);
  }

  const StateVector ref = hybrid_reference_state(n, inputs, {}, false);
  CHECK(fidelity(sv, ref) >= 1.0 - 1e-12);
}

TEST_CASE("input validation: normalization, duplicates, emptiness") {
  CHECK_THROWS_AS(statevector_pipeline(4, {{0.5, 0.25}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(statevector_pipeline(4, {}), std::invalid_argument);
  CHECK_THROWS_AS(
      statevector_pipeline(
          4, {{std::sqrt(0.5), 0.25}, {std::sqrt(0.5), 0.25}}),
      std::invalid_argument);
  // Width gate propagates through the pipeline entry point.
  CHECK_THROWS_AS(statevector_pipeline(6, {{1.0, 0.5}}),
                  std::invalid_argument);
}

TEST_CASE("csv dump lists exactly the nonzero amplitudes") {
  const StateVector sv = statevector_pipeline(4, {{1.0, 0.5}});
  std::ostringstream os;
  sv.write_csv(os);
  std::istringstream is(os.str());
  std::string line;
  CHECK(std::getline(is, line));
  CHECK(line == "basis_index,real,imag");
  std::size_t rows = 0;
  double total = 0.0;
  while (std::getline(is, line)) {
    ++rows;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 + 1);
    const double re = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
    const double im = std::stod(line.substr(c2 + 1));
    total += re * re + im * im;
  }
  CHECK(rows == 2);
  CHECK(std::abs(total - 1.0) <= 1e-10);
}
