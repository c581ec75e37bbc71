// SPDX-License-Identifier: Apache-2.0
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "qcordic/state_vector.hpp"
#include "qcordic/sweep.hpp"

namespace py = pybind11;
using namespace qcordic;

namespace {

CordicOptions make_opts(const std::string& negate, bool clamp) {
  CordicOptions o;
  if (negate == "neg") {
    o.negate = NegateMode::TwosComplement;
  } else if (negate != "not") {
    throw py::value_error("negate must be 'not' or 'neg'");
  }
  o.clamp_iters = clamp;
  return o;
}

}  // namespace

PYBIND11_MODULE(_qcordic, m) {
  m.doc() = "fixed-point CORDIC arcsine and digital-to-amplitude conversion";

  m.def(
      "encode",
      [](double value, int n) { return FixWord::encode(value, n).raw(); },
      py::arg("value"), py::arg("n"),
      "Round value to the nearest n-bit word in [-2, 2) and return the raw "
      "two's-complement pattern.");

  m.def(
      "decode",
      [](std::uint64_t raw, int n) { return FixWord::from_raw(raw, n).decode(); },
      py::arg("raw"), py::arg("n"),
      "Value of a raw n-bit pattern.");

  m.def(
      "ulp", [](int n) { return FixWord::ulp_value(n); }, py::arg("n"),
      "Weight of the least-significant bit at width n.");

  m.def(
      "arcsin_fixed",
      [](double t, int n, const std::string& negate, bool clamp_iters) {
        const ArcsinResult r = arcsin_value(t, n, make_opts(negate, clamp_iters));
        py::dict d;
        d["theta"] = r.theta.decode();
        d["theta_raw"] = r.theta.raw();
        d["ref"] = std::asin(t);
        d["abs_err"] = std::abs(r.theta.decode() - std::asin(t));
        d["additions"] = r.trace.additions;
        return d;
      },
      py::arg("t"), py::arg("n"), py::arg("negate") = "not",
      py::arg("clamp_iters") = true,
      "Fixed-point arcsine of t in [-1, 1] with instrumentation.");

  m.def(
      "direction_bits",
      [](double t, int n, const std::string& negate, bool clamp_iters) {
        RegisterFile rf = init_state(FixWord::encode(t, n), n);
        OpTrace tr;
        const DirectionWord d =
            directions(rf, tr, make_opts(negate, clamp_iters));
        std::vector<int> bits;
        for (int i = 1; i <= n - 1; ++i) bits.push_back(d.get(i) ? 1 : 0);
        return bits;
      },
      py::arg("t"), py::arg("n"), py::arg("negate") = "not",
      py::arg("clamp_iters") = true,
      "Rotation-direction bits d_1..d_(n-1) for goal height t.");

  m.def(
      "amplitude_encode",
      [](double h, int n, const std::string& negate, bool clamp_iters) {
        const AmplitudeResult r =
            amplitude_encode(h, n, make_opts(negate, clamp_iters));
        return py::make_tuple(r.out.a0, r.out.a1);
      },
      py::arg("h"), py::arg("n"), py::arg("negate") = "not",
      py::arg("clamp_iters") = true,
      "Amplitudes (a0, a1) of the output qubit for input h in [0, 1]; "
      "a1*a1 approximates h.");

  m.def(
      "trace_report",
      [](int n) {
        const TraceReport r = run_trace(n);
        py::dict d;
        d["n"] = r.n;
        d["additions"] = r.trace.additions;
        d["budget_14n"] = r.budget_14n;
        d["swaps"] = r.trace.swaps;
        d["controlled_nots"] = r.trace.controlled_nots;
        d["bits_total"] = r.bits_total;
        d["bits_expected"] = r.bits_expected;
        d["within_budget"] = r.within_budget();
        return d;
      },
      py::arg("n"), "Operation counters for one direction pass at width n.");

  m.def(
      "xcheck_fidelity",
      [](int n) {
        std::vector<SvInput> inputs;
        const int count = 1 << (n - 1);
        for (int j = 0; j < count; ++j) {
          inputs.push_back(SvInput{1.0 / std::sqrt(static_cast<double>(count)),
                                   std::ldexp(static_cast<double>(j), 1 - n)});
        }
        const StateVector sv = statevector_pipeline(n, inputs);
        const StateVector ref = hybrid_reference_state(n, inputs);
        return fidelity(sv, ref);
      },
      py::arg("n"),
      "Fidelity of the dense state-vector pipeline against the hybrid "
      "per-branch oracle on a uniform superposition (n <= 5).");
}
