// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qcordic/amplitude.hpp"

namespace qcordic {

struct ArcsinRow {
  FixWord t;
  double ref = 0.0;       // asin(decode(t)) in doubles
  double computed = 0.0;  // decode of the fixed-point result
  double abs_err = 0.0;
};

struct ArcsinSweep {
  int n = 0;
  CordicOptions opts;
  std::vector<ArcsinRow> rows;  // every representable t in [-1, 1), ascending
  double max_err = 0.0;
  std::uint64_t additions_per_run = 0;
};

ArcsinSweep run_arcsin_sweep(int n, const CordicOptions& opts = {});

struct AmplitudeRow {
  double h = 0.0;
  double a0 = 0.0;
  double a1 = 0.0;
  double p1 = 0.0;         // a1^2, the |1> probability
  double abs_p_err = 0.0;  // |a1^2 - h|
};

struct AmplitudeSweep {
  int n = 0;
  CordicOptions opts;
  std::vector<AmplitudeRow> rows;  // h = j * 2^(1-n), j = 0..2^(n-1)-1
  double max_p_err = 0.0;
};

AmplitudeSweep run_amplitude_sweep(int n, const CordicOptions& opts = {});

// Instrumentation of one direction pass. The operation sequence is
// data-oblivious; run_trace asserts that by probing several inputs and
// requiring identical counters.
struct TraceReport {
  int n = 0;
  OpTrace trace;
  std::uint64_t budget_14n = 0;
  int bits_total = 0;     // footprint from touch accounting
  int bits_expected = 0;  // 5n - 1
  bool within_budget() const {
    return trace.additions < budget_14n && bits_total == bits_expected;
  }
};

TraceReport run_trace(int n, const CordicOptions& opts = {});

// CSV emission. Deterministic: parameter metadata goes to '#' header lines,
// values print as %.17g.
void write_arcsin_csv(const ArcsinSweep& s, std::ostream& os);
void write_amplitude_csv(const AmplitudeSweep& s, std::ostream& os);
void write_trace_csv(const std::vector<TraceReport>& reports, std::ostream& os);

std::string describe_options(const CordicOptions& opts);

}  // namespace qcordic
