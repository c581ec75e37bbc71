// SPDX-License-Identifier: Apache-2.0
#include "qcordic/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace qcordic {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string describe_options(const CordicOptions& opts) {
  std::string s = "negate=";
  s += opts.negate == NegateMode::BitwiseNot ? "not" : "neg";
  s += " clamp=";
  s += opts.clamp_iters ? "on" : "off";
  return s;
}

ArcsinSweep run_arcsin_sweep(int n, const CordicOptions& opts) {
  ArcsinSweep sweep;
  sweep.n = n;
  sweep.opts = opts;
  const std::int64_t lo = -(std::int64_t{1} << (n - 2));
  const std::int64_t hi = (std::int64_t{1} << (n - 2)) - 1;
  sweep.rows.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t r = lo; r <= hi; ++r) {
    ArcsinRow row{FixWord::from_raw(static_cast<std::uint64_t>(r), n)};
    const double tv = row.t.decode();
    const ArcsinResult res = arcsin_value(tv, n, opts);
    row.ref = std::asin(tv);
    row.computed = res.theta.decode();
    row.abs_err = std::abs(row.computed - row.ref);
    if (row.abs_err > sweep.max_err) sweep.max_err = row.abs_err;
    sweep.additions_per_run = res.trace.additions;
    sweep.rows.push_back(row);
  }
  return sweep;
}

AmplitudeSweep run_amplitude_sweep(int n, const CordicOptions& opts) {
  AmplitudeSweep sweep;
  sweep.n = n;
  sweep.opts = opts;
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  sweep.rows.reserve(count);
  for (std::uint64_t j = 0; j < count; ++j) {
    AmplitudeRow row;
    row.h = std::ldexp(static_cast<double>(j), 1 - n);
    const AmplitudeResult res = amplitude_encode(row.h, n, opts);
    row.a0 = res.out.a0;
    row.a1 = res.out.a1;
    row.p1 = res.out.a1 * res.out.a1;
    row.abs_p_err = std::abs(row.p1 - row.h);
    if (row.abs_p_err > sweep.max_p_err) sweep.max_p_err = row.abs_p_err;
    sweep.rows.push_back(row);
  }
  return sweep;
}

TraceReport run_trace(int n, const CordicOptions& opts) {
  TraceReport report;
  report.n = n;
  report.budget_14n = 14u * static_cast<std::uint64_t>(n);
  report.bits_expected = 5 * n - 1;
  bool first = true;
  // Probe the extremes and zero; the gate sequence must not depend on data.
  for (const double tv : {-1.0, 0.0, FixWord::from_raw((std::uint64_t{1} << (n - 2)) - 1, n).decode()}) {
    RegisterFile rf = init_state(FixWord::encode(tv, n), n);
    OpTrace tr;
    directions(rf, tr, opts);
    if (first) {
      report.trace = tr;
      first = false;
    } else if (tr.additions != report.trace.additions ||
               tr.swaps != report.trace.swaps ||
               tr.controlled_nots != report.trace.controlled_nots) {
      throw std::logic_error("trace: operation counts varied with input data");
    }
  }
  report.bits_total = report.trace.footprint_bits(n);
  return report;
}

void write_arcsin_csv(const ArcsinSweep& s, std::ostream& os) {
  os << "# domain=arcsin n=" << s.n << ' ' << describe_options(s.opts) << '\n';
  os << "# max_abs_err=" << fmt17(s.max_err) << '\n';
  os << "t_real,t_hex,ref,computed,abs_err\n";
  for (const auto& row : s.rows) {
    os << fmt17(row.t.decode()) << ',' << row.t.hex() << ',' << fmt17(row.ref)
       << ',' << fmt17(row.computed) << ',' << fmt17(row.abs_err) << '\n';
  }
}

void write_amplitude_csv(const AmplitudeSweep& s, std::ostream& os) {
  os << "# domain=amplitude n=" << s.n << ' ' << describe_options(s.opts) << '\n';
  os << "# max_abs_p_err=" << fmt17(s.max_p_err) << '\n';
  os << "h,a0,a1,p1,abs_p_err\n";
  for (const auto& row : s.rows) {
    os << fmt17(row.h) << ',' << fmt17(row.a0) << ',' << fmt17(row.a1) << ','
       << fmt17(row.p1) << ',' << fmt17(row.abs_p_err) << '\n';
  }
}

void write_trace_csv(const std::vector<TraceReport>& reports, std::ostream& os) {
  os << "# direction-pass instrumentation\n";
  os << "n,additions,budget_14n,swaps,cnots,bits_total\n";
  for (const auto& r : reports) {
    os << r.n << ',' << r.trace.additions << ',' << r.budget_14n << ','
       << r.trace.swaps << ',' << r.trace.controlled_nots << ',' << r.bits_total
       << '\n';
  }
}

}  // namespace qcordic
