// SPDX-License-Identifier: Apache-2.0
//
// qcordic: fixed-point arcsine and digital-to-amplitude conversion driver.
// Exit codes: 0 success, 2 usage or domain violation, 3 failed assertion.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "qcordic/state_vector.hpp"
#include "qcordic/sweep.hpp"

namespace {

constexpr int kUsageError = 2;
constexpr int kAssertionError = 3;

std::vector<int> parse_widths(const std::string& list) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < list.size()) {
    const std::size_t comma = list.find(',', pos);
    const std::string item =
        list.substr(pos, comma == std::string::npos ? comma : comma - pos);
    std::size_t used = 0;
    const int n = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad width: " + item);
    out.push_back(n);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty width list");
  return out;
}

qcordic::CordicOptions make_options(const std::string& negate,
                                    const std::string& clamp) {
  qcordic::CordicOptions opts;
  opts.negate = negate == "neg" ? qcordic::NegateMode::TwosComplement
                                : qcordic::NegateMode::BitwiseNot;
  opts.clamp_iters = clamp != "off";
  return opts;
}

int cmd_arcsin(const std::vector<int>& widths, double t, bool have_h, double h,
               const qcordic::CordicOptions& opts) {
  for (const int n : widths) {
    if (have_h) {
      // Square-root variant: direction bits of the prepped run encode
      // arcsin(sqrt(h)) = arcsin(2h-1)/2 + pi/4 through the halved network.
      const qcordic::AmplitudeResult r =
          qcordic::amplitude_encode(h, n, opts, false);
      const double computed = qcordic::rprime_angle(r.d);
      const double ref = std::asin(std::sqrt(h));
      std::printf("n=%d h=%.17g computed=%.17g ref=%.17g abs_err=%.3e additions=%llu\n",
                  n, h, computed, ref, std::abs(computed - ref),
                  static_cast<unsigned long long>(r.trace.additions));
    } else {
      const qcordic::ArcsinResult r = qcordic::arcsin_value(t, n, opts);
      const double computed = r.theta.decode();
      const double ref = std::asin(t);
      std::printf("n=%d t=%.17g computed=%.17g ref=%.17g abs_err=%.3e additions=%llu\n",
                  n, t, computed, ref, std::abs(computed - ref),
                  static_cast<unsigned long long>(r.trace.additions));
    }
  }
  return 0;
}

int cmd_sweep(const std::vector<int>& widths, const std::string& domain,
              const std::string& out_dir, const qcordic::CordicOptions& opts) {
  std::filesystem::create_directories(out_dir);
  double prev_max = 0.0;
  int prev_n = 0;
  for (std::size_t k = 0; k < widths.size(); ++k) {
    const int n = widths[k];
    double max_err = 0.0;
    std::string path;
    std::size_t rows = 0;
    if (domain == "arcsin") {
      const qcordic::ArcsinSweep s = qcordic::run_arcsin_sweep(n, opts);
      path = out_dir + "/arcsin_n" + std::to_string(n) + ".csv";
      std::ofstream os(path);
      qcordic::write_arcsin_csv(s, os);
      max_err = s.max_err;
      rows = s.rows.size();
    } else {
      const qcordic::AmplitudeSweep s = qcordic::run_amplitude_sweep(n, opts);
      path = out_dir + "/amplitude_n" + std::to_string(n) + ".csv";
      std::ofstream os(path);
      qcordic::write_amplitude_csv(s, os);
      max_err = s.max_p_err;
      rows = s.rows.size();
    }
    std::printf("n=%d rows=%zu max_err=%.17g file=%s\n", n, rows, max_err,
                path.c_str());
    if (k > 0 && max_err >= prev_max) {
      std::fprintf(stderr,
                   "sweep: max error did not decrease: n=%d gives %.17g, "
                   "n=%d gives %.17g\n",
                   prev_n, prev_max, n, max_err);
      return kAssertionError;
    }
    prev_max = max_err;
    prev_n = n;
  }
  return 0;
}

int cmd_trace(const std::vector<int>& widths,
              const qcordic::CordicOptions& opts) {
  std::vector<qcordic::TraceReport> reports;
  bool ok = true;
  for (const int n : widths) {
    reports.push_back(qcordic::run_trace(n, opts));
    const auto& r = reports.back();
    if (!r.within_budget()) ok = false;
    std::printf("n=%d additions=%llu budget=%llu bits=%d expected_bits=%d %s\n",
                n, static_cast<unsigned long long>(r.trace.additions),
                static_cast<unsigned long long>(r.budget_14n), r.bits_total,
                r.bits_expected, r.within_budget() ? "ok" : "OVER BUDGET");
  }
  qcordic::write_trace_csv(reports, std::cout);
  return ok ? 0 : kAssertionError;
}

int cmd_xcheck(const std::vector<int>& widths,
               const qcordic::CordicOptions& opts) {
  for (const int n : widths) {
    if (n > 5) {
      std::fprintf(stderr,
                   "xcheck: n=%d exceeds the dense simulator capacity "
                   "(5n qubits, limited to n <= 5)\n",
                   n);
      return kUsageError;
    }
    std::vector<qcordic::SvInput> inputs;
    const int count = 1 << (n - 1);
    for (int j = 0; j < count; ++j) {
      inputs.push_back(qcordic::SvInput{
          1.0 / std::sqrt(static_cast<double>(count)),
          std::ldexp(static_cast<double>(j), 1 - n)});
    }
    const qcordic::StateVector sv =
        qcordic::statevector_pipeline(n, inputs, opts);
    const qcordic::StateVector ref =
        qcordic::hybrid_reference_state(n, inputs, opts);
    const double fid = qcordic::fidelity(sv, ref);
    const double norm = sv.norm();
    std::printf("n=%d qubits=%d fidelity=%.17g norm=%.17g\n", n,
                sv.qubit_count(), fid, norm);
    if (fid < 1.0 - 1e-12 || std::abs(norm - 1.0) > 1e-10) {
      std::fprintf(stderr, "xcheck: fidelity or norm out of tolerance\n");
      return kAssertionError;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fixed-point CORDIC arcsine and amplitude encoding"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help");  // frees -h / --h for data

  std::string n_list = "16";
  std::string negate_mode = "not";
  std::string clamp_iters = "on";
  double t_value = 0.0;
  double h_value = 0.0;
  std::string domain = "arcsin";
  std::string out_dir = ".";

  const auto add_common = [&](CLI::App* sub) {
    sub->set_help_flag("--help", "print help");
    sub->add_option("--n", n_list, "register width, or comma list of widths");
    sub->add_option("--negate-mode", negate_mode,
                    "angle sign-flip realization")
        ->check(CLI::IsMember({"not", "neg"}));
    sub->add_option("--clamp-iters", clamp_iters,
                    "clamp scaler passes to the Fibonacci lookup")
        ->check(CLI::IsMember({"on", "off"}));
  };

  CLI::App* arcsin = app.add_subcommand("arcsin", "one arcsine evaluation");
  add_common(arcsin);
  CLI::Option* opt_t = arcsin->add_option("--t", t_value, "input in [-1, 1]");
  CLI::Option* opt_h =
      arcsin->add_option("--h", h_value, "square-root variant input in [0, 1]");
  opt_t->excludes(opt_h);

  CLI::App* sweep = app.add_subcommand("sweep", "exhaustive error sweep, CSV per width");
  add_common(sweep);
  sweep->add_option("--domain", domain, "arcsin or amplitude")
      ->check(CLI::IsMember({"arcsin", "amplitude"}));
  sweep->add_option("--out", out_dir, "output directory for CSV files");

  CLI::App* trace = app.add_subcommand("trace", "operation-count report");
  add_common(trace);

  CLI::App* xcheck =
      app.add_subcommand("xcheck", "state-vector vs hybrid cross check");
  add_common(xcheck);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    const std::vector<int> widths = parse_widths(n_list);
    const qcordic::CordicOptions opts = make_options(negate_mode, clamp_iters);
    if (app.got_subcommand(arcsin)) {
      if (!*opt_t && !*opt_h) {
        std::fprintf(stderr, "arcsin: provide --t or --h\n");
        return kUsageError;
      }
      return cmd_arcsin(widths, t_value, static_cast<bool>(*opt_h), h_value,
                        opts);
    }
    if (app.got_subcommand(sweep)) {
      return cmd_sweep(widths, domain, out_dir, opts);
    }
    if (app.got_subcommand(trace)) {
      return cmd_trace(widths, opts);
    }
    return cmd_xcheck(widths, opts);
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "domain error: %s\n", e.what());
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kUsageError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kAssertionError;
  }
}
