// SPDX-License-Identifier: Apache-2.0
#include "qcordic/state_vector.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace qcordic {

namespace {

std::int64_t sext(std::uint64_t raw, int n) {
  return static_cast<std::int64_t>(raw << (64 - n)) >> (64 - n);
}

}  // namespace

StateVector::StateVector(int n) : n_(n) {
  if (n < FixWord::kMinWidth || n > 5) {
    throw std::invalid_argument(
        "state-vector mode simulates 5n qubits and is limited to n <= 5");
  }
  amps_.assign(std::size_t{1} << (5 * n), {0.0, 0.0});
}

std::uint64_t StateVector::field(std::size_t idx, Reg r) const {
  const Layout lo = layout();
  const std::uint64_t mask = (std::uint64_t{1} << n_) - 1;
  switch (r) {
    case Reg::Aux: return (idx >> lo.aux) & mask;
    case Reg::Y: return (idx >> lo.y) & mask;
    case Reg::X: return (idx >> lo.x) & mask;
    case Reg::T: return (idx >> lo.t) & mask;
    case Reg::Ang: break;
  }
  throw std::invalid_argument("state vector carries no angle register");
}

std::uint64_t StateVector::direction_bits(std::size_t idx) const {
  return (idx >> layout().d) & ((std::uint64_t{1} << (n_ - 1)) - 1);
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

double StateVector::max_abs_imag() const {
  double m = 0.0;
  for (const auto& a : amps_) m = std::max(m, std::abs(a.imag()));
  return m;
}

void StateVector::ry_out(double omega) {
  const double c = std::cos(omega), s = std::sin(omega);
  for (std::size_t i = 0; i < amps_.size(); i += 2) {
    const auto a0 = amps_[i], a1 = amps_[i + 1];
    amps_[i] = c * a0 - s * a1;
    amps_[i + 1] = s * a0 + c * a1;
  }
}

void StateVector::cry_out_on_d(int i, double omega) {
  const std::uint64_t bit = std::uint64_t{1} << (layout().d + (i - 1));
  const double c = std::cos(omega), s = std::sin(omega);
  for (std::size_t k = 0; k < amps_.size(); k += 2) {
    if (!(k & bit)) continue;
    const auto a0 = amps_[k], a1 = amps_[k + 1];
    amps_[k] = c * a0 - s * a1;
    amps_[k + 1] = s * a0 + c * a1;
  }
}

void StateVector::write_csv(std::ostream& os) const {
  os << "basis_index,real,imag\n";
  char buf[96];
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (amps_[i] == std::complex<double>{}) continue;
    std::snprintf(buf, sizeof buf, "%llu,%.17g,%.17g\n",
                  static_cast<unsigned long long>(i), amps_[i].real(),
                  amps_[i].imag());
    os << buf;
  }
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("fidelity: size mismatch");
  std::complex<double> ip{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) {
    ip += std::conj(a.amp(i)) * b.amp(i);
  }
  return std::norm(ip);
}

namespace {

// PipelineBackend + OutputBackend over the dense amplitude array. Every
// arithmetic op is applied as one whole-array basis permutation built from
// the same word semantics the register file uses.
struct SvBackend {
  StateVector& sv;
  bool clamp;
  int n;
  StateVector::Layout lo;
  std::uint64_t word_mask;

  SvBackend(StateVector& s, bool clamp_)
      : sv(s), clamp(clamp_), n(s.width()), lo(s.layout()),
        word_mask((std::uint64_t{1} << n) - 1) {}

  int width() const { return n; }
  bool clamp_iters() const { return clamp; }

  int offset_of(Reg r) const {
    switch (r) {
      case Reg::Aux: return lo.aux;
      case Reg::Y: return lo.y;
      case Reg::X: return lo.x;
      case Reg::T: return lo.t;
      case Reg::Ang: break;
    }
    throw std::invalid_argument("state vector carries no angle register");
  }

  std::uint64_t asr_raw(std::uint64_t raw, int sh) const {
    std::int64_t s = sext(raw, n);
    s >>= (sh > 62 ? 62 : sh);
    return static_cast<std::uint64_t>(s) & word_mask;
  }

  void add_shifted(Reg dst, Reg src, int sh, bool negate) {
    const int od = offset_of(dst), os = offset_of(src);
    sv.permute([=, this](std::size_t idx) {
      const std::uint64_t a = (idx >> od) & word_mask;
      const std::uint64_t b = asr_raw((idx >> os) & word_mask, sh);
      const std::uint64_t r = (negate ? a - b : a + b) & word_mask;
      return (idx & ~(word_mask << od)) | (r << od);
    });
  }

  void add_raw_const(Reg dst, std::uint64_t raw, bool negate) {
    const int od = offset_of(dst);
    sv.permute([=, this](std::size_t idx) {
      const std::uint64_t a = (idx >> od) & word_mask;
      const std::uint64_t r = (negate ? a - raw : a + raw) & word_mask;
      return (idx & ~(word_mask << od)) | (r << od);
    });
  }

  void cswap_xy(int i) {
    const std::uint64_t ctrl = std::uint64_t{1} << (lo.d + (i - 1));
    const int ox = lo.x, oy = lo.y;
    sv.permute([=, this](std::size_t idx) {
      if (!(idx & ctrl)) return idx;
      const std::uint64_t xv = (idx >> ox) & word_mask;
      const std::uint64_t yv = (idx >> oy) & word_mask;
      return (idx & ~((word_mask << ox) | (word_mask << oy))) | (yv << ox) |
             (xv << oy);
    });
  }

  // Fused probe: the t -= y / t += y pair cancels on t, so the net
  // permutation only conditionally flips d_i.
  void direction_probe(int i) {
    const std::uint64_t dbit = std::uint64_t{1} << (lo.d + (i - 1));
    const std::uint64_t sign = std::uint64_t{1} << (n - 1);
    sv.permute([=, this](std::size_t idx) {
      const std::uint64_t xv = (idx >> lo.x) & word_mask;
      const std::uint64_t yv = (idx >> lo.y) & word_mask;
      const std::uint64_t tv = (idx >> lo.t) & word_mask;
      const bool bit = direction_bit((xv & sign) != 0, (yv & sign) != 0,
                                     (((tv - yv) & word_mask) & sign) != 0);
      return bit ? idx ^ dbit : idx;
    });
  }

  void rot_t_left() {
    sv.permute([this](std::size_t idx) {
      const std::uint64_t tv = (idx >> lo.t) & word_mask;
      const std::uint64_t r = ((tv << 1) | (tv >> (n - 1))) & word_mask;
      return (idx & ~(word_mask << lo.t)) | (r << lo.t);
    });
  }

  void rot_t_right() {
    sv.permute([this](std::size_t idx) {
      const std::uint64_t tv = (idx >> lo.t) & word_mask;
      const std::uint64_t r = ((tv >> 1) | (tv << (n - 1))) & word_mask;
      return (idx & ~(word_mask << lo.t)) | (r << lo.t);
    });
  }

  void flip_x_unit() {
    const std::uint64_t bit = std::uint64_t{1} << (lo.x + (n - 2));
    sv.permute([=](std::size_t idx) { return idx ^ bit; });
  }

  void begin_mult() {}
  void end_mult() {}

  void ry_out(double w) { sv.ry_out(w); }
  void cry_out_on_d(int i, double w) { sv.cry_out_on_d(i, w); }
};

std::vector<std::uint64_t> checked_input_words(int n,
                                               const std::vector<SvInput>& in) {
  if (in.empty()) throw std::invalid_argument("pipeline: no inputs");
  double s = 0.0;
  for (const auto& e : in) s += e.alpha * e.alpha;
  if (std::abs(s - 1.0) > 1e-9) {
    throw std::invalid_argument("pipeline: amplitudes are not normalized");
  }
  std::vector<std::uint64_t> words;
  words.reserve(in.size());
  for (const auto& e : in) {
    const std::uint64_t j = amplitude_input_word(e.h, n).raw();
    for (const auto w : words) {
      if (w == j) throw std::invalid_argument("pipeline: duplicate input value");
    }
    words.push_back(j);
  }
  return words;
}

}  // namespace

StateVector statevector_pipeline(int n, const std::vector<SvInput>& inputs,
                                 const CordicOptions& opts, bool cleanup) {
  const auto words = checked_input_words(n, inputs);
  StateVector sv(n);
  const auto lo = sv.layout();
  for (std::size_t k = 0; k < inputs.size(); ++k) {
    sv.amp(static_cast<std::size_t>(words[k]) << lo.t) = inputs[k].alpha;
  }
  SvBackend b(sv, opts.clamp_iters);
  emit_affine_prep(b);
  emit_direction_pass(b);
  emit_uncompute_pass(b);
  emit_rotation_network(b);
  if (cleanup) {
    emit_cleanup_pass(b);
    emit_affine_unprep(b);
  }
  return sv;
}

StateVector hybrid_reference_state(int n, const std::vector<SvInput>& inputs,
                                   const CordicOptions& opts, bool cleanup) {
  checked_input_words(n, inputs);
  StateVector sv(n);
  const auto lo = sv.layout();
  for (const auto& e : inputs) {
    const AmplitudeResult r = amplitude_encode(e.h, n, opts, cleanup);
    std::size_t idx = (static_cast<std::size_t>(r.state.t.raw()) << lo.t) |
                      (static_cast<std::size_t>(r.state.x.raw()) << lo.x) |
                      (static_cast<std::size_t>(r.state.y.raw()) << lo.y) |
                      (static_cast<std::size_t>(r.state.aux.raw()) << lo.aux);
    std::uint64_t dbits = 0;
    for (int i = 1; i <= n - 1; ++i) {
      if (r.state.direction(i)) dbits |= std::uint64_t{1} << (i - 1);
    }
    idx |= static_cast<std::size_t>(dbits) << lo.d;
    sv.amp(idx) += e.alpha * r.out.a0;
    sv.amp(idx | 1u) += e.alpha * r.out.a1;
  }
  return sv;
}

}  // namespace qcordic
