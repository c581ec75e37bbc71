// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <utility>

#include "qcordic/cordic.hpp"

using namespace qcordic;

namespace {

constexpr double kPi = 3.14159265358979323846;

double accuracy_bound(int n) { return std::ldexp(1.0, -n + 5); }

// Near |t| = 1 the angle resolution degrades to sqrt(ulp): once the
// horizontal component shrinks below 2^i ulp the shifted adds truncate to
// zero and y freezes a few ulp short of the goal, and dividing that residual
// by the vanishing cosine inflates the angle error. Measured closed-grid
// maxima run 1.2 to 2.4 times 2^(-(n-2)/2) for n in 6..16.
double pole_bound(int n) { return 2.5 * std::ldexp(1.0, -(n - 2) / 2); }

double scale_bound(int m, int n) {
  const ScalerPlan p = plan(m, n);
  return (p.iters + 2) * FixWord::ulp_value(n) +
         std::ldexp(1.0, -(m * static_cast<int>(fibonacci(p.iters))) + 1);
}

// Literal straight-line transcription of the published loop, built directly
// on the word primitives with no shared emitter code. Structural oracle for
// the pipeline-based implementation: every produced bit must agree.
struct Flat {
  FixWord ang, x, y, t, aux;
  std::vector<std::uint8_t> d;
  int n;

  explicit Flat(const FixWord& t0)
      : ang(FixWord::zero(t0.width())),
        x(FixWord::encode(1.0, t0.width())),
        y(FixWord::zero(t0.width())),
        t(t0),
        aux(FixWord::zero(t0.width())),
        d(static_cast<std::size_t>(t0.width() - 1), 0),
        n(t0.width()) {}
};

void flat_scale(Flat& s, FixWord& in, int m) {  // in *= 1 + 2^-m
  const ScalerPlan p = plan(m, s.n);
  if (p.iters == 0) return;
  s.aux = wrap_add(s.aux, in);
  for (int i = p.iters - 1; i >= 0; --i) {
    const std::uint64_t sh64 = static_cast<std::uint64_t>(m) * fibonacci(i);
    const int sh = sh64 > 63 ? 63 : static_cast<int>(sh64);
    FixWord& dst = (i % 2 == 0) ? s.aux : in;
    const FixWord& src = (i % 2 == 0) ? in : s.aux;
    const FixWord addend = asr(src, sh);
    dst = (fibonacci(i) % 2 == 0) ? wrap_sub(dst, addend) : wrap_add(dst, addend);
  }
  s.aux = wrap_sub(s.aux, in);
}

void flat_iterate(Flat& s, int i, const FixWord& c) {
  const bool sx = s.x.sign();
  const bool sy = s.y.sign();
  const bool sty = wrap_sub(s.t, s.y).sign();
  // d ^= [s(x) & s(t-y)] ^ s(x) ^ [s(x) & s(y)] ^ s(t-y)
  const bool di = ((sx && sty) != sx) != ((sx && sy) != sty);
  s.d[static_cast<std::size_t>(i - 1)] ^= di ? 1 : 0;
  const bool ctrl = s.d[static_cast<std::size_t>(i - 1)] != 0;
  if (ctrl) std::swap(s.x, s.y);
  for (int rep = 0; rep < 2; ++rep) {
    s.x = wrap_sub(s.x, asr(s.y, i));
    flat_scale(s, s.y, 2 * i);
    s.y = wrap_add(s.y, asr(s.x, i));
  }
  if (ctrl) std::swap(s.x, s.y);
  flat_scale(s, s.t, 2 * i);
  if (ctrl) s.ang = bitnot(s.ang);
  s.ang = wrap_add(s.ang, c);
  if (ctrl) s.ang = bitnot(s.ang);
}

Flat flat_arcsin(const FixWord& t0) {
  Flat s(t0);
  const AtanTable table(s.n);
  for (int i = 1; i <= s.n - 1; ++i) flat_iterate(s, i, table.entry(i));
  return s;
}

bool all_bits_equal(const RegisterFile& a, const RegisterFile& b) {
  return a.ang == b.ang && a.x == b.x && a.y == b.y && a.t == b.t &&
         a.aux == b.aux && a.d == b.d;
}

}  // namespace

TEST_CASE("rotation constants are rounded to half an ulp") {
  for (int n : {8, 16, 24}) {
    const AtanTable table(n);
    for (int i = 1; i <= n - 1; ++i) {
      const double exact = 2.0 * std::atan(std::ldexp(1.0, -i));
      CHECK(std::abs(table.entry(i).decode() - exact) <=
            FixWord::ulp_value(n) / 2.0);
    }
  }
}

TEST_CASE("init_state: canonical start and domain checks") {
  const int n = 8;
  const RegisterFile rf = init_state(FixWord::encode(0.0, n), n);
  CHECK(rf.ang.raw() == 0);
  CHECK(rf.x == FixWord::encode(1.0, n));
  CHECK(rf.y.raw() == 0);
  CHECK(rf.t.raw() == 0);
  CHECK(rf.aux.raw() == 0);
  for (int i = 1; i <= n - 1; ++i) CHECK_FALSE(rf.direction(i));

  CHECK_NOTHROW(init_state(FixWord::encode(1.0, n), n));
  CHECK_NOTHROW(init_state(FixWord::encode(-1.0, n), n));
  CHECK_THROWS_AS(init_state(FixWord::encode(1.5, n), n), std::domain_error);
  CHECK_THROWS_AS(init_state(FixWord::encode(-1.25, n), n), std::domain_error);
  CHECK_THROWS_AS(init_state(FixWord::encode(0.0, 10), n), std::invalid_argument);
}

TEST_CASE("pseudo-rotation hits the published point examples") {
  const int n = 16;
  {
    RegisterFile rf = init_state(FixWord::encode(0.0, n), n);  // x=1, y=0
    OpTrace tr;
    pseudo_rotation_substitution(rf, 1, tr);
    // y = 0 kills every truncation: the result is exact.
    CHECK(rf.x == FixWord::encode(1.0, n));
    CHECK(rf.y == FixWord::encode(0.5, n));
  }
  {
    RegisterFile rf(n);
    rf.x = FixWord::encode(0.0, n);
    rf.y = FixWord::encode(1.0, n);
    OpTrace tr;
    pseudo_rotation_substitution(rf, 1, tr);
    CHECK(rf.x == FixWord::encode(-0.5, n));
    // Algebraic cancellation: y*(1+2^-2) - 2^-2*y = y up to scaler slack.
    CHECK(std::abs(rf.y.decode() - 1.0) <= scale_bound(2, n));
  }
}

TEST_CASE("pseudo-rotation tracks the real-arithmetic three-step oracle") {
  const int n = 24;
  std::mt19937_64 rng(0xc0ffee12ULL);
  std::uniform_real_distribution<double> dist(-0.9, 0.9);
  for (int i = 1; i <= 8; ++i) {
    const double tol = 4 * FixWord::ulp_value(n) + scale_bound(2 * i, n);
    for (int trial = 0; trial < 50; ++trial) {
      const double x0 = dist(rng), y0 = dist(rng);
      RegisterFile rf(n);
      rf.x = FixWord::encode(x0, n);
      rf.y = FixWord::encode(y0, n);
      OpTrace tr;
      pseudo_rotation_substitution(rf, i, tr);
      const double xe = rf.x.decode() - (x0 - std::ldexp(y0, -i));
      const double ye = rf.y.decode() - (y0 + std::ldexp(x0, -i));
      CHECK(std::abs(xe) <= tol);
      CHECK(std::abs(ye) <= tol);
    }
  }
}

TEST_CASE("iteration keeps the working registers strictly inside the word") {
  const int n = 12;
  const AtanTable table(n);
  // prod(1 + 4^-j) < cbrt(e) < 2 bounds every intermediate height.
  for (double t0 : {0.0, 0.25, 0.5, 0.99993896484375, 1.0, -1.0, -0.75}) {
    RegisterFile rf = init_state(FixWord::encode(t0, n), n);
    OpTrace tr;
    double stretch = 1.0;
    for (int i = 1; i <= n - 1; ++i) {
      iterate(rf, i, tr, IterFlags{true, true}, table);
      stretch *= 1.0 + std::ldexp(1.0, -2 * i);
      CHECK(std::abs(rf.t.decode()) <=
            stretch + 8 * i * FixWord::ulp_value(n));
      CHECK(std::abs(rf.x.decode()) < 2.0);
      CHECK(std::abs(rf.y.decode()) < 2.0);
      CHECK(stretch < std::cbrt(std::exp(1.0)));
    }
  }
}

TEST_CASE("arcsine value: fixed angles land on the reference values") {
  for (int n : {10, 16}) {
    CHECK(std::abs(arcsin_value(0.0, n).theta.decode()) <= accuracy_bound(n));
    CHECK(std::abs(arcsin_value(0.5, n).theta.decode() - kPi / 6.0) <=
          accuracy_bound(n));
    CHECK(std::abs(arcsin_value(-0.5, n).theta.decode() + kPi / 6.0) <=
          accuracy_bound(n));
    CHECK(std::abs(arcsin_value(1.0, n).theta.decode() - kPi / 2.0) <=
          accuracy_bound(n));
    // t = -1 can hit an exact t-y = 0 tie mid-run; the comparator then reads
    // sign 0 and rotates away from the pole, and the pull-back steps only
    // halve the miss. Measured: 3.6e-2 at n=10, 3.0e-4 at n=16.
    CHECK(std::abs(arcsin_value(-1.0, n).theta.decode() + kPi / 2.0) <=
          std::max(accuracy_bound(n), pole_bound(n)));
  }
  CHECK_THROWS_AS(arcsin_value(1.5, 10), std::domain_error);
  CHECK_THROWS_AS(arcsin_value(-1.01, 10), std::domain_error);
  CHECK_THROWS_AS(arcsin_value(std::nan(""), 10), std::domain_error);
}

TEST_CASE("goal zero steers the partial angle toward zero") {
  const int n = 16;
  RegisterFile rf = init_state(FixWord::zero(n), n);
  OpTrace tr;
  const AtanTable table(n);
  double partial = 0.0;
  for (int i = 1; i <= n - 1; ++i) {
    iterate(rf, i, tr, IterFlags{true, true}, table);
    partial += (rf.direction(i) ? -2.0 : 2.0) * std::atan(std::ldexp(1.0, -i));
    // Remaining step sizes dominate the overshoot, plus a few ulp of shift
    // truncation noise feeding the comparator late in the run.
    CHECK(std::abs(partial) <=
          std::ldexp(1.0, 2 - i) + 8 * FixWord::ulp_value(n));
  }
  CHECK_FALSE(rf.direction(1));  // at (x,y,t)=(1,0,0) the comparator gives 0
  CHECK(rf.direction(2));
  CHECK(std::abs(rf.ang.decode()) <= accuracy_bound(n));
}

TEST_CASE("direction pass agrees bit-for-bit with the flat transcription") {
  {
    const FixWord t0 = FixWord::encode(0.5, 10);
    const Flat flat = flat_arcsin(t0);
    RegisterFile rf = init_state(t0, 10);
    OpTrace tr;
    const DirectionWord d = directions(rf, tr);
    for (int i = 1; i <= 9; ++i) CHECK(d.get(i) == (flat.d[i - 1] != 0));
    CHECK(rf.t == flat.t);
    CHECK(rf.x == flat.x);
    CHECK(rf.y == flat.y);
    CHECK(rf.aux == flat.aux);
  }
  const int n = 12;
  std::mt19937_64 rng(0xdecade777ULL);
  std::uniform_int_distribution<std::int64_t> dist(-(1LL << (n - 2)),
                                                   1LL << (n - 2));
  for (int trial = 0; trial < 50; ++trial) {
    const FixWord t0 =
        FixWord::from_raw(static_cast<std::uint64_t>(dist(rng)), n);
    const Flat flat = flat_arcsin(t0);
    const ArcsinResult res = arcsin_value(t0.decode(), n);
    CHECK(res.theta == flat.ang);
  }
}

TEST_CASE("direction word reconstructs the arcsine and stays inside (-pi, pi)") {
  double prev_max = 1.0e9;
  for (int n : {6, 10, 16}) {
    double max_err = 0.0;
    for (std::int64_t r = -(1LL << (n - 2)); r <= (1LL << (n - 2)); ++r) {
      const FixWord t0 = FixWord::from_raw(static_cast<std::uint64_t>(r), n);
      RegisterFile rf = init_state(t0, n);
      OpTrace tr;
      const DirectionWord d = directions(rf, tr);
      const double rec = d.reconstructed_angle();
      CHECK(rec > -kPi);
      CHECK(rec < kPi);
      max_err = std::max(max_err, std::abs(rec - std::asin(t0.decode())));
    }
    // Grid maxima sit at the poles and follow the sqrt(ulp) law; they must
    // still decay monotonically as the word widens.
    CHECK(max_err <= pole_bound(n));
    CHECK(max_err < prev_max);
    prev_max = max_err;
  }
}

TEST_CASE("uncompute restores the loop-entry state and keeps d") {
  const int n = 8;
  for (std::int64_t r = -(1 << (n - 2)); r <= (1 << (n - 2)); ++r) {
    const FixWord t0 = FixWord::from_raw(static_cast<std::uint64_t>(r), n);
    RegisterFile rf = init_state(t0, n);
    const RegisterFile entry = rf;
    OpTrace tr;
    const DirectionWord d = directions(rf, tr);
    uncompute_garbage(rf, tr);
    CHECK(rf.t == entry.t);
    CHECK(rf.x == entry.x);
    CHECK(rf.y == entry.y);
    CHECK(rf.aux == entry.aux);
    for (int i = 1; i <= n - 1; ++i) CHECK(rf.direction(i) == d.get(i));
  }
}

TEST_CASE("cleanup zeroes the direction bits and closes the round trip") {
  const int n = 8;
  // Sqrt variant: every representable h in [0, 1].
  for (std::int64_t r = 0; r <= (1 << (n - 2)); ++r) {
    RegisterFile rf(n);
    rf.t = FixWord::from_raw(static_cast<std::uint64_t>(r), n);
    const RegisterFile start = rf;
    OpTrace tr;
    prep_sqrt(rf, tr);
    directions(rf, tr);
    uncompute_garbage(rf, tr);
    cleanup_directions(rf, tr);
    unprep_sqrt(rf, tr);
    CHECK(all_bits_equal(rf, start));
  }
}

TEST_CASE("cleanup cost is twice a pass minus the skipped probes") {
  for (int n : {8, 12}) {
    RegisterFile rf = init_state(FixWord::encode(0.375, n), n);
    OpTrace dir_tr;
    directions(rf, dir_tr);
    OpTrace unc_tr;
    uncompute_garbage(rf, unc_tr);
    OpTrace cl_tr;
    cleanup_directions(rf, cl_tr);
    CHECK(unc_tr.additions == dir_tr.additions - 2 * (n - 1));
    CHECK(cl_tr.additions == 2 * dir_tr.additions - 2 * (n - 1));
  }
}

TEST_CASE("randomized reversibility at wider words") {
  std::mt19937_64 rng(0xabcdef99ULL);
  for (int n : {10, 16}) {
    std::uniform_int_distribution<std::int64_t> dist(-(1LL << (n - 2)),
                                                     1LL << (n - 2));
    for (int trial = 0; trial < 100; ++trial) {
      const FixWord t0 =
          FixWord::from_raw(static_cast<std::uint64_t>(dist(rng)), n);
      RegisterFile rf = init_state(t0, n);
      const RegisterFile entry = rf;
      OpTrace tr;
      directions(rf, tr);
      uncompute_garbage(rf, tr);
      cleanup_directions(rf, tr);
      CHECK(all_bits_equal(rf, entry));
    }
  }
}

TEST_CASE("single iteration inverts bit-exactly from arbitrary states") {
  const int n = 8;
  const AtanTable table(n);
  std::mt19937_64 rng(0x12345678ULL);
  std::uniform_int_distribution<std::uint64_t> dist(0, 255);
  for (int trial = 0; trial < 500; ++trial) {
    RegisterFile rf(n);
    rf.ang = FixWord::from_raw(dist(rng), n);
    rf.x = FixWord::from_raw(dist(rng), n);
    rf.y = FixWord::from_raw(dist(rng), n);
    rf.t = FixWord::from_raw(dist(rng), n);
    rf.aux = FixWord::from_raw(dist(rng), n);
    for (int i = 1; i <= n - 1; ++i) rf.xor_direction(i, (dist(rng) & 1) != 0);
    const RegisterFile before = rf;
    const int i = 1 + static_cast<int>(dist(rng) % (n - 1));
    OpTrace tr;
    const IterFlags flags{(dist(rng) & 1) != 0, (dist(rng) & 1) != 0};
    iterate(rf, i, tr, flags, table);
    iterate_inverse(rf, i, tr, flags, table);
    CHECK(all_bits_equal(rf, before));
  }
}

TEST_CASE("prep_sqrt maps h to 2h-1 and rejects bad domains") {
  const int n = 8;
  for (double h : {0.0, 0.25, 0.5, 1.0}) {
    RegisterFile rf(n);
    rf.t = FixWord::encode(h, n);
    OpTrace tr;
    prep_sqrt(rf, tr);
    CHECK(rf.t == FixWord::encode(2.0 * h - 1.0, n));
    CHECK(rf.x == FixWord::encode(1.0, n));
    unprep_sqrt(rf, tr);
    CHECK(rf.t == FixWord::encode(h, n));
    CHECK(rf.x.raw() == 0);
  }
  RegisterFile rf(n);
  rf.t = FixWord::encode(-0.25, n);
  OpTrace tr;
  CHECK_THROWS_AS(prep_sqrt(rf, tr), std::domain_error);
  rf.t = FixWord::encode(1.25, n);
  CHECK_THROWS_AS(prep_sqrt(rf, tr), std::domain_error);
}

TEST_CASE("complement mode does not change a single produced bit") {
  const int n = 10;
  const CordicOptions with_not{NegateMode::BitwiseNot, true};
  const CordicOptions with_neg{NegateMode::TwosComplement, true};
  for (std::int64_t r = -(1 << (n - 2)); r <= (1 << (n - 2)); ++r) {
    const double t0 = FixWord::from_raw(static_cast<std::uint64_t>(r), n).decode();
    CHECK(arcsin_value(t0, n, with_not).theta ==
          arcsin_value(t0, n, with_neg).theta);
  }
}

TEST_CASE("formula-count mode still composes reversibly") {
  // Running the printed golden-ratio pass count instead of the lookup count
  // changes the arithmetic, but every sequence stays bit-exactly invertible.
  const int n = 10;
  const CordicOptions full{NegateMode::BitwiseNot, false};
  const AtanTable table(n);
  for (double t0 : {0.0, 0.5, -0.625, 1.0}) {
    RegisterFile rf = init_state(FixWord::encode(t0, n), n);
    const RegisterFile entry = rf;
    OpTrace tr;
    directions(rf, tr, full);
    uncompute_garbage(rf, tr, full);
    cleanup_directions(rf, tr, full);
    CHECK(all_bits_equal(rf, entry));
  }
}
