#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "latsum/eisenstein.hpp"
#include "latsum/errors.hpp"
#include "latsum/lseries.hpp"
#include "latsum/oracle.hpp"
#include "testutil.hpp"

using namespace latsum;
using testutil::ipow;
using testutil::kGamma13;
using testutil::kGamma14;
using testutil::kPi;
using testutil::rel_err;

TEST_SUITE_BEGIN("eisenstein");

TEST_CASE("divisor power sums") {
  CHECK(divisor_sigma(1, 6) == 12);
  CHECK(divisor_sigma(0, 12) == 6);
  CHECK(divisor_sigma(3, 7) == 344);
  CHECK_THROWS_AS(divisor_sigma(20, 1000000), std::overflow_error);
  DivisorCache dc(5);
  for (int r = 1; r <= 40; ++r) CHECK(dc.get(r) == divisor_sigma(5, r));
}

TEST_CASE("G at the canonical points") {
  CHECK(rel_err(G(2, {0.0, 1.0}), kPi) < 1e-13);
  CHECK(std::abs(G(4, canonical_tau(CanonicalLattice::hex))) < 1e-13);
  CHECK(rel_err(G(6, {0.0, 2.0}), ipow(kGamma14, 12) / (81920.0 * ipow(kPi, 3))) < 1e-13);
  CHECK_THROWS_AS(G(3, {0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(G(0, {0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("G_deriv: k = 0 reduction and finite-difference oracle") {
  const complex_t tau{0.2, 1.4};
  CHECK(rel_err(G_deriv(4, 0, tau), G(4, tau)) < 1e-13);
  // centered finite difference of G(4, .) with step 1e-5
  const double h = 1e-5;
  const complex_t fd_re = (G(4, tau + h) - G(4, tau - h)) / (2.0 * h);
  const complex_t fd_im = (G(4, tau + complex_t(0.0, h)) - G(4, tau - complex_t(0.0, h))) /
                          complex_t(0.0, 2.0 * h);
  const complex_t d = G_deriv(4, 1, tau);
  CHECK(std::abs(d - fd_re) < 1e-7 * std::abs(d));
  CHECK(std::abs(d - fd_im) < 1e-7 * std::abs(d));
}

TEST_CASE("Ramanujan identities close the ring") {
  // 2 i pi G2' = 5 G4 - G2^2 at tau = i
  const complex_t lhs = complex_t(0.0, 2.0 * kPi) * G_deriv(2, 1, {0.0, 1.0});
  const complex_t rhs = 5.0 * G(4, {0.0, 1.0}) - kPi * kPi;
  CHECK(rel_err(lhs, rhs) < 1e-12);

  // i pi G4' = 7 G6 - 2 G2 G4 at tau = 2i, both sides from closed forms
  const double g2 = ipow(kGamma14, 4) / (32.0 * kPi) + kPi / 2.0;
  const double g4 = 11.0 * ipow(kGamma14, 8) / (15360.0 * kPi * kPi);
  const double g6 = ipow(kGamma14, 12) / (81920.0 * ipow(kPi, 3));
  const complex_t lhs2 = complex_t(0.0, kPi) * G_deriv(4, 1, {0.0, 2.0});
  CHECK(rel_err(lhs2, 7.0 * g6 - 2.0 * g2 * g4) < 1e-12);

  // 7 i pi G6' = 30 G4^2 - 21 G2 G6 at tau = i (G6(i) = 0)
  const double g4i = ipow(kGamma14, 8) / (960.0 * kPi * kPi);
  const complex_t lhs3 = 7.0 * complex_t(0.0, kPi) * G_deriv(6, 1, {0.0, 1.0});
  CHECK(rel_err(lhs3, 30.0 * g4i * g4i) < 1e-12);
}

TEST_CASE("ring derivatives match the Fourier series to high order") {
  std::mt19937 rng(31);
  for (int t = 0; t < 5; ++t) {
    const complex_t tau = testutil::random_tau(rng, 0.9, 2.0);
    const GRing g{G(2, tau), G(4, tau), G(6, tau)};
    for (int order : {1, 2}) {
      auto d = ramanujan_ring_deriv(g, order);
      CHECK(rel_err(d[0], G_deriv(2, order, tau)) < 1e-10);
      CHECK(rel_err(d[1], G_deriv(4, order, tau)) < 1e-10);
      CHECK(rel_err(d[2], G_deriv(6, order, tau)) < 1e-10);
    }
  }
}

TEST_CASE("Eisenstein recursion reproduces the low-order specials") {
  const complex_t i{0.0, 1.0};
  CHECK(rel_err(G_recursive(8, i), 3.0 / 7.0 * std::pow(G(4, i), 2)) < 1e-13);
  CHECK(std::abs(G_recursive(10, canonical_tau(CanonicalLattice::hex))) < 1e-12);
  const complex_t tau{0.1, 1.2};
  CHECK(rel_err(G_recursive(12, tau), G(12, tau)) < 1e-12);
  CHECK(rel_err(G_recursive(8, tau), G(8, tau)) < 1e-12);
  CHECK_THROWS_AS(G_recursive(6, i), std::invalid_argument);
}

TEST_CASE("sigma reproduces Table 1 (all 24 entries)") {
  for (const auto& e : table1()) {
    const SigmaValue v = sigma(e.n, e.m, canonical_tau(e.lattice));
    CHECK(std::abs(v.value - e.full()) <= 1e-12 * std::max(1.0, std::abs(e.full())));
    CHECK(v.convergence == (e.n == 2 ? Convergence::eisenstein_order : Convergence::absolute));
  }
}

TEST_CASE("sigma examples beyond the table") {
  // sigma_4^(0)(i) = 4 zeta(2) beta(2), the Lorenz value
  CHECK(rel_err(sigma(4, 0, {0.0, 1.0}).value, 4.0 * zeta(2) * dirichlet_beta(2)) < 1e-12);
  // sigma_6^(2) at a generic lattice against the direct-sum oracle
  const complex_t tau{0.4, 1.1};
  const SigmaValue v = sigma(6, 2, tau);
  auto rep = oracle::sigma_direct(LatticeSpec(tau, 1.0), 100.0, 6, 2);
  CHECK(std::abs(v.value - rep.value) < 1e-6);
}

TEST_CASE("sigma input validation") {
  CHECK_THROWS_AS(sigma(2, 0, {0.0, 1.0}), divergent_sum_error);
  CHECK_THROWS_AS(sigma(3, 2, {0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(sigma(4, 3, {0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(sigma(4, 2, {0.0, -1.0}), std::invalid_argument);
}

TEST_CASE("regularization removes the extraordinary term") {
  // sigma_2^(2)(i) = pi -> 0
  auto r1 = regularize(sigma(2, 2, {0.0, 1.0}));
  CHECK(std::abs(r1.value) < 1e-13);
  CHECK(r1.convergence == Convergence::regularized);
  // sigma_2^(4)(i) -> Gamma(1/4)^8/(384 pi^3)
  auto r2 = regularize(sigma(2, 4, {0.0, 1.0}));
  CHECK(rel_err(r2.value, ipow(kGamma14, 8) / (384.0 * ipow(kPi, 3))) < 1e-12);
  // sigma_2^(6)(hex) -> Gamma(1/3)^18/(1024 pi^8)
  auto r3 = regularize(sigma(2, 6, canonical_tau(CanonicalLattice::hex)));
  CHECK(rel_err(r3.value, ipow(kGamma13, 18) / (1024.0 * ipow(kPi, 8))) < 1e-12);
  // idempotent
  auto r2b = regularize(r2);
  CHECK(r2b.value == r2.value);
  // n >= 4: no-op with warning
  bool warned = false;
  auto a = regularize(sigma(4, 4, {0.0, 1.0}), &warned);
  CHECK(warned);
  CHECK(a.convergence == Convergence::absolute);
}

TEST_CASE("difference between raw and regularized is exactly 2 pi/(m Im tau)") {
  std::mt19937 rng(37);
  for (int t = 0; t < 5; ++t) {
    const complex_t tau = testutil::random_tau(rng);
    for (int m : {2, 4, 6}) {
      auto raw = sigma(2, m, tau);
      auto reg = regularize(raw);
      CHECK(rel_err(raw.value - reg.value, 2.0 * kPi / (m * tau.imag())) < 1e-13);
    }
  }
}

TEST_CASE("transform_tau_inverse follows the geometric laws") {
  // square-lattice fixed point: sigma~_2^(4)(-1/i) = sigma~_2^(4)(i)
  auto r = regularize(sigma(2, 4, {0.0, 1.0}));
  auto rt = transform_tau_inverse(r);
  CHECK(rel_err(rt.value, r.value) < 1e-13);

  // G4(i/2) = 16 G4(2i), checked against the Fourier series at i/2
  auto g4 = sigma(4, 4, {0.0, 2.0});
  auto g4t = transform_tau_inverse(g4);
  CHECK(rel_err(g4t.value, 16.0 * g4.value) < 1e-13);
  CHECK(rel_err(g4t.value, G(4, {0.0, 0.5})) < 1e-12);

  // rectangular pair: the opposite aspect ratio follows from the identity
  auto s = sigma(6, 8, {0.0, std::sqrt(3.0)});
  auto st = transform_tau_inverse(s);
  CHECK(rel_err(st.value, sigma(6, 8, -1.0 / complex_t(0.0, std::sqrt(3.0))).value) < 1e-12);
}

TEST_CASE("regularized transform law at random tau") {
  std::mt19937 rng(41);
  for (int t = 0; t < 10; ++t) {
    const complex_t tau = testutil::random_tau(rng);
    for (int m : {2, 4, 6, 8}) {
      const complex_t lhs = regularize(sigma(2, m, tau)).value;
      const complex_t rhs = std::pow(std::abs(tau), m - 2) / std::pow(tau, m) *
                            regularize(sigma(2, m, -1.0 / tau)).value;
      CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(lhs)));
    }
  }
}

TEST_CASE("periodicity in tau") {
  std::mt19937 rng(43);
  for (int t = 0; t < 6; ++t) {
    const complex_t tau = testutil::random_tau(rng);
    for (auto [n, m] : {std::pair{2, 4}, {4, 4}, {4, 8}, {6, 2}}) {
      CHECK(rel_err(sigma(n, m, tau + 1.0).value, sigma(n, m, tau).value) < 1e-12);
    }
  }
}

TEST_CASE("rotational symmetry zeros") {
  // 4-fold: regularized sigma_n^(m)(i) = 0 unless m is a multiple of 4
  for (auto [n, m] : {std::pair{2, 2}, {2, 6}, {4, 2}, {4, 6}, {6, 2}}) {
    SigmaValue v = sigma(n, m, {0.0, 1.0});
    if (n == 2) v = regularize(v);
    CHECK(std::abs(v.value) < 1e-12 * std::max(1.0, std::abs(sigma(n, std::max(n, 4), {0.0, 1.0}).value)));
  }
  // 6-fold: hex zeros unless m is a multiple of 6
  for (auto [n, m] : {std::pair{2, 2}, {2, 4}, {4, 4}, {4, 8}, {6, 2}}) {
    SigmaValue v = sigma(n, m, canonical_tau(CanonicalLattice::hex));
    if (n == 2) v = regularize(v);
    CHECK(std::abs(v.value) < 1e-12);
  }
}

TEST_CASE("specialized m = n+2 and m = n+4 forms agree with the general polynomial") {
  // regression against transcription errors in the general formula
  std::mt19937 rng(47);
  for (int t = 0; t < 5; ++t) {
    const complex_t tau = testutil::random_tau(rng, 0.9, 2.5);
    for (int n : {2, 4, 6}) {
      const complex_t g = G_deriv(n, 0, tau);
      const complex_t g1 = G_deriv(n, 1, tau);
      const complex_t g2 = G_deriv(n, 2, tau);
      const complex_t want2 = g + 2.0 * complex_t(0.0, tau.imag()) / static_cast<double>(n) * g1;
      const complex_t want4 = g + 4.0 * complex_t(0.0, tau.imag()) / static_cast<double>(n) * g1 -
                              4.0 * tau.imag() * tau.imag() / (n * (n + 1.0)) * g2;
      CHECK(rel_err(sigma(n, n + 2, tau).value, want2) < 1e-13);
      CHECK(rel_err(sigma(n, n + 4, tau).value, want4) < 1e-13);
    }
  }
}

TEST_CASE("rectangular lattices give real sigma") {
  for (double im : {1.0, 1.4, 2.0, std::sqrt(3.0)}) {
    for (auto [n, m] : {std::pair{2, 4}, {4, 0}, {4, 6}, {6, 2}, {8, 10}}) {
      const SigmaValue v = sigma(n, m, {0.0, im});
      CHECK(std::abs(v.value.imag()) <= 1e-12 * std::max(1.0, std::abs(v.value)));
    }
  }
}

TEST_CASE("m < n branch matches the direct lattice sum") {
  const complex_t tau{0.3, 1.2};
  for (auto [n, m] : {std::pair{4, 0}, {6, 2}, {6, 4}, {8, 2}}) {
    const SigmaValue v = sigma(n, m, tau);
    auto rep = oracle::sigma_direct(LatticeSpec(tau, 1.0), n >= 6 ? 100.0 : 400.0, n, m);
    CHECK(std::abs(v.value - rep.value) <= rep.tail_estimate);
  }
}

TEST_CASE("sigma_exact closed forms") {
  auto g4 = sigma_exact(4, 4, CanonicalLattice::rect_sqrt3);
  CHECK(rel_err(g4.value, ipow(kGamma13, 12) / (512.0 * std::cbrt(2.0) * ipow(kPi, 4))) < 1e-13);
  auto g2 = sigma_exact(2, 2, CanonicalLattice::rect_sqrt3);
  CHECK(rel_err(g2.value,
                ipow(kGamma13, 6) / (16.0 * std::cbrt(4.0) * kPi * kPi) + kPi / std::sqrt(3.0)) <
        1e-13);
  auto s66 = sigma_exact(6, 6, CanonicalLattice::square);
  CHECK(std::abs(s66.value) < 1e-13);
  CHECK(!s66.formula.empty());
  // beyond the table: must agree with the Fourier engine
  for (auto key : {CanonicalLattice::square, CanonicalLattice::rect2, CanonicalLattice::hex}) {
    for (auto [n, m] : {std::pair{4, 8}, {8, 8}, {2, 8}, {6, 10}}) {
      auto ex = sigma_exact(n, m, key);
      auto nu = sigma(n, m, canonical_tau(key));
      CHECK(std::abs(ex.value - nu.value) <= 1e-11 * std::max(1.0, std::abs(nu.value)));
    }
  }
  CHECK_THROWS_AS(sigma_exact(6, 2, CanonicalLattice::square), not_tabulated_error);
}

TEST_SUITE_END();
