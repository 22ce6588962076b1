#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "latsum/eisenstein.hpp"
#include "latsum/errors.hpp"
#include "latsum/modular.hpp"
#include "testutil.hpp"

using namespace latsum;
using testutil::kGamma13;
using testutil::kGamma14;
using testutil::kPi;
using testutil::rel_err;

namespace {

// independent eta: raw q-product without domain reduction
complex_t eta_product(complex_t tau) {
  const complex_t q = std::exp(complex_t(0.0, 2.0 * kPi) * tau);
  complex_t prod = 1.0;
  complex_t qn = 1.0;
  for (int n = 1; n < 4000; ++n) {
    qn *= q;
    prod *= (1.0 - qn);
    if (std::abs(qn) < 1e-18) break;
  }
  return std::exp(complex_t(0.0, kPi / 12.0) * tau) * prod;
}

}  // namespace

TEST_SUITE_BEGIN("modular");

TEST_CASE("eta closed forms at the fundamental points") {
  CHECK(rel_err(dedekind_eta({0.0, 1.0}), kGamma14 / (2.0 * std::pow(kPi, 0.75))) < 1e-13);
  CHECK(rel_err(dedekind_eta({0.0, 2.0}), kGamma14 / (std::pow(2.0, 11.0 / 8.0) * std::pow(kPi, 0.75))) <
        1e-13);
  CHECK(rel_err(dedekind_eta({0.0, std::sqrt(3.0)}),
                std::pow(3.0, 0.125) * std::pow(kGamma13, 1.5) / (std::pow(2.0, 4.0 / 3.0) * kPi)) <
        1e-13);
}

TEST_CASE("eta agrees with the raw q-product away from the fundamental domain") {
  for (complex_t tau : {complex_t{0.3, 1.7}, complex_t{1.4, 0.8}, complex_t{-2.3, 0.4}}) {
    CHECK(rel_err(dedekind_eta(tau), eta_product(tau)) < 1e-13);
  }
}

TEST_CASE("eta rejects the lower half plane") {
  CHECK_THROWS_AS(dedekind_eta({0.5, -0.1}), std::invalid_argument);
  CHECK_THROWS_AS(dedekind_eta({0.5, 0.0}), std::invalid_argument);
}

TEST_CASE("eta functional equations at random tau") {
  std::mt19937 rng(17);
  for (int t = 0; t < 20; ++t) {
    const complex_t tau = testutil::random_tau(rng);
    const complex_t e = dedekind_eta(tau);
    CHECK(rel_err(dedekind_eta(tau + 1.0), std::polar(1.0, kPi / 12.0) * e) < 1e-12);
    CHECK(rel_err(dedekind_eta(-1.0 / tau), std::sqrt(complex_t(0.0, -1.0) * tau) * e) < 1e-12);
    CHECK(std::abs(e) > 0.0);
  }
}

TEST_CASE("weber quotient special values") {
  auto wi = weber_quotients({0.0, 1.0});
  CHECK(rel_err(wi.f, std::pow(2.0, 0.25)) < 1e-13);
  auto ws = weber_quotients({0.0, std::sqrt(3.0)});
  CHECK(rel_err(ws.f, std::pow(2.0, 1.0 / 3.0)) < 1e-13);
  auto w2 = weber_quotients({0.0, 2.0});
  CHECK(rel_err(w2.f, std::pow(4.0 + 3.0 * std::sqrt(2.0), 0.125)) < 1e-13);
}

TEST_CASE("weber identities at random tau") {
  std::mt19937 rng(23);
  for (int t = 0; t < 20; ++t) {
    const complex_t tau = testutil::random_tau(rng, 0.9, 2.5);
    auto w = weber_quotients(tau);
    CHECK(rel_err(w.f * w.f1 * w.f2, std::sqrt(2.0)) < 1e-12);
    CHECK(rel_err(std::pow(w.f, 8), std::pow(w.f1, 8) + std::pow(w.f2, 8)) < 1e-12);
  }
  auto w = weber_quotients({0.1, 1.3});
  CHECK(rel_err(w.f * w.f1 * w.f2, std::sqrt(2.0)) < 1e-13);
}

TEST_CASE("theta constants: Jacobi identity and the theta' = 2 eta^3 product") {
  std::mt19937 rng(29);
  for (int t = 0; t < 20; ++t) {
    const complex_t tau = testutil::random_tau(rng, 0.8, 2.5);
    auto th = theta_constants(tau);
    CHECK(rel_err(std::pow(th.t3, 4), std::pow(th.t2, 4) + std::pow(th.t4, 4)) < 1e-12);
    const complex_t eta3 = std::pow(dedekind_eta(tau), 3);
    CHECK(rel_err(2.0 * eta3, th.t2 * th.t3 * th.t4) < 1e-12);
  }
  auto th_hex = theta_constants(canonical_tau(CanonicalLattice::hex));
  const complex_t eta3 = std::pow(dedekind_eta(canonical_tau(CanonicalLattice::hex)), 3);
  CHECK(rel_err(2.0 * eta3, th_hex.t2 * th_hex.t3 * th_hex.t4) < 1e-12);
}

TEST_CASE("theta_3(0,i)^4 reproduces the G2(2i) closed form") {
  auto th = theta_constants({0.0, 1.0});
  const double g2_2i = kPi * kPi / 8.0 * std::pow(th.t3.real(), 4) + kPi / 2.0;
  const double want = std::pow(kGamma14, 4) / (32.0 * kPi) + kPi / 2.0;
  CHECK(rel_err(g2_2i, want) < 1e-13);
  CHECK(rel_err(G(2, {0.0, 2.0}).real(), want) < 1e-12);
}

TEST_CASE("special value table matches eta evaluations and its own formulas") {
  for (auto key : {CanonicalLattice::square, CanonicalLattice::rect2, CanonicalLattice::hex,
                   CanonicalLattice::rect_sqrt3}) {
    const complex_t tau = canonical_tau(key);
    CHECK(rel_err(dedekind_eta(tau), special_value(key, SpecialConstant::eta)) < 1e-13);
    auto w = weber_quotients(tau);
    CHECK(rel_err(w.f, special_value(key, SpecialConstant::f)) < 1e-12);
    CHECK(rel_err(w.f1, special_value(key, SpecialConstant::f1)) < 1e-12);
    CHECK(rel_err(w.f2, special_value(key, SpecialConstant::f2)) < 1e-12);
  }
}

TEST_CASE("table literals reproduce their defining Gamma-function formulas") {
  // eta magnitudes
  CHECK(rel_err(special_value(CanonicalLattice::square, SpecialConstant::eta).real(),
                kGamma14 / (2.0 * std::pow(kPi, 0.75))) < 1e-15);
  CHECK(rel_err(special_value(CanonicalLattice::rect2, SpecialConstant::eta).real(),
                kGamma14 / (std::pow(2.0, 1.375) * std::pow(kPi, 0.75))) < 1e-15);
  CHECK(rel_err(std::abs(special_value(CanonicalLattice::hex, SpecialConstant::eta)),
                std::pow(3.0, 0.125) * std::pow(kGamma13, 1.5) / (2.0 * kPi)) < 1e-15);
  CHECK(rel_err(std::abs(special_value(CanonicalLattice::rect_sqrt3, SpecialConstant::eta)),
                std::pow(3.0, 0.125) * std::pow(kGamma13, 1.5) / (std::pow(2.0, 4.0 / 3.0) * kPi)) <
        1e-15);
  // hex phase is exactly e^{i pi/24}
  const complex_t eh = special_value(CanonicalLattice::hex, SpecialConstant::eta);
  CHECK(std::arg(eh) == doctest::Approx(kPi / 24.0).epsilon(1e-15));
  // every Weber literal against its defining formula
  using K = CanonicalLattice;
  using C = SpecialConstant;
  const struct {
    K key;
    C which;
    double want;
  } weber[] = {
      {K::square, C::f, std::pow(2.0, 0.25)},
      {K::square, C::f1, std::pow(2.0, 0.125)},
      {K::square, C::f2, std::pow(2.0, 0.125)},
      {K::rect2, C::f, std::pow(4.0 + 3.0 * std::sqrt(2.0), 0.125)},
      {K::rect2, C::f1, std::pow(2.0, 0.375)},
      {K::rect2, C::f2, std::pow(2.0 / (4.0 + 3.0 * std::sqrt(2.0)), 0.125)},
      {K::rect_sqrt3, C::f, std::pow(2.0, 1.0 / 3.0)},
      {K::rect_sqrt3, C::f1, std::pow(2.0, 1.0 / 12.0) * std::pow(2.0 + std::sqrt(3.0), 0.125)},
      {K::rect_sqrt3, C::f2, std::pow(2.0, 1.0 / 12.0) * std::pow(2.0 - std::sqrt(3.0), 0.125)},
      {K::hex, C::f, std::pow(2.0, 1.0 / 6.0)},
      {K::hex, C::f1, std::pow(2.0, 1.0 / 6.0)},  // magnitudes; phases checked below
      {K::hex, C::f2, std::pow(2.0, 1.0 / 6.0)},
  };
  for (const auto& w : weber) CHECK(rel_err(std::abs(special_value(w.key, w.which)), w.want) < 1e-15);
  CHECK(std::arg(special_value(K::hex, C::f1)) == doctest::Approx(-kPi / 24.0).epsilon(1e-15));
  CHECK(std::arg(special_value(K::hex, C::f2)) == doctest::Approx(kPi / 24.0).epsilon(1e-15));
}

TEST_CASE("eta_value dispatches to the exact table on canonical tau") {
  auto exact = eta_value(canonical_tau(CanonicalLattice::square));
  CHECK(exact.is_exact);
  auto generic = eta_value({0.3, 1.4});
  CHECK(!generic.is_exact);
}

TEST_SUITE_END();
