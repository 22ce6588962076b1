#include "latsum/modular.hpp"

#include <array>
#include <cmath>
#include <cstdlib>

#include "latsum/errors.hpp"

namespace latsum {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

double parse30(const char* s) { return std::strtod(s, nullptr); }

complex_t phase24(int p) {
  if (p == 0) return {1.0, 0.0};
  return std::polar(1.0, kPi * p / 24.0);
}

// sum of divisors of r (first power), used by the log-eta series
long long sigma1(long long r) {
  long long s = 0;
  for (long long d = 1; d * d <= r; ++d) {
    if (r % d == 0) {
      s += d;
      if (d != r / d) s += r / d;
    }
  }
  return s;
}

// log eta(tau) = i pi tau / 12 - sum_r sigma1(r)/r q^r, q = e^{2 i pi tau}
complex_t log_eta_series(complex_t tau) {
  const complex_t q = std::exp(complex_t(0.0, 2.0 * kPi) * tau);
  complex_t lg = complex_t(0.0, kPi / 12.0) * tau;
  complex_t qr = 1.0;
  for (long long r = 1; r <= 4096; ++r) {
    qr *= q;
    const complex_t term = (static_cast<double>(sigma1(r)) / static_cast<double>(r)) * qr;
    lg -= term;
    if (std::abs(term) < 1e-17 * std::max(1.0, std::abs(lg))) return lg;
  }
  throw std::runtime_error("log_eta_series: q-series did not converge");
}

}  // namespace

complex_t canonical_tau(CanonicalLattice key) {
  switch (key) {
    case CanonicalLattice::square: return {0.0, 1.0};
    case CanonicalLattice::rect2: return {0.0, 2.0};
    case CanonicalLattice::hex: return {0.5, std::sqrt(3.0) / 2.0};
    case CanonicalLattice::rect_sqrt3: return {0.0, std::sqrt(3.0)};
  }
  throw std::invalid_argument("canonical_tau: bad key");
}

const char* canonical_name(CanonicalLattice key) {
  switch (key) {
    case CanonicalLattice::square: return "square";
    case CanonicalLattice::rect2: return "rect2";
    case CanonicalLattice::hex: return "hex";
    case CanonicalLattice::rect_sqrt3: return "rectsqrt3";
  }
  return "?";
}

std::optional<CanonicalLattice> canonical_from_tau(complex_t tau) {
  for (auto key : {CanonicalLattice::square, CanonicalLattice::rect2, CanonicalLattice::hex,
                   CanonicalLattice::rect_sqrt3}) {
    if (std::abs(tau - canonical_tau(key)) < 1e-12) return key;
  }
  return std::nullopt;
}

complex_t dedekind_eta(complex_t tau) {
  if (!(tau.imag() > 0.0)) throw std::invalid_argument("dedekind_eta: Im(tau) must be > 0");
  const TauReduction red = reduce_tau(tau);
  complex_t val = std::exp(log_eta_series(red.tau));
  for (auto it = red.steps.rbegin(); it != red.steps.rend(); ++it) {
    if (it->kind == TauStepKind::T) {
      // eta(tau + c) = e^{i pi c / 12} eta(tau)
      val *= std::polar(1.0, -kPi * static_cast<double>(it->count) / 12.0);
    } else {
      // step was tau_after = -1/tau_before, so eta(tau_before) =
      // eta(tau_after) / sqrt(-i tau_before), principal branch.
      val /= std::sqrt(complex_t(0.0, -1.0) * it->tau_before);
    }
  }
  return val;
}

EtaValue eta_value(complex_t tau) {
  if (auto key = canonical_from_tau(tau)) {
    return {special_value(*key, SpecialConstant::eta), tau, true};
  }
  return {dedekind_eta(tau), tau, false};
}

WeberQuotients weber_quotients(complex_t tau) {
  const complex_t e = dedekind_eta(tau);
  const complex_t f = std::polar(1.0, -kPi / 24.0) * dedekind_eta(0.5 * (tau + 1.0)) / e;
  const complex_t f1 = dedekind_eta(0.5 * tau) / e;
  const complex_t f2 = std::sqrt(2.0) * dedekind_eta(2.0 * tau) / e;
  return {f, f1, f2};
}

ThetaConstants theta_constants(complex_t tau) {
  const complex_t e = dedekind_eta(tau);
  const WeberQuotients w = weber_quotients(tau);
  return {e * w.f2 * w.f2, e * w.f * w.f, e * w.f1 * w.f1};
}

namespace {

// Stored as 30-significant-digit magnitudes with exact e^{i pi p/24} phases;
// doubles are produced by parsing so one table serves a future
// extended-precision path unchanged.
struct TableRow {
  SpecialEntry entries[4];  // eta, f, f1, f2
};

constexpr TableRow kSpecialTable[4] = {
    // square, tau = i
    {{{"Gamma(1/4)/(2 pi^(3/4))", "0.7682254223260566590025941795762", 0},
      {"2^(1/4)", "1.189207115002721066717499970560", 0},
      {"2^(1/8)", "1.090507732665257659207010655761", 0},
      {"2^(1/8)", "1.090507732665257659207010655761", 0}}},
    // rect2, tau = 2i
    {{{"Gamma(1/4)/(2^(11/8) pi^(3/4))", "0.5923827813324158852903633744920", 0},
      {"(4+3 sqrt(2))^(1/8)", "1.301692180776155281275810494127", 0},
      {"2^(3/8)", "1.296839554651009665933754117792", 0},
      {"2^(1/8)/(4+3 sqrt(2))^(1/8)", "0.8377616065996682593534288888011", 0}}},
    // hex, tau = e^{i pi/3}
    {{{"e^(i pi/24) 3^(1/8) Gamma(1/3)^(3/2)/(2 pi)", "0.8005794028200380209827548177692", 1},
      {"2^(1/6)", "1.122462048309372981433533049679", 0},
      {"e^(-i pi/24) 2^(1/6)", "1.122462048309372981433533049679", -1},
      {"e^(i pi/24) 2^(1/6)", "1.122462048309372981433533049679", 1}}},
    // rect_sqrt3, tau = sqrt(3) i
    {{{"3^(1/8) Gamma(1/3)^(3/2)/(2^(4/3) pi)", "0.6354202931103006378376900154813", 0},
      {"2^(1/3)", "1.259921049894873164767210607278", 0},
      {"2^(1/12) (2+sqrt(3))^(1/8)", "1.249048425941266118211656690084", 0},
      {"2^(1/12) (2-sqrt(3))^(1/8)", "0.8986537471223348744571958078046", 0}}},
};

int row_index(CanonicalLattice key) {
  switch (key) {
    case CanonicalLattice::square: return 0;
    case CanonicalLattice::rect2: return 1;
    case CanonicalLattice::hex: return 2;
    case CanonicalLattice::rect_sqrt3: return 3;
  }
  throw not_tabulated_error("special_value: unknown canonical lattice");
}

}  // namespace

const SpecialEntry& special_entry(CanonicalLattice key, SpecialConstant which) {
  return kSpecialTable[row_index(key)].entries[static_cast<int>(which)];
}

complex_t special_value(CanonicalLattice key, SpecialConstant which) {
  const SpecialEntry& e = special_entry(key, which);
  return parse30(e.magnitude30) * phase24(e.phase_p24);
}

}  // namespace latsum
