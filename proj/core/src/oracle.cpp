#include "latsum/oracle.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "latsum/lseries.hpp"

namespace latsum {
namespace oracle {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Kahan-compensated complex accumulator; 1e6+ term sums at 1e-8 targets
// need guarded rounding.
struct KahanSum {
  complex_t s{0.0, 0.0};
  complex_t c{0.0, 0.0};
  void add(complex_t x) {
    const complex_t y = x - c;
    const complex_t t = s + y;
    c = (t - s) - y;
    s = t;
  }
};

// covering radius of the lattice with basis (a, a tau): every point of the
// plane lies within rho of a lattice point (half the longer cell diagonal)
double covering_radius(const LatticeSpec& spec) {
  return 0.5 * spec.a * std::max(std::abs(1.0 + spec.tau), std::abs(1.0 - spec.tau));
}

double covering_radius_reciprocal(const LatticeSpec& spec) {
  const auto [b1, b2] = reciprocal_basis(spec);
  return 0.5 * std::max(std::abs(b1 + b2), std::abs(b1 - b2));
}

// Rigorous bound on sum_{r > R} r^{-n} over a lattice with cell area A and
// covering radius rho: each Voronoi cell lies in |x| > R - rho and its point
// satisfies |p| >= |x| - rho, so the sum is dominated by
// (2 pi/A) int_{R-2 rho} (s + rho) s^{-n} ds. Slightly above the plain
// integral test, which the actual tail brushes against for m = 0 sums.
double sigma_tail_bound(int n, double radius, double cell_area, double rho) {
  if (n <= 2 || radius <= 2.0 * rho) return std::numeric_limits<double>::infinity();
  const double s0 = radius - 2.0 * rho;
  return 2.0 * kPi / cell_area *
         (std::pow(s0, 2 - n) / (n - 2) + rho * std::pow(s0, 1 - n) / (n - 1));
}

// Same Voronoi-shifted construction for the S tail with the envelope
// |J_l(x)| <= sqrt(2/(pi x)) (valid once K u clears the Bessel transition;
// below that a |J_l| <= 1 stretch is added).
double s_tail_bound(int l, int n, double u, double k_max, double cell_area, double rho) {
  if (!(u > 0.0) || k_max <= 2.0 * rho) return std::numeric_limits<double>::infinity();
  const double dens = cell_area / (2.0 * kPi);  // A/(2 pi): shifted point density factor
  const double x_ok = std::max(1.0, static_cast<double>(l) * l + 2.0);
  double tail = 0.0;
  double k0 = k_max;
  if (k_max * u < x_ok) {
    if (n <= 2) return std::numeric_limits<double>::infinity();
    const double s0 = k0 - 2.0 * rho;
    if (s0 <= 0.0) return std::numeric_limits<double>::infinity();
    // |J_l| <= 1 on the transition stretch, extended to infinity for a bound
    tail += dens * (std::pow(s0, 2 - n) / (n - 2) + rho * std::pow(s0, 1 - n) / (n - 1));
    k0 = x_ok / u;
  }
  if (n - 1.5 <= 0.0) return std::numeric_limits<double>::infinity();
  const double s0 = k0 - 2.0 * rho;
  if (s0 <= 0.0) return std::numeric_limits<double>::infinity();
  tail += dens * std::sqrt(2.0 / (kPi * u)) *
          (std::pow(s0, 1.5 - n) / (n - 1.5) + rho * std::pow(s0, 0.5 - n) / (n - 0.5));
  return tail;
}

}  // namespace

double bessel_j(int l, double x) {
  if (l < 0 || x < 0.0) throw std::invalid_argument("bessel_j: need l >= 0, x >= 0");
  if (x == 0.0) return l == 0 ? 1.0 : 0.0;

  if (x < 1e-4) {  // two series terms already reach 1e-17 here
    double lead = 1.0;
    for (int i = 1; i <= l; ++i) {
      lead *= (x / 2.0) / i;
      if (lead == 0.0) return 0.0;
    }
    return lead * (1.0 - x * x / (4.0 * (l + 1.0)));
  }

  if (x < 9.0 && static_cast<double>(l) > 0.7 * x) {
    // ascending series; safe from cancellation when the first term dominates
    double term = 1.0;
    for (int i = 1; i <= l; ++i) term *= (x / 2.0) / i;
    double sum = term;
    const double q = x * x / 4.0;
    for (int k = 1; k <= 80; ++k) {
      term *= -q / (k * (l + k));
      sum += term;
      if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
  }

  if (x >= 17.0 && static_cast<double>(l) <= 0.5 * x) {
    // Hankel asymptotics for J_0, J_1, then upward recurrence (stable for l < x)
    double jj[2];
    for (int nu = 0; nu <= 1; ++nu) {
      const double mu = 4.0 * nu * nu;
      double p = 1.0, q = (mu - 1.0) / (8.0 * x);
      double tp = 1.0, tq = q;
      for (int k = 1; k <= 12; ++k) {
        const double f2k1 = mu - (4 * k - 3) * (4 * k - 3);
        const double f2k = mu - (4 * k - 1) * (4 * k - 1);
        tp *= -f2k1 * f2k / ((2 * k - 1) * 2 * k * 64.0 * x * x);
        p += tp;
        const double g2k = mu - (4 * k - 1) * (4 * k - 1);
        const double g2k1 = mu - (4 * k + 1) * (4 * k + 1);
        tq *= -g2k * g2k1 / (2 * k * (2 * k + 1) * 64.0 * x * x);
        q += tq;
        if (std::abs(tp) < 1e-18 && std::abs(tq) < 1e-18) break;
      }
      const double chi = x - (0.5 * nu + 0.25) * kPi;
      jj[nu] = std::sqrt(2.0 / (kPi * x)) * (p * std::cos(chi) - q * std::sin(chi));
    }
    if (l == 0) return jj[0];
    double jm = jj[0], jc = jj[1];
    for (int k = 1; k < l; ++k) {
      const double jn = (2.0 * k / x) * jc - jm;
      jm = jc;
      jc = jn;
    }
    return jc;
  }

  // Miller backward recurrence with even-order normalization
  const int big = std::max(l, static_cast<int>(x)) ;
  int M = big + 16 + static_cast<int>(2.0 * std::sqrt(static_cast<double>(big) * 40.0));
  if (M % 2 != 0) ++M;
  double fp = 0.0, fc = 1e-280;
  double norm = 0.0, result = 0.0;
  for (int k = M; k >= 1; --k) {
    const double fm = (2.0 * k / x) * fc - fp;
    fp = fc;
    fc = fm;
    if (k - 1 == l) result = fc;
    if ((k - 1) % 2 == 0) norm += (k - 1 == 0) ? fc : 2.0 * fc;  // J0 + 2 sum J_2k = 1
    if (std::abs(fc) > 1e250) {  // rescale to avoid overflow
      fp /= 1e250;
      fc /= 1e250;
      norm /= 1e250;
      result /= 1e250;
    }
  }
  return result / norm;
}

OracleReport sigma_direct(std::span<const LatticePoint> points, int n, int m, double radius,
                          double cell_area, double covering_rho) {
  KahanSum acc;
  for (const auto& p : points) {
    acc.add(std::polar(1.0, -m * p.phi) / std::pow(p.r, n));
  }
  OracleReport rep;
  rep.value = acc.s;
  rep.truncation = radius;
  rep.terms_used = static_cast<std::int64_t>(points.size());
  rep.tail_estimate = sigma_tail_bound(n, radius, cell_area, covering_rho);
  rep.tail_is_bound = n > 2 && std::isfinite(rep.tail_estimate);
  if (points.empty()) {
    rep.tail_estimate = std::numeric_limits<double>::infinity();
    rep.tail_is_bound = false;
  }
  return rep;
}

OracleReport sigma_direct(const LatticeSpec& spec, double radius, int n, int m) {
  KahanSum acc;
  std::int64_t count = 0;
  scan_direct_points(spec, radius, [&](complex_t z) {
    ++count;
    acc.add(std::polar(1.0, -m * std::arg(z)) / std::pow(std::abs(z), n));
  });
  OracleReport rep;
  rep.value = acc.s;
  rep.truncation = radius;
  rep.terms_used = count;
  rep.tail_estimate = sigma_tail_bound(n, radius, spec.unit_cell_area(), covering_radius(spec));
  rep.tail_is_bound = n > 2 && count > 0 && std::isfinite(rep.tail_estimate);
  if (count == 0) rep.tail_estimate = std::numeric_limits<double>::infinity();
  return rep;
}

OracleReport sigma_direct(const LatticeCombination& comb, double radius, int n, int m) {
  OracleReport rep;
  rep.truncation = radius;
  KahanSum acc;
  double tail = 0.0;
  bool bound = n > 2;
  for (const auto& t : comb.terms) {
    OracleReport part = sigma_direct(t.spec, radius, n, m);
    // rotation by theta sends each angle phi to phi + theta
    acc.add(static_cast<double>(t.weight) * std::conj(t.rot.phase(m)) * part.value);
    tail += std::abs(t.weight) * part.tail_estimate;
    bound = bound && part.tail_is_bound;
    rep.terms_used += part.terms_used;
  }
  rep.value = acc.s;
  rep.tail_estimate = tail;
  rep.tail_is_bound = bound;
  return rep;
}

OracleReport sigma_eisenstein_order(complex_t tau, int n, int m, long long p1_max,
                                    long long p2_max, bool swap_order) {
  KahanSum acc;
  std::int64_t count = 0;
  const complex_t t = tau;
  auto add_point = [&](complex_t z) {
    ++count;
    acc.add(std::polar(1.0, -m * std::arg(z)) / std::pow(std::abs(z), n));
  };
  if (!swap_order) {
    scan_eisenstein_rows(t, p1_max, p2_max, add_point);
  } else {
    // Swapped roles: the inner (completed-first) index now multiplies tau and
    // carries the long bound p1_max, the outer integer index runs to p2_max.
    // The rectangle is transposed, not just re-grouped, so the conditional
    // limit genuinely changes.
    auto col = [&](long long k) {
      for (long long j = -p1_max; j <= p1_max; ++j) {
        if (k == 0 && j == 0) continue;
        add_point(complex_t(static_cast<double>(k), 0.0) + t * static_cast<double>(j));
      }
    };
    col(0);
    for (long long k = 1; k <= p2_max; ++k) {
      col(k);
      col(-k);
    }
  }
  OracleReport rep;
  rep.value = acc.s;
  rep.p1 = p1_max;
  rep.p2 = p2_max;
  rep.truncation = static_cast<double>(p1_max);
  rep.terms_used = count;
  // conditional order: trend indicator only, scaled from the row-tail deficit
  const long long rows = 2 * (swap_order ? p1_max : p2_max) + 1;
  rep.tail_estimate = 2.0 * static_cast<double>(rows) / static_cast<double>(swap_order ? p2_max : p1_max);
  rep.tail_is_bound = false;
  return rep;
}

namespace {

OracleReport S_direct_one(const LatticeSpec& spec, double k_max, int l, int m, int n, double u,
                          double rot_angle) {
  KahanSum acc;
  std::int64_t count = 0;
  scan_reciprocal_points(spec, k_max, [&](complex_t K) {
    ++count;
    const double r = std::abs(K);
    acc.add(bessel_j(l, r * u) * std::polar(1.0, m * (std::arg(K) + rot_angle)) / std::pow(r, n));
  });
  OracleReport rep;
  rep.value = acc.s;
  rep.truncation = k_max;
  rep.terms_used = count;
  rep.tail_estimate = s_tail_bound(l, n, u, k_max, spec.unit_cell_area(),
                                   covering_radius_reciprocal(spec));
  rep.tail_is_bound = std::isfinite(rep.tail_estimate);
  return rep;
}

}  // namespace

OracleReport S_direct(const LatticeSpec& spec, double k_max, int l, int m, int n, double u) {
  return S_direct_one(spec, k_max, l, m, n, u, 0.0);
}

OracleReport S_direct(const LatticeCombination& comb, double k_max, int l, int m, int n, double u) {
  OracleReport rep;
  rep.truncation = k_max;
  KahanSum acc;
  double tail = 0.0;
  bool bound = true;
  for (const auto& t : comb.terms) {
    OracleReport part = S_direct_one(t.spec, k_max, l, m, n, u, t.rot.angle());
    acc.add(static_cast<double>(t.weight) * part.value);
    tail += std::abs(t.weight) * part.tail_estimate;
    bound = bound && part.tail_is_bound;
    rep.terms_used += part.terms_used;
  }
  rep.value = acc.s;
  rep.tail_estimate = tail;
  rep.tail_is_bound = bound;
  return rep;
}

DirichletConstants dirichlet_constants(int s) {
  if (s < 2) throw std::invalid_argument("dirichlet_constants: s must be >= 2");
  return {zeta(s), dirichlet_beta(s), dirichlet_g(s)};
}

}  // namespace oracle
}  // namespace latsum
