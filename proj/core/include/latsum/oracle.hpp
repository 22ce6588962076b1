#pragma once

#include <cstdint>
#include <span>

#include "latsum/displaced.hpp"
#include "latsum/lattice.hpp"

namespace latsum {
namespace oracle {

/// A brute-force partial-sum record. tail_is_bound marks whether
/// tail_estimate is a genuine upper bound on the discarded absolute tail
/// (integral-test bound, absolutely convergent orders) or only a trend
/// indicator (conditional orders).
struct OracleReport {
  complex_t value;
  double truncation = 0.0;  // disk radius, or P1 for row-ordered sums
  long long p1 = 0, p2 = 0;
  double tail_estimate = 0.0;
  bool tail_is_bound = false;
  std::int64_t terms_used = 0;
};

/// sum e^{-i m phi} / r^n over an explicit point list. radius, cell_area and
/// the lattice covering radius feed the Voronoi-shifted integral tail bound
/// (a true upper bound for n > 2).
OracleReport sigma_direct(std::span<const LatticePoint> points, int n, int m, double radius,
                          double cell_area, double covering_rho);

/// Streaming direct sum over the lattice points of spec with r <= radius,
/// Kahan-compensated in fixed row order.
OracleReport sigma_direct(const LatticeSpec& spec, double radius, int n, int m);

/// Signed direct sum over a displaced multiset, term by term with rotation
/// phases; tails add across terms.
OracleReport sigma_direct(const LatticeCombination& comb, double radius, int n, int m);

/// Row-ordered (Eisenstein summation) partial sum of sigma_n^(m), the
/// conditional-order reference. swap_order exchanges the roles of the two
/// indices to exhibit the summation-order dependence; the tail estimate is a
/// trend indicator only.
OracleReport sigma_eisenstein_order(complex_t tau, int n, int m, long long p1_max,
                                    long long p2_max, bool swap_order = false);

/// sum J_l(K u) e^{i m psi} / K^n over reciprocal points with K <= k_max,
/// with the envelope tail bound from |J_l(x)| <= sqrt(2/(pi x)).
OracleReport S_direct(const LatticeSpec& spec, double k_max, int l, int m, int n, double u);
OracleReport S_direct(const LatticeCombination& comb, double k_max, int l, int m, int n, double u);

/// Bessel function of the first kind, integer order l >= 0, x >= 0.
/// Ascending series for small x, Miller backward recurrence in the middle,
/// Hankel asymptotics with upward recurrence for large x; relative error
/// <= 1e-12 across branches.
double bessel_j(int l, double x);

struct DirichletConstants {
  double zeta;
  double beta;
  double g;
};

/// zeta(s), beta(s) and the mod-3 series g(s) used by the Lorenz/Hecke
/// closed forms, to 1e-14.
DirichletConstants dirichlet_constants(int s);

}  // namespace oracle
}  // namespace latsum
