#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace latsum {

using complex_t = std::complex<double>;

/// A two-dimensional Bravais lattice given by its shape parameter tau
/// (upper half plane) and physical scale a. The direct lattice is the set
/// a*(p1 + tau*p2) over integer pairs; the first basis vector lies along
/// the real axis.
struct LatticeSpec {
  complex_t tau;
  double a = 1.0;

  LatticeSpec(complex_t tau_, double a_) : tau(tau_), a(a_) {
    if (!(tau.imag() > 0.0)) throw std::invalid_argument("LatticeSpec: Im(tau) must be > 0");
    if (!(a > 0.0)) throw std::invalid_argument("LatticeSpec: scale a must be > 0");
  }

  [[nodiscard]] double unit_cell_area() const { return a * a * tau.imag(); }
};

/// A lattice point in both cartesian and polar form, phi in (-pi, pi].
struct LatticePoint {
  double x = 0.0;
  double y = 0.0;
  double r = 0.0;
  double phi = 0.0;

  static LatticePoint from_complex(complex_t z) {
    return {z.real(), z.imag(), std::abs(z), std::arg(z)};
  }
  [[nodiscard]] complex_t as_complex() const { return {x, y}; }
};

enum class TauStepKind { T, S };

/// One modular move: T shifts tau by an integer count, S maps tau -> -1/tau.
struct TauStep {
  TauStepKind kind;
  long long count = 0;  // T only
  complex_t tau_before;
  complex_t tau_after;
};

struct TauReduction {
  complex_t tau;  // representative in |Re| <= 1/2, |tau| >= 1
  std::vector<TauStep> steps;
};

/// Reduce tau to the standard fundamental domain, recording the move
/// sequence so sum values can be transformed back. Throws std::runtime_error
/// if 64 moves do not suffice (floating point cycling near the boundary).
TauReduction reduce_tau(complex_t tau);

/// Complex generators of the reciprocal lattice: K(h1,h2) = h1*b1 + h2*b2
/// with b_i . e_j = 2 pi delta_ij.
struct ReciprocalBasis {
  complex_t b1, b2;
};
ReciprocalBasis reciprocal_basis(const LatticeSpec& spec);

/// All nonzero direct-lattice points with r <= radius (closed disk), sorted
/// by (r, phi) with integer-index tie break. Empty if the disk contains no
/// lattice point.
std::vector<LatticePoint> direct_points(const LatticeSpec& spec, double radius);

/// Nonzero reciprocal-lattice points with r <= radius, same ordering.
std::vector<LatticePoint> reciprocal_points(const LatticeSpec& spec, double radius);

/// Row-ordered points p1 + tau*p2 (a = 1 normalization) realizing the
/// Eisenstein summation order: rows p2 = 0, +1, -1, ..., +-p2_max, within
/// each row p1 = -p1_max..p1_max, origin excluded.
std::vector<LatticePoint> eisenstein_ordered_rows(complex_t tau, long long p1_max, long long p2_max);

namespace detail {

/// Scan integer pairs (p1, p2) whose point p1 + tau*p2 lies in |z| <= rnorm,
/// row by row (p2 ascending, p1 ascending). f(p1, p2, z) is called for every
/// nonzero point. The bounding-parallelogram ranges are padded by one index
/// so no boundary point is missed.
template <class F>
void scan_unit_lattice(complex_t tau, double rnorm, F&& f) {
  const double x = tau.real(), y = tau.imag();
  const auto p2max = static_cast<long long>(std::floor(rnorm / y)) + 1;
  for (long long p2 = -p2max; p2 <= p2max; ++p2) {
    const double h = rnorm * rnorm - (p2 * y) * (p2 * y);
    if (h < 0.0) continue;
    const double s = std::sqrt(h);
    const auto lo = static_cast<long long>(std::floor(-s - p2 * x)) - 1;
    const auto hi = static_cast<long long>(std::ceil(s - p2 * x)) + 1;
    for (long long p1 = lo; p1 <= hi; ++p1) {
      if (p1 == 0 && p2 == 0) continue;
      const complex_t z(p1 + x * p2, y * p2);
      if (std::norm(z) <= rnorm * rnorm) f(p1, p2, z);
    }
  }
}

}  // namespace detail

/// Streaming variant of direct_points for large radii: row order, not sorted.
template <class F>
void scan_direct_points(const LatticeSpec& spec, double radius, F&& f) {
  detail::scan_unit_lattice(spec.tau, radius / spec.a,
                            [&](long long, long long, complex_t z) { f(spec.a * z); });
}

/// Streaming variant of reciprocal_points: row order, not sorted.
template <class F>
void scan_reciprocal_points(const LatticeSpec& spec, double radius, F&& f) {
  // As a point set the reciprocal lattice is the unit direct lattice scaled
  // by 2 pi / (a Im tau) and rotated a quarter turn.
  const complex_t c = complex_t(0.0, 2.0 * M_PI) / (spec.a * spec.tau.imag());
  detail::scan_unit_lattice(spec.tau, radius / std::abs(c),
                            [&](long long, long long, complex_t z) { f(c * z); });
}

/// Streaming Eisenstein-order rows; f(z) sees points in the exact
/// conditional-summation order.
template <class F>
void scan_eisenstein_rows(complex_t tau, long long p1_max, long long p2_max, F&& f) {
  if (!(tau.imag() > 0.0)) throw std::invalid_argument("scan_eisenstein_rows: Im(tau) must be > 0");
  if (p1_max < 1 || p2_max < 0) throw std::invalid_argument("scan_eisenstein_rows: bad bounds");
  auto row = [&](long long p2) {
    for (long long p1 = -p1_max; p1 <= p1_max; ++p1) {
      if (p1 == 0 && p2 == 0) continue;
      f(complex_t(static_cast<double>(p1), 0.0) + tau * static_cast<double>(p2));
    }
  };
  row(0);
  for (long long p2 = 1; p2 <= p2_max; ++p2) {
    row(p2);
    row(-p2);
  }
}

}  // namespace latsum
