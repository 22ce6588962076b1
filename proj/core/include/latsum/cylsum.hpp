#pragma once

#include <string>
#include <vector>

#include "latsum/lattice.hpp"
#include "latsum/rational.hpp"

namespace latsum {

/// One monomial c * u^power (optionally * log u) of a radial closed form.
struct RadialTerm {
  complex_t coeff;
  int power = 0;
  bool with_log = false;
};

/// A cylindrical harmonic sum S_{l,m,n} as a finite polynomial in u (with a
/// possible log u line for m = 0). Immutable value; at most one term per
/// (power, with_log) pair.
struct RadialExpression {
  std::vector<RadialTerm> terms;
  int l = 0, m = 0, n = 0;
  LatticeSpec spec;
  bool zero_by_symmetry = false;  // odd m over a centrosymmetric set

  explicit RadialExpression(int l_, int m_, int n_, LatticeSpec spec_)
      : l(l_), m(m_), n(n_), spec(spec_) {}

  [[nodiscard]] bool empty() const { return terms.empty(); }
  /// Coefficient of u^power (log or plain line); zero when absent.
  [[nodiscard]] complex_t coeff(int power, bool with_log) const;
  void add(complex_t c, int power, bool with_log);
  void normalize();
};

/// The exact rational coefficient family of the radial closed forms. The
/// i^(n-l) phase (a sign for even n-l) is folded in; out-of-range orders
/// return exact zero, mirroring the Gamma-function convention.
struct CoefficientSet {
  int l, m, n;

  [[nodiscard]] Rational B2k(int k) const;
  [[nodiscard]] Rational C2k(int k) const;
  [[nodiscard]] Rational Dk(int k) const;   // D_k(m)
  [[nodiscard]] Rational Bl() const;        // l >= n diagonal/lower coefficient
  [[nodiscard]] Rational Cl() const;        // harmonic-number log companion
  static Rational harmonic(int s);
};

CoefficientSet coeffs(int l, int m, int n);

/// Angle-independent sums S_{l,0,n}. The divergent sigma_2^(0) never appears;
/// its role is carried by the log|eta(tau)^2| constant of the base case.
RadialExpression S_zero(int l, int n, const LatticeSpec& spec);

/// Angle-dependent sums S_{l,m,n} for even m >= 2. Regularized sigma values
/// enter wherever an n = 2 order appears. Odd m yields an empty expression
/// flagged zero_by_symmetry; orders with (l-n)/2 > m/2-1 are identically zero.
///
/// The sigma coefficients enter complex-conjugated: the reciprocal-space sum
/// with e^{+i m psi} weights pairs under Poisson summation with the direct
/// sum of e^{+i m phi}/R^n, which is the conjugate of sigma_n^(m). For
/// reflection-symmetric lattices (all rectangular and both canonical axes)
/// the two coincide.
RadialExpression S_even(int l, int m, int n, const LatticeSpec& spec);

enum class Recurrence { R1, R2, R3, R4 };

/// Applies one Bessel recurrence symbolically. R1/R2 differentiate,
/// R3/R4 integrate; R4 (l >= 2) adds the sigma_{n-l+2}^(m) boundary constant,
/// regularized when n-l+2 = 2.
RadialExpression recur_apply(Recurrence which, const RadialExpression& expr);

/// Sum of the terms at radial coordinate u (> 0 when a log term is present).
complex_t evaluate(const RadialExpression& expr, double u);

/// Plain-text rendering: sum of c*u^p and c*u^p*ln(u) terms.
std::string to_string(const RadialExpression& expr);

}  // namespace latsum
