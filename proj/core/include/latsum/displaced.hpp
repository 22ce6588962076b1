#pragma once

#include <vector>

#include "latsum/cylsum.hpp"
#include "latsum/lattice.hpp"

namespace latsum {

/// Exact rotation angle pi * num / den, kept rational so the e^{+-i m theta}
/// phases of even-m sums are exact units.
struct Rotation {
  int num = 0;
  int den = 1;
  [[nodiscard]] double angle() const;
  /// e^{i m * angle} with exact values on the quarter-turn grid.
  [[nodiscard]] complex_t phase(int m) const;
};

enum class LatticeKind { direct, reciprocal };

/// One signed, optionally rotated, origin-centered lattice of a multiset
/// identity.
struct CombinationTerm {
  int weight;
  Rotation rot;
  LatticeSpec spec;
};

/// A displaced point set represented as a signed combination of
/// origin-centered lattices; the formal point multiset has multiplicity one
/// on the displaced set and zero elsewhere.
struct LatticeCombination {
  std::vector<CombinationTerm> terms;
  LatticeKind kind = LatticeKind::reciprocal;
};

// Square reciprocal-lattice high-symmetry sets (X, Y, M points of period a).
LatticeCombination square_X(double a);
LatticeCombination square_Y(double a);
LatticeCombination square_M(double a);

// Hexagonal sets: all M points, the three M sublattices (j = 1, 2, 3), and
// all K points. The individual K sublattices lack the 2-fold symmetry needed
// for origin-centered evaluation; hex_K_sublattice always throws
// unsupported_set_error.
LatticeCombination hex_M(double a);
LatticeCombination hex_M_sublattice(int j, double a);
LatticeCombination hex_K(double a);
LatticeCombination hex_K_sublattice(int j, double a);

// Direct-lattice Wyckoff position sets of the square lattice. W_d is the
// printed cell-center identity; W_b and W_c follow by the same half-period
// algebra and are pinned by the finite-disk enumeration tests.
LatticeCombination square_wyckoff_b(double a);
LatticeCombination square_wyckoff_c(double a);
LatticeCombination square_wyckoff_d(double a);

/// sigma_n^(m) over a direct-lattice combination:
///   sum_j w_j e^{-i m theta_j} a_j^{-n} sigma_n^(m)(tau_j),
/// regularized values throughout when any n = 2 term enters (required:
/// Eisenstein-order constants do not cancel across the multiset).
complex_t sigma_over(const LatticeCombination& comb, int n, int m, bool regularized);

/// S_{l,m,n} over a reciprocal-lattice combination: the term-wise sum
/// sum_j w_j e^{+i m theta_j} S_{l,m,n}(.; tau_j, a_j) merged into one
/// RadialExpression. Regularized sigma values are used throughout.
RadialExpression S_over(const LatticeCombination& comb, int l, int m, int n);

/// Signed enumeration of every term's points within |z| <= radius; the
/// oracle-facing view of the combination's point multiset.
/// f(weight, z) is called once per (term, point).
template <class F>
void scan_combination(const LatticeCombination& comb, double radius, F&& f) {
  for (const auto& t : comb.terms) {
    const complex_t rot = std::polar(1.0, t.rot.angle());
    auto emit = [&](complex_t z) { f(t.weight, rot * z); };
    if (comb.kind == LatticeKind::direct) scan_direct_points(t.spec, radius, emit);
    else scan_reciprocal_points(t.spec, radius, emit);
  }
}

}  // namespace latsum
