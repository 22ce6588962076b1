#include "latsum/displaced.hpp"

#include <cmath>

#include "latsum/eisenstein.hpp"
#include "latsum/errors.hpp"
#include "latsum/modular.hpp"

namespace latsum {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

const complex_t kTauHex = canonical_tau(CanonicalLattice::hex);

}  // namespace

double Rotation::angle() const { return kPi * num / den; }

complex_t Rotation::phase(int m) const {
  // reduce m * num / den modulo 2; exact units on the quarter-turn grid
  const long long q = 2LL * den;
  long long t = (static_cast<long long>(m) * num) % q;
  if (t < 0) t += q;
  // t / den in units of pi
  if (2 * t == 0) return {1.0, 0.0};
  if (2 * t == q) return {-1.0, 0.0};         // pi
  if (4 * t == q) return {0.0, 1.0};          // pi/2
  if (4 * t == 3 * q) return {0.0, -1.0};     // 3 pi/2
  return std::polar(1.0, kPi * static_cast<double>(t) / den);
}

LatticeCombination square_X(double a) {
  return {{{1, {}, LatticeSpec({0.0, 0.5}, 2 * a)}, {-1, {}, LatticeSpec({0.0, 1.0}, a)}},
          LatticeKind::reciprocal};
}

LatticeCombination square_Y(double a) {
  return {{{1, {}, LatticeSpec({0.0, 2.0}, a)}, {-1, {}, LatticeSpec({0.0, 1.0}, a)}},
          LatticeKind::reciprocal};
}

LatticeCombination square_M(double a) {
  return {{{1, {}, LatticeSpec({0.0, 1.0}, 2 * a)},
           {-1, {}, LatticeSpec({0.0, 0.5}, 2 * a)},
           {1, {}, LatticeSpec({0.0, 1.0}, a)},
           {-1, {}, LatticeSpec({0.0, 2.0}, a)}},
          LatticeKind::reciprocal};
}

LatticeCombination hex_M(double a) {
  return {{{1, {}, LatticeSpec(kTauHex, 2 * a)}, {-1, {}, LatticeSpec(kTauHex, a)}},
          LatticeKind::reciprocal};
}

LatticeCombination hex_M_sublattice(int j, double a) {
  if (j < 1 || j > 3) throw std::invalid_argument("hex_M_sublattice: j must be 1, 2, or 3");
  // M2 is the printed identity; M1 and M3 are its +-pi/3 rotations.
  const Rotation rot = (j == 2) ? Rotation{0, 1} : (j == 1 ? Rotation{1, 3} : Rotation{-1, 3});
  return {{{1, rot, LatticeSpec({0.0, std::sqrt(3.0)}, a)}, {-1, rot, LatticeSpec(kTauHex, a)}},
          LatticeKind::reciprocal};
}

LatticeCombination hex_K(double a) {
  return {{{1, {1, 2}, LatticeSpec(kTauHex, std::sqrt(3.0) * a)}, {-1, {}, LatticeSpec(kTauHex, a)}},
          LatticeKind::reciprocal};
}

LatticeCombination hex_K_sublattice(int j, double a) {
  (void)j;
  (void)a;
  throw unsupported_set_error(
      "hex K sublattices lack 2-fold symmetry about the origin and cannot be written as a "
      "combination of origin-centered lattices");
}

LatticeCombination square_wyckoff_b(double a) {
  return {{{1, {}, LatticeSpec({0.0, 0.5}, a)}, {-1, {}, LatticeSpec({0.0, 1.0}, a)}},
          LatticeKind::direct};
}

LatticeCombination square_wyckoff_c(double a) {
  return {{{1, {}, LatticeSpec({0.0, 2.0}, a / 2)}, {-1, {}, LatticeSpec({0.0, 1.0}, a)}},
          LatticeKind::direct};
}

LatticeCombination square_wyckoff_d(double a) {
  return {{{1, {}, LatticeSpec({0.0, 1.0}, a / 2)},
           {1, {}, LatticeSpec({0.0, 1.0}, a)},
           {-1, {}, LatticeSpec({0.0, 0.5}, a)},
           {-1, {}, LatticeSpec({0.0, 2.0}, a / 2)}},
          LatticeKind::direct};
}

complex_t sigma_over(const LatticeCombination& comb, int n, int m, bool regularized) {
  if (comb.kind != LatticeKind::direct)
    throw std::invalid_argument("sigma_over: combination must be a direct-lattice set");
  if (n == 2 && !regularized)
    throw std::invalid_argument(
        "sigma_over: n = 2 terms mix Eisenstein-order constants that do not cancel across the "
        "multiset; regularized values are required");
  complex_t total = 0.0;
  for (const auto& t : comb.terms) {
    SigmaValue v = sigma(n, m, t.spec.tau);
    if (n == 2) v = regularize(v);
    // direct-lattice sums attract e^{-i m theta} under rotation
    total += static_cast<double>(t.weight) * std::conj(t.rot.phase(m)) *
             std::pow(t.spec.a, -n) * v.value;
  }
  return total;
}

RadialExpression S_over(const LatticeCombination& comb, int l, int m, int n) {
  if (comb.kind != LatticeKind::reciprocal)
    throw std::invalid_argument("S_over: combination must be a reciprocal-lattice set");
  if (comb.terms.empty()) throw std::invalid_argument("S_over: empty combination");
  RadialExpression out(l, m, n, comb.terms.front().spec);
  bool all_symmetry_zero = true;
  for (const auto& t : comb.terms) {
    const RadialExpression part =
        (m == 0) ? S_zero(l, n, t.spec) : S_even(l, m, n, t.spec);
    all_symmetry_zero = all_symmetry_zero && part.zero_by_symmetry;
    // reciprocal sums attract e^{+i m theta} under rotation
    const complex_t w = static_cast<double>(t.weight) * t.rot.phase(m);
    for (const auto& term : part.terms) out.add(w * term.coeff, term.power, term.with_log);
  }
  out.zero_by_symmetry = all_symmetry_zero;
  out.normalize();
  return out;
}

}  // namespace latsum
