#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "latsum/lattice.hpp"
#include "latsum/modular.hpp"

namespace latsum {

enum class Convergence { absolute, eisenstein_order, regularized, divergent };

[[nodiscard]] const char* to_string(Convergence c);

/// A value of the generalized Eisenstein series sigma_n^(m)(tau) tagged with
/// its convergence class. n = 2 sums carry the Eisenstein summation-order
/// value until regularize() removes the extraordinary 2 pi/(m Im tau) term.
struct SigmaValue {
  complex_t value;
  int n = 0;
  int m = 0;
  complex_t tau;
  Convergence convergence = Convergence::absolute;
};

/// Exact divisor power sum sigma-hat_k(r) = sum of d^k over divisors d of r.
/// Throws std::overflow_error if the value exceeds 64-bit range.
std::int64_t divisor_sigma(int k, std::int64_t r);

/// Memoized divisor power sums for one exponent. Intended per evaluation
/// (cheap to construct); instances are independent, so no locking is needed
/// and results are identical to the uncached computation.
class DivisorCache {
 public:
  explicit DivisorCache(int k) : k_(k) {}
  std::int64_t get(std::int64_t r);

 private:
  int k_;
  std::vector<std::int64_t> vals_;  // vals_[r-1] = sigma-hat_k(r)
};

/// Conventional Eisenstein series G_n(tau), n even >= 2, via the Fourier
/// q-expansion at the reduced tau, transformed back with the weight-n law
/// (n >= 4) or the G_2 anomaly (n = 2). The n = 2 value is the
/// Eisenstein-summation-order value.
complex_t G(int n, complex_t tau);

/// k-th tau derivative of G_n by the weighted Fourier series, evaluated at
/// the given tau without reduction. Converges fast when Im(tau) is not small;
/// sigma() always calls it at reduced tau.
complex_t G_deriv(int n, int k, complex_t tau);

struct GRing {
  complex_t g2, g4, g6;
};

/// k-th derivatives of (G2, G4, G6) at a common tau from Ramanujan's closed
/// differential ring, with exact rational polynomial bookkeeping.
std::array<complex_t, 3> ramanujan_ring_deriv(const GRing& values, int order);

/// G_n for even n >= 8 from the Eisenstein recursion seeded by G4, G6.
/// Throws std::invalid_argument for n < 8 (use G directly).
complex_t G_recursive(int n, complex_t tau);

/// Generalized Eisenstein series sigma_n^(m)(tau), n >= 2 even, m >= 0 even,
/// (n, m) != (2, 0). Evaluated at reduced tau (m >= n through the G-derivative
/// polynomial, m < n through the Lipschitz/hypergeometric Fourier form) and
/// transformed back, tracking the n = 2 extraordinary term explicitly.
/// Odd angular orders vanish identically over any centrosymmetric lattice and
/// are rejected as inputs rather than computed.
SigmaValue sigma(int n, int m, complex_t tau);

/// Removes the non-physical extraordinary contribution 2 pi/(m Im tau) from
/// an n = 2 Eisenstein-order value. Idempotent on regularized input. For
/// n >= 4 the value is returned unchanged and *no_op_warning is set.
SigmaValue regularize(const SigmaValue& v, bool* no_op_warning = nullptr);

/// The same sum over the inverted lattice: returns sigma_n^(m)(-1/tau) in the
/// convergence class of the input (geometric law for absolute and regularized
/// values, the extraordinary-corrected law for Eisenstein-order n = 2).
SigmaValue transform_tau_inverse(const SigmaValue& v);

struct ExactSigma {
  std::string formula;  // polynomial in G2, G4, G6 with exact coefficients
  complex_t value;
};

/// Closed-form sigma_n^(m) (m >= n even) at a canonical lattice, assembled
/// from the stored G2/G4/G6 constants through the Ramanujan ring.
ExactSigma sigma_exact(int n, int m, CanonicalLattice key);

/// One closed-form table entry: sigma_n^(m) at a canonical lattice split into
/// the modular (regularized) part and the extraordinary part (n = 2 only).
struct Table1Entry {
  CanonicalLattice lattice;
  int n, m;
  const char* formula;       // closed form of the principal part
  const char* principal30;   // 30-digit decimal of the principal part
  [[nodiscard]] double principal() const;
  [[nodiscard]] double extraordinary() const;  // 2 pi/(m Im tau) for n = 2, else 0
  [[nodiscard]] double full() const { return principal() + extraordinary(); }
};

/// All 24 tabulated entries (G2, G4, sigma_2^(4), G6, sigma_4^(6),
/// sigma_2^(6) at the four canonical lattices).
std::span<const Table1Entry> table1();

}  // namespace latsum
