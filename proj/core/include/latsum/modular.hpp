#pragma once

#include <complex>
#include <optional>
#include <string>

#include "latsum/lattice.hpp"

namespace latsum {

/// The four lattices with built-in closed-form constants.
enum class CanonicalLattice { square, rect2, hex, rect_sqrt3 };

[[nodiscard]] complex_t canonical_tau(CanonicalLattice key);
[[nodiscard]] const char* canonical_name(CanonicalLattice key);

/// Matches tau against the four canonical shapes (tolerance 1e-12).
[[nodiscard]] std::optional<CanonicalLattice> canonical_from_tau(complex_t tau);

struct EtaValue {
  complex_t value;
  complex_t tau;
  bool is_exact = false;  // served from the closed-form table
};

/// Dedekind eta. tau is reduced to the fundamental domain, the functional
/// equation factors (e^{i pi/12} per T move, sqrt(-i tau) per S move) are
/// unwound, and the log-eta Fourier series is summed at the reduced point.
/// Relative accuracy 1e-13 or better for any Im(tau) > 0.
complex_t dedekind_eta(complex_t tau);

/// eta with exact-table dispatch: canonical tau is served from stored
/// closed-form literals, anything else falls through to dedekind_eta.
EtaValue eta_value(complex_t tau);

struct WeberQuotients {
  complex_t f, f1, f2;
};

/// Weber's eta-quotients f, f1, f2.
WeberQuotients weber_quotients(complex_t tau);

struct ThetaConstants {
  complex_t t2, t3, t4;  // theta_2(0;tau), theta_3(0;tau), theta_4(0;tau)
};

/// Jacobi theta constants built from eta and the Weber quotients.
ThetaConstants theta_constants(complex_t tau);

enum class SpecialConstant { eta, f, f1, f2 };

/// One entry of the closed-form table: a 30-significant-digit decimal for
/// the magnitude, an exact phase exp(i pi p/24), and the defining formula.
struct SpecialEntry {
  const char* formula;
  const char* magnitude30;
  int phase_p24;  // phase = exp(i pi phase_p24 / 24)
};

[[nodiscard]] const SpecialEntry& special_entry(CanonicalLattice key, SpecialConstant which);

/// Exact tabulated constant as a complex value. Throws not_tabulated_error
/// for combinations outside the table (none for the four canonical keys).
[[nodiscard]] complex_t special_value(CanonicalLattice key, SpecialConstant which);

}  // namespace latsum
