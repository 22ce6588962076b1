#include "latsum/cylsum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "latsum/eisenstein.hpp"
#include "latsum/errors.hpp"
#include "latsum/lseries.hpp"
#include "latsum/modular.hpp"

namespace latsum {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

int sign_i_pow(int e) {  // i^e for even e
  return ((e / 2) % 2 == 0) ? 1 : -1;
}

void require_even_ln(int l, int n) {
  if ((l - n) % 2 != 0)
    throw std::invalid_argument("cylindrical sums: l-n must be even (odd l-n has no finite form)");
}

// conj(sigma-tilde_j^(m))(tau); the regularized value when j = 2.
complex_t sigma_for_S(const LatticeSpec& spec, int j, int m) {
  SigmaValue v = sigma(j, m, spec.tau);
  if (j == 2) v = regularize(v);
  return std::conj(v.value);
}

// sigma_{2s}^(0): Lorenz/Hecke Dirichlet closed forms at the canonical
// lattices, the Fourier form elsewhere. Real for every lattice.
double sigma_m0(const LatticeSpec& spec, int s) {
  if (auto key = canonical_from_tau(spec.tau)) {
    const double zb = zeta(s);
    switch (*key) {
      case CanonicalLattice::square: return 4.0 * zb * dirichlet_beta(s);
      case CanonicalLattice::rect2:
        return 2.0 * (1.0 - std::pow(2.0, -s) + std::pow(2.0, 1 - 2 * s)) * zb * dirichlet_beta(s);
      case CanonicalLattice::hex: return 6.0 * zb * dirichlet_g(s);
      case CanonicalLattice::rect_sqrt3:
        return 2.0 * (1.0 + std::pow(2.0, 1 - 2 * s)) * zb * dirichlet_g(s);
    }
  }
  return sigma(2 * s, 0, spec.tau).value.real();
}

}  // namespace

complex_t RadialExpression::coeff(int power, bool with_log) const {
  for (const auto& t : terms)
    if (t.power == power && t.with_log == with_log) return t.coeff;
  return {0.0, 0.0};
}

void RadialExpression::add(complex_t c, int power, bool with_log) {
  if (c == complex_t{0.0, 0.0}) return;
  if (power < 0) throw std::logic_error("RadialExpression: negative power");
  for (auto& t : terms) {
    if (t.power == power && t.with_log == with_log) {
      t.coeff += c;
      return;
    }
  }
  terms.push_back({c, power, with_log});
}

void RadialExpression::normalize() {
  std::erase_if(terms, [](const RadialTerm& t) { return t.coeff == complex_t{0.0, 0.0}; });
  std::sort(terms.begin(), terms.end(), [](const RadialTerm& a, const RadialTerm& b) {
    if (a.power != b.power) return a.power < b.power;
    return a.with_log < b.with_log;
  });
}

Rational CoefficientSet::B2k(int k) const {
  const int a1 = (n + l) / 2 - k, a2 = (n - l) / 2 - k;
  if (a1 < 0 || a2 < 0) return Rational(0);
  Rational r = Rational(sign_i_pow(n - l)) *
               (k % 2 == 0 ? Rational(1) : Rational(-1)) /
               (Rational::factorial(a1) * Rational::factorial(a2));
  // 2^(2k-n)
  const int e = 2 * k - n;
  if (e >= 0) r *= Rational(1LL << e);
  else r /= Rational(1LL << -e);
  return r;
}

Rational CoefficientSet::C2k(int k) const {
  const int a1 = (n + l) / 2 + k, a2 = (n - l) / 2 + k;
  if (a2 < 0 || k < 0) return Rational(0);
  Rational r = Rational(sign_i_pow(n - l)) * Rational::factorial(k) * Rational::factorial(k + 2) /
               (Rational::factorial(a1) * Rational::factorial(a2));
  const int e = 2 - n;
  if (e >= 0) r *= Rational(1LL << e);
  else r /= Rational(1LL << -e);
  return r;
}

Rational CoefficientSet::Dk(int k) const {
  if (k < 0 || k > m / 2 - 1) return Rational(0);
  return (k % 2 == 0 ? Rational(1) : Rational(-1)) * Rational::factorial(m / 2 + k) /
         (Rational::factorial(k) * Rational::factorial(k + 2) * Rational::factorial(m / 2 - k - 1));
}

Rational CoefficientSet::Bl() const {
  if (l < n) return Rational(0);
  return Rational::factorial((l - n) / 2) /
         (Rational(1LL << (n - 1)) * Rational::factorial((l + n) / 2 - 1));
}

Rational CoefficientSet::Cl() const {
  return Rational(-1, 2) * (harmonic((n + l) / 2 - 1) + harmonic((n - l) / 2 - 1));
}

Rational CoefficientSet::harmonic(int s) {
  Rational h(0);
  for (int t = 1; t <= s; ++t) h += Rational(1, t);
  return h;
}

CoefficientSet coeffs(int l, int m, int n) {
  require_even_ln(l, n);
  if (m < 0 || m % 2 != 0) throw std::invalid_argument("coeffs: m must be even and >= 0");
  return CoefficientSet{l, m, n};
}

RadialExpression S_zero(int l, int n, const LatticeSpec& spec) {
  if (l < 0 || n < 2) throw std::invalid_argument("S_zero: need l >= 0 and n >= 2");
  require_even_ln(l, n);
  const CoefficientSet cs{l, 0, n};
  const double A = spec.unit_cell_area();
  RadialExpression ex(l, 0, n, spec);
  if (l < n) {
    for (int k = 2; k <= (n - l) / 2; ++k) {
      ex.add(std::pow(A / (2.0 * kPi), 2 * k) * cs.B2k(k).to_double() * sigma_m0(spec, k) /
                 std::pow(spec.a, 2 * k),
             n - 2 * k, false);
    }
    const double eta2 = std::norm(eta_value(spec.tau).value);
    const double logc = std::log(2.0 * kPi * eta2 / spec.a);
    const double lead = -(A / (2.0 * kPi)) * cs.B2k(1).to_double();
    ex.add(lead, n - 2, true);
    ex.add(lead * (cs.Cl().to_double() + logc), n - 2, false);
    ex.add(-0.125 * cs.C2k(0).to_double(), n, false);
  } else if (l == n) {
    ex.add((A / (2.0 * kPi)) * cs.Bl().to_double(), n - 2, false);
    ex.add(-0.125 * cs.C2k(0).to_double(), n, false);
  } else {
    ex.add((A / (2.0 * kPi)) * cs.Bl().to_double(), n - 2, false);
  }
  ex.normalize();
  return ex;
}

RadialExpression S_even(int l, int m, int n, const LatticeSpec& spec) {
  if (l < 0 || n < 1) throw std::invalid_argument("S_even: need l >= 0 and n >= 1");
  if (m == 0) throw std::invalid_argument("S_even: m = 0 belongs to S_zero");
  if (m < 0) throw std::invalid_argument("S_even: m must be positive");
  require_even_ln(l, n);
  RadialExpression ex(l, m, n, spec);
  if (m % 2 != 0) {  // vanishes over any centrosymmetric set
    ex.zero_by_symmetry = true;
    return ex;
  }
  const CoefficientSet cs{l, m, n};
  const double A = spec.unit_cell_area();
  const double im = sign_i_pow(m);
  for (int k = 1; k <= (n - l) / 2; ++k) {
    ex.add(im * std::pow(A / (2.0 * kPi), 2 * k) * cs.B2k(k).to_double() *
               sigma_for_S(spec, 2 * k, m) / std::pow(spec.a, 2 * k),
           n - 2 * k, false);
  }
  for (int k = std::max(0, (l - n) / 2); k <= m / 2 - 1; ++k) {
    ex.add(im * (A / (4.0 * kPi)) * cs.C2k(k).to_double() * cs.Dk(k).to_double() *
               sigma_for_S(spec, 2 * k + 2, m) / std::pow(spec.a, 2 * k + 2),
           n + 2 * k, false);
  }
  ex.normalize();
  return ex;
}

RadialExpression recur_apply(Recurrence which, const RadialExpression& expr) {
  const int l = expr.l, m = expr.m, n = expr.n;
  RadialExpression out(l, m, n, expr.spec);
  out.zero_by_symmetry = expr.zero_by_symmetry;
  switch (which) {
    case Recurrence::R1: {
      out.l = l - 1;
      out.n = n - 1;
      if (out.l < 0) throw std::invalid_argument("recur_apply R1: l would go negative");
      for (const auto& t : expr.terms) {
        if (t.coeff * static_cast<double>(t.power + l) != complex_t{} && t.power - 1 < 0)
          throw std::logic_error("recur_apply R1: negative power");
        out.add(t.coeff * static_cast<double>(t.power + l), t.power - 1, t.with_log);
        if (t.with_log) out.add(t.coeff, t.power - 1, false);
      }
      break;
    }
    case Recurrence::R2: {
      out.l = l + 1;
      out.n = n - 1;
      for (const auto& t : expr.terms) {
        if (t.coeff * static_cast<double>(t.power - l) != complex_t{} && t.power - 1 < 0)
          throw std::logic_error("recur_apply R2: negative power");
        out.add(-t.coeff * static_cast<double>(t.power - l), t.power - 1, t.with_log);
        if (t.with_log) out.add(-t.coeff, t.power - 1, false);
      }
      break;
    }
    case Recurrence::R3: {
      out.l = l + 1;
      out.n = n + 1;
      for (const auto& t : expr.terms) {
        const int d = t.power + l + 2;
        out.add(t.coeff / static_cast<double>(d), t.power + 1, t.with_log);
        if (t.with_log) out.add(-t.coeff / static_cast<double>(d * d), t.power + 1, false);
      }
      break;
    }
    case Recurrence::R4: {
      if (l < 2)
        throw std::invalid_argument("recur_apply R4: needs l >= 2 for a finite boundary term");
      out.l = l - 1;
      out.n = n + 1;
      const int j = n - l + 2;
      if (j < 2 || j % 2 != 0)
        throw std::invalid_argument("recur_apply R4: boundary order n-l+2 out of range");
      for (const auto& t : expr.terms) {
        const int d = t.power + 2 - l;  // integrand power + 1
        if (d == 0) throw std::logic_error("recur_apply R4: integral of 1/u");
        if (d < 0) throw std::logic_error("recur_apply R4: integral diverges at 0");
        out.add(-t.coeff / static_cast<double>(d), t.power + 1, t.with_log);
        if (t.with_log) out.add(t.coeff / static_cast<double>(d * d), t.power + 1, false);
      }
      if (!expr.zero_by_symmetry) {  // odd-m boundary sums vanish with the rest
        const double A = expr.spec.unit_cell_area();
        double fact = 1.0;
        for (int i = 2; i <= l - 1; ++i) fact *= i;
        const complex_t boundary = static_cast<double>(sign_i_pow(m)) /
                                   (std::pow(2.0, l - 1) * fact) *
                                   std::pow(A / (2.0 * kPi * expr.spec.a), j) *
                                   (m == 0 ? complex_t(sigma_m0(expr.spec, j / 2), 0.0)
                                           : sigma_for_S(expr.spec, j, m));
        out.add(boundary, l - 1, false);
      }
      break;
    }
  }
  out.normalize();
  return out;
}

complex_t evaluate(const RadialExpression& expr, double u) {
  const bool has_log = std::any_of(expr.terms.begin(), expr.terms.end(),
                                   [](const RadialTerm& t) { return t.with_log; });
  if (has_log && !(u > 0.0))
    throw std::invalid_argument("evaluate: u must be > 0 when a log term is present");
  complex_t v = 0.0;
  const double lu = has_log ? std::log(u) : 0.0;
  for (const auto& t : expr.terms) {
    v += t.coeff * std::pow(u, t.power) * (t.with_log ? lu : 1.0);
  }
  return v;
}

std::string to_string(const RadialExpression& expr) {
  if (expr.terms.empty()) return "0";
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (const auto& t : expr.terms) {
    if (!first) os << " + ";
    first = false;
    if (t.coeff.imag() == 0.0) os << t.coeff.real();
    else os << "(" << t.coeff.real() << (t.coeff.imag() < 0 ? "" : "+") << t.coeff.imag() << "i)";
    if (t.power > 0) os << "*u^" << t.power;
    if (t.with_log) os << "*ln(u)";
  }
  return os.str();
}

}  // namespace latsum
