#include "latsum/eisenstein.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>

#include "latsum/errors.hpp"
#include "latsum/lseries.hpp"
#include "latsum/rational.hpp"

namespace latsum {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr complex_t kI{0.0, 1.0};

void require_even_orders(int n, int m) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("sigma: n must be even and >= 2");
  if (m < 0 || m % 2 != 0) throw std::invalid_argument("sigma: m must be even and >= 0");
}

// (c * i)^j for real c with the unit power kept exact
complex_t imag_pow(double c, int j) {
  const double mag = std::pow(c, j);
  switch (((j % 4) + 4) % 4) {
    case 0: return {mag, 0.0};
    case 1: return {0.0, mag};
    case 2: return {-mag, 0.0};
    default: return {0.0, -mag};
  }
}

double factorial_d(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// sum_{r>=1} sigma-hat(r) r^rpow q^r over dc's exponent; rpow may be negative
// (the m < n Fourier form needs inverse powers of r).
complex_t sigma_q_series(double rpow, complex_t q, DivisorCache& dc) {
  if (!(std::abs(q) < 0.995)) throw std::runtime_error("sigma_q_series: |q| too close to 1");
  complex_t sum = 0.0;
  complex_t qr = 1.0;
  for (std::int64_t r = 1; r <= 100000; ++r) {
    qr *= q;
    const complex_t term = std::pow(static_cast<double>(r), rpow) *
                           static_cast<double>(dc.get(r)) * qr;
    sum += term;
    if (r >= 8 && std::abs(term) < 1e-17 * std::max(std::abs(sum), 1e-300)) return sum;
  }
  throw std::runtime_error("sigma_q_series: did not converge");
}

complex_t G_deriv_unchecked(int n, int k, complex_t tau) {
  DivisorCache dc(n - 1);
  const complex_t q = std::exp(complex_t(0.0, 2.0 * kPi) * tau);
  complex_t val = 2.0 * imag_pow(2.0 * kPi, n + k) / factorial_d(n - 1) *
                  sigma_q_series(static_cast<double>(k), q, dc);
  if (k == 0) val += 2.0 * zeta(n);
  return val;
}

// Fourier series of sigma_n^(m), m < n (even), at the given tau. The
// zeta(n-1) mid-term has its pole at n = 2 exactly where sigma_2^(0) is
// divergent; that pair is rejected before we get here.
complex_t sigma_hyper(int n, int m, complex_t tau) {
  const int alpha = (n + m) / 2, beta = (n - m) / 2;
  const double y = tau.imag();
  const double sign = (m / 2) % 2 == 0 ? 1.0 : -1.0;  // (-i)^m, m even
  DivisorCache dc(n - 1);
  const complex_t q = std::exp(complex_t(0.0, 2.0 * kPi) * tau);
  complex_t val = 2.0 * zeta(n) + Rational::binomial(n - 2, alpha - 1).to_double() * sign * kPi *
                                      std::pow(2.0, 3 - n) / std::pow(y, n - 1) * zeta(n - 1);
  for (int k = 0; k <= alpha - 1; ++k) {
    const complex_t S = sigma_q_series(-static_cast<double>(beta + k), q, dc);
    val += sign * std::pow(kPi, alpha - k) * std::pow(2.0, m + 1 - 2 * k) / std::pow(y, beta + k) *
           Rational::binomial(beta + k - 1, k).to_double() / factorial_d(alpha - k - 1) * S;
  }
  for (int k = 0; k <= beta - 1; ++k) {
    const complex_t S = sigma_q_series(-static_cast<double>(alpha + k), std::conj(q), dc);
    val += sign * std::pow(kPi, beta - k) * std::pow(2.0, 1 - m - 2 * k) / std::pow(y, alpha + k) *
           Rational::binomial(alpha + k - 1, k).to_double() / factorial_d(beta - k - 1) * S;
  }
  return val;
}

// sigma_n^(m) at the reduced point via the G-derivative polynomial (m >= n).
complex_t sigma_polynomial(int n, int m, complex_t tau) {
  const int K = (m - n) / 2;
  complex_t val = 0.0;
  for (int k = 0; k <= K; ++k) {
    double ratio = 1.0;  // (n-1)!/(n+k-1)!
    for (int j = n; j <= n + k - 1; ++j) ratio /= j;
    val += imag_pow(2.0 * tau.imag(), k) * Rational::binomial(K, k).to_double() * ratio *
           G_deriv_unchecked(n, k, tau);
  }
  return val;
}

// Given sigma_n^(m) at step.tau_after, produce it at step.tau_before.
// T moves are the tau-periodicity; S moves use the inversion law, with the
// extraordinary bracket for Eisenstein-order n = 2 values.
complex_t unwind_step(complex_t val, int n, int m, bool eisenstein_order, const TauStep& st) {
  if (st.kind == TauStepKind::T) return val;
  const complex_t t = st.tau_after;
  const complex_t tm = std::pow(t, m);
  const double absm = std::pow(std::abs(t), m - n);
  if (eisenstein_order) {
    const complex_t bracket = 1.0 - std::pow(std::abs(t), m) / tm;
    return tm / std::pow(std::abs(t), m - 2) *
           (val - 2.0 * kPi / (m * t.imag()) * bracket);
  }
  return tm / absm * val;
}

complex_t unwind_all(complex_t val, int n, int m, bool eisenstein_order,
                     const std::vector<TauStep>& steps) {
  for (auto it = steps.rbegin(); it != steps.rend(); ++it)
    val = unwind_step(val, n, m, eisenstein_order, *it);
  return val;
}

}  // namespace

const char* to_string(Convergence c) {
  switch (c) {
    case Convergence::absolute: return "absolute";
    case Convergence::eisenstein_order: return "eisenstein_order";
    case Convergence::regularized: return "regularized";
    case Convergence::divergent: return "divergent";
  }
  return "?";
}

std::int64_t divisor_sigma(int k, std::int64_t r) {
  if (k < 0 || r < 1) throw std::invalid_argument("divisor_sigma: need k >= 0, r >= 1");
  const auto powk = [k](std::int64_t q) {
    std::int64_t p = 1;
    for (int i = 0; i < k; ++i)
      if (__builtin_mul_overflow(p, q, &p)) throw std::overflow_error("divisor_sigma: overflow");
    return p;
  };
  std::int64_t sum = 0;
  for (std::int64_t d = 1; d * d <= r; ++d) {
    if (r % d != 0) continue;
    if (__builtin_add_overflow(sum, powk(d), &sum))
      throw std::overflow_error("divisor_sigma: overflow");
    if (d != r / d && __builtin_add_overflow(sum, powk(r / d), &sum))
      throw std::overflow_error("divisor_sigma: overflow");
  }
  return sum;
}

std::int64_t DivisorCache::get(std::int64_t r) {
  const auto idx = static_cast<size_t>(r - 1);
  while (vals_.size() <= idx) vals_.push_back(divisor_sigma(k_, static_cast<std::int64_t>(vals_.size()) + 1));
  return vals_[idx];
}

complex_t G(int n, complex_t tau) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("G: n must be even and >= 2");
  if (!(tau.imag() > 0.0)) throw std::invalid_argument("G: Im(tau) must be > 0");
  const TauReduction red = reduce_tau(tau);
  const complex_t at_reduced = G_deriv_unchecked(n, 0, red.tau);
  return unwind_all(at_reduced, n, n, n == 2, red.steps);
}

complex_t G_deriv(int n, int k, complex_t tau) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("G_deriv: n must be even and >= 2");
  if (k < 0) throw std::invalid_argument("G_deriv: k must be >= 0");
  if (!(tau.imag() > 0.0)) throw std::invalid_argument("G_deriv: Im(tau) must be > 0");
  return G_deriv_unchecked(n, k, tau);
}

// ---- Ramanujan ring -------------------------------------------------------

namespace {

using Mono = std::array<int, 3>;           // exponents of (G2, G4, G6)
using Poly = std::map<Mono, Rational>;

void add_term(Poly& p, Mono mo, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = p.emplace(mo, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

// D = (i pi) d/dtau as a derivation on Q[G2, G4, G6]:
//   D G2 = 5/2 G4 - 1/2 G2^2,  D G4 = 7 G6 - 2 G2 G4,  D G6 = 30/7 G4^2 - 3 G2 G6
Poly derive(const Poly& p) {
  Poly out;
  for (const auto& [mo, c] : p) {
    const auto [a, b, d] = mo;
    if (a > 0) {
      add_term(out, {a - 1, b + 1, d}, c * Rational(5 * a, 2));
      add_term(out, {a + 1, b, d}, c * Rational(-a, 2));
    }
    if (b > 0) {
      add_term(out, {a, b - 1, d + 1}, c * Rational(7 * b));
      add_term(out, {a + 1, b, d}, c * Rational(-2 * b));
    }
    if (d > 0) {
      add_term(out, {a, b + 2, d - 1}, c * Rational(30 * d, 7));
      add_term(out, {a + 1, b, d}, c * Rational(-3 * d));
    }
  }
  return out;
}

Poly poly_mul(const Poly& p, const Poly& q) {
  Poly out;
  for (const auto& [m1, c1] : p)
    for (const auto& [m2, c2] : q)
      add_term(out, {m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]}, c1 * c2);
  return out;
}

complex_t poly_eval(const Poly& p, const GRing& g) {
  complex_t v = 0.0;
  for (const auto& [mo, c] : p) {
    complex_t t = c.to_double();
    for (int i = 0; i < mo[0]; ++i) t *= g.g2;
    for (int i = 0; i < mo[1]; ++i) t *= g.g4;
    for (int i = 0; i < mo[2]; ++i) t *= g.g6;
    v += t;
  }
  return v;
}

std::string poly_str(const Poly& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mo, c] : p) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    const char* names[3] = {"G2", "G4", "G6"};
    for (int i = 0; i < 3; ++i) {
      if (mo[i] == 0) continue;
      os << "*" << names[i];
      if (mo[i] > 1) os << "^" << mo[i];
    }
  }
  return os.str();
}

// G_{2k} as a polynomial in G4, G6 via the Eisenstein recursion.
Poly G_poly(int n) {
  const int kmax = n / 2;
  std::vector<Poly> g(kmax + 1);
  g[2] = {{{0, 1, 0}, Rational(1)}};
  if (kmax >= 3) g[3] = {{{0, 0, 1}, Rational(1)}};
  for (int k = 4; k <= kmax; ++k) {
    Poly acc;
    for (int s = 2; s <= k - 2; ++s) {
      Poly prod = poly_mul(g[s], g[k - s]);
      for (auto& [mo, c] : prod) add_term(acc, mo, c * Rational((2 * s - 1) * (2 * k - 2 * s - 1)));
    }
    Poly scaled;
    const Rational pref = Rational(3) / Rational(static_cast<long long>(2 * k + 1) * (2 * k - 1) * (k - 3));
    for (auto& [mo, c] : acc) add_term(scaled, mo, c * pref);
    g[k] = std::move(scaled);
  }
  return g[kmax];
}

}  // namespace

std::array<complex_t, 3> ramanujan_ring_deriv(const GRing& values, int order) {
  if (order < 0) throw std::invalid_argument("ramanujan_ring_deriv: order must be >= 0");
  // d^k/dtau^k = (i pi)^{-k} D^k, and (1/i)^k = (-i)^k
  complex_t inv_ipi_k = std::pow(kPi, -order);
  switch (order % 4) {
    case 1: inv_ipi_k *= complex_t(0.0, -1.0); break;
    case 2: inv_ipi_k *= -1.0; break;
    case 3: inv_ipi_k *= complex_t(0.0, 1.0); break;
    default: break;
  }
  std::array<complex_t, 3> out;
  const Mono bases[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (int i = 0; i < 3; ++i) {
    Poly p{{bases[i], Rational(1)}};
    for (int k = 0; k < order; ++k) p = derive(p);
    out[i] = poly_eval(p, values) * inv_ipi_k;
  }
  return out;
}

complex_t G_recursive(int n, complex_t tau) {
  if (n < 8 || n % 2 != 0)
    throw std::invalid_argument("G_recursive: n must be even and >= 8 (use G for lower orders)");
  const GRing g{G(2, tau), G(4, tau), G(6, tau)};
  return poly_eval(G_poly(n), g);
}

SigmaValue sigma(int n, int m, complex_t tau) {
  require_even_orders(n, m);
  if (n == 2 && m == 0)
    throw divergent_sum_error("sigma_2^(0) is divergent; its role appears only through log|eta|");
  if (!(tau.imag() > 0.0)) throw std::invalid_argument("sigma: Im(tau) must be > 0");
  const TauReduction red = reduce_tau(tau);
  const complex_t at_reduced =
      (m >= n) ? sigma_polynomial(n, m, red.tau) : sigma_hyper(n, m, red.tau);
  const complex_t val = unwind_all(at_reduced, n, m, n == 2, red.steps);
  return {val, n, m, tau, n == 2 ? Convergence::eisenstein_order : Convergence::absolute};
}

SigmaValue regularize(const SigmaValue& v, bool* no_op_warning) {
  if (no_op_warning) *no_op_warning = false;
  if (v.convergence == Convergence::regularized) return v;
  if (v.n != 2) {
    if (no_op_warning) *no_op_warning = true;
    return v;  // absolute sums need no regularization
  }
  if (v.convergence != Convergence::eisenstein_order)
    throw std::invalid_argument("regularize: need an Eisenstein-order n = 2 value");
  SigmaValue out = v;
  out.value -= 2.0 * kPi / (v.m * v.tau.imag());
  out.convergence = Convergence::regularized;
  return out;
}

SigmaValue transform_tau_inverse(const SigmaValue& v) {
  if (v.convergence == Convergence::divergent)
    throw std::invalid_argument("transform_tau_inverse: divergent value");
  SigmaValue out = v;
  out.tau = -1.0 / v.tau;
  const complex_t t = v.tau;
  const complex_t tm = std::pow(t, v.m);
  if (v.convergence == Convergence::eisenstein_order) {
    const complex_t bracket = 1.0 - std::pow(std::abs(t), v.m) / tm;
    out.value = tm / std::pow(std::abs(t), v.m - 2) *
                (v.value - 2.0 * kPi / (v.m * t.imag()) * bracket);
  } else {
    out.value = tm / std::pow(std::abs(t), v.m - v.n) * v.value;
  }
  return out;
}

// ---- closed-form table ----------------------------------------------------

namespace {

double parse30(const char* s) { return std::strtod(s, nullptr); }

constexpr Table1Entry kTable1[24] = {
    {CanonicalLattice::square, 2, 2, "0", "0"},
    {CanonicalLattice::square, 4, 4, "Gamma(1/4)^8/(960 pi^2)", "3.151212002153897538217689942249"},
    {CanonicalLattice::square, 2, 4, "Gamma(1/4)^8/(384 pi^3)", "2.507654834366505624698728217906"},
    {CanonicalLattice::square, 6, 6, "0", "0"},
    {CanonicalLattice::square, 4, 6, "0", "0"},
    {CanonicalLattice::square, 2, 6, "0", "0"},
    {CanonicalLattice::rect2, 2, 2, "Gamma(1/4)^4/(32 pi)", "1.718796454505093206872523944953"},
    {CanonicalLattice::rect2, 4, 4, "11 Gamma(1/4)^8/(15360 pi^2)", "2.166458251480804557524661835296"},
    {CanonicalLattice::rect2, 2, 4, "Gamma(1/4)^8/(384 pi^3)", "2.507654834366505624698728217906"},
    {CanonicalLattice::rect2, 6, 6, "Gamma(1/4)^12/(81920 pi^3)", "2.031109506261005710001622709981"},
    {CanonicalLattice::rect2, 4, 6, "Gamma(1/4)^12/(24576 pi^4)", "2.155074119215853313061397536452"},
    {CanonicalLattice::rect2, 2, 6, "Gamma(1/4)^12/(6144 pi^5)", "2.743925590420924788230561256467"},
    {CanonicalLattice::hex, 2, 2, "0", "0"},
    {CanonicalLattice::hex, 4, 4, "0", "0"},
    {CanonicalLattice::hex, 2, 4, "0", "0"},
    {CanonicalLattice::hex, 6, 6, "Gamma(1/3)^18/(8960 pi^6)", "5.863031693425401597970213443838"},
    {CanonicalLattice::hex, 4, 6, "sqrt(3) Gamma(1/3)^18/(5120 pi^7)", "5.656802877878574768954852046002"},
    {CanonicalLattice::hex, 2, 6, "Gamma(1/3)^18/(1024 pi^8)", "5.197931470466015085141221526000"},
    {CanonicalLattice::rect_sqrt3, 2, 2, "Gamma(1/3)^6/(16 2^(2/3) pi^2)", "1.474585992371192480352852395605"},
    {CanonicalLattice::rect_sqrt3, 4, 4, "Gamma(1/3)^12/(512 2^(1/3) pi^4)", "2.174403848897334527865886577075"},
    {CanonicalLattice::rect_sqrt3, 2, 4, "sqrt(3) Gamma(1/3)^12/(256 2^(1/3) pi^5)", "2.397623344426921339170738763712"},
    {CanonicalLattice::rect_sqrt3, 6, 6, "11 Gamma(1/3)^18/(286720 pi^6)", "2.015417144614981799302260871319"},
    {CanonicalLattice::rect_sqrt3, 4, 6, "3 sqrt(3) Gamma(1/3)^18/(40960 pi^7)", "2.121301079204465538358069517251"},
    {CanonicalLattice::rect_sqrt3, 2, 6, "Gamma(1/3)^18/(2048 pi^8)", "2.598965735233007542570610763000"},
};

}  // namespace

double Table1Entry::principal() const { return parse30(principal30); }

double Table1Entry::extraordinary() const {
  if (n != 2) return 0.0;
  return 2.0 * kPi / (m * canonical_tau(lattice).imag());
}

std::span<const Table1Entry> table1() { return {kTable1, 24}; }

ExactSigma sigma_exact(int n, int m, CanonicalLattice key) {
  require_even_orders(n, m);
  if (m < n) throw not_tabulated_error("sigma_exact: closed forms cover m >= n only");
  if (n == 2 && m == 0) throw divergent_sum_error("sigma_exact: sigma_2^(0) is divergent");

  // exact G2, G4, G6 at the key (G2 is the full Eisenstein-order value, as
  // the differential ring requires)
  GRing g{0.0, 0.0, 0.0};
  for (const auto& e : table1()) {
    if (e.lattice != key) continue;
    if (e.n == 2 && e.m == 2) g.g2 = e.full();
    if (e.n == 4 && e.m == 4) g.g4 = e.full();
    if (e.n == 6 && e.m == 6) g.g6 = e.full();
  }
  const complex_t tau = canonical_tau(key);

  Poly base;
  if (n == 2) base = {{{1, 0, 0}, Rational(1)}};
  else if (n == 4) base = {{{0, 1, 0}, Rational(1)}};
  else if (n == 6) base = {{{0, 0, 1}, Rational(1)}};
  else base = G_poly(n);

  const int K = (m - n) / 2;
  complex_t value = 0.0;
  std::ostringstream formula;
  formula << "sigma_" << n << "^(" << m << ")(" << canonical_name(key) << ") = ";
  Poly dk = base;
  for (int k = 0; k <= K; ++k) {
    Rational ratio(1);  // (n-1)!/(n+k-1)!
    for (int j = n; j <= n + k - 1; ++j) ratio /= Rational(j);
    const Rational ck = Rational::binomial(K, k) * ratio;
    // (2 i Im tau)^k (i pi)^{-k} = (2 Im tau / pi)^k, purely real
    const double scale = std::pow(2.0 * tau.imag() / kPi, k);
    value += ck.to_double() * scale * poly_eval(dk, g);
    if (k > 0) formula << " + ";
    formula << "(" << ck.str() << ")*(2 Im tau/pi)^" << k << "*[" << poly_str(dk) << "]";
    if (k < K) dk = derive(dk);
  }

  // prefer the tabulated closed form where one exists
  for (const auto& e : table1()) {
    if (e.lattice == key && e.n == n && e.m == m) {
      std::ostringstream f;
      f << e.formula;
      if (e.extraordinary() != 0.0) f << " + 2 pi/(" << m << " Im tau)";
      return {f.str(), value};
    }
  }
  return {formula.str(), value};
}

}  // namespace latsum
