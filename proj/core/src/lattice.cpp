#include "latsum/lattice.hpp"

#include <algorithm>
#include <tuple>

namespace latsum {

TauReduction reduce_tau(complex_t tau) {
  if (!(tau.imag() > 0.0)) throw std::invalid_argument("reduce_tau: Im(tau) must be > 0");
  if (!(std::abs(tau.real()) < 1e15) || !std::isfinite(tau.imag()))
    throw std::invalid_argument("reduce_tau: tau out of range");
  TauReduction red;
  complex_t cur = tau;
  for (int iter = 0; iter < 64; ++iter) {
    const auto k = static_cast<long long>(std::llround(cur.real()));
    if (k != 0) {
      TauStep st{TauStepKind::T, -k, cur, cur - static_cast<double>(k)};
      cur = st.tau_after;
      red.steps.push_back(st);
    }
    // Strict test with a small guard keeps boundary points (|tau| = 1) fixed
    // instead of cycling between equivalent representatives.
    if (std::norm(cur) < 1.0 - 1e-14) {
      TauStep st{TauStepKind::S, 0, cur, -1.0 / cur};
      cur = st.tau_after;
      red.steps.push_back(st);
      continue;
    }
    red.tau = cur;
    return red;
  }
  throw std::runtime_error("reduce_tau: no fundamental-domain representative after 64 moves");
}

ReciprocalBasis reciprocal_basis(const LatticeSpec& spec) {
  const complex_t c = complex_t(0.0, 2.0 * M_PI) / (spec.a * spec.tau.imag());
  return {-c * spec.tau, c};
}

namespace {

struct IndexedPoint {
  long long p1, p2;
  LatticePoint pt;
};

std::vector<LatticePoint> sorted_points(const std::vector<IndexedPoint>& raw) {
  std::vector<IndexedPoint> pts = raw;
  std::sort(pts.begin(), pts.end(), [](const IndexedPoint& a, const IndexedPoint& b) {
    if (a.pt.r != b.pt.r) return a.pt.r < b.pt.r;
    if (a.pt.phi != b.pt.phi) return a.pt.phi < b.pt.phi;
    if (a.pt.x != b.pt.x) return a.pt.x < b.pt.x;
    if (a.pt.y != b.pt.y) return a.pt.y < b.pt.y;
    // exact integer tie break so equal-float points still order reproducibly
    return std::tie(a.p2, a.p1) < std::tie(b.p2, b.p1);
  });
  std::vector<LatticePoint> out;
  out.reserve(pts.size());
  for (const auto& ip : pts) out.push_back(ip.pt);
  return out;
}

}  // namespace

std::vector<LatticePoint> direct_points(const LatticeSpec& spec, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("direct_points: radius must be > 0");
  std::vector<IndexedPoint> raw;
  detail::scan_unit_lattice(spec.tau, radius / spec.a, [&](long long p1, long long p2, complex_t z) {
    raw.push_back({p1, p2, LatticePoint::from_complex(spec.a * z)});
  });
  return sorted_points(raw);
}

std::vector<LatticePoint> reciprocal_points(const LatticeSpec& spec, double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("reciprocal_points: radius must be > 0");
  const complex_t c = complex_t(0.0, 2.0 * M_PI) / (spec.a * spec.tau.imag());
  std::vector<IndexedPoint> raw;
  detail::scan_unit_lattice(spec.tau, radius / std::abs(c), [&](long long p1, long long p2, complex_t z) {
    raw.push_back({p1, p2, LatticePoint::from_complex(c * z)});
  });
  return sorted_points(raw);
}

std::vector<LatticePoint> eisenstein_ordered_rows(complex_t tau, long long p1_max, long long p2_max) {
  std::vector<LatticePoint> out;
  out.reserve(static_cast<size_t>(2 * p2_max + 1) * static_cast<size_t>(2 * p1_max + 1));
  scan_eisenstein_rows(tau, p1_max, p2_max,
                       [&](complex_t z) { out.push_back(LatticePoint::from_complex(z)); });
  return out;
}

}  // namespace latsum
