#include "commands.hpp"

#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "latsum/cylsum.hpp"
#include "latsum/displaced.hpp"
#include "latsum/eisenstein.hpp"
#include "latsum/errors.hpp"
#include "latsum/lseries.hpp"
#include "latsum/modular.hpp"
#include "latsum/oracle.hpp"

namespace latsum::cli {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

json cjson(complex_t z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

LatticeSpec spec_of(const JobConfig& cfg) { return LatticeSpec(cfg.tau, cfg.a); }

void require_orders(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

// closed-form string for the Lorenz/Hecke m = 0 values
std::string hecke_formula(CanonicalLattice key, int s) {
  std::ostringstream os;
  switch (key) {
    case CanonicalLattice::square: os << "4 zeta(" << s << ") beta(" << s << ")"; break;
    case CanonicalLattice::rect2:
      os << "2 (1 - 2^-" << s << " + 2^(1-" << 2 * s << ")) zeta(" << s << ") beta(" << s << ")";
      break;
    case CanonicalLattice::hex: os << "6 zeta(" << s << ") g(" << s << ")"; break;
    case CanonicalLattice::rect_sqrt3:
      os << "2 (1 + 2^(1-" << 2 * s << ")) zeta(" << s << ") g(" << s << ")";
      break;
  }
  return os.str();
}

}  // namespace

json cmd_sigma(const JobConfig& cfg) {
  require_orders(cfg.n >= 2, "sigma: --n is required (even, >= 2)");
  require_orders(cfg.m >= 0, "sigma: --m is required (even, >= 0)");
  const SigmaValue raw = sigma(cfg.n, cfg.m, cfg.tau);
  const bool conditional = cfg.n == 2;
  const SigmaValue out = (conditional && cfg.regularized) ? regularize(raw) : raw;

  json j{{"schema", "latsum/1"},
         {"command", "sigma"},
         {"tau", cjson(cfg.tau)},
         {"a", cfg.a},
         {"n", cfg.n},
         {"m", cfg.m},
         {"value", cjson(out.value)},
         {"convergence", std::string(to_string(out.convergence))}};
  if (cfg.lattice) j["lattice"] = *cfg.lattice;
  if (conditional) {
    j["extraordinary"] = cjson(complex_t(2.0 * kPi / (cfg.m * cfg.tau.imag()), 0.0));
    j["eisenstein_order_value"] = cjson(raw.value);
  }
  if (auto key = canonical_from_tau(cfg.tau)) {
    if (cfg.m >= cfg.n) {
      auto ex = sigma_exact(cfg.n, cfg.m, *key);
      j["formula"] = ex.formula;
      j["closed_form"] = cjson(ex.value);
    } else if (cfg.m == 0) {
      j["formula"] = hecke_formula(*key, cfg.n / 2);
    }
  }
  if (cfg.verify_oracle) {
    json o;
    if (cfg.n >= 4) {
      auto rep = oracle::sigma_direct(LatticeSpec(cfg.tau, 1.0), cfg.radius, cfg.n, cfg.m);
      o = {{"method", "direct"},
           {"value", cjson(rep.value)},
           {"radius", rep.truncation},
           {"tail_estimate", rep.tail_estimate},
           {"tail_is_bound", rep.tail_is_bound},
           {"terms", rep.terms_used},
           {"within_tail", std::abs(rep.value - out.value) <= rep.tail_estimate}};
    } else {
      auto rep = oracle::sigma_eisenstein_order(cfg.tau, cfg.n, cfg.m, cfg.p1, cfg.p2);
      o = {{"method", "eisenstein_rows"},
           {"value", cjson(rep.value)},
           {"p1", rep.p1},
           {"p2", rep.p2},
           {"trend_gap", std::abs(rep.value - raw.value)},
           {"tail_estimate", rep.tail_estimate},
           {"tail_is_bound", rep.tail_is_bound},
           {"terms", rep.terms_used}};
    }
    j["oracle"] = o;
  }
  return j;
}

json cmd_S(const JobConfig& cfg) {
  require_orders(cfg.l >= 0, "S: --l is required (>= 0)");
  require_orders(cfg.m >= 0, "S: --m is required (even, >= 0)");
  require_orders(cfg.n >= 1, "S: --n is required");

  json j{{"schema", "latsum/1"}, {"command", "S"}, {"set", cfg.set},
         {"tau", cjson(cfg.tau)}, {"a", cfg.a},
         {"l", cfg.l}, {"m", cfg.m}, {"n", cfg.n}};
  if (cfg.lattice) j["lattice"] = *cfg.lattice;

  const bool hex = cfg.lattice && *cfg.lattice == "hex";
  std::optional<LatticeCombination> comb;
  if (cfg.set == "gamma") {
    // origin-centered lattice handled below
  } else if (cfg.set == "K1" || cfg.set == "K2") {
    hex_K_sublattice(cfg.set == "K1" ? 1 : 2, cfg.a);  // throws unsupported_set_error
  } else if (cfg.set == "X") comb = square_X(cfg.a);
  else if (cfg.set == "Y") comb = square_Y(cfg.a);
  else if (cfg.set == "M") comb = hex ? hex_M(cfg.a) : square_M(cfg.a);
  else if (cfg.set == "M1") comb = hex_M_sublattice(1, cfg.a);
  else if (cfg.set == "M2") comb = hex_M_sublattice(2, cfg.a);
  else if (cfg.set == "M3") comb = hex_M_sublattice(3, cfg.a);
  else if (cfg.set == "K") comb = hex_K(cfg.a);
  else if (cfg.set == "Wb" || cfg.set == "Wc" || cfg.set == "Wd")
    throw std::invalid_argument("S over direct-lattice Wyckoff sets has no closed form here; "
                                "use the sigma command for those sets");
  else throw std::invalid_argument("unknown point set: " + cfg.set);

  const RadialExpression expr =
      comb ? S_over(*comb, cfg.l, cfg.m, cfg.n)
           : (cfg.m == 0 ? S_zero(cfg.l, cfg.n, spec_of(cfg)) : S_even(cfg.l, cfg.m, cfg.n, spec_of(cfg)));

  j["formula"] = to_string(expr);
  j["zero_by_symmetry"] = expr.zero_by_symmetry;
  json terms = json::array();
  for (const auto& t : expr.terms) {
    terms.push_back({{"coeff", cjson(t.coeff)}, {"power", t.power}, {"log", t.with_log}});
  }
  j["terms"] = terms;
  if (!cfg.u.empty()) {
    json vals = json::array();
    for (double u : cfg.u) vals.push_back({{"u", u}, {"value", cjson(evaluate(expr, u))}});
    j["values"] = vals;
  }
  if (cfg.verify_oracle && !cfg.u.empty()) {
    json o = json::array();
    for (double u : cfg.u) {
      const auto rep = comb ? oracle::S_direct(*comb, cfg.k_max, cfg.l, cfg.m, cfg.n, u)
                            : oracle::S_direct(spec_of(cfg), cfg.k_max, cfg.l, cfg.m, cfg.n, u);
      o.push_back({{"u", u},
                   {"value", cjson(rep.value)},
                   {"k_max", rep.truncation},
                   {"tail_estimate", rep.tail_estimate},
                   {"within_tail", std::abs(rep.value - evaluate(expr, u)) <= rep.tail_estimate}});
    }
    j["oracle"] = o;
  }
  return j;
}

json cmd_eta(const JobConfig& cfg) {
  const EtaValue e = eta_value(cfg.tau);
  const WeberQuotients w = weber_quotients(cfg.tau);
  const ThetaConstants t = theta_constants(cfg.tau);
  json j{{"schema", "latsum/1"}, {"command", "eta"},
         {"tau", cjson(cfg.tau)},
         {"eta", cjson(e.value)},
         {"exact", e.is_exact},
         {"weber", {{"f", cjson(w.f)}, {"f1", cjson(w.f1)}, {"f2", cjson(w.f2)}}},
         {"theta", {{"t2", cjson(t.t2)}, {"t3", cjson(t.t3)}, {"t4", cjson(t.t4)}}}};
  if (cfg.lattice) j["lattice"] = *cfg.lattice;
  return j;
}

json cmd_table1(const JobConfig&) {
  json entries = json::array();
  double max_rel = 0.0;
  for (const auto& e : table1()) {
    const complex_t fourier = sigma(e.n, e.m, canonical_tau(e.lattice)).value;
    const double closed = e.full();
    const double scale = std::max(1.0, std::abs(closed));
    const double rel = std::abs(fourier - closed) / scale;
    max_rel = std::max(max_rel, rel);
    entries.push_back({{"lattice", canonical_name(e.lattice)},
                       {"n", e.n},
                       {"m", e.m},
                       {"formula", e.formula},
                       {"closed", closed},
                       {"extraordinary", e.extraordinary()},
                       {"fourier", cjson(fourier)},
                       {"abs_diff", std::abs(fourier - closed)},
                       {"rel_diff", rel}});
  }
  return json{{"schema", "latsum/1"},
              {"command", "table1"},
              {"entries", entries},
              {"max_rel_diff", max_rel},
              {"passed", max_rel <= 1e-12}};
}

json cmd_points(const JobConfig& cfg) {
  const auto pts = cfg.reciprocal ? reciprocal_points(spec_of(cfg), cfg.radius)
                                  : direct_points(spec_of(cfg), cfg.radius);
  json arr = json::array();
  for (const auto& p : pts) arr.push_back({{"x", p.x}, {"y", p.y}, {"r", p.r}, {"phi", p.phi}});
  return json{{"schema", "latsum/1"},
              {"command", "points"},
              {"tau", cjson(cfg.tau)},
              {"a", cfg.a},
              {"reciprocal", cfg.reciprocal},
              {"radius", cfg.radius},
              {"count", pts.size()},
              {"points", arr}};
}

// ---- verify suites ---------------------------------------------------------

namespace {

struct Check {
  std::string name;
  double err;
  double tol;
  [[nodiscard]] bool pass() const { return err <= tol; }
};

void verify_modular(std::vector<Check>& out) {
  std::mt19937 rng(101);
  std::uniform_real_distribution<double> re(-0.5, 0.5), im(0.8, 2.5);
  double e_weber = 0, e_eta = 0, e_theta = 0;
  for (int t = 0; t < 20; ++t) {
    const complex_t tau{re(rng), im(rng)};
    const auto w = weber_quotients(tau);
    e_weber = std::max(e_weber, std::abs(w.f * w.f1 * w.f2 - std::sqrt(2.0)) / std::sqrt(2.0));
    e_weber = std::max(e_weber, std::abs(std::pow(w.f, 8) - std::pow(w.f1, 8) - std::pow(w.f2, 8)) /
                                    std::abs(std::pow(w.f, 8)));
    const complex_t e = dedekind_eta(tau);
    e_eta = std::max(e_eta, std::abs(dedekind_eta(tau + 1.0) - std::polar(1.0, kPi / 12.0) * e) / std::abs(e));
    e_eta = std::max(e_eta,
                     std::abs(dedekind_eta(-1.0 / tau) - std::sqrt(complex_t(0.0, -1.0) * tau) * e) /
                         std::abs(e));
    const auto th = theta_constants(tau);
    e_theta = std::max(e_theta, std::abs(2.0 * std::pow(e, 3) - th.t2 * th.t3 * th.t4) /
                                    std::abs(2.0 * std::pow(e, 3)));
  }
  out.push_back({"modular/weber_identities", e_weber, 1e-12});
  out.push_back({"modular/eta_functional_equations", e_eta, 1e-12});
  out.push_back({"modular/theta_product_2eta3", e_theta, 1e-12});
  double e_table = 0;
  for (auto key : {CanonicalLattice::square, CanonicalLattice::rect2, CanonicalLattice::hex,
                   CanonicalLattice::rect_sqrt3}) {
    const complex_t got = dedekind_eta(canonical_tau(key));
    const complex_t want = special_value(key, SpecialConstant::eta);
    e_table = std::max(e_table, std::abs(got - want) / std::abs(want));
  }
  out.push_back({"modular/eta_special_values", e_table, 1e-13});
}

void verify_eisenstein(std::vector<Check>& out) {
  double e_tbl = 0;
  for (const auto& e : table1()) {
    const complex_t v = sigma(e.n, e.m, canonical_tau(e.lattice)).value;
    e_tbl = std::max(e_tbl, std::abs(v - e.full()) / std::max(1.0, std::abs(e.full())));
  }
  out.push_back({"eisenstein/table1", e_tbl, 1e-12});

  std::mt19937 rng(103);
  std::uniform_real_distribution<double> re(-0.5, 0.5), im(0.6, 3.0);
  double e_reg = 0, e_per = 0;
  for (int t = 0; t < 10; ++t) {
    const complex_t tau{re(rng), im(rng)};
    for (int m : {2, 4, 6, 8}) {
      const complex_t lhs = regularize(sigma(2, m, tau)).value;
      const complex_t rhs = std::pow(std::abs(tau), m - 2) / std::pow(tau, m) *
                            regularize(sigma(2, m, -1.0 / tau)).value;
      e_reg = std::max(e_reg, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
    }
    e_per = std::max(e_per, std::abs(sigma(4, 8, tau + 1.0).value - sigma(4, 8, tau).value) /
                                std::abs(sigma(4, 8, tau).value));
  }
  out.push_back({"eisenstein/regularized_inversion_law", e_reg, 1e-10});
  out.push_back({"eisenstein/tau_periodicity", e_per, 1e-12});

  double e_sym = 0;
  for (auto [n, m] : {std::pair{2, 2}, {2, 6}, {4, 2}}) {
    SigmaValue v = sigma(n, m, {0.0, 1.0});
    if (n == 2) v = regularize(v);
    e_sym = std::max(e_sym, std::abs(v.value));
  }
  for (auto [n, m] : {std::pair{2, 4}, {4, 4}, {6, 2}}) {
    SigmaValue v = sigma(n, m, canonical_tau(CanonicalLattice::hex));
    if (n == 2) v = regularize(v);
    e_sym = std::max(e_sym, std::abs(v.value));
  }
  out.push_back({"eisenstein/rotational_zeros", e_sym, 1e-12});

  double e_spec = 0;
  for (int n : {2, 4}) {
    const complex_t tau{0.21, 1.3};
    const complex_t g = G_deriv(n, 0, tau), g1 = G_deriv(n, 1, tau), g2 = G_deriv(n, 2, tau);
    const complex_t w2 = g + 2.0 * complex_t(0.0, tau.imag()) / static_cast<double>(n) * g1;
    const complex_t w4 = g + 4.0 * complex_t(0.0, tau.imag()) / static_cast<double>(n) * g1 -
                         4.0 * tau.imag() * tau.imag() / (n * (n + 1.0)) * g2;
    e_spec = std::max(e_spec, std::abs(sigma(n, n + 2, tau).value - w2) / std::abs(w2));
    e_spec = std::max(e_spec, std::abs(sigma(n, n + 4, tau).value - w4) / std::abs(w4));
  }
  out.push_back({"eisenstein/specialized_m_n2_n4_forms", e_spec, 1e-13});

  double e_real = 0;
  for (auto [n, m] : {std::pair{2, 4}, {4, 0}, {6, 2}}) {
    const SigmaValue v = sigma(n, m, {0.0, 1.7});
    e_real = std::max(e_real, std::abs(v.value.imag()) / std::max(1.0, std::abs(v.value)));
  }
  out.push_back({"eisenstein/rectangular_reality", e_real, 1e-12});

  double e_orc = 0;
  for (auto [n, m] : {std::pair{4, 4}, {6, 2}}) {
    auto rep = oracle::sigma_direct(LatticeSpec({0.3, 1.2}, 1.0), 120.0, n, m);
    const double gap = std::abs(rep.value - sigma(n, m, {0.3, 1.2}).value);
    e_orc = std::max(e_orc, gap / rep.tail_estimate);
  }
  out.push_back({"eisenstein/oracle_within_tail", e_orc, 1.0});
}

void verify_cylsum(std::vector<Check>& out) {
  const LatticeSpec sq({0.0, 1.0}, 1.0);
  const LatticeSpec gen({0.3, 1.2}, 1.0);
  double e_orc = 0;
  const struct {
    int l, m, n;
  } cases[] = {{2, 0, 2}, {1, 0, 5}, {2, 2, 2}, {2, 4, 2}, {1, 4, 3}, {2, 4, 4}, {2, 6, 2}};
  for (const auto& spec : {sq, gen}) {
    for (const auto& c : cases) {
      auto expr = (c.m == 0) ? S_zero(c.l, c.n, spec) : S_even(c.l, c.m, c.n, spec);
      auto rep = oracle::S_direct(spec, 800.0, c.l, c.m, c.n, 0.1);
      e_orc = std::max(e_orc, std::abs(evaluate(expr, 0.1) - rep.value) / rep.tail_estimate);
    }
  }
  out.push_back({"cylsum/oracle_within_tail", e_orc, 1.0});

  double e_chain = 0;
  for (int m : {2, 4, 6}) {
    auto s = S_even(2, m, 2, gen);
    auto a = recur_apply(Recurrence::R3, recur_apply(Recurrence::R4, s));  // (2,m,4)
    auto d = S_even(2, m, 4, gen);
    for (const auto& t : d.terms) {
      const complex_t c = a.coeff(t.power, t.with_log);
      e_chain = std::max(e_chain, std::abs(c - t.coeff) / std::max(1e-18, std::abs(t.coeff)));
    }
  }
  out.push_back({"cylsum/recurrence_closure", e_chain, 1e-12});

  double e_zero = S_even(2, 3, 2, sq).empty() && S_even(6, 4, 2, sq).empty() ? 0.0 : 1.0;
  out.push_back({"cylsum/identically_zero_orders", e_zero, 0.5});

  double e_scale = 0;
  auto e1 = S_zero(1, 5, gen);
  auto e2 = S_zero(1, 5, LatticeSpec(gen.tau, 2.0 * gen.a));
  e_scale = std::abs(evaluate(e2, 0.26) - 32.0 * evaluate(e1, 0.13)) / std::abs(32.0 * evaluate(e1, 0.13));
  out.push_back({"cylsum/scale_covariance", e_scale, 1e-12});
}

void verify_displaced(std::vector<Check>& out) {
  // finite-disk multiset check for the square M set
  std::map<std::pair<long long, long long>, int> ms;
  scan_combination(square_M(1.0), 10.0 * 2.0 * kPi, [&](int w, complex_t z) {
    ms[{std::llround(z.real() * 1e4), std::llround(z.imag() * 1e4)}] += w;
  });
  std::erase_if(ms, [](const auto& kv) { return kv.second == 0; });
  bool ok = true;
  for (const auto& [key, v] : ms) {
    if (v != 1) ok = false;
    const double x = static_cast<double>(key.first) / 1e4 / kPi;
    const double y = static_cast<double>(key.second) / 1e4 / kPi;
    // every survivor sits on 2 pi (h + 1/2, k + 1/2); x, y carry the
    // quantization granularity
    ok = ok && std::abs(std::remainder(x - 1.0, 2.0)) < 2e-4 &&
         std::abs(std::remainder(y - 1.0, 2.0)) < 2e-4;
  }
  out.push_back({"displaced/square_M_multiset", ok ? 0.0 : 1.0, 0.5});

  const double g8 = std::pow(3.625609908221908311930685155868, 8);
  const double e_wd4 = std::abs(sigma_over(square_wyckoff_d(1.0), 4, 4, true).real() +
                                g8 / (192.0 * kPi * kPi)) /
                       (g8 / (192.0 * kPi * kPi));
  const double e_wd2 = std::abs(sigma_over(square_wyckoff_d(1.0), 2, 4, true).real() +
                                g8 / (128.0 * kPi * kPi * kPi)) /
                       (g8 / (128.0 * kPi * kPi * kPi));
  out.push_back({"displaced/wyckoff_d_closed_forms", std::max(e_wd4, e_wd2), 1e-12});

  auto sm = S_over(square_M(1.0), 1, 4, 5);
  const double want_u7 = g8 / (15.0 * 32768.0 * std::pow(kPi, 3));
  out.push_back({"displaced/SM145_u7_coefficient",
                 std::abs(sm.coeff(7, false).real() - want_u7) / want_u7, 1e-12});

  auto whole = S_over(hex_M(1.0), 2, 6, 2);
  auto sub = S_over(hex_M_sublattice(2, 1.0), 2, 6, 2);
  const double e_sub =
      std::abs(evaluate(whole, 0.1) - 3.0 * evaluate(sub, 0.1)) / std::abs(evaluate(whole, 0.1));
  out.push_back({"displaced/hexM_sublattice_symmetry", e_sub, 1e-12});
}

}  // namespace

json cmd_verify(const JobConfig& cfg) {
  std::vector<Check> checks;
  const std::string& s = cfg.suite;
  if (s == "modular" || s == "all") verify_modular(checks);
  if (s == "eisenstein" || s == "all") verify_eisenstein(checks);
  if (s == "cylsum" || s == "all") verify_cylsum(checks);
  if (s == "displaced" || s == "all") verify_displaced(checks);
  if (checks.empty()) throw std::invalid_argument("unknown verify suite: " + s);
  json arr = json::array();
  bool passed = true;
  for (const auto& c : checks) {
    passed = passed && c.pass();
    arr.push_back({{"name", c.name}, {"max_err", c.err}, {"tol", c.tol}, {"pass", c.pass()}});
  }
  return json{{"schema", "latsum/1"}, {"command", "verify"}, {"suite", s},
              {"checks", arr}, {"passed", passed}};
}

// ---- rendering --------------------------------------------------------------

namespace {

void flatten(const json& j, const std::string& prefix, std::ostringstream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
  } else if (j.is_array()) {
    size_t i = 0;
    for (const auto& v : j) flatten(v, prefix + "[" + std::to_string(i++) + "]", os);
  } else {
    os << prefix << "," << j.dump() << "\n";
  }
}

std::string fmt_c(const json& c) {
  std::ostringstream os;
  os.precision(17);
  os << c["re"].get<double>();
  const double im = c["im"].get<double>();
  if (im != 0.0) os << (im > 0 ? " + " : " - ") << std::abs(im) << "i";
  return os.str();
}

}  // namespace

std::string render_csv(const json& report) {
  std::ostringstream os;
  os << "key,value\n";
  flatten(report, "", os);
  return os.str();
}

std::string render_text(const json& report) {
  std::ostringstream os;
  os.precision(15);
  const std::string cmd = report["command"];
  if (cmd == "sigma") {
    os << "sigma_" << report["n"].get<int>() << "^(" << report["m"].get<int>() << ") at tau = "
       << fmt_c(report["tau"]) << "\n";
    os << "  value       = " << fmt_c(report["value"]) << "  [" << report["convergence"].get<std::string>()
       << "]\n";
    if (report.contains("extraordinary"))
      os << "  extraordinary (removed by regularization) = " << fmt_c(report["extraordinary"]) << "\n";
    if (report.contains("formula"))
      os << "  closed form = " << report["formula"].get<std::string>() << "\n";
    if (report.contains("oracle")) {
      const auto& o = report["oracle"];
      os << "  oracle(" << o["method"].get<std::string>() << ") = " << fmt_c(o["value"]);
      if (o.contains("within_tail"))
        os << "  within_tail=" << (o["within_tail"].get<bool>() ? "yes" : "no");
      os << " tail=" << o["tail_estimate"].get<double>() << "\n";
    }
  } else if (cmd == "S") {
    os << "S_{" << report["l"].get<int>() << "," << report["m"].get<int>() << ","
       << report["n"].get<int>() << "} over set " << report["set"].get<std::string>() << "\n";
    os << "  S(u) = " << report["formula"].get<std::string>() << "\n";
    if (report.contains("values"))
      for (const auto& v : report["values"])
        os << "  u = " << v["u"].get<double>() << ": " << fmt_c(v["value"]) << "\n";
    if (report.contains("oracle"))
      for (const auto& o : report["oracle"])
        os << "  oracle u = " << o["u"].get<double>() << ": " << fmt_c(o["value"])
           << " within_tail=" << (o["within_tail"].get<bool>() ? "yes" : "no") << "\n";
  } else if (cmd == "eta") {
    os << "eta(" << fmt_c(report["tau"]) << ") = " << fmt_c(report["eta"])
       << (report["exact"].get<bool>() ? "  [exact table]" : "") << "\n";
    os << "  f = " << fmt_c(report["weber"]["f"]) << ", f1 = " << fmt_c(report["weber"]["f1"])
       << ", f2 = " << fmt_c(report["weber"]["f2"]) << "\n";
    os << "  theta2 = " << fmt_c(report["theta"]["t2"]) << ", theta3 = " << fmt_c(report["theta"]["t3"])
       << ", theta4 = " << fmt_c(report["theta"]["t4"]) << "\n";
  } else if (cmd == "table1") {
    os << "lattice  n  m   closed form value        fourier value            rel diff\n";
    for (const auto& e : report["entries"]) {
      char line[160];
      std::snprintf(line, sizeof line, "%-9s %d  %d   %-24.15g %-24.15g %.2e  %s\n",
                    e["lattice"].get<std::string>().c_str(), e["n"].get<int>(), e["m"].get<int>(),
                    e["closed"].get<double>(), e["fourier"]["re"].get<double>(),
                    e["rel_diff"].get<double>(), e["formula"].get<std::string>().c_str());
      os << line;
    }
    os << "max relative difference: " << report["max_rel_diff"].get<double>() << " -> "
       << (report["passed"].get<bool>() ? "PASS" : "FAIL") << "\n";
  } else if (cmd == "verify") {
    for (const auto& c : report["checks"]) {
      char line[160];
      std::snprintf(line, sizeof line, "%-44s max_err=%-12.3e tol=%-9.0e %s\n",
                    c["name"].get<std::string>().c_str(), c["max_err"].get<double>(),
                    c["tol"].get<double>(), c["pass"].get<bool>() ? "PASS" : "FAIL");
      os << line;
    }
    os << (report["passed"].get<bool>() ? "all invariants hold" : "FAILURES present") << "\n";
  } else if (cmd == "points") {
    os << "# x y r phi  (" << report["count"].get<size_t>() << " points)\n";
    for (const auto& p : report["points"])
      os << p["x"].get<double>() << " " << p["y"].get<double>() << " " << p["r"].get<double>()
         << " " << p["phi"].get<double>() << "\n";
  }
  return os.str();
}

int run(const JobConfig& cfg_in) {
  JobConfig cfg = cfg_in;
  try {
    cfg.resolve_lattice();
    json report;
    if (cfg.command == "sigma") report = cmd_sigma(cfg);
    else if (cfg.command == "S") report = cmd_S(cfg);
    else if (cfg.command == "eta") report = cmd_eta(cfg);
    else if (cfg.command == "table1") report = cmd_table1(cfg);
    else if (cfg.command == "verify") report = cmd_verify(cfg);
    else if (cfg.command == "points") report = cmd_points(cfg);
    else throw std::invalid_argument("unknown command: " + cfg.command);

    std::string text;
    if (cfg.format == "json") text = report.dump(2) + "\n";
    else if (cfg.format == "csv") text = render_csv(report);
    else text = render_text(report);
    if (cfg.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(cfg.out);
      if (!f) throw std::runtime_error("cannot open output file: " + cfg.out);
      f << text;
    }
    if (report.contains("passed") && !report["passed"].get<bool>()) return 1;
    return 0;
  } catch (const divergent_sum_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const unsupported_set_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace latsum::cli
