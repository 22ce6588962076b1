#include "jobconfig.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "latsum/modular.hpp"

namespace latsum::cli {

namespace {

std::string fmt_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

void JobConfig::resolve_lattice() {
  if (!lattice) return;
  const std::string& k = *lattice;
  if (k == "square") tau = canonical_tau(CanonicalLattice::square);
  else if (k == "hex") tau = canonical_tau(CanonicalLattice::hex);
  else if (k == "rect2") tau = canonical_tau(CanonicalLattice::rect2);
  else if (k == "rectsqrt3") tau = canonical_tau(CanonicalLattice::rect_sqrt3);
  else throw std::invalid_argument("unknown lattice keyword: " + k);
}

std::string JobConfig::canonical_text() const {
  std::ostringstream os;
  os << "command=" << command;
  if (lattice) os << " lattice=" << *lattice;
  os << " tau=" << fmt_double(tau.real()) << "," << fmt_double(tau.imag());
  os << " a=" << fmt_double(a);
  if (n >= 0) os << " n=" << n;
  if (m >= 0) os << " m=" << m;
  if (l >= 0) os << " l=" << l;
  if (!u.empty()) {
    os << " u=";
    for (size_t i = 0; i < u.size(); ++i) os << (i ? "," : "") << fmt_double(u[i]);
  }
  os << " set=" << set;
  os << " radius=" << fmt_double(radius);
  os << " kmax=" << fmt_double(k_max);
  os << " p1=" << p1 << " p2=" << p2;
  os << " regularize=" << (regularized ? 1 : 0);
  os << " verify-oracle=" << (verify_oracle ? 1 : 0);
  os << " format=" << format;
  if (!out.empty()) os << " out=" << out;
  os << " suite=" << suite;
  os << " reciprocal=" << (reciprocal ? 1 : 0);
  return os.str();
}

JobConfig JobConfig::parse_canonical(const std::string& text) {
  JobConfig cfg;
  cfg.set = "";
  std::istringstream is(text);
  std::string kv;
  while (is >> kv) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad config token: " + kv);
    const std::string key = kv.substr(0, eq);
    const std::string val = kv.substr(eq + 1);
    if (key == "command") cfg.command = val;
    else if (key == "lattice") cfg.lattice = val;
    else if (key == "tau") {
      double re = 0, im = 0;
      if (std::sscanf(val.c_str(), "%lf,%lf", &re, &im) != 2)
        throw std::invalid_argument("bad tau: " + val);
      cfg.tau = {re, im};
    } else if (key == "a") cfg.a = std::stod(val);
    else if (key == "n") cfg.n = std::stoi(val);
    else if (key == "m") cfg.m = std::stoi(val);
    else if (key == "l") cfg.l = std::stoi(val);
    else if (key == "u") {
      std::istringstream us(val);
      std::string tok;
      while (std::getline(us, tok, ',')) cfg.u.push_back(std::stod(tok));
    } else if (key == "set") cfg.set = val;
    else if (key == "radius") cfg.radius = std::stod(val);
    else if (key == "kmax") cfg.k_max = std::stod(val);
    else if (key == "p1") cfg.p1 = std::stoll(val);
    else if (key == "p2") cfg.p2 = std::stoll(val);
    else if (key == "regularize") cfg.regularized = val != "0";
    else if (key == "verify-oracle") cfg.verify_oracle = val != "0";
    else if (key == "format") cfg.format = val;
    else if (key == "out") cfg.out = val;
    else if (key == "suite") cfg.suite = val;
    else if (key == "reciprocal") cfg.reciprocal = val != "0";
    else throw std::invalid_argument("unknown config key: " + key);
  }
  if (cfg.set.empty()) cfg.set = "gamma";
  return cfg;
}

}  // namespace latsum::cli
