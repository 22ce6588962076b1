#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace latsum::cli {

/// Parsed invocation of one CLI command. canonical_text() round-trips through
/// parse_canonical() to an identical string, which pins the config grammar.
struct JobConfig {
  std::string command;                    // sigma | S | eta | table1 | verify | points
  std::optional<std::string> lattice;     // square | hex | rect2 | rectsqrt3
  std::complex<double> tau{0.0, 1.0};
  double a = 1.0;
  int n = -1, m = -1, l = -1;
  std::vector<double> u;                  // evaluation grid for S
  std::string set = "gamma";              // gamma|X|Y|M|K|M1|M2|M3|Wb|Wc|Wd|K1|K2
  double radius = 200.0;                  // sigma oracle truncation
  double k_max = 2000.0;                  // S oracle truncation
  long long p1 = 100000, p2 = 300;        // Eisenstein-order bounds
  bool regularized = true;                // default on for n = 2
  bool verify_oracle = false;
  std::string format = "text";            // text | json | csv
  std::string out;                        // output file; stdout when empty
  std::string suite = "all";              // verify subcommand
  bool reciprocal = false;                // points subcommand

  [[nodiscard]] std::string canonical_text() const;
  static JobConfig parse_canonical(const std::string& text);

  /// tau/a resolved from the lattice keyword when one is given.
  void resolve_lattice();
};

}  // namespace latsum::cli
