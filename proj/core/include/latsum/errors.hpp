#pragma once

#include <stdexcept>
#include <string>

namespace latsum {

/// Requested order pair is divergent (sigma_2^(0) has no finite value in any
/// summation scheme considered here).
class divergent_sum_error : public std::domain_error {
 public:
  explicit divergent_sum_error(const std::string& what) : std::domain_error(what) {}
};

/// No closed-form entry exists for the requested lattice/constant.
class not_tabulated_error : public std::out_of_range {
 public:
  explicit not_tabulated_error(const std::string& what) : std::out_of_range(what) {}
};

/// Point set exists but admits no origin-centered closed-form evaluation
/// (the individual hexagonal K sublattices).
class unsupported_set_error : public std::invalid_argument {
 public:
  explicit unsupported_set_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace latsum
