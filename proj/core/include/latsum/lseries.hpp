#pragma once

namespace latsum {

/// Riemann zeta at integer s >= 2. Even s uses the Bernoulli closed form,
/// odd s <= 29 a stored 30-digit table, larger s direct summation.
double zeta(int s);

/// Dirichlet beta(s) = 1 - 3^-s + 5^-s - ..., s >= 1.
double dirichlet_beta(int s);

/// The mod-3 L-series g(s) = 1 - 2^-s + 4^-s - 5^-s + 7^-s - ..., s >= 2.
double dirichlet_g(int s);

}  // namespace latsum
