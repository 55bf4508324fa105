#pragma once

namespace fuzzyfrac {

/// Gamma function. Throws PoleError at nonpositive integers.
double gamma_fn(double x);

/// 1 / Gamma(x); zero at the poles of Gamma.
double reciprocal_gamma(double x);

/// Beta function B(p, q) = Gamma(p) Gamma(q) / Gamma(p + q), p, q > 0,
/// evaluated through log-gamma.
double beta_fn(double p, double q);

}  // namespace fuzzyfrac
