#pragma once

#include <array>
#include <utility>
#include <vector>

#include "tandemcount/rational.hpp"
#include "tandemcount/series.hpp"
#include "tandemcount/walk.hpp"

namespace tandemcount {

/// Exact reference constants per model.
///   P: z0 = 1/3, growth S(z0) = 9/2, xi = 9/16, alpha = 1 + pi/arccos(9/16)
///   S: z0 = 1/4, growth 16/3, xi = 22/27, alpha = 1 + pi/arccos(22/27)
struct ModelSpec {
  Model model;
  Rational z0;
  Rational growth;
  Rational xi;
  double alpha;
};
ModelSpec model_spec(Model m);

/// Spectral reference data at (1,1) plus the covariance constants.
/// covariance_a/b are the exact reference rationals; they are the Hessian of
/// gamma_plus(e^r,e^s) at the origin, i.e. gamma_plus(1,1) times the CLT
/// covariance of the mu-walk. clt_a/b = covariance / gamma_plus(1,1) is what
/// Monte Carlo endpoint statistics converge to.
struct SpectralData {
  Rational delta_at_11;       // 100 (P), 196 (S)
  Rational gamma_plus_at_11;  // 9/2, 16/3
  Rational gamma_minus_at_11; // -3, -4
  Rational covariance_a;      // 72/5, 192/7
  Rational covariance_b;      // -81/10, -1408/63
  Rational clt_a;             // 16/5, 36/7
  Rational clt_b;             // -9/5, -88/21
};
SpectralData spectral_data(Model m);

/// Step series S(z): P: 1/z + 2z/(1-z)^2 on (0,1);
/// S: (1/z) / (1 - 2z^2/(1-2z)) on (0,1/2) where the denominator stays
/// positive. Throws std::domain_error outside the domain.
double step_series(Model m, double z);

/// Returns the exact minimizer (z0, S(z0)) and verifies numerically that
/// |S'(z0)| < 1e-12 (Richardson-extrapolated centered differences in long
/// double); throws std::logic_error if the verification fails.
std::pair<Rational, Rational> minimize_step_series(Model m);

/// Exact-rational bound check on computed coefficients: p_n <= (9/2)^n,
/// s_n <= 2*(16/3)^n. The series must be univariate in t.
bool check_upper_bounds(Model m, const SeriesPoly& series);

/// Closed forms near (1,1).
double delta_poly(Model m, double x, double y);
double gamma_plus(Model m, double x, double y);
double gamma_minus(Model m, double x, double y);
/// Denominator-polynomial values b0, b1, b2 at (x,y) (gamma_plus/minus are
/// the reciprocals of the t-roots of b2 t^2 + b1 t + b0).
std::array<double, 3> denominator_coeffs(Model m, double x, double y);

/// Central-difference gradient of g = gamma_plus/gamma_plus(1,1) at (1,1);
/// both components vanish (checked to 1e-8 by the acceptance suite).
std::pair<double, double> grad_g_at_11(Model m);

/// Finite-difference recovery of the reference covariance constants: Richardson
/// (h = 1e-2, 1e-3) Hessian of gamma_plus(1,1) * log g(e^r, e^s) at (0,0).
/// Returns (H11, H12); H22 is computed independently by hessian_h22.
std::pair<double, double> covariance_from_gamma(Model m);
double covariance_h22(Model m);

/// Conjectured survival exponent 1 + pi/arccos(-b/a), computed both from the
/// finite-difference Hessian and from the exact xi; the two agree to 1e-6.
struct ExponentEstimate {
  double from_finite_differences;
  double from_exact_xi;
};
ExponentEstimate conjectured_exponent(Model m);

/// Report-only regression diagnostic: least-squares slope of
/// log(coeff_n / growth^n) against log n over the top half of the range.
/// alpha_hat = -slope. No acceptance threshold is attached to this value.
struct ExponentFit {
  double alpha_hat = 0.0;
  double intercept = 0.0;
  double rms_residual = 0.0;
  int n_lo = 0;
  int n_hi = 0;
};
ExponentFit exponent_fit(const SeriesPoly& series, Rational growth);

}  // namespace tandemcount
