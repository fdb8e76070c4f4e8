#include "tandemcount/asymptotics.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace tandemcount {

namespace {

constexpr long double kPi = 3.14159265358979323846264338327950288L;

long double step_series_ld(Model m, long double z) {
  if (m == Model::P) {
    if (!(z > 0.0L && z < 1.0L)) throw std::domain_error("step_series: z outside (0,1)");
    const long double om = 1.0L - z;
    return 1.0L / z + 2.0L * z / (om * om);
  }
  if (!(z > 0.0L && z < 0.5L)) throw std::domain_error("step_series: z outside (0,1/2)");
  const long double denom = 1.0L - 2.0L * z * z / (1.0L - 2.0L * z);
  if (!(denom > 0.0L)) throw std::domain_error("step_series: aggregation pole");
  return (1.0L / z) / denom;
}

long double delta_ld(Model m, long double x, long double y) {
  const long double x2 = x * x, x4 = x2 * x2, x6 = x4 * x2;
  const long double y2 = y * y, y4 = y2 * y2, y6 = y4 * y2, y8 = y4 * y4;
  if (m == Model::P) {
    return 36 * x6 * y6 + x4 * y8 - 216 * x6 * y4 - 48 * x4 * y6 + 324 * x6 * y2 +
           216 * x4 * y4 + 14 * x2 * y6 - 216 * x4 * y2 - 48 * x2 * y4 + 36 * x2 * y2 + y4;
  }
  return 64 * x6 * y6 + x4 * y8 - 512 * x6 * y4 + 32 * x4 * y6 + 1024 * x6 * y2 + 2 * x2 * y6 -
         512 * x4 * y2 + 32 * x2 * y4 + 64 * x2 * y2 + y4;
}

// 1/gamma_pm = (x^2 y^4 + y^2 -+ sqrt(Delta)) / denominator
long double gamma_branch_ld(Model m, long double x, long double y, int sign) {
  const long double x2 = x * x, y2 = y * y, y4 = y2 * y2;
  const long double disc = delta_ld(m, x, y);
  if (!(disc > 0.0L)) throw std::domain_error("gamma: Delta <= 0");
  const long double root = std::sqrt(disc);
  const long double denom = m == Model::P ? 18.0L * x2 * (1.0L - 3.0L * x2 + x2 * y2 - y2)
                                          : 32.0L * x2 * (x2 * y2 - 4.0L * x2 + 1.0L);
  const long double inv = (x2 * y4 + y2 + sign * root) / denom;
  if (inv == 0.0L) throw std::domain_error("gamma: pole");
  return 1.0L / inv;
}

long double gamma_plus_ld(Model m, long double x, long double y) {
  return gamma_branch_ld(m, x, y, -1);
}

// Richardson-extrapolated centered first derivative.
template <class F>
long double richardson_diff(F f, long double x, long double h) {
  auto d = [&](long double step) { return (f(x + step) - f(x - step)) / (2.0L * step); };
  const long double d1 = d(h), d2 = d(h / 10.0L);
  return (100.0L * d2 - d1) / 99.0L;
}

// Richardson-extrapolated centered second derivative.
template <class F>
long double richardson_diff2(F f, long double x, long double h) {
  const long double f0 = f(x);
  auto d = [&](long double step) { return (f(x + step) - 2.0L * f0 + f(x - step)) / (step * step); };
  const long double d1 = d(h), d2 = d(h / 10.0L);
  return (100.0L * d2 - d1) / 99.0L;
}

// Richardson-extrapolated mixed second derivative of f(r,s) at (0,0).
template <class F>
long double richardson_mixed(F f, long double h) {
  auto d = [&](long double step) {
    return (f(step, step) - f(step, -step) - f(-step, step) + f(-step, -step)) /
           (4.0L * step * step);
  };
  const long double d1 = d(h), d2 = d(h / 10.0L);
  return (100.0L * d2 - d1) / 99.0L;
}

}  // namespace

ModelSpec model_spec(Model m) {
  if (m == Model::P) {
    return {m, Rational(1, 3), Rational(9, 2), Rational(9, 16),
            1.0 + static_cast<double>(kPi / std::acos(9.0L / 16.0L))};
  }
  return {m, Rational(1, 4), Rational(16, 3), Rational(22, 27),
          1.0 + static_cast<double>(kPi / std::acos(22.0L / 27.0L))};
}

SpectralData spectral_data(Model m) {
  if (m == Model::P) {
    return {Rational(100), Rational(9, 2),  Rational(-3),    Rational(72, 5),
            Rational(-81, 10), Rational(16, 5), Rational(-9, 5)};
  }
  return {Rational(196), Rational(16, 3),     Rational(-4),    Rational(192, 7),
          Rational(-1408, 63), Rational(36, 7), Rational(-88, 21)};
}

double step_series(Model m, double z) { return static_cast<double>(step_series_ld(m, z)); }

std::pair<Rational, Rational> minimize_step_series(Model m) {
  const ModelSpec spec = model_spec(m);
  const long double z0 = spec.z0.to_long_double();
  const long double d1 =
      richardson_diff([&](long double z) { return step_series_ld(m, z); }, z0, 1e-4L);
  if (!(std::fabs(static_cast<double>(d1)) < 1e-12))
    throw std::logic_error("minimize_step_series: |S'(z0)| check failed");
  return {spec.z0, spec.growth};
}

bool check_upper_bounds(Model m, const SeriesPoly& series) {
  if (series.arity() != 1)
    throw std::invalid_argument("check_upper_bounds: univariate series expected");
  // exact rational comparisons: p_n * 2^n <= 9^n ; s_n * 3^n <= 2 * 16^n
  for (const auto& [e, c] : series.terms()) {
    const unsigned n = static_cast<unsigned>(e[0]);
    if (m == Model::P) {
      if (c * boost::multiprecision::pow(BigInt(2), n) >
          boost::multiprecision::pow(BigInt(9), n))
        return false;
    } else {
      if (c * boost::multiprecision::pow(BigInt(3), n) >
          2 * boost::multiprecision::pow(BigInt(16), n))
        return false;
    }
  }
  return true;
}

double delta_poly(Model m, double x, double y) {
  return static_cast<double>(delta_ld(m, x, y));
}
double gamma_plus(Model m, double x, double y) {
  return static_cast<double>(gamma_plus_ld(m, x, y));
}
double gamma_minus(Model m, double x, double y) {
  return static_cast<double>(gamma_branch_ld(m, x, y, +1));
}

std::array<double, 3> denominator_coeffs(Model m, double xd, double yd) {
  const long double x = xd, y = yd;
  const long double x2 = x * x, x4 = x2 * x2;
  const long double y2 = y * y, y4 = y2 * y2;
  if (m == Model::P) {
    return {static_cast<double>(-3 * x2 * y4 + 9 * x2 * y2 + y4 - 3 * y2),
            static_cast<double>(-3 * x2 * y4 - 3 * y2),
            static_cast<double>(27 * x4 * y2 - 81 * x4 - 27 * x2 * y2 + 27 * x2)};
  }
  return {static_cast<double>(8 * x2 * y2 - 2 * x2 * y4 - y4 - 2 * y2),
          static_cast<double>(-2 * x2 * y4 - 2 * y2),
          static_cast<double>(32 * x4 * y2 - 128 * x4 + 32 * x2)};
}

std::pair<double, double> grad_g_at_11(Model m) {
  const long double g11 = gamma_plus_ld(m, 1.0L, 1.0L);
  const long double gx = richardson_diff(
      [&](long double x) { return gamma_plus_ld(m, x, 1.0L) / g11; }, 1.0L, 1e-3L);
  const long double gy = richardson_diff(
      [&](long double y) { return gamma_plus_ld(m, 1.0L, y) / g11; }, 1.0L, 1e-3L);
  return {static_cast<double>(gx), static_cast<double>(gy)};
}

namespace {

// h(r,s) = gamma_plus(1,1) * log(gamma_plus(e^r, e^s) / gamma_plus(1,1)).
// Its Hessian at the origin recovers the reference covariance rationals;
// dividing by gamma_plus(1,1) gives the CLT covariance of the mu-walk.
long double h_scaled(Model m, long double r, long double s) {
  const long double g11 = gamma_plus_ld(m, 1.0L, 1.0L);
  return g11 * std::log(gamma_plus_ld(m, std::exp(r), std::exp(s)) / g11);
}

}  // namespace

std::pair<double, double> covariance_from_gamma(Model m) {
  const long double a = richardson_diff2(
      [&](long double r) { return h_scaled(m, r, 0.0L); }, 0.0L, 1e-2L);
  const long double b =
      richardson_mixed([&](long double r, long double s) { return h_scaled(m, r, s); }, 1e-2L);
  return {static_cast<double>(a), static_cast<double>(b)};
}

double covariance_h22(Model m) {
  return static_cast<double>(richardson_diff2(
      [&](long double s) { return h_scaled(m, 0.0L, s); }, 0.0L, 1e-2L));
}

ExponentEstimate conjectured_exponent(Model m) {
  auto [a, b] = covariance_from_gamma(m);
  const double xi_fd = -b / a;
  const double xi = model_spec(m).xi.to_double();
  return {1.0 + static_cast<double>(kPi) / std::acos(xi_fd),
          1.0 + static_cast<double>(kPi) / std::acos(xi)};
}

ExponentFit exponent_fit(const SeriesPoly& series, Rational growth) {
  if (series.arity() != 1) throw std::invalid_argument("exponent_fit: univariate series expected");
  int n_max = 0;
  for (const auto& [e, c] : series.terms()) n_max = std::max(n_max, e[0]);
  ExponentFit fit;
  fit.n_lo = std::max(2, n_max / 2);
  fit.n_hi = n_max;
  const double log_growth = std::log(growth.to_double());
  std::vector<std::pair<double, double>> pts;  // (log n, log(c_n/g^n))
  for (const auto& [e, c] : series.terms()) {
    const int n = e[0];
    if (n < fit.n_lo || c <= 0) continue;
    pts.push_back({std::log(static_cast<double>(n)), bigint_log(c) - n * log_growth});
  }
  if (pts.size() < 2) return fit;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(pts.size());
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.alpha_hat = -slope;
  fit.intercept = (sy - slope * sx) / n;
  double ss = 0;
  for (auto [x, y] : pts) {
    const double r = y - (fit.intercept + slope * x);
    ss += r * r;
  }
  fit.rms_residual = std::sqrt(ss / n);
  return fit;
}

}  // namespace tandemcount
