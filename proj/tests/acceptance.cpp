// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion (details indented). Exits nonzero if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "tandemcount/asymptotics.hpp"
#include "tandemcount/dp.hpp"
#include "tandemcount/mc.hpp"
#include "tandemcount/oracle.hpp"

using namespace tandemcount;

namespace {

struct Gate {
  int failures = 0;
  std::vector<std::string> details;

  void detail(const std::string& line) { details.push_back(line); }
  void fail_if(bool bad, const std::string& line) {
    if (bad) details.push_back("FAILED: " + line);
  }

  void criterion(int k, const std::string& label) {
    bool ok = true;
    for (const auto& d : details)
      if (d.rfind("FAILED:", 0) == 0) ok = false;
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", k, label.c_str());
    for (const auto& d : details) std::printf("         %s\n", d.c_str());
    if (!ok) ++failures;
    details.clear();
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

bool close_rel(double x, double ref, double tol) {
  return std::fabs(x - ref) <= tol * std::fabs(ref);
}

}  // namespace

int main() {
  Gate gate;

  // 1. golden series, exact, < 1 s
  {
    const auto t0 = std::chrono::steady_clock::now();
    const SeriesPoly p = count_p_series(12);
    const SeriesPoly s = count_s_series(11);
    const SeriesPoly st = count_s_tilde(12);
    const double dt = seconds_since(t0);
    const long long pref[] = {1, 0, 3, 4, 15, 39, 122, 375, 1212, 3980};
    const long long sref[] = {3, 2, 3, 6, 14, 36, 102, 306, 972, 3216};
    const long long tref[] = {1, 0, 3, 4, 15, 42, 131, 438, 1467, 5204};
    for (int n = 3; n <= 12; ++n)
      gate.fail_if(p.coeff({n}) != BigInt(pref[n - 3]), "p_" + std::to_string(n));
    for (int n = 2; n <= 11; ++n)
      gate.fail_if(s.coeff({n}) != BigInt(sref[n - 2]), "s_" + std::to_string(n));
    for (int n = 3; n <= 12; ++n)
      gate.fail_if(st.coeff({n}) != BigInt(tref[n - 3]), "stilde_" + std::to_string(n));
    gate.fail_if(dt >= 1.0, "runtime " + fmt(dt) + " s >= 1 s");
    gate.detail("p, s, s-tilde match the reference series; runtime " + fmt(dt) + " s");
    gate.criterion(1, "golden series exact to n = 12 / 11 / 12");
  }

  // 2. refined golden terms, exact, < 2 s
  {
    const auto t0 = std::chrono::steady_clock::now();
    const SeriesPoly sr = count_s_refined(8);
    const SeriesPoly pr = count_p_refined(7);
    const SeriesPoly str = count_s_tilde_refined(7);
    const double dt = seconds_since(t0);
    gate.fail_if(sr.coeff({5, 5, 8}) != 78, "u^5 v^5 t^8 in s-refined");
    gate.fail_if(sr.coeff({6, 4, 8}) != 12, "u^6 v^4 t^8 in s-refined");
    gate.fail_if(pr.coeff({2, 2, 2, 6}) != 4, "u^2 v^2 w^2 t^6 in p-refined");
    gate.fail_if(pr.coeff({3, 2, 2, 7}) != 4, "u^3 v^2 w^2 t^7 in p-refined");
    gate.fail_if(str.coeff({5, 4, 7}) != 15, "u^5 v^4 t^7 in s-tilde-refined");
    gate.fail_if(dt >= 2.0, "runtime " + fmt(dt) + " s >= 2 s");
    gate.detail("78, 12, 4, 4, 15 all reproduced; runtime " + fmt(dt) + " s");
    gate.criterion(2, "refined golden coefficients");
  }

  // 3. oracle equivalence, < 60 s
  {
    const auto t0 = std::chrono::steady_clock::now();
    const SeriesPoly p = count_p_series(8);
    for (int len = 1; len <= 8; ++len) {
      const BigInt brute(enumerate_p_walks(len).size());
      gate.fail_if(brute != p.coeff({len}), "P length " + std::to_string(len));
    }
    const auto sp = s_prime_sequence(5);
    for (int se = 3; se <= 7; ++se)
      gate.fail_if(enumerate_s_walks(se).second != sp[se - 2],
                   "S SE-count " + std::to_string(se));
    const auto ccp = crosscheck(Model::P, 8);
    const auto ccs = crosscheck(Model::S, 7);
    gate.fail_if(!ccp.ok, "per-cell crosscheck P");
    gate.fail_if(!ccs.ok, "per-cell crosscheck S");
    const double dt = seconds_since(t0);
    gate.fail_if(dt >= 60.0, "runtime " + fmt(dt) + " s >= 60 s");
    gate.detail("brute force equals DP: P lengths <= 8, S SE counts <= 7 (" +
                std::to_string(ccp.cells_compared + ccs.cells_compared) +
                " cells); runtime " + fmt(dt) + " s");
    gate.criterion(3, "oracle equivalence");
  }

  // 4. bijection suite, exact, < 30 s
  {
    const auto t0 = std::chrono::steady_clock::now();
    const long long counts[] = {1, 1, 3, 14, 84, 594, 4719};
    for (int n = 0; n <= 6; ++n) {
      const auto pairs = enumerate_dyck_pairs(n);
      gate.fail_if(BigInt(pairs.size()) != BigInt(counts[n]),
                   "pair count n=" + std::to_string(n));
      gate.fail_if(noncrossing_formula(n + 1) != BigInt(counts[n]),
                   "formula n=" + std::to_string(n));
      gate.fail_if(enumerate_one_aligned(n).size() != pairs.size(),
                   "|A_n| n=" + std::to_string(n));
    }
    for (int n = 0; n <= 5; ++n) {
      for (const auto& pair : enumerate_dyck_pairs(n)) {
        auto back = phi_inverse(phi(pair));
        gate.fail_if(!back || !(*back == pair), "phi round trip n=" + std::to_string(n));
        if (!back || !(*back == pair)) break;
      }
      for (const auto& w : enumerate_one_aligned(n)) {
        const TandemWalk lifted = bijS_lift(w);
        auto weight = validate_s_walk(lifted);
        auto base = bijS_project(lifted);
        const bool ok = weight && *weight == 1 && base && base->steps == w.steps;
        gate.fail_if(!ok, "bijS round trip n=" + std::to_string(n));
        if (!ok) break;
      }
    }
    const SeriesPoly sr = count_s_refined(18);
    for (int a = 1; a <= 6; ++a)
      gate.fail_if(sr.coeff({a + 1, 2 * a + 1, 3 * a}) != noncrossing_formula(a),
                   "refined coefficient at a=" + std::to_string(a));
    const double dt = seconds_since(t0);
    gate.fail_if(dt >= 30.0, "runtime " + fmt(dt) + " s >= 30 s");
    gate.detail("counts 1,1,3,14,84,594,4719; phi and bijS identities; refined "
                "coefficients equal the Catalan formula; runtime " + fmt(dt) + " s");
    gate.criterion(4, "bijection suite");
  }

  // 5. tilde/p comparison, exact
  {
    const SeriesPoly st = count_s_tilde(8);
    const SeriesPoly p = count_p_series(8);
    for (int n = 3; n <= 7; ++n)
      gate.fail_if(st.coeff({n}) != p.coeff({n}), "stilde_n = p_n at n=" + std::to_string(n));
    gate.fail_if(st.coeff({8}) - p.coeff({8}) != 3, "stilde_8 - p_8 = 3");
    gate.detail("stilde_n = p_n for 3 <= n <= 7 and stilde_8 - p_8 = 3");
    gate.criterion(5, "tilde/p comparison");
  }

  // 6. spectral identities, 1e-9 relative (gradient 1e-8)
  {
    gate.fail_if(!close_rel(delta_poly(Model::P, 1, 1), 100.0, 1e-9), "Delta_P(1,1)");
    gate.fail_if(!close_rel(delta_poly(Model::S, 1, 1), 196.0, 1e-9), "Delta_S(1,1)");
    gate.fail_if(!close_rel(gamma_plus(Model::P, 1, 1), 4.5, 1e-9), "gamma+_P(1,1)");
    gate.fail_if(!close_rel(gamma_plus(Model::S, 1, 1), 16.0 / 3.0, 1e-9), "gamma+_S(1,1)");
    gate.fail_if(!close_rel(gamma_minus(Model::P, 1, 1), -3.0, 1e-9), "gamma-_P(1,1)");
    gate.fail_if(!close_rel(gamma_minus(Model::S, 1, 1), -4.0, 1e-9), "gamma-_S(1,1)");
    double grad_max = 0;
    for (Model m : {Model::P, Model::S}) {
      auto [gx, gy] = grad_g_at_11(m);
      grad_max = std::max({grad_max, std::fabs(gx), std::fabs(gy)});
    }
    gate.fail_if(grad_max >= 1e-8, "grad g(1,1) = " + fmt(grad_max));
    gate.detail("Delta = 100 / 196, gamma+ = 9/2 / 16/3, gamma- = -3 / -4, |grad g| = " +
                fmt(grad_max));
    gate.criterion(6, "spectral identities");
  }

  // 7. covariance recovery and conjectured exponents
  {
    for (Model m : {Model::P, Model::S}) {
      const SpectralData sd = spectral_data(m);
      auto [a, b] = covariance_from_gamma(m);
      const char* tag = m == Model::P ? "P" : "S";
      gate.fail_if(!close_rel(a, sd.covariance_a.to_double(), 1e-6),
                   std::string("covariance a ") + tag + " = " + fmt(a));
      gate.fail_if(!close_rel(b, sd.covariance_b.to_double(), 1e-6),
                   std::string("covariance b ") + tag + " = " + fmt(b));
      const ExponentEstimate est = conjectured_exponent(m);
      gate.fail_if(std::fabs(est.from_finite_differences - est.from_exact_xi) >= 1e-6,
                   std::string("exponent fd-vs-exact ") + tag);
      const double reference = m == Model::P ? 4.23 : 6.08;
      gate.fail_if(std::fabs(est.from_exact_xi - reference) >= 5e-3,
                   std::string("exponent vs reference ") + tag + " = " + fmt(est.from_exact_xi));
      gate.detail(std::string(tag) + ": Hessian (" + fmt(a) + ", " + fmt(b) +
                  ") matches (" + sd.covariance_a.str() + ", " + sd.covariance_b.str() +
                  "); alpha = " + fmt(est.from_exact_xi));
    }
    gate.criterion(7, "covariance recovery and exponents");
  }

  // 8. bounds to n = 200 (exact) and O(n^3) additions, DP to 300 < 120 s
  SeriesPoly p300("t"), s300("t");
  {
    const auto t0 = std::chrono::steady_clock::now();
    DpStats stats_p, stats_s;
    p300 = count_p_series(300, &stats_p);
    s300 = count_s_series(300, &stats_s);
    const double dt300 = seconds_since(t0);
    gate.fail_if(dt300 >= 120.0, "DP to n = 300 took " + fmt(dt300) + " s");
    gate.fail_if(!check_upper_bounds(Model::P, p300.truncated('t', 200)),
                 "p_n <= (9/2)^n for n <= 200");
    gate.fail_if(!check_upper_bounds(Model::S, s300.truncated('t', 200)),
                 "s_n <= 2*(16/3)^n for n <= 200");
    // addition counts at four sizes against a fitted cubic
    const int sizes[] = {75, 150, 225, 300};
    double c_num = 0, c_den = 0;
    std::vector<double> counts;
    for (int k = 0; k < 4; ++k) {
      DpStats st;
      if (k == 3) {
        st = stats_p;
      } else {
        count_p_series(sizes[k], &st);
      }
      const double cnt = static_cast<double>(st.bignum_adds);
      const double n3 = std::pow(static_cast<double>(sizes[k]), 3);
      counts.push_back(cnt);
      c_num += cnt * n3;
      c_den += n3 * n3;
    }
    const double c_fit = c_num / c_den;
    for (int k = 0; k < 4; ++k) {
      const double bound = 2.0 * c_fit * std::pow(static_cast<double>(sizes[k]), 3);
      gate.fail_if(counts[k] > bound, "additions at n = " + std::to_string(sizes[k]) +
                                          " exceed 2x fitted cubic");
    }
    gate.detail("bounds hold exactly to n = 200; DP to 300 in " + fmt(dt300) +
                " s; additions fit c*n^3 with c = " + fmt(c_fit) +
                " (max ratio to fit " +
                fmt(*std::max_element(counts.begin(), counts.end()) /
                    (c_fit * std::pow(300.0, 3))) + ")");
    gate.criterion(8, "exponential bounds and O(n^3) work");
  }

  // 9. Monte Carlo, fixed seed, < 5 min
  {
    const auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t seed = 20240815;
    const long long samples = 100000;

    const McReport surv = mc_estimate(Model::P, 10, samples, seed);
    gate.fail_if(surv.survival_reference < 0, "survival reference unavailable");
    gate.fail_if(std::fabs(surv.survival_frequency - surv.survival_reference) >
                     surv.survival_radius,
                 "survival at n=10: freq " + fmt(surv.survival_frequency) + " vs exact " +
                     fmt(surv.survival_reference) + " (3se = " + fmt(surv.survival_radius) + ")");
    gate.detail("P survival at n=10: " + fmt(surv.survival_frequency) + " vs exact " +
                fmt(surv.survival_reference) + " within 3se " + fmt(surv.survival_radius));

    for (Model m : {Model::P, Model::S}) {
      const McReport cov = mc_estimate(m, 2000, samples, seed + 1);
      const char* tag = m == Model::P ? "P" : "S";
      const double a = cov.endpoint_covariance_over_n[0][0];
      const double b = cov.endpoint_covariance_over_n[0][1];
      const double a2 = cov.endpoint_covariance_over_n[1][1];
      gate.fail_if(!close_rel(a, cov.clt_a, 0.05),
                   std::string("covariance[0][0] ") + tag + " = " + fmt(a));
      gate.fail_if(!close_rel(a2, cov.clt_a, 0.05),
                   std::string("covariance[1][1] ") + tag + " = " + fmt(a2));
      gate.fail_if(!close_rel(b, cov.clt_b, 0.05),
                   std::string("covariance[0][1] ") + tag + " = " + fmt(b));
      gate.detail(std::string(tag) + " covariance/n at n=2000: diag " + fmt(a) + "/" + fmt(a2) +
                  " vs " + fmt(cov.clt_a) + ", cross " + fmt(b) + " vs " + fmt(cov.clt_b));
    }

    const McReport box = mc_estimate(Model::P, 10000, samples, seed + 2);
    gate.fail_if(box.box_exit_frequency >= 0.01,
                 "box-exit frequency at n=1e4 is " + fmt(box.box_exit_frequency) +
                     " >= 0.01 (the box [-n^(2/3), n^(2/3)]^2 is only ~2.6 endpoint standard "
                     "deviations wide at this depth; the property is asymptotic)");
    gate.detail("P box-exit at n=1e4: " + fmt(box.box_exit_frequency) + " (threshold 0.01)");

    const double dt = seconds_since(t0);
    gate.fail_if(dt >= 300.0, "runtime " + fmt(dt) + " s >= 300 s");
    gate.detail("runtime " + fmt(dt) + " s");
    gate.criterion(9, "Monte Carlo validation");
  }

  // 10. desk-scale limits are diagnostics only (report, no threshold)
  {
    const ExponentFit fp = exponent_fit(p300, Rational(9, 2));
    const ExponentFit fs = exponent_fit(s300, Rational(16, 3));
    gate.fail_if(!std::isfinite(fp.alpha_hat) || !std::isfinite(fs.alpha_hat),
                 "exponent fit produced non-finite values");
    gate.detail("report-only: alpha_hat(p) = " + fmt(fp.alpha_hat) + ", alpha_hat(s) = " +
                fmt(fs.alpha_hat) + " over n in [" + std::to_string(fp.n_lo) + "," +
                std::to_string(fp.n_hi) + "] (conjectured 4.2275 / 6.0803; convergence is slow "
                "and the limits p_n^{1/n} -> 9/2, s_n^{1/n} -> 16/3 are not reproducible at "
                "desk scale; acceptance rests on criteria 6-9)");
    gate.criterion(10, "growth-rate limits: trend diagnostics only");
  }

  if (gate.failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", gate.failures);
  return 1;
}
