// Batch CLI: exact counts, refinements, oracle crosschecks, bijection
// verification, asymptotics reports. Exit codes: 0 success, 1 verification
// mismatch, 2 usage error, 3 output I/O failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "tandemcount/asymptotics.hpp"
#include "tandemcount/dp.hpp"
#include "tandemcount/mc.hpp"
#include "tandemcount/oracle.hpp"
#include "tandemcount/series.hpp"
#include "tandemcount/walk.hpp"

namespace tc = tandemcount;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

int emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return std::cout.good() ? kExitOk : kExitIo;
  }
  std::ofstream os(path);
  os << text;
  os.flush();
  if (!os.good()) {
    std::cerr << "error: cannot write " << path << "\n";
    return kExitIo;
  }
  return kExitOk;
}

struct CountOptions {
  std::string model = "p";
  bool refined = false;
  int n_max = 12;
  std::string format = "text";
  std::string output;
  std::optional<long long> bfile_offset;
};

int run_count(const CountOptions& opt) {
  std::string model = opt.model;
  bool refined = opt.refined;
  if (model.size() > 8 && model.substr(model.size() - 8) == "-refined") {
    refined = true;
    model = model.substr(0, model.size() - 8);
  }
  tc::SeriesPoly series;
  int lo = 0;
  try {
    if (model == "p") {
      series = refined ? tc::count_p_refined(opt.n_max) : tc::count_p_series(opt.n_max);
      lo = 3;
    } else if (model == "s") {
      series = refined ? tc::count_s_refined(opt.n_max) : tc::count_s_series(opt.n_max);
      lo = 2;
    } else if (model == "s-tilde") {
      series = refined ? tc::count_s_tilde_refined(opt.n_max) : tc::count_s_tilde(opt.n_max);
      lo = 2;
    } else {
      std::cerr << "error: unknown model '" << opt.model << "'\n";
      return kExitUsage;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const std::string model_label = refined ? model + "-refined" : model;

  std::ostringstream os;
  if (opt.format == "json") {
    os << tc::series_to_json(series, model_label) << "\n";
  } else if (opt.format == "csv") {
    tc::series_to_csv(series, os);
  } else if (opt.format == "bfile") {
    if (series.arity() != 1) {
      std::cerr << "error: bfile output requires an unrefined (univariate) series\n";
      return kExitUsage;
    }
    tc::series_to_bfile(series, os, lo, opt.n_max, opt.bfile_offset);
  } else if (opt.format == "text") {
    os << "# model=" << model_label << " n_max=" << opt.n_max << " variables="
       << series.variables() << "\n";
    for (const auto& [e, c] : series.terms()) {
      for (int x : e) os << x << " ";
      os << c.str() << "\n";
    }
  } else {
    std::cerr << "error: unknown format '" << opt.format << "'\n";
    return kExitUsage;
  }
  return emit(os.str(), opt.output);
}

int run_crosscheck(const std::string& model_str, int n_max, int window, int cap) {
  const tc::Model model = model_str == "p" ? tc::Model::P : tc::Model::S;
  const auto report = tc::crosscheck(model, n_max, window, cap);
  std::cout << report.to_json() << "\n";
  return report.ok ? kExitOk : kExitMismatch;
}

int run_bijection(int n_max, int cap) {
  bool ok = true;
  auto check = [&](bool cond, const std::string& what) {
    std::cout << (cond ? "[ok]   " : "[FAIL] ") << what << "\n";
    ok = ok && cond;
  };
  for (int n = 0; n <= n_max; ++n) {
    const auto pairs = tc::enumerate_dyck_pairs(n, cap);
    const auto aligned = tc::enumerate_one_aligned(n, cap);
    check(tc::BigInt(pairs.size()) == tc::noncrossing_formula(n + 1),
          "dyck pair count at n=" + std::to_string(n) + " equals Cat formula ("
              + std::to_string(pairs.size()) + ")");
    check(pairs.size() == aligned.size(),
          "phi cardinality at n=" + std::to_string(n));
    bool round = true, member = true;
    for (const auto& pair : pairs) {
      const tc::TandemWalk w = tc::phi(pair);
      member = member && tc::is_one_aligned(w);
      auto back = tc::phi_inverse(w);
      round = round && back && *back == pair;
    }
    check(member, "phi images are 1-aligned at n=" + std::to_string(n));
    check(round, "phi round trip at n=" + std::to_string(n));
    bool lift_ok = true;
    for (const auto& w : aligned) {
      const tc::TandemWalk lifted = tc::bijS_lift(w);
      auto weight = tc::validate_s_walk(lifted);
      auto back = tc::bijS_project(lifted);
      lift_ok = lift_ok && weight && *weight == 1 && back && back->steps == w.steps;
    }
    check(lift_ok, "bijS lift/project round trip at n=" + std::to_string(n));
  }
  return ok ? kExitOk : kExitMismatch;
}

int run_dump_walks(const std::string& model, int length, int se_count, int cap,
                   const std::string& output) {
  std::ostringstream os;
  if (model == "p") {
    if (length < 0) {
      std::cerr << "error: dump-walks --model p requires --length\n";
      return kExitUsage;
    }
    for (const auto& w : tc::enumerate_p_walks(length, cap)) os << tc::walk_to_text(w) << "\n";
  } else {
    if (se_count < 0) {
      std::cerr << "error: dump-walks --model s requires --se-count\n";
      return kExitUsage;
    }
    auto [walks, total] = tc::enumerate_s_walks(se_count, cap);
    for (const auto& ww : walks) {
      std::vector<tc::BigInt> weights;
      tc::LatticePoint p = ww.walk.start;
      for (const tc::Step& s : ww.walk.steps) {
        weights.push_back(s.is_se() ? tc::BigInt(1) : *tc::s_face_weight(p, s));
        p.x += s.dx;
        p.y += s.dy;
      }
      os << tc::walk_to_text(ww.walk, &weights) << "\n";
    }
  }
  return emit(os.str(), output);
}

struct AsymptoticsOptions {
  std::string model = "both";
  long long samples = 0;
  int mc_n = 2000;
  std::uint64_t seed = 1;
  int fit_n = 0;
  std::string output;
};

nlohmann::ordered_json model_report(tc::Model m, const AsymptoticsOptions& opt) {
  nlohmann::ordered_json j;
  const tc::ModelSpec spec = tc::model_spec(m);
  const tc::SpectralData sd = tc::spectral_data(m);
  j["model"] = std::string(tc::model_name(m));

  auto [z0, growth] = tc::minimize_step_series(m);
  nlohmann::ordered_json exact;
  exact["z0"] = z0.str();
  exact["growth"] = growth.str();
  exact["step_series_at_z0"] = tc::step_series(m, z0.to_double());
  exact["xi"] = spec.xi.str();
  exact["delta_at_11"] = tc::delta_poly(m, 1.0, 1.0);
  exact["gamma_plus_at_11"] = tc::gamma_plus(m, 1.0, 1.0);
  exact["gamma_minus_at_11"] = tc::gamma_minus(m, 1.0, 1.0);
  j["exact"] = std::move(exact);

  auto [gx, gy] = tc::grad_g_at_11(m);
  j["gradient_g_at_11"] = {gx, gy};

  auto [a, b] = tc::covariance_from_gamma(m);
  nlohmann::ordered_json cov;
  cov["fd_a"] = a;
  cov["fd_b"] = b;
  cov["fd_h22"] = tc::covariance_h22(m);
  cov["reference_a"] = sd.covariance_a.str();
  cov["reference_b"] = sd.covariance_b.str();
  cov["clt_a"] = sd.clt_a.str();
  cov["clt_b"] = sd.clt_b.str();
  j["covariance"] = std::move(cov);

  const tc::ExponentEstimate est = tc::conjectured_exponent(m);
  j["exponent"] = {{"from_finite_differences", est.from_finite_differences},
                   {"from_exact_xi", est.from_exact_xi}};

  if (opt.fit_n > 0) {
    const tc::SeriesPoly series =
        m == tc::Model::P ? tc::count_p_series(opt.fit_n) : tc::count_s_series(opt.fit_n);
    const tc::ExponentFit fit = tc::exponent_fit(series, spec.growth);
    j["exponent_fit"] = {{"alpha_hat", fit.alpha_hat},
                         {"rms_residual", fit.rms_residual},
                         {"n_lo", fit.n_lo},
                         {"n_hi", fit.n_hi},
                         {"note", "report-only diagnostic; convergence is slow"}};
  }

  if (opt.samples > 0) {
    const tc::McReport mc = tc::mc_estimate(m, opt.mc_n, opt.samples, opt.seed);
    j["mc"] = nlohmann::ordered_json::parse(mc.to_json());
  }
  return j;
}

int run_asymptotics(const AsymptoticsOptions& opt) {
  nlohmann::ordered_json j;
  j["schema"] = "tandemcount/1";
  j["report"] = "asymptotics";
  auto models = nlohmann::ordered_json::array();
  if (opt.model == "p" || opt.model == "both") models.push_back(model_report(tc::Model::P, opt));
  if (opt.model == "s" || opt.model == "both") models.push_back(model_report(tc::Model::S, opt));
  j["models"] = std::move(models);
  return emit(j.dump(2) + "\n", opt.output);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tandemcount: exact counting and asymptotics for corner polyhedra and "
               "3-connected Schnyder labelings via quadrant tandem walks"};
  app.require_subcommand(1);

  CountOptions count_opt;
  auto* count = app.add_subcommand("count", "emit a counting series");
  count->add_option("--model", count_opt.model,
                    "p | s | s-tilde (or <model>-refined)");
  count->add_flag("--refined", count_opt.refined, "refined multivariate series");
  count->add_option("--n-max", count_opt.n_max, "largest exponent of t (default 12)");
  count->add_option("--format", count_opt.format, "json | csv | bfile | text");
  count->add_option("--output", count_opt.output, "output path (default stdout)");
  long long bfile_offset = -1;
  count->add_option("--bfile-offset", bfile_offset, "re-index b-file lines from this offset");

  std::string cc_model = "p";
  int cc_nmax = 6, cc_window = 6, cc_cap = tc::kDefaultEnumerationCap;
  auto* cc = app.add_subcommand("crosscheck", "brute-force oracle vs DP engine");
  cc->add_option("--model", cc_model, "p | s")->check(CLI::IsMember({"p", "s"}));
  cc->add_option("--n-max", cc_nmax, "largest length / SE count (default 6)");
  cc->add_option("--window", cc_window, "ordinate window for per-cell comparison");
  cc->add_option("--cap", cc_cap, "enumeration cap override");

  int bij_nmax = 5, bij_cap = tc::kDefaultEnumerationCap;
  auto* bij = app.add_subcommand("bijection", "phi and bijS round-trip verification");
  bij->add_option("--n-max", bij_nmax, "largest n for exhaustive checks");
  bij->add_option("--cap", bij_cap, "enumeration cap override");

  AsymptoticsOptions asym_opt;
  auto* asym = app.add_subcommand("asymptotics", "growth-rate and exponent report");
  asym->add_option("--model", asym_opt.model, "p | s | both")
      ->check(CLI::IsMember({"p", "s", "both"}));
  asym->add_option("--samples", asym_opt.samples, "Monte Carlo samples (0 = no MC section)");
  asym->add_option("--mc-n", asym_opt.mc_n, "Monte Carlo walk length");
  asym->add_option("--seed", asym_opt.seed, "Monte Carlo seed");
  asym->add_option("--fit-n", asym_opt.fit_n, "series length for the exponent-fit diagnostic");
  asym->add_option("--output", asym_opt.output, "output path (default stdout)");

  std::string dw_model = "p";
  int dw_length = -1, dw_se = -1, dw_cap = tc::kDefaultEnumerationCap;
  std::string dw_output;
  auto* dw = app.add_subcommand("dump-walks", "exhaustive walk listing, one per line");
  dw->add_option("--model", dw_model, "p | s")->check(CLI::IsMember({"p", "s"}));
  dw->add_option("--length", dw_length, "walk length (P model)");
  dw->add_option("--se-count", dw_se, "SE-step count (S model)");
  dw->add_option("--cap", dw_cap, "enumeration cap override");
  dw->add_option("--output", dw_output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  for (int cap : {cc_cap, bij_cap, dw_cap}) {
    if (cap > tc::kDefaultEnumerationCap) {
      std::cerr << "warning: enumeration cap raised to " << cap
                << "; exhaustive listings grow exponentially\n";
      break;
    }
  }

  try {
    if (count->parsed()) {
      if (bfile_offset >= 0) count_opt.bfile_offset = bfile_offset;
      return run_count(count_opt);
    }
    if (cc->parsed()) return run_crosscheck(cc_model, cc_nmax, cc_window, cc_cap);
    if (bij->parsed()) return run_bijection(bij_nmax, bij_cap);
    if (asym->parsed()) return run_asymptotics(asym_opt);
    if (dw->parsed()) return run_dump_walks(dw_model, dw_length, dw_se, dw_cap, dw_output);
  } catch (const tc::EnumerationCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMismatch;
  }
  return kExitUsage;
}
