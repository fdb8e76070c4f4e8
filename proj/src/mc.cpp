#include "tandemcount/mc.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <vector>

#include "tandemcount/asymptotics.hpp"
#include "tandemcount/dp.hpp"

namespace tandemcount {

namespace {

// geometric with P(k) = (1-p) p^k, sampled by repeated trials (p <= 1/2
// throughout, so the expected extra draws are below one per call)
inline int geometric(Xoshiro256pp& rng, double p) {
  int k = 0;
  while (rng.uniform01() < p) ++k;
  return k;
}

struct WalkState {
  long long x, y;
  bool stayed = true;
  bool box_exited = false;
  double box;

  inline void track(bool shifted_region) {
    if (x < 0 || y < (shifted_region ? 1 : 0)) stayed = false;
    if (x > box || x < -box || y > box || y < -box) box_exited = true;
  }
};

// one mu-step of the P walk (z0 = 1/3): SE with probability 2/3, else one of
// the two parity-consistent face families (each of total mass 1/6) with l, r
// independent geometrics of ratio z0
inline void p_step(Xoshiro256pp& rng, long long& x, long long& y) {
  const double u = rng.uniform01();
  if (u < 2.0 / 3.0) {
    ++x;
    --y;
    return;
  }
  const bool even = ((y & 1LL) == 0);
  const bool even_entries = u < 5.0 / 6.0;
  const int l = geometric(rng, 1.0 / 3.0);
  const int r = geometric(rng, 1.0 / 3.0);
  if (even_entries) {
    x -= even ? 2 * l : 2 * l + 2;
    y += even ? 2 * r + 2 : 2 * r;
  } else {
    x -= 2 * l + 1;
    y += 2 * r + 1;
  }
}

// one aggregated mu-step of the S walk (z0 = 1/4): SE, then a geometric
// number (ratio q = 2 z0^2/(1-2 z0) = 1/4) of face-steps; each face-step
// picks its destination parity by a fair coin (the two destinations carry
// equal mass), m = l+r geometric of ratio 2 z0 = 1/2, and r binomial(m, 1/2)
// (the interleavings are uniform)
inline void s_step(Xoshiro256pp& rng, WalkState& st) {
  ++st.x;
  --st.y;
  int faces = geometric(rng, 0.25);
  for (int f = 0; f < faces; ++f) {
    const bool even = ((st.y & 1LL) == 0);
    const bool flip = rng.coin();
    const int m = geometric(rng, 0.5);
    int r = 0;
    for (int t = 0; t < m; ++t) r += rng.coin() ? 1 : 0;
    const int l = m - r;
    if (!flip) {
      st.x -= 2 * l + 2;
      st.y += 2 * r + 2;
    } else if (even) {
      st.x -= 2 * l + 1;
      st.y += 2 * r + 3;
    } else {
      st.x -= 2 * l + 3;
      st.y += 2 * r + 1;
    }
  }
  // the walk's visited points are the aggregated-step endpoints; the shifted
  // quadrant and the box are checked there
  st.track(true);
}

}  // namespace

McSample mc_sample(Model model, int n, Xoshiro256pp& rng) {
  WalkState st{0, 0, true, false, std::pow(static_cast<double>(n), 2.0 / 3.0)};
  if (model == Model::P) {
    for (int k = 0; k < n; ++k) {
      p_step(rng, st.x, st.y);
      st.track(false);
    }
  } else {
    st.x = 0;
    st.y = 2;
    for (int k = 0; k < n; ++k) s_step(rng, st);
  }
  return {LatticePoint{st.x, st.y}, st.stayed, st.box_exited};
}

int mc_thread_cap() {
  if (const char* env = std::getenv("TANDEMCOUNT_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

struct ChunkSums {
  long long count = 0;
  long long sx = 0, sy = 0;
  long long sxx = 0, syy = 0, sxy = 0;
  long long survived = 0;
  long long box_exited = 0;

  void merge(const ChunkSums& o) {
    count += o.count;
    sx += o.sx;
    sy += o.sy;
    sxx += o.sxx;
    syy += o.syy;
    sxy += o.sxy;
    survived += o.survived;
    box_exited += o.box_exited;
  }
};

constexpr long long kChunkSize = 4096;

double survival_reference_value(Model model, int n) {
  // feasible only while the DP stays cheap
  if (n > 256) return -1.0;
  if (model == Model::P) {
    const BigInt walks = count_p_to(n, {1, 1});
    if (walks == 0) return 0.0;
    return std::exp(bigint_log(walks) + n * std::log(2.0 / 9.0));
  }
  const BigInt walks = count_s_to(n + 1, {2, 0});  // s'_{n-1}
  if (walks == 0) return 0.0;
  return 4.0 * std::exp(bigint_log(walks) + n * std::log(3.0 / 16.0));
}

}  // namespace

McReport mc_estimate(Model model, int n, long long samples, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("mc_estimate: n >= 1 required");
  if (samples < 1) throw std::invalid_argument("mc_estimate: samples >= 1 required");

  const long long chunks = (samples + kChunkSize - 1) / kChunkSize;
  // fixed jump offsets: chunk c uses the master state advanced by c jumps
  std::vector<Xoshiro256pp> streams;
  streams.reserve(chunks);
  Xoshiro256pp master(seed);
  for (long long c = 0; c < chunks; ++c) {
    streams.push_back(master);
    master.long_jump();
  }

  std::vector<ChunkSums> results(chunks);
  std::atomic<long long> next_chunk{0};
  auto worker = [&]() {
    for (;;) {
      const long long c = next_chunk.fetch_add(1);
      if (c >= chunks) return;
      Xoshiro256pp rng = streams[c];
      ChunkSums sums;
      const long long lo = c * kChunkSize;
      const long long hi = std::min(samples, lo + kChunkSize);
      for (long long k = lo; k < hi; ++k) {
        const McSample s = mc_sample(model, n, rng);
        ++sums.count;
        sums.sx += s.endpoint.x;
        sums.sy += s.endpoint.y;
        sums.sxx += s.endpoint.x * s.endpoint.x;
        sums.syy += s.endpoint.y * s.endpoint.y;
        sums.sxy += s.endpoint.x * s.endpoint.y;
        sums.survived += s.survived_to_11() ? 1 : 0;
        sums.box_exited += s.box_exited ? 1 : 0;
      }
      results[c] = sums;
    }
  };

  const int nthreads = std::min<long long>(mc_thread_cap(), chunks);
  std::vector<std::thread> pool;
  for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  ChunkSums total;
  for (const auto& c : results) total.merge(c);  // fixed merge order

  McReport rep;
  rep.model = model;
  rep.n = n;
  rep.samples = samples;
  rep.seed = seed;

  const double m = static_cast<double>(samples);
  auto freq_radius = [&](double f) { return 3.0 * std::sqrt(f * (1.0 - f) / m); };
  rep.survival_frequency = static_cast<double>(total.survived) / m;
  rep.survival_radius = freq_radius(rep.survival_frequency);
  rep.survival_reference = survival_reference_value(model, n);
  rep.box_exit_frequency = static_cast<double>(total.box_exited) / m;
  rep.box_exit_radius = freq_radius(rep.box_exit_frequency);

  const double mx = static_cast<double>(total.sx) / m;
  const double my = static_cast<double>(total.sy) / m;
  rep.endpoint_mean = {mx, my};
  const double nd = static_cast<double>(n);
  rep.endpoint_covariance_over_n = {
      {{(static_cast<double>(total.sxx) / m - mx * mx) / nd,
        (static_cast<double>(total.sxy) / m - mx * my) / nd},
       {(static_cast<double>(total.sxy) / m - mx * my) / nd,
        (static_cast<double>(total.syy) / m - my * my) / nd}}};
  const SpectralData spectral = spectral_data(model);
  rep.clt_a = spectral.clt_a.to_double();
  rep.clt_b = spectral.clt_b.to_double();
  return rep;
}

std::string McReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = "tandemcount/1";
  j["report"] = "mc";
  j["model"] = std::string(model_name(model));
  j["n"] = n;
  j["samples"] = samples;
  j["seed"] = seed;
  j["survival"] = {{"frequency", survival_frequency},
                   {"radius_3se", survival_radius},
                   {"reference", survival_reference}};
  j["endpoint_mean"] = endpoint_mean;
  j["endpoint_covariance_over_n"] = endpoint_covariance_over_n;
  j["clt_reference"] = {{"a", clt_a}, {"b", clt_b}};
  j["box_exit"] = {{"frequency", box_exit_frequency},
                   {"radius_3se", box_exit_radius},
                   {"box_halfwidth_exponent", 2.0 / 3.0}};
  return j.dump();
}

}  // namespace tandemcount
