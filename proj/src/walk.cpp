#include "tandemcount/walk.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace tandemcount {

std::string_view model_name(Model m) { return m == Model::P ? "p" : "s"; }

double bigint_log(const BigInt& x) {
  if (x <= 0) throw std::domain_error("bigint_log: nonpositive argument");
  const auto bits = boost::multiprecision::msb(x);
  if (bits <= 16000)  // within long double range
    return static_cast<double>(std::log(x.convert_to<long double>()));
  const unsigned shift = static_cast<unsigned>(bits - 64);
  const BigInt top = x / boost::multiprecision::pow(BigInt(2), shift);
  return std::log(top.convert_to<double>()) + shift * std::log(2.0);
}

Step Step::face(int dx, int dy) {
  if (dx > 0 || dy < 0) throw std::invalid_argument("face step needs dx<=0, dy>=0");
  return Step{dx, dy};
}

LatticePoint TandemWalk::end() const {
  LatticePoint p = start;
  for (const Step& s : steps) {
    p.x += s.dx;
    p.y += s.dy;
  }
  return p;
}

std::vector<LatticePoint> TandemWalk::points() const {
  std::vector<LatticePoint> pts;
  pts.reserve(steps.size() + 1);
  LatticePoint p = start;
  pts.push_back(p);
  for (const Step& s : steps) {
    p.x += s.dx;
    p.y += s.dy;
    pts.push_back(p);
  }
  return pts;
}

bool TandemWalk::is_even_walk() const {
  for (const Step& s : steps)
    if (!s.is_se() && !s.parity_even()) return false;
  return true;
}

bool p_step_admissible(LatticePoint pos, Step step) {
  if (step.is_se()) return true;
  if (!step.parity_even()) return false;
  return pos.y_even() ? step.dy >= 1 : step.dx <= -1;
}

std::optional<BigInt> s_face_weight(LatticePoint pos, Step step) {
  if (step.is_se()) throw std::invalid_argument("s_face_weight: SE step");
  const int i = -step.dx, j = step.dy;
  if (i < 0 || j < 0) return std::nullopt;
  int l = -1, r = -1;
  if (i % 2 == 0 && j % 2 == 0) {
    // even entries: any start parity
    l = (i - 2) / 2;
    r = (j - 2) / 2;
    if (i < 2 || j < 2) return std::nullopt;
  } else if (i % 2 == 1 && j % 2 == 1) {
    if (pos.y_even()) {
      // i = 2l+1, j = 2r+3
      if (j < 3) return std::nullopt;
      l = (i - 1) / 2;
      r = (j - 3) / 2;
    } else {
      // i = 2l+3, j = 2r+1
      if (i < 3) return std::nullopt;
      l = (i - 3) / 2;
      r = (j - 1) / 2;
    }
  } else {
    return std::nullopt;  // not an even tandem step
  }
  return binomial(l + r, r);
}

bool validate_p_walk(const TandemWalk& w, bool require_axis_end) {
  LatticePoint p = w.start;
  if (!p.in_quadrant()) return false;
  for (const Step& s : w.steps) {
    if (!p_step_admissible(p, s)) return false;
    p.x += s.dx;
    p.y += s.dy;
    if (!p.in_quadrant()) return false;
  }
  return !require_axis_end || p.y == 0;
}

std::optional<BigInt> validate_s_walk(const TandemWalk& w) {
  if (!(w.start == LatticePoint{0, 2})) return std::nullopt;
  LatticePoint p = w.start;
  BigInt weight = 1;
  bool has_face = false;
  for (const Step& s : w.steps) {
    if (s.is_se()) {
      // nothing beyond quadrant confinement below
    } else {
      auto fw = s_face_weight(p, s);
      if (!fw) return std::nullopt;
      weight *= *fw;
      has_face = true;
    }
    p.x += s.dx;
    p.y += s.dy;
    if (!p.in_quadrant()) return std::nullopt;
  }
  if (!has_face) return std::nullopt;
  if (!(p == LatticePoint{2, 0})) return std::nullopt;
  return weight;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (int t = 1; t <= k; ++t) {
    result *= (n - k + t);
    result /= t;
  }
  return result;
}

std::string walk_to_text(const TandemWalk& w, const std::vector<BigInt>* weights) {
  std::ostringstream os;
  os << "start=(" << w.start.x << "," << w.start.y << "); steps=[";
  for (size_t k = 0; k < w.steps.size(); ++k) {
    if (k) os << ",";
    os << "(" << w.steps[k].dx << "," << w.steps[k].dy << ")";
    if (weights && (*weights)[k] != 1) os << (*weights)[k].str();
  }
  os << "]";
  return os.str();
}

namespace {

// Minimal recursive-descent helpers for the walk grammar.
bool eat(std::string_view& s, std::string_view tok) {
  if (s.substr(0, tok.size()) != tok) return false;
  s.remove_prefix(tok.size());
  return true;
}

std::optional<long long> eat_int(std::string_view& s) {
  size_t k = 0;
  if (k < s.size() && (s[k] == '-' || s[k] == '+')) ++k;
  size_t d = k;
  while (d < s.size() && s[d] >= '0' && s[d] <= '9') ++d;
  if (d == k) return std::nullopt;
  long long v = std::stoll(std::string(s.substr(0, d)));
  s.remove_prefix(d);
  return v;
}

}  // namespace

std::optional<TandemWalk> walk_from_text(std::string_view s) {
  TandemWalk w;
  if (!eat(s, "start=(")) return std::nullopt;
  auto x = eat_int(s);
  if (!x || !eat(s, ",")) return std::nullopt;
  auto y = eat_int(s);
  if (!y || !eat(s, "); steps=[")) return std::nullopt;
  w.start = {*x, *y};
  bool first = true;
  while (!eat(s, "]")) {
    if (!first && !eat(s, ",")) return std::nullopt;
    first = false;
    if (!eat(s, "(")) return std::nullopt;
    auto dx = eat_int(s);
    if (!dx || !eat(s, ",")) return std::nullopt;
    auto dy = eat_int(s);
    if (!dy || !eat(s, ")")) return std::nullopt;
    // optional weight suffix: parsed and discarded (weights are derived data)
    while (!s.empty() && s[0] >= '0' && s[0] <= '9') s.remove_prefix(1);
    if (*dx > std::numeric_limits<int>::max() || *dy > std::numeric_limits<int>::max())
      return std::nullopt;
    w.steps.push_back(Step{static_cast<int>(*dx), static_cast<int>(*dy)});
  }
  if (!s.empty()) return std::nullopt;
  return w;
}

}  // namespace tandemcount
