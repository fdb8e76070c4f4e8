#include "tandemcount/oracle.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>

#include "tandemcount/dp.hpp"

namespace tandemcount {

namespace {

void require_cap(int n, int cap, const char* what) {
  if (n > cap)
    throw EnumerationCapExceeded(std::string(what) + ": requested size exceeds enumeration cap (" +
                                 std::to_string(n) + " > " + std::to_string(cap) +
                                 "); raise the cap explicitly to override");
}

using Visit = std::function<void(const TandemWalk&, LatticePoint)>;

// DFS over P-admissible quadrant walks from the origin, branches in
// lexicographic step order (faces by dx asc, dy asc, then SE). ycap bounds
// the ordinate after `depth` steps; visit fires at every node.
void p_dfs_rec(int depth, int max_len, const std::function<int(int)>& ycap, TandemWalk& w,
               LatticePoint pos, const Visit& visit) {
  visit(w, pos);
  if (depth == max_len) return;
  const int dymax = ycap(depth + 1) - static_cast<int>(pos.y);
  const bool even = pos.y_even();
  for (int dx = -static_cast<int>(pos.x); dx <= 0; ++dx) {
    int dy0;
    if (even) {
      if (dx % 2 == 0)
        dy0 = 2;  // (-2l, 2r+2)
      else
        dy0 = 1;  // odd/odd
    } else {
      if (dx == 0) continue;  // odd ordinate needs dx <= -1
      dy0 = (dx % 2 == 0) ? 0 : 1;
    }
    for (int dy = dy0; dy <= dymax; dy += 2) {
      w.steps.push_back(Step::face(dx, dy));
      p_dfs_rec(depth + 1, max_len, ycap, w,
                {pos.x + dx, pos.y + dy}, visit);
      w.steps.pop_back();
    }
  }
  if (pos.y >= 1) {
    w.steps.push_back(Step::se());
    p_dfs_rec(depth + 1, max_len, ycap, w, {pos.x + 1, pos.y - 1}, visit);
    w.steps.pop_back();
  }
}

void p_dfs(int max_len, const std::function<int(int)>& ycap, const Visit& visit) {
  TandemWalk w;
  w.start = {0, 0};
  p_dfs_rec(0, max_len, ycap, w, w.start, visit);
}

using SVisit = std::function<void(const TandemWalk&, LatticePoint, int /*se_used*/,
                                  const BigInt& /*weight*/)>;

// DFS over S-admissible quadrant walks from (0,2); branching counts SE
// steps, so ycap is indexed by SE count. Face-step weights multiply.
void s_dfs_rec(int se_used, int se_max, const std::function<int(int)>& ycap, TandemWalk& w,
               LatticePoint pos, BigInt weight, const SVisit& visit) {
  visit(w, pos, se_used, weight);
  // face-steps keep the SE count; all have dx <= -1 except none (every
  // S shape has dx <= -1), so recursion terminates on x
  const int dymax = ycap(se_used) - static_cast<int>(pos.y);
  const bool even = pos.y_even();
  for (int dx = -static_cast<int>(pos.x); dx <= -1; ++dx) {
    const int i = -dx;
    int dy0;
    if (i % 2 == 0) {
      if (i < 2) continue;
      dy0 = 2;  // even entries (i=2l+2, j=2r+2)
    } else if (even) {
      dy0 = 3;  // (i=2l+1, j=2r+3)
    } else {
      if (i < 3) continue;
      dy0 = 1;  // (i=2l+3, j=2r+1)
    }
    for (int dy = dy0; dy <= dymax; dy += 2) {
      Step f = Step::face(dx, dy);
      auto fw = s_face_weight(pos, f);
      w.steps.push_back(f);
      s_dfs_rec(se_used, se_max, ycap, w, {pos.x + dx, pos.y + dy}, weight * *fw, visit);
      w.steps.pop_back();
    }
  }
  if (se_used < se_max && pos.y >= 1) {
    w.steps.push_back(Step::se());
    s_dfs_rec(se_used + 1, se_max, ycap, w, {pos.x + 1, pos.y - 1}, weight, visit);
    w.steps.pop_back();
  }
}

void s_dfs(int se_max, const std::function<int(int)>& ycap, const SVisit& visit) {
  TandemWalk w;
  w.start = {0, 2};
  s_dfs_rec(0, se_max, ycap, w, w.start, 1, visit);
}

}  // namespace

std::vector<TandemWalk> enumerate_p_walks(int length, int cap) {
  require_cap(length, cap, "enumerate_p_walks");
  std::vector<TandemWalk> out;
  if (length <= 0) return out;
  auto ycap = [&](int depth) { return length - depth; };
  p_dfs(length, ycap, [&](const TandemWalk& w, LatticePoint pos) {
    if (static_cast<int>(w.steps.size()) == length && pos.y == 0) out.push_back(w);
  });
  return out;
}

BigInt count_p_walks_to(int length, LatticePoint target, int cap) {
  require_cap(length, cap, "count_p_walks_to");
  BigInt count = 0;
  auto ycap = [&](int depth) { return static_cast<int>(target.y) + length - depth; };
  p_dfs(length, ycap, [&](const TandemWalk& w, LatticePoint pos) {
    if (static_cast<int>(w.steps.size()) == length && pos == target) ++count;
  });
  return count;
}

std::pair<std::vector<WeightedWalk>, BigInt> enumerate_s_walks(int se_count, int cap) {
  require_cap(se_count, cap, "enumerate_s_walks");
  std::vector<WeightedWalk> out;
  BigInt total = 0;
  auto ycap = [&](int se_used) { return se_count - se_used; };
  s_dfs(se_count, ycap,
        [&](const TandemWalk& w, LatticePoint pos, int se_used, const BigInt& weight) {
          if (se_used != se_count || !(pos == LatticePoint{2, 0})) return;
          bool has_face = false;
          for (const Step& s : w.steps) has_face = has_face || !s.is_se();
          if (!has_face) return;
          out.push_back({w, weight});
          total += weight;
        });
  return {std::move(out), std::move(total)};
}

void for_each_p_walk(int n_max, int j_window, const std::function<void(const TandemWalk&)>& visit,
                     int cap) {
  require_cap(n_max, cap, "for_each_p_walk");
  auto ycap = [&](int n) { return j_window + (n_max - n); };
  p_dfs(n_max, ycap, [&](const TandemWalk& w, LatticePoint) { visit(w); });
}

void for_each_s_walk(int se_max, int j_window,
                     const std::function<void(const TandemWalk&, const BigInt&)>& visit, int cap) {
  require_cap(se_max, cap, "for_each_s_walk");
  auto ycap = [&](int n) { return j_window + (se_max - n); };
  s_dfs(se_max, ycap,
        [&](const TandemWalk& w, LatticePoint, int, const BigInt& weight) { visit(w, weight); });
}

std::map<std::tuple<int, int, int>, BigInt> endpoint_census(Model model, int n_max, int j_window,
                                                            int cap) {
  require_cap(n_max, cap, "endpoint_census");
  std::map<std::tuple<int, int, int>, BigInt> census;
  auto ycap = [&](int n) { return j_window + (n_max - n); };
  if (model == Model::P) {
    p_dfs(n_max, ycap, [&](const TandemWalk& w, LatticePoint pos) {
      census[{static_cast<int>(w.steps.size()), static_cast<int>(pos.x),
              static_cast<int>(pos.y)}] += 1;
    });
  } else {
    s_dfs(n_max, ycap,
          [&](const TandemWalk&, LatticePoint pos, int se_used, const BigInt& weight) {
            census[{se_used, static_cast<int>(pos.x), static_cast<int>(pos.y)}] += weight;
          });
  }
  return census;
}

bool is_dyck_walk(const std::vector<bool>& steps) {
  if (steps.size() % 2 != 0) return false;
  int x = 0, y = 0;
  for (bool n_step : steps) {
    if (n_step)
      ++y;
    else
      ++x;
    if (x > y) return false;
  }
  return x == y;
}

namespace {

// abscissa of the N step starting at each height
std::vector<int> n_step_positions(const std::vector<bool>& steps) {
  std::vector<int> nu;
  int x = 0;
  for (bool n_step : steps) {
    if (n_step)
      nu.push_back(x);
    else
      ++x;
  }
  return nu;
}

}  // namespace

bool is_noncrossing(const DyckPair& pair) {
  if (!is_dyck_walk(pair.d) || !is_dyck_walk(pair.dprime)) return false;
  if (static_cast<int>(pair.d.size()) != 2 * pair.n ||
      static_cast<int>(pair.dprime.size()) != 2 * pair.n)
    return false;
  auto nu = n_step_positions(pair.d);
  auto nup = n_step_positions(pair.dprime);
  for (int h = 0; h < pair.n; ++h)
    if (nup[h] > nu[h]) return false;
  return true;
}

std::vector<DyckPair> enumerate_dyck_pairs(int n, int cap) {
  require_cap(n, cap, "enumerate_dyck_pairs");
  std::vector<std::vector<bool>> words;
  std::vector<bool> cur;
  auto rec = [&](auto&& self, int x, int y) -> void {
    if (static_cast<int>(cur.size()) == 2 * n) {
      words.push_back(cur);
      return;
    }
    // false = E first for lexicographic order
    if (x < y && x < n) {
      cur.push_back(false);
      self(self, x + 1, y);
      cur.pop_back();
    }
    if (y < n) {
      cur.push_back(true);
      self(self, x, y + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  std::vector<DyckPair> out;
  for (const auto& d : words) {
    for (const auto& dp : words) {
      DyckPair pair{n, d, dp};
      if (is_noncrossing(pair)) out.push_back(std::move(pair));
    }
  }
  return out;
}

bool is_one_aligned(const TandemWalk& w) {
  if (!(w.start == LatticePoint{0, 0})) return false;
  LatticePoint p = w.start;
  for (const Step& s : w.steps) {
    if (!s.is_se() && s.dy != 1) return false;
    p.x += s.dx;
    p.y += s.dy;
    if (!p.in_quadrant()) return false;
  }
  return p.y == 0;
}

std::vector<TandemWalk> enumerate_one_aligned(int n, int cap) {
  require_cap(n, cap, "enumerate_one_aligned");
  std::vector<TandemWalk> out;
  TandemWalk w;
  w.start = {0, 0};
  auto rec = [&](auto&& self, LatticePoint pos, int se_used, int face_used) -> void {
    if (se_used == n && face_used == n) {
      if (pos.y == 0) out.push_back(w);
      return;
    }
    if (face_used < n && pos.y < n - se_used) {  // y must return to 0 on SE steps
      for (int dx = -static_cast<int>(pos.x); dx <= 0; ++dx) {
        w.steps.push_back(Step::face(dx, 1));
        self(self, {pos.x + dx, pos.y + 1}, se_used, face_used + 1);
        w.steps.pop_back();
      }
    }
    if (se_used < n && pos.y >= 1) {
      w.steps.push_back(Step::se());
      self(self, {pos.x + 1, pos.y - 1}, se_used + 1, face_used);
      w.steps.pop_back();
    }
  };
  rec(rec, w.start, 0, 0);
  return out;
}

TandemWalk phi(const DyckPair& pair) {
  if (!is_noncrossing(pair)) throw std::invalid_argument("phi: not a non-crossing Dyck pair");
  auto nup = n_step_positions(pair.dprime);
  TandemWalk out;
  out.start = {0, 0};
  int x = 0, y = 0;
  LatticePoint prev{0, 0};
  for (bool n_step : pair.d) {
    if (n_step)
      ++y;
    else
      ++x;
    // alpha: distance to Dprime's N step arriving at height y; beta: y - x
    const LatticePoint next{x - nup[y - 1], y - x};
    out.steps.push_back(n_step ? Step::face(static_cast<int>(next.x - prev.x), 1) : Step::se());
    prev = next;
  }
  return out;
}

std::optional<DyckPair> phi_inverse(const TandemWalk& w) {
  if (!is_one_aligned(w)) return std::nullopt;
  DyckPair pair;
  pair.n = static_cast<int>(w.steps.size()) / 2;
  int x = 0, y = 0;
  LatticePoint pos{0, 0};
  std::vector<int> nup;
  for (const Step& s : w.steps) {
    pos.x += s.dx;
    pos.y += s.dy;
    if (s.is_se()) {
      ++x;
      pair.d.push_back(false);
    } else {
      ++y;
      pair.d.push_back(true);
      nup.push_back(static_cast<int>(x - pos.x));  // nu_D(y-1) - alpha
    }
  }
  // rebuild Dprime from its N-step abscissas
  int px = 0;
  for (int h = 0; h < pair.n; ++h) {
    if (nup[h] < px || nup[h] > h) return std::nullopt;
    while (px < nup[h]) {
      pair.dprime.push_back(false);
      ++px;
    }
    pair.dprime.push_back(true);
  }
  while (px < pair.n) {
    pair.dprime.push_back(false);
    ++px;
  }
  if (!is_noncrossing(pair)) return std::nullopt;
  if (!(phi(pair).steps == w.steps)) return std::nullopt;
  return pair;
}

TandemWalk bijS_lift(const TandemWalk& w) {
  if (!is_one_aligned(w)) throw std::invalid_argument("bijS_lift: walk not 1-aligned");
  TandemWalk out;
  out.start = {0, 2};
  out.steps = {Step::se(), Step::se()};
  for (const Step& s : w.steps) {
    if (s.is_se()) {
      out.steps.push_back(Step::se());
      out.steps.push_back(Step::se());
    } else {
      out.steps.push_back(Step::face(2 * s.dx - 1, 3));
      out.steps.push_back(Step::se());
    }
  }
  const long long dprime = w.end().x;
  out.steps.push_back(Step::face(static_cast<int>(-2 * dprime - 2), 2));
  out.steps.push_back(Step::se());
  out.steps.push_back(Step::se());
  return out;
}

std::optional<TandemWalk> bijS_project(const TandemWalk& w) {
  const size_t len = w.steps.size();
  if (!(w.start == LatticePoint{0, 2}) || len < 5) return std::nullopt;
  TandemWalk base;
  base.start = {0, 0};
  size_t k = 0;
  if (!w.steps[k].is_se() || !w.steps[k + 1].is_se()) return std::nullopt;
  k += 2;
  while (k < len - 3) {
    const Step& s = w.steps[k];
    if (s.is_se()) {
      if (k + 1 >= len - 3 || !w.steps[k + 1].is_se()) return std::nullopt;
      base.steps.push_back(Step::se());
      k += 2;
    } else {
      // (-2i-1, 3) followed by SE
      if (s.dy != 3 || (-s.dx) % 2 != 1) return std::nullopt;
      if (k + 1 >= len - 3 || !w.steps[k + 1].is_se()) return std::nullopt;
      base.steps.push_back(Step::face((s.dx + 1) / 2, 1));
      k += 2;
    }
  }
  const Step& tail = w.steps[len - 3];
  if (tail.is_se() || tail.dy != 2) return std::nullopt;
  if (!w.steps[len - 2].is_se() || !w.steps[len - 1].is_se()) return std::nullopt;
  if (!is_one_aligned(base)) return std::nullopt;
  if (!(bijS_lift(base).steps == w.steps)) return std::nullopt;
  return base;
}

BigInt catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan: negative index");
  BigInt c = 1;
  for (int k = 0; k < n; ++k) {
    c *= 2 * (2 * k + 1);
    c /= (k + 2);
  }
  return c;
}

BigInt noncrossing_formula(int a) {
  if (a < 1) throw std::invalid_argument("noncrossing_formula: a >= 1 required");
  return catalan(a + 1) * catalan(a - 1) - catalan(a) * catalan(a);
}

std::string CrosscheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = "tandemcount/1";
  j["check"] = "crosscheck";
  j["model"] = std::string(model_name(model));
  j["n_max"] = n_max;
  j["status"] = ok ? "ok" : "mismatch";
  j["cells_compared"] = cells_compared;
  if (!ok) {
    j["cell"] = {std::get<0>(cell), std::get<1>(cell), std::get<2>(cell)};
    j["dp"] = dp_value.str();
    j["oracle"] = oracle_value.str();
  }
  return j.dump();
}

CrosscheckReport crosscheck(Model model, int n_max, int j_window, int cap) {
  CrosscheckReport report;
  report.model = model;
  report.n_max = n_max;
  auto census = endpoint_census(model, n_max, j_window, cap);
  DpTableS ts;
  DpTableP tp;
  if (model == Model::P)
    tp = run_p_dp(n_max, j_window);
  else
    ts = run_s_dp(n_max, j_window);
  for (int n = 0; n <= n_max; ++n) {
    for (int i = 0; i <= n + 2; ++i) {
      for (int j = 0; j <= j_window; ++j) {
        const BigInt dp_value = model == Model::P ? tp.family_sum(n, {i, j})
                                                  : ts.family_sum(n, {i, j});
        auto it = census.find({n, i, j});
        const BigInt oracle_value = it == census.end() ? BigInt(0) : it->second;
        ++report.cells_compared;
        if (dp_value != oracle_value) {
          report.ok = false;
          report.cell = {n, i, j};
          report.dp_value = dp_value;
          report.oracle_value = oracle_value;
          return report;
        }
      }
    }
  }
  return report;
}

}  // namespace tandemcount
