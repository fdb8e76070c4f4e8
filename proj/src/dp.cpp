#include "tandemcount/dp.hpp"

#include <algorithm>
#include <stdexcept>
#include <type_traits>

namespace tandemcount {

void UvPoly::accumulate_shifted(const UvPoly& src, int du, int dv, DpStats* stats) {
  for (const auto& [e, c] : src.terms) {
    auto key = std::make_pair(e.first + du, e.second + dv);
    auto it = terms.find(key);
    if (it == terms.end()) {
      terms.emplace(key, c);
    } else {
      it->second += c;
      if (stats) ++stats->bignum_adds;
      if (it->second == 0) terms.erase(it);
    }
  }
}

namespace {

// Cell operations shared by the exact and refined runs. acc_se is the
// rule for the SE-step recurrence, which in refined runs multiplies by u
// when the endpoint ordinate j is odd and by v when it is even.
struct IntCell {
  using T = BigInt;
  static bool zero(const T& c) { return c.is_zero(); }
  static void acc(T& dst, const T& src, DpStats* stats) {
    if (src.is_zero()) return;
    dst += src;
    if (stats) ++stats->bignum_adds;
  }
  static void acc_se(T& dst, const T& src, bool /*j_odd*/, DpStats* stats) {
    acc(dst, src, stats);
  }
};

struct PolyCell {
  using T = UvPoly;
  static bool zero(const T& c) { return c.is_zero(); }
  static void acc(T& dst, const T& src, DpStats* stats) {
    dst.accumulate_shifted(src, 0, 0, stats);
  }
  static void acc_se(T& dst, const T& src, bool j_odd, DpStats* stats) {
    dst.accumulate_shifted(src, j_odd ? 1 : 0, j_odd ? 0 : 1, stats);
  }
};

inline int layer_j_cap(int n, int total_layers, int y_slack) {
  return std::max(0, y_slack + (total_layers - n));
}

// S model stepper. Layer n holds walks from (0,2) with n SE steps.
//   searrow_n(i,j) = [searrow + nwarrow]_{n-1}(i-1, j+1)
//   nwarrow_n(i,j) = [both]_n(i+2, j-2)
//                  + (j odd ? [both]_n(i+1, j-3) : [both]_n(i+3, j-1))
//                  + nwarrow_n(i+2, j) + nwarrow_n(i, j-2)
// with zero boundary (i<0, j<0, i>n) and seed searrow_0(0,2) = 1.
template <class Ops>
class SEngine {
 public:
  using Cell = typename Ops::T;

  SEngine(int total_layers, int y_slack, DpStats* stats)
      : total_(total_layers), slack_(y_slack), stats_(stats) {
    const int jc = layer_j_cap(0, total_, slack_);
    se_.reset(0, jc);
    nw_.reset(0, jc);
    if (jc >= 2) seed(se_.mut(0, 2));
  }

  int layer() const { return n_; }
  const DpLayer<Cell>& searrow() const { return se_; }
  const DpLayer<Cell>& nwarrow() const { return nw_; }

  void advance() {
    const int n = n_ + 1;
    const int ic = std::min(n, total_);
    const int jc = layer_j_cap(n, total_, slack_);
    DpLayer<Cell> se_next, nw_next;
    se_next.reset(ic, jc);
    nw_next.reset(ic, jc);
    for (int j = 0; j <= jc; ++j) {
      const bool j_odd = (j % 2) != 0;
      for (int i = 0; i <= ic; ++i) {
        Cell& dst = se_next.mut(i, j);
        Ops::acc_se(dst, se_.at(i - 1, j + 1), j_odd, stats_);
        Ops::acc_se(dst, nw_.at(i - 1, j + 1), j_odd, stats_);
      }
    }
    for (int j = 0; j <= jc; ++j) {
      const bool j_odd = (j % 2) != 0;
      for (int i = ic; i >= 0; --i) {
        Cell& dst = nw_next.mut(i, j);
        Ops::acc(dst, se_next.at(i + 2, j - 2), stats_);
        Ops::acc(dst, nw_next.at(i + 2, j - 2), stats_);
        if (j_odd) {
          Ops::acc(dst, se_next.at(i + 1, j - 3), stats_);
          Ops::acc(dst, nw_next.at(i + 1, j - 3), stats_);
        } else {
          Ops::acc(dst, se_next.at(i + 3, j - 1), stats_);
          Ops::acc(dst, nw_next.at(i + 3, j - 1), stats_);
        }
        Ops::acc(dst, nw_next.at(i + 2, j), stats_);
        Ops::acc(dst, nw_next.at(i, j - 2), stats_);
      }
    }
    se_ = std::move(se_next);
    nw_ = std::move(nw_next);
    n_ = n;
  }

 private:
  static void seed(BigInt& c) { c = 1; }
  static void seed(UvPoly& c) { c.terms[{0, 0}] = 1; }

  int total_;
  int slack_;
  DpStats* stats_;
  int n_ = 0;
  DpLayer<Cell> se_, nw_;
};

// P model stepper. Layer n holds walks from the origin of length n.
//   searrow_n(i,j) = [all three]_{n-1}(i-1, j+1)
//   nwarrow_n(i,j) = [all three]_{n-1}(i+1, j-1)
//                  + (j even ? [all three]_{n-1}(i, j-2)
//                            : [all three]_{n-1}(i+2, j))
//                  + nwarrow_n(i+2, j)
//   uparrow_n(i,j) = nwarrow_n(i, j-2) + uparrow_n(i, j-2)
// with zero boundary and seed searrow_0(0,0) = 1. The parity split keys on
// the face block's start ordinate: a marked (0,2) starts (and ends) at even
// ordinate, a marked (-2,0) at odd.
template <class Ops>
class PEngine {
 public:
  using Cell = typename Ops::T;

  PEngine(int total_layers, int y_slack, DpStats* stats)
      : total_(total_layers), slack_(y_slack), stats_(stats) {
    const int jc = layer_j_cap(0, total_, slack_);
    se_.reset(0, jc);
    nw_.reset(0, jc);
    up_.reset(0, jc);
    seed(se_.mut(0, 0));
  }

  int layer() const { return n_; }
  const DpLayer<Cell>& searrow() const { return se_; }
  const DpLayer<Cell>& nwarrow() const { return nw_; }
  const DpLayer<Cell>& uparrow() const { return up_; }

  void advance() {
    const int n = n_ + 1;
    const int ic = std::min(n, total_);
    const int jc = layer_j_cap(n, total_, slack_);
    DpLayer<Cell> se_next, nw_next, up_next;
    se_next.reset(ic, jc);
    nw_next.reset(ic, jc);
    up_next.reset(ic, jc);
    auto prev3 = [&](Cell& dst, int i, int j) {
      Ops::acc(dst, se_.at(i, j), stats_);
      Ops::acc(dst, nw_.at(i, j), stats_);
      Ops::acc(dst, up_.at(i, j), stats_);
    };
    for (int j = 0; j <= jc; ++j) {
      const bool j_odd = (j % 2) != 0;
      for (int i = 0; i <= ic; ++i) {
        Cell& dst = se_next.mut(i, j);
        Ops::acc_se(dst, se_.at(i - 1, j + 1), j_odd, stats_);
        Ops::acc_se(dst, nw_.at(i - 1, j + 1), j_odd, stats_);
        Ops::acc_se(dst, up_.at(i - 1, j + 1), j_odd, stats_);
      }
    }
    for (int j = 0; j <= jc; ++j) {
      const bool j_odd = (j % 2) != 0;
      for (int i = ic; i >= 0; --i) {
        Cell& dst = nw_next.mut(i, j);
        prev3(dst, i + 1, j - 1);
        if (j_odd)
          prev3(dst, i + 2, j);
        else
          prev3(dst, i, j - 2);
        Ops::acc(dst, nw_next.at(i + 2, j), stats_);
      }
    }
    for (int j = 0; j <= jc; ++j) {
      for (int i = 0; i <= ic; ++i) {
        Cell& dst = up_next.mut(i, j);
        Ops::acc(dst, nw_next.at(i, j - 2), stats_);
        Ops::acc(dst, up_next.at(i, j - 2), stats_);
      }
    }
    se_ = std::move(se_next);
    nw_ = std::move(nw_next);
    up_ = std::move(up_next);
    n_ = n;
  }

 private:
  static void seed(BigInt& c) { c = 1; }
  static void seed(UvPoly& c) { c.terms[{0, 0}] = 1; }

  int total_;
  int slack_;
  DpStats* stats_;
  int n_ = 0;
  DpLayer<Cell> se_, nw_, up_;
};

void check_nonnegative(int n) {
  if (n < 0) throw std::invalid_argument("dp: negative layer count");
}

template <class Ops>
DpTableSBasic<typename Ops::T> run_s_impl(int n_layers, int y_slack, DpStats* stats) {
  check_nonnegative(n_layers);
  DpTableSBasic<typename Ops::T> table;
  table.n_layers = n_layers;
  table.y_slack = y_slack;
  SEngine<Ops> eng(n_layers, y_slack, stats);
  table.searrow.push_back(eng.searrow());
  table.nwarrow.push_back(eng.nwarrow());
  for (int n = 1; n <= n_layers; ++n) {
    eng.advance();
    table.searrow.push_back(eng.searrow());
    table.nwarrow.push_back(eng.nwarrow());
  }
  return table;
}

template <class Ops>
DpTablePBasic<typename Ops::T> run_p_impl(int n_layers, int y_slack, DpStats* stats) {
  check_nonnegative(n_layers);
  DpTablePBasic<typename Ops::T> table;
  table.n_layers = n_layers;
  table.y_slack = y_slack;
  PEngine<Ops> eng(n_layers, y_slack, stats);
  table.searrow.push_back(eng.searrow());
  table.nwarrow.push_back(eng.nwarrow());
  table.uparrow.push_back(eng.uparrow());
  for (int n = 1; n <= n_layers; ++n) {
    eng.advance();
    table.searrow.push_back(eng.searrow());
    table.nwarrow.push_back(eng.nwarrow());
    table.uparrow.push_back(eng.uparrow());
  }
  return table;
}

template <class Cell>
Cell axis_sum(const DpLayer<Cell>& layer) {
  Cell out{};
  DpStats* none = nullptr;
  for (int i = 0; i <= layer.i_cap; ++i) {
    if constexpr (std::is_same_v<Cell, BigInt>)
      IntCell::acc(out, layer.at(i, 0), none);
    else
      PolyCell::acc(out, layer.at(i, 0), none);
  }
  return out;
}

}  // namespace

template <class Cell>
const Cell& DpTableSBasic<Cell>::searrow_at(int n, int i, int j) const {
  static const Cell kZero{};
  if (n < 0 || n > n_layers) return kZero;
  return searrow[n].at(i, j);
}
template <class Cell>
const Cell& DpTableSBasic<Cell>::nwarrow_at(int n, int i, int j) const {
  static const Cell kZero{};
  if (n < 0 || n > n_layers) return kZero;
  return nwarrow[n].at(i, j);
}
template <class Cell>
Cell DpTableSBasic<Cell>::family_sum(int n, LatticePoint t) const {
  Cell out{};
  DpStats* none = nullptr;
  const int i = static_cast<int>(t.x), j = static_cast<int>(t.y);
  if constexpr (std::is_same_v<Cell, BigInt>) {
    IntCell::acc(out, searrow_at(n, i, j), none);
    IntCell::acc(out, nwarrow_at(n, i, j), none);
  } else {
    PolyCell::acc(out, searrow_at(n, i, j), none);
    PolyCell::acc(out, nwarrow_at(n, i, j), none);
  }
  return out;
}

template <class Cell>
const Cell& DpTablePBasic<Cell>::searrow_at(int n, int i, int j) const {
  static const Cell kZero{};
  if (n < 0 || n > n_layers) return kZero;
  return searrow[n].at(i, j);
}
template <class Cell>
const Cell& DpTablePBasic<Cell>::nwarrow_at(int n, int i, int j) const {
  static const Cell kZero{};
  if (n < 0 || n > n_layers) return kZero;
  return nwarrow[n].at(i, j);
}
template <class Cell>
const Cell& DpTablePBasic<Cell>::uparrow_at(int n, int i, int j) const {
  static const Cell kZero{};
  if (n < 0 || n > n_layers) return kZero;
  return uparrow[n].at(i, j);
}
template <class Cell>
Cell DpTablePBasic<Cell>::family_sum(int n, LatticePoint t) const {
  Cell out{};
  DpStats* none = nullptr;
  const int i = static_cast<int>(t.x), j = static_cast<int>(t.y);
  if constexpr (std::is_same_v<Cell, BigInt>) {
    IntCell::acc(out, searrow_at(n, i, j), none);
    IntCell::acc(out, nwarrow_at(n, i, j), none);
    IntCell::acc(out, uparrow_at(n, i, j), none);
  } else {
    PolyCell::acc(out, searrow_at(n, i, j), none);
    PolyCell::acc(out, nwarrow_at(n, i, j), none);
    PolyCell::acc(out, uparrow_at(n, i, j), none);
  }
  return out;
}

template struct DpTableSBasic<BigInt>;
template struct DpTableSBasic<UvPoly>;
template struct DpTablePBasic<BigInt>;
template struct DpTablePBasic<UvPoly>;

DpTableS run_s_dp(int n_layers, int y_slack, DpStats* stats) {
  return run_s_impl<IntCell>(n_layers, y_slack, stats);
}
DpTableSRefined run_s_dp_refined(int n_layers, int y_slack, DpStats* stats) {
  return run_s_impl<PolyCell>(n_layers, y_slack, stats);
}
DpTableP run_p_dp(int n_layers, int y_slack, DpStats* stats) {
  return run_p_impl<IntCell>(n_layers, y_slack, stats);
}
DpTablePRefined run_p_dp_refined(int n_layers, int y_slack, DpStats* stats) {
  return run_p_impl<PolyCell>(n_layers, y_slack, stats);
}

std::vector<BigInt> s_prime_sequence(int hi, DpStats* stats) {
  check_nonnegative(hi);
  std::vector<BigInt> sp;
  sp.reserve(hi + 1);
  const int total = hi + 2;
  SEngine<IntCell> eng(total, 0, stats);
  for (int n = 1; n <= total; ++n) {
    eng.advance();
    if (n >= 2) sp.push_back(eng.searrow().at(2, 0));
  }
  return sp;
}

SeriesPoly count_s_series(int n_max, DpStats* stats) {
  if (n_max < 2) throw std::invalid_argument("count_s_series: n_max >= 2 required");
  auto sp = s_prime_sequence(n_max, stats);
  SeriesPoly out("t");
  out.set_term({2}, 3);  // stored constant: the s' relation starts at n = 3
  out.flagged_constants.push_back({2});
  for (int n = 3; n <= n_max; ++n) out.set_term({n}, sp[n] + 2 * sp[n - 1] + sp[n - 2]);
  return out;
}

SeriesPoly count_s_tilde(int n_max) {
  if (n_max < 2) throw std::invalid_argument("count_s_tilde: n_max >= 2 required");
  SeriesPoly num = count_s_series(n_max);
  num.flagged_constants.clear();
  num.add_term({0}, 1);
  num.add_term({1}, 3);
  SeriesPoly div = unit_binomial_power("t", "t", 3);
  SeriesPoly q = num.divided_truncated(div, 't', n_max);
  q.add_term({0}, -1);
  return q;
}

namespace {

// s'_{a,b} monomials for total degree a+b <= hi+2, from the refined run.
std::map<std::pair<int, int>, BigInt> s_prime_refined(int hi) {
  const int total = hi + 2;
  SEngine<PolyCell> eng(total, 0, nullptr);
  std::map<std::pair<int, int>, BigInt> sp;
  for (int n = 1; n <= total; ++n) {
    eng.advance();
    if (n < 2) continue;
    for (const auto& [e, c] : eng.searrow().at(2, 0).terms) sp[e] += c;
  }
  return sp;
}

}  // namespace

SeriesPoly count_s_refined(int n_max) {
  if (n_max < 2) throw std::invalid_argument("count_s_refined: n_max >= 2 required");
  auto sp = s_prime_refined(n_max);
  auto spv = [&](int a, int b) -> BigInt {
    auto it = sp.find({a, b});
    return it == sp.end() ? BigInt(0) : it->second;
  };
  SeriesPoly out("uvt");
  out.set_term({2, 2, 2}, 3);
  out.set_term({3, 2, 3}, 1);
  out.set_term({2, 3, 3}, 1);
  out.flagged_constants = {{2, 2, 2}, {3, 2, 3}, {2, 3, 3}};
  for (int a = 3; a <= n_max + 2; ++a) {
    for (int b = 3; a + b - 2 <= n_max; ++b) {
      BigInt c = spv(a, b) + spv(a, b - 1) + spv(a - 1, b) + spv(a - 1, b - 1);
      if (c != 0) out.set_term({a, b, a + b - 2}, std::move(c));
    }
  }
  return out;
}

SeriesPoly count_s_tilde_refined(int n_max) {
  SeriesPoly num = count_s_refined(n_max);
  num.flagged_constants.clear();
  num.add_term({2, 0, 0}, 1);
  num.add_term({2, 1, 1}, 3);
  SeriesPoly div = unit_binomial_power("uvt", "vt", 3);
  SeriesPoly q = num.divided_truncated(div, 't', n_max);
  q.add_term({2, 0, 0}, -1);
  return q;
}

SeriesPoly count_p_series(int n_max, DpStats* stats) {
  if (n_max < 1) throw std::invalid_argument("count_p_series: n_max >= 1 required");
  SeriesPoly out("t");
  PEngine<IntCell> eng(n_max, 0, stats);
  for (int n = 1; n <= n_max; ++n) {
    eng.advance();
    out.set_term({n}, axis_sum(eng.searrow()));
  }
  return out;
}

SeriesPoly count_p_refined(int n_max) {
  if (n_max < 1) throw std::invalid_argument("count_p_refined: n_max >= 1 required");
  SeriesPoly out("uvwt");
  PEngine<PolyCell> eng(n_max, 0, nullptr);
  for (int n = 1; n <= n_max; ++n) {
    eng.advance();
    UvPoly p = axis_sum(eng.searrow());
    for (const auto& [e, c] : p.terms) {
      const int a = e.first, b = e.second;
      out.set_term({a, b, n - a - b, n}, c);
    }
  }
  return out;
}

BigInt count_p_to(int n, LatticePoint target) {
  check_nonnegative(n);
  if (!target.in_quadrant()) return 0;
  PEngine<IntCell> eng(n, static_cast<int>(target.y), nullptr);
  for (int k = 0; k < n; ++k) eng.advance();
  const int i = static_cast<int>(target.x), j = static_cast<int>(target.y);
  BigInt out = eng.searrow().at(i, j);
  out += eng.nwarrow().at(i, j);
  out += eng.uparrow().at(i, j);
  return out;
}

BigInt count_s_to(int n, LatticePoint target) {
  check_nonnegative(n);
  if (!target.in_quadrant()) return 0;
  SEngine<IntCell> eng(n, static_cast<int>(target.y), nullptr);
  for (int k = 0; k < n; ++k) eng.advance();
  const int i = static_cast<int>(target.x), j = static_cast<int>(target.y);
  BigInt out = eng.searrow().at(i, j);
  out += eng.nwarrow().at(i, j);
  return out;
}

}  // namespace tandemcount
