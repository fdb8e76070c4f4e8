#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "tandemcount/series.hpp"
#include "tandemcount/walk.hpp"

namespace tandemcount {

/// Counts exact-arithmetic work done by a DP run; the layered recurrences
/// perform O(n^3) bignum additions on integers of O(n) digits.
struct DpStats {
  std::uint64_t bignum_adds = 0;
};

/// Polynomial in (u,v) with BigInt coefficients; the cell type of refined
/// DP runs.
struct UvPoly {
  std::map<std::pair<int, int>, BigInt> terms;

  bool is_zero() const { return terms.empty(); }
  /// *this += src * u^du * v^dv
  void accumulate_shifted(const UvPoly& src, int du, int dv, DpStats* stats);
  friend bool operator==(const UvPoly&, const UvPoly&) = default;
};

/// One DP layer: dense (i,j) arrays with layer-local bounds. Entries outside
/// [0..i_cap] x [0..j_cap] are zero (and inaccessible cells with i>n or j
/// above the pruning cap provably cannot reach the extraction targets).
template <class Cell>
struct DpLayer {
  int i_cap = -1;
  int j_cap = -1;
  std::vector<Cell> data;

  void reset(int ic, int jc) {
    i_cap = ic;
    j_cap = jc;
    data.assign(static_cast<size_t>(ic + 1) * (jc + 1), Cell{});
  }
  const Cell& at(int i, int j) const {
    static const Cell kZero{};
    if (i < 0 || j < 0 || i > i_cap || j > j_cap) return kZero;
    return data[static_cast<size_t>(i) * (j_cap + 1) + j];
  }
  Cell& mut(int i, int j) { return data[static_cast<size_t>(i) * (j_cap + 1) + j]; }
};

/// Layered tables for the S model (layers indexed by SE-step count n):
/// searrow = walks whose small-step image ends with SE, nwarrow = ends with
/// a face block. Tables are pruned for extraction targets with final
/// ordinate <= y_slack at layer n_layers; cells with j above the per-layer
/// cap cannot contribute to those targets.
template <class Cell>
struct DpTableSBasic {
  int n_layers = 0;
  int y_slack = 0;
  std::vector<DpLayer<Cell>> searrow;
  std::vector<DpLayer<Cell>> nwarrow;

  const Cell& searrow_at(int n, int i, int j) const;
  const Cell& nwarrow_at(int n, int i, int j) const;
  /// Sum over both families at a point (weighted count of admissible
  /// quadrant walks with n SE steps ending there).
  Cell family_sum(int n, LatticePoint target) const;
};
using DpTableS = DpTableSBasic<BigInt>;
using DpTableSRefined = DpTableSBasic<UvPoly>;

/// Same for the P model (layers indexed by walk length), three families.
template <class Cell>
struct DpTablePBasic {
  int n_layers = 0;
  int y_slack = 0;
  std::vector<DpLayer<Cell>> searrow;
  std::vector<DpLayer<Cell>> nwarrow;
  std::vector<DpLayer<Cell>> uparrow;

  const Cell& searrow_at(int n, int i, int j) const;
  const Cell& nwarrow_at(int n, int i, int j) const;
  const Cell& uparrow_at(int n, int i, int j) const;
  Cell family_sum(int n, LatticePoint target) const;
};
using DpTableP = DpTablePBasic<BigInt>;
using DpTablePRefined = DpTablePBasic<UvPoly>;

/// Full-table runs (O(n^3) memory; series extraction below streams two
/// layers instead). y_slack is the largest final ordinate the table must be
/// exact for at layer n_layers.
DpTableS run_s_dp(int n_layers, int y_slack = 0, DpStats* stats = nullptr);
DpTableSRefined run_s_dp_refined(int n_layers, int y_slack = 0, DpStats* stats = nullptr);
DpTableP run_p_dp(int n_layers, int y_slack = 0, DpStats* stats = nullptr);
DpTablePRefined run_p_dp_refined(int n_layers, int y_slack = 0, DpStats* stats = nullptr);

/// s'_0..s'_hi where s'_n = searrow_{n+2}(2,0) (Schnyder labelings with
/// non-isolated outer G vertices).
std::vector<BigInt> s_prime_sequence(int hi, DpStats* stats = nullptr);

/// Schnyder counting series sum s_n t^n, 2 <= n <= n_max, with
/// s_n = s'_n + 2 s'_{n-1} + s'_{n-2} for n >= 3 and the fixed
/// constant s_2 = 3 (the relation does not extend to n = 2).
SeriesPoly count_s_series(int n_max, DpStats* stats = nullptr);

/// Non-isolated-outer-white refinement: (1 + 3t + sum s_n t^n)/(1+t)^3 - 1.
SeriesPoly count_s_tilde(int n_max);

/// Bivariate refinement sum s_{a,b} u^a v^b t^{a+b-2}. Terms with a,b >= 3
/// come from s_{a,b} = s'_{a,b}+s'_{a,b-1}+s'_{a-1,b}+s'_{a-1,b-1}; the
/// low-order terms 3u^2v^2t^2, u^3v^2t^3, u^2v^3t^3 are stored constants and
/// flagged in the output metadata.
SeriesPoly count_s_refined(int n_max);

/// Bivariate tilde series (u^2(1+3vt) + sum s_{a,b} u^a v^b t^{a+b-2})
/// / (1+vt)^3 - u^2.
SeriesPoly count_s_tilde_refined(int n_max);

/// Corner-polyhedra series sum p_n t^n, p_n = sum_i searrow_n(i,0).
SeriesPoly count_p_series(int n_max, DpStats* stats = nullptr);

/// Trivariate refinement sum p_{a,b,c} u^a v^b w^c t^n with c = n-a-b.
SeriesPoly count_p_refined(int n_max);

/// Number (or total weight) of quadrant-confined admissible walks with the
/// stated length / SE count ending at target (all families summed).
BigInt count_p_to(int n, LatticePoint target);
BigInt count_s_to(int n, LatticePoint target);

}  // namespace tandemcount
