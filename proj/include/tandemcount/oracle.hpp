#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "tandemcount/walk.hpp"

namespace tandemcount {

/// Guard against runaway exhaustive enumeration; overridable per call.
inline constexpr int kDefaultEnumerationCap = 9;

/// Thrown when an enumeration request exceeds its cap.
struct EnumerationCapExceeded : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// All P-admissible quadrant walks of length `length` from the origin ending
/// on the x-axis, in lexicographic step order (faces by (dx asc, dy asc),
/// then SE). The empty walk is not listed (length 0 yields nothing).
std::vector<TandemWalk> enumerate_p_walks(int length, int cap = kDefaultEnumerationCap);

/// Brute-force count of P-admissible quadrant walks of length n from the
/// origin to `target`.
BigInt count_p_walks_to(int length, LatticePoint target, int cap = kDefaultEnumerationCap);

struct WeightedWalk {
  TandemWalk walk;
  BigInt weight;
};

/// All S-admissible quadrant walks from (0,2) to (2,0) with `se_count` SE
/// steps and at least one face-step, with their binomial weights; the second
/// member of the pair is the total weight (= s'_{se_count-2}).
std::pair<std::vector<WeightedWalk>, BigInt> enumerate_s_walks(int se_count,
                                                               int cap = kDefaultEnumerationCap);

/// Visits every P-admissible quadrant walk of length <= n_max (including the
/// empty walk) whose ordinate stays within y <= j_window + (n_max - length);
/// walks above that line cannot return to the window. Lexicographic order.
void for_each_p_walk(int n_max, int j_window,
                     const std::function<void(const TandemWalk&)>& visit,
                     int cap = kDefaultEnumerationCap);

/// Same for S-admissible walks from (0,2) with se_max SE steps, passing each
/// walk's total weight.
void for_each_s_walk(int se_max, int j_window,
                     const std::function<void(const TandemWalk&, const BigInt&)>& visit,
                     int cap = kDefaultEnumerationCap);

/// Endpoint census for crosschecks: weighted counts of ALL admissible
/// quadrant walks bucketed by (n, x, y), restricted to the cells that stay
/// exact under the window prune y <= j_window + (n_max - n). For P, n is the
/// walk length and weights are 1; for S, n is the SE count and walks start
/// at (0,2).
std::map<std::tuple<int, int, int>, BigInt> endpoint_census(Model model, int n_max, int j_window,
                                                            int cap = kDefaultEnumerationCap);

/// A non-crossing pair of Dyck walks of length 2n: D and Dprime both end at
/// (n,n), stay in {y >= x}, and at every height the N step of Dprime is
/// weakly left of the N step of D. Steps stored as true = N, false = E.
struct DyckPair {
  int n = 0;
  std::vector<bool> d;
  std::vector<bool> dprime;

  friend bool operator==(const DyckPair&, const DyckPair&) = default;
};

bool is_dyck_walk(const std::vector<bool>& steps);
bool is_noncrossing(const DyckPair& pair);

/// All non-crossing pairs of length 2n, lexicographic.
std::vector<DyckPair> enumerate_dyck_pairs(int n, int cap = kDefaultEnumerationCap);

/// The 1-aligned walks A_n: quadrant tandem walks from the origin ending on
/// the x-axis whose face-steps all have dy = 1, with n SE steps (and hence n
/// face-steps). A_0 holds the empty walk.
std::vector<TandemWalk> enumerate_one_aligned(int n, int cap = kDefaultEnumerationCap);
bool is_one_aligned(const TandemWalk& w);

/// The bijection between non-crossing Dyck pairs and A_n: the walk visits
/// (alpha(p), beta(p)) for the points p of D after the origin, where alpha
/// is the horizontal distance to Dprime's N step arriving at p's height and
/// beta the vertical distance to the diagonal.
TandemWalk phi(const DyckPair& pair);
std::optional<DyckPair> phi_inverse(const TandemWalk& w);

/// Lift A_n into S-admissible walks (the extremal family b = 2a-2):
/// prepend SE,SE; SE -> SE,SE; (-i,1) -> (-2i-1,3),SE; append
/// (-2d'-2,2),SE,SE for final abscissa d'. All face weights are 1.
TandemWalk bijS_lift(const TandemWalk& w);
std::optional<TandemWalk> bijS_project(const TandemWalk& w);

BigInt catalan(int n);
/// Cat_{a+1} Cat_{a-1} - Cat_a^2, the non-crossing Dyck pair counts
/// (1, 1, 3, 14, 84, 594, ... for a = 1, 2, ...); |A_n| equals
/// noncrossing_formula(n+1).
BigInt noncrossing_formula(int a);

struct CrosscheckReport {
  Model model = Model::P;
  int n_max = 0;
  bool ok = true;
  // first divergent cell when !ok
  std::tuple<int, int, int> cell{};
  BigInt dp_value;
  BigInt oracle_value;
  int cells_compared = 0;

  std::string to_json() const;
};

/// Compares brute-force endpoint censuses against the DP tables for all
/// n <= n_max (P: lengths, S: SE counts) within the window j <= j_window.
CrosscheckReport crosscheck(Model model, int n_max, int j_window = 6,
                            int cap = kDefaultEnumerationCap);

}  // namespace tandemcount
