#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tandemcount/bigint.hpp"

namespace tandemcount {

/// The two counting models: P (corner polyhedra / polyhedral orientations)
/// and S (3-connected Schnyder labelings).
enum class Model { P, S };

std::string_view model_name(Model m);

struct LatticePoint {
  long long x = 0;
  long long y = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  bool in_quadrant() const { return x >= 0 && y >= 0; }
  bool y_even() const { return ((y % 2) + 2) % 2 == 0; }
};

enum class StepKind { SE, Face };

/// A tandem-walk step: either the SE step (1,-1) or a face-step (-i,j) with
/// i,j >= 0. Face-steps are stored in aggregated form; the small-step
/// encodings are derived views (see smallstep.hpp).
struct Step {
  int dx = 1;
  int dy = -1;

  static Step se() { return Step{1, -1}; }
  static Step face(int dx, int dy);

  StepKind kind() const { return (dx == 1 && dy == -1) ? StepKind::SE : StepKind::Face; }
  bool is_se() const { return kind() == StepKind::SE; }
  /// Even tandem walks: every face-step (-i,j) has i+j even.
  bool parity_even() const { return ((dx + dy) % 2) == 0; }

  friend bool operator==(const Step&, const Step&) = default;
  friend auto operator<=>(const Step&, const Step&) = default;
};

struct TandemWalk {
  LatticePoint start;
  std::vector<Step> steps;

  LatticePoint end() const;
  /// start plus all prefix sums of steps (length steps.size()+1).
  std::vector<LatticePoint> points() const;
  bool is_even_walk() const;
};

/// True iff `step` may be taken from `pos` in a P-admissible tandem walk:
/// SE is always allowed; a face-step must have dx+dy even, and dy >= 1 from
/// even ordinate, dx <= -1 from odd ordinate. Quadrant membership of the
/// endpoint is not part of this predicate.
bool p_step_admissible(LatticePoint pos, Step step);

/// Weight of an S-admissible face-step taken from `pos`, or nullopt if the
/// shape is not admissible there. Shapes and weights:
///   even entries            i=2l+2, j=2r+2   (either ordinate parity)
///   odd entries, even y     i=2l+1, j=2r+3
///   odd entries, odd y      i=2l+3, j=2r+1
/// all weighted binomial(l+r, r).
std::optional<BigInt> s_face_weight(LatticePoint pos, Step step);

/// True iff `w` stays in the quadrant, every step is P-admissible at its
/// start point, and (when require_axis_end) the final ordinate is 0.
bool validate_p_walk(const TandemWalk& w, bool require_axis_end);

/// Total weight of an S-admissible walk: starts at (0,2), ends at (2,0),
/// stays in the quadrant, has at least one face-step, and every face-step
/// admissible. nullopt when any condition fails.
std::optional<BigInt> validate_s_walk(const TandemWalk& w);

BigInt binomial(int n, int k);

/// Text form `start=(x,y); steps=[(dx,dy)w,...]`, weight suffix omitted
/// when 1. For S walks the per-step weights come from s_face_weight.
std::string walk_to_text(const TandemWalk& w, const std::vector<BigInt>* weights = nullptr);
std::optional<TandemWalk> walk_from_text(std::string_view text);

}  // namespace tandemcount
