#pragma once

#include <optional>
#include <vector>

#include "tandemcount/walk.hpp"

namespace tandemcount {

/// Step of a small-step encoding. For the P model the step set is
/// E = {(1,-1),(-2,0),(0,2),(-1,1)} with an explicit mark on the head step
/// of each face-step block; for the S model the step set is
/// Sigma = {(1,-1),(-2,2),(-3,1),(-1,3),(-2,0),(0,2)} and marks are unused.
struct SmallStep {
  int dx = 1;
  int dy = -1;
  bool marked = false;

  bool is_se() const { return dx == 1 && dy == -1; }
  friend bool operator==(const SmallStep&, const SmallStep&) = default;
};

struct SmallStepWalk {
  LatticePoint start;
  std::vector<SmallStep> steps;
};

/// Replaces each face-step of a P-admissible walk by its marked-step block:
///   (-2l-1,2r+1)            -> marked (-1,1), l x (-2,0), r x (0,2)
///   (-2l,2r+2) at even y    -> marked (0,2),  l x (-2,0), r x (0,2)
///   (-2l-2,2r) at odd y     -> marked (-2,0), l x (-2,0), r x (0,2)
/// Throws std::invalid_argument on a step that is not P-admissible.
SmallStepWalk p_encode_small_steps(const TandemWalk& w);

/// Inverse of p_encode_small_steps. Rejects (nullopt) marked walks that
/// violate the block structure: an unmarked (-2,0) may only follow a marked
/// step or an unmarked (-2,0); an unmarked (0,2) may only follow a marked
/// step, an unmarked (-2,0) or an unmarked (0,2); head shapes must match the
/// start parity rules above.
std::optional<TandemWalk> p_decode_small_steps(const SmallStepWalk& w);

/// All Sigma-sequences realizing one S-admissible face-step from `pos`:
/// a head in {(-2,2),(-3,1),(-1,3)} followed by an interleaving of
/// l x (-2,0) and r x (0,2). The count equals the face-step's weight
/// binomial(l+r, r).
std::vector<std::vector<SmallStep>> sigma_sequences_for_face(LatticePoint pos, Step face);

/// Encodes an S-admissible walk over Sigma, selecting for each face-step the
/// interleaving with the given index (0 <= index < weight). Indices select
/// the positions of the (0,2) continuation steps in colex order.
SmallStepWalk s_encode_small_steps(const TandemWalk& w,
                                   const std::vector<BigInt>& interleaving_index);

/// Aggregates maximal head+continuation blocks back into face-steps.
/// Rejects a (-2,0)/(0,2) step directly following an SE step or appearing
/// first, and heads at the wrong parity ((-1,3) needs even y, (-3,1) odd y).
std::optional<TandemWalk> s_decode_small_steps(const SmallStepWalk& w);

}  // namespace tandemcount
