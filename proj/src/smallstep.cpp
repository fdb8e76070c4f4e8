#include "tandemcount/smallstep.hpp"

#include <stdexcept>

namespace tandemcount {

namespace {

void append_tail(std::vector<SmallStep>& out, int l, int r) {
  for (int k = 0; k < l; ++k) out.push_back({-2, 0, false});
  for (int k = 0; k < r; ++k) out.push_back({0, 2, false});
}

}  // namespace

SmallStepWalk p_encode_small_steps(const TandemWalk& w) {
  SmallStepWalk out;
  out.start = w.start;
  LatticePoint p = w.start;
  for (const Step& s : w.steps) {
    if (!p_step_admissible(p, s))
      throw std::invalid_argument("p_encode_small_steps: inadmissible step");
    if (s.is_se()) {
      out.steps.push_back({1, -1, false});
    } else {
      const int i = -s.dx, j = s.dy;
      if (i % 2 == 1) {
        // odd/odd
        out.steps.push_back({-1, 1, true});
        append_tail(out.steps, (i - 1) / 2, (j - 1) / 2);
      } else if (p.y_even()) {
        // (-2l, 2r+2)
        out.steps.push_back({0, 2, true});
        append_tail(out.steps, i / 2, (j - 2) / 2);
      } else {
        // (-2l-2, 2r)
        out.steps.push_back({-2, 0, true});
        append_tail(out.steps, (i - 2) / 2, j / 2);
      }
    }
    p.x += s.dx;
    p.y += s.dy;
  }
  return out;
}

std::optional<TandemWalk> p_decode_small_steps(const SmallStepWalk& w) {
  TandemWalk out;
  out.start = w.start;
  LatticePoint p = w.start;  // start point of the current face block
  enum class Prev { None, Se, Marked, UnmarkedW, UnmarkedN };  // W=(-2,0), N=(0,2)
  Prev prev = Prev::None;
  bool in_block = false;
  int acc_dx = 0, acc_dy = 0;

  auto flush = [&]() {
    if (!in_block) return;
    out.steps.push_back(Step::face(acc_dx, acc_dy));
    p.x += acc_dx;
    p.y += acc_dy;
    in_block = false;
  };

  for (const SmallStep& s : w.steps) {
    if (s.is_se()) {
      if (s.marked) return std::nullopt;
      flush();
      out.steps.push_back(Step::se());
      p.x += 1;
      p.y -= 1;
      prev = Prev::Se;
    } else if (s.marked) {
      flush();
      // head shape determined by the block's start ordinate parity
      const bool even = p.y_even();
      const bool ok = (s.dx == -1 && s.dy == 1) || (s.dx == 0 && s.dy == 2 && even) ||
                      (s.dx == -2 && s.dy == 0 && !even);
      if (!ok) return std::nullopt;
      in_block = true;
      acc_dx = s.dx;
      acc_dy = s.dy;
      prev = Prev::Marked;
    } else if (s.dx == -2 && s.dy == 0) {
      // unmarked (-2,0): only after a marked step or an unmarked (-2,0)
      if (prev != Prev::Marked && prev != Prev::UnmarkedW) return std::nullopt;
      acc_dx += s.dx;
      prev = Prev::UnmarkedW;
    } else if (s.dx == 0 && s.dy == 2) {
      // unmarked (0,2): after marked, unmarked (-2,0) or unmarked (0,2)
      if (prev == Prev::Se || prev == Prev::None) return std::nullopt;
      acc_dy += s.dy;
      prev = Prev::UnmarkedN;
    } else {
      return std::nullopt;
    }
  }
  flush();
  if (!validate_p_walk(out, false)) return std::nullopt;
  return out;
}

std::vector<std::vector<SmallStep>> sigma_sequences_for_face(LatticePoint pos, Step face) {
  std::vector<std::vector<SmallStep>> result;
  auto fw = s_face_weight(pos, face);
  if (!fw) return result;
  const int i = -face.dx, j = face.dy;
  SmallStep head;
  int l = 0, r = 0;
  if (i % 2 == 0) {
    head = {-2, 2, false};
    l = (i - 2) / 2;
    r = (j - 2) / 2;
  } else if (pos.y_even()) {
    head = {-1, 3, false};
    l = (i - 1) / 2;
    r = (j - 3) / 2;
  } else {
    head = {-3, 1, false};
    l = (i - 3) / 2;
    r = (j - 1) / 2;
  }
  // enumerate interleavings of l x (-2,0) and r x (0,2) after the head
  std::vector<SmallStep> seq{head};
  auto rec = [&](auto&& self, int lrem, int rrem) -> void {
    if (lrem == 0 && rrem == 0) {
      result.push_back(seq);
      return;
    }
    if (lrem > 0) {
      seq.push_back({-2, 0, false});
      self(self, lrem - 1, rrem);
      seq.pop_back();
    }
    if (rrem > 0) {
      seq.push_back({0, 2, false});
      self(self, lrem, rrem - 1);
      seq.pop_back();
    }
  };
  rec(rec, l, r);
  return result;
}

SmallStepWalk s_encode_small_steps(const TandemWalk& w,
                                   const std::vector<BigInt>& interleaving_index) {
  SmallStepWalk out;
  out.start = w.start;
  LatticePoint p = w.start;
  size_t face_idx = 0;
  for (const Step& s : w.steps) {
    if (s.is_se()) {
      out.steps.push_back({1, -1, false});
    } else {
      auto seqs = sigma_sequences_for_face(p, s);
      if (seqs.empty()) throw std::invalid_argument("s_encode_small_steps: inadmissible face");
      BigInt idx = face_idx < interleaving_index.size() ? interleaving_index[face_idx] : 0;
      if (idx < 0 || idx >= BigInt(seqs.size()))
        throw std::out_of_range("s_encode_small_steps: interleaving index");
      const auto& seq = seqs[idx.convert_to<size_t>()];
      out.steps.insert(out.steps.end(), seq.begin(), seq.end());
      ++face_idx;
    }
    p.x += s.dx;
    p.y += s.dy;
  }
  return out;
}

std::optional<TandemWalk> s_decode_small_steps(const SmallStepWalk& w) {
  TandemWalk out;
  out.start = w.start;
  LatticePoint p = w.start;
  bool in_block = false;
  bool after_se = true;  // continuation steps never follow SE (or start a walk)
  int acc_dx = 0, acc_dy = 0;

  auto flush = [&]() {
    if (!in_block) return;
    out.steps.push_back(Step::face(acc_dx, acc_dy));
    p.x += acc_dx;
    p.y += acc_dy;
    in_block = false;
  };

  for (const SmallStep& s : w.steps) {
    if (s.marked) return std::nullopt;
    if (s.is_se()) {
      flush();
      out.steps.push_back(Step::se());
      p.x += 1;
      p.y -= 1;
      after_se = true;
    } else if ((s.dx == -2 && s.dy == 2) || (s.dx == -1 && s.dy == 3) ||
               (s.dx == -3 && s.dy == 1)) {
      flush();
      if (s.dx == -1 && !p.y_even()) return std::nullopt;
      if (s.dx == -3 && p.y_even()) return std::nullopt;
      in_block = true;
      acc_dx = s.dx;
      acc_dy = s.dy;
      after_se = false;
    } else if ((s.dx == -2 && s.dy == 0) || (s.dx == 0 && s.dy == 2)) {
      if (after_se || !in_block) return std::nullopt;
      acc_dx += s.dx;
      acc_dy += s.dy;
    } else {
      return std::nullopt;
    }
  }
  flush();
  return out;
}

}  // namespace tandemcount
