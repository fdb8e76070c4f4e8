#include <doctest.h>

#include "tandemcount/oracle.hpp"
#include "tandemcount/rng.hpp"
#include "tandemcount/smallstep.hpp"
#include "tandemcount/walk.hpp"

using namespace tandemcount;

namespace {

TandemWalk make_walk(LatticePoint start, std::vector<Step> steps) {
  return TandemWalk{start, std::move(steps)};
}

const Step SE = Step::se();

}  // namespace

TEST_CASE("p_step_admissible") {
  CHECK(p_step_admissible({0, 0}, Step::face(0, 2)));
  CHECK_FALSE(p_step_admissible({0, 0}, Step::face(-2, 0)));  // even y needs dy >= 1
  CHECK_FALSE(p_step_admissible({1, 1}, Step::face(0, 2)));   // odd y needs dx <= -1
  CHECK(p_step_admissible({1, 1}, Step::face(-2, 0)));
  CHECK(p_step_admissible({5, 2}, SE));
  CHECK(p_step_admissible({0, 1}, SE));
  CHECK_FALSE(p_step_admissible({0, 0}, Step::face(-1, 2)));  // odd sum: not even tandem
  // parity bimodality: only the ordinate parity matters
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 6; ++y)
      for (const Step s : {Step::face(-1, 1), Step::face(0, 2), Step::face(-2, 0)}) {
        CHECK(p_step_admissible({x, y}, s) == p_step_admissible({x + 3, y}, s));
        CHECK(p_step_admissible({x, y}, s) == p_step_admissible({x, y + 2}, s));
      }
}

TEST_CASE("s_face_weight shapes") {
  CHECK(*s_face_weight({2, 0}, Step::face(-2, 2)) == 1);   // l=0, r=0
  CHECK(*s_face_weight({4, 0}, Step::face(-3, 5)) == 2);   // l=1, r=1 at even y
  CHECK_FALSE(s_face_weight({1, 1}, Step::face(-1, 3)));   // odd y needs i >= 3
  CHECK(*s_face_weight({1, 1}, Step::face(-3, 1)) == 1);
  CHECK(*s_face_weight({0, 0}, Step::face(-4, 4)) == 2);   // l=1, r=1: binom(2,1)
  CHECK(*s_face_weight({0, 1}, Step::face(-4, 4)) == 2);   // even entries: any parity
  CHECK_FALSE(s_face_weight({0, 0}, Step::face(-2, 0)));   // j >= 2 for even entries
  CHECK_FALSE(s_face_weight({0, 0}, Step::face(-1, 2)));   // mixed parity
  // weight 1 iff l = 0 or r = 0
  for (int l = 0; l <= 4; ++l)
    for (int r = 0; l + r <= 4; ++r) {
      const BigInt w = *s_face_weight({9, 0}, Step::face(-(2 * l + 2), 2 * r + 2));
      CHECK(w == binomial(l + r, r));
      CHECK(w >= 1);
      CHECK((w == 1) == (l == 0 || r == 0));
    }
}

TEST_CASE("validate_p_walk") {
  CHECK(validate_p_walk(make_walk({0, 0}, {Step::face(0, 2), SE, SE}), true));
  CHECK_FALSE(validate_p_walk(make_walk({0, 0}, {SE}), false));  // leaves quadrant
  CHECK_FALSE(validate_p_walk(make_walk({0, 0}, {Step::face(0, 2), Step::face(-2, 0)}), false));
  CHECK(validate_p_walk(make_walk({0, 0}, {Step::face(0, 2), SE}), false));
  CHECK_FALSE(validate_p_walk(make_walk({0, 0}, {Step::face(0, 2), SE}), true));
  // every P-admissible walk is an even tandem walk
  for_each_p_walk(5, 4, [&](const TandemWalk& w) { CHECK(w.is_even_walk()); });
}

TEST_CASE("validate_s_walk") {
  auto w1 = make_walk({0, 2}, {SE, SE, Step::face(-2, 2), SE, SE});
  CHECK(*validate_s_walk(w1) == 1);
  CHECK_FALSE(validate_s_walk(make_walk({0, 2}, {SE, SE})));  // no face-step
  CHECK_FALSE(
      validate_s_walk(make_walk({0, 2}, {SE, SE, Step::face(-1, 3), SE, SE, SE})));  // ends (4,0)
  CHECK_FALSE(validate_s_walk(make_walk({0, 0}, {SE, SE, Step::face(-2, 2), SE, SE})));
  // weight 2 from the (-4,4) face (l = r = 1)
  auto weighted = make_walk(
      {0, 2}, {SE, SE, Step::face(-1, 3), SE, SE, SE, Step::face(-4, 4), SE, SE, SE,
               Step::face(-3, 1), SE, SE});
  REQUIRE(validate_s_walk(weighted));
  CHECK(*validate_s_walk(weighted) == 2);
}

TEST_CASE("p small-step codec") {
  SUBCASE("single faces") {
    auto enc = p_encode_small_steps(make_walk({0, 4}, {Step::face(-3, 3)}));
    REQUIRE(enc.steps.size() == 3);
    CHECK(enc.steps[0] == SmallStep{-1, 1, true});
    CHECK(enc.steps[1] == SmallStep{-2, 0, false});
    CHECK(enc.steps[2] == SmallStep{0, 2, false});

    auto enc2 = p_encode_small_steps(make_walk({0, 0}, {Step::face(0, 2)}));
    REQUIRE(enc2.steps.size() == 1);
    CHECK(enc2.steps[0] == SmallStep{0, 2, true});

    auto enc3 = p_encode_small_steps(make_walk({4, 1}, {Step::face(-4, 2)}));
    REQUIRE(enc3.steps.size() == 3);
    CHECK(enc3.steps[0] == SmallStep{-2, 0, true});
    CHECK(enc3.steps[1] == SmallStep{-2, 0, false});
    CHECK(enc3.steps[2] == SmallStep{0, 2, false});
  }
  SUBCASE("round trip over all walks of length <= 6") {
    int count = 0;
    for_each_p_walk(6, 5, [&](const TandemWalk& w) {
      ++count;
      auto enc = p_encode_small_steps(w);
      auto dec = p_decode_small_steps(enc);
      REQUIRE(dec);
      CHECK(dec->steps == w.steps);
      // endpoint projection agrees
      LatticePoint p = enc.start;
      for (const auto& s : enc.steps) {
        p.x += s.dx;
        p.y += s.dy;
      }
      CHECK(p == w.end());
    });
    CHECK(count > 400);
  }
  SUBCASE("decode rejects local-rule violations") {
    // unmarked (-2,0) directly after SE
    SmallStepWalk bad1{{2, 2}, {{1, -1, false}, {-2, 0, false}}};
    CHECK_FALSE(p_decode_small_steps(bad1));
    // marked (0,2) from odd ordinate
    SmallStepWalk bad2{{0, 1}, {{0, 2, true}}};
    CHECK_FALSE(p_decode_small_steps(bad2));
    // marked (-2,0) from even ordinate
    SmallStepWalk bad3{{4, 2}, {{-2, 0, true}}};
    CHECK_FALSE(p_decode_small_steps(bad3));
    // unmarked (0,2) at walk start
    SmallStepWalk bad4{{0, 0}, {{0, 2, false}}};
    CHECK_FALSE(p_decode_small_steps(bad4));
    // marked SE is meaningless
    SmallStepWalk bad5{{0, 2}, {{1, -1, true}}};
    CHECK_FALSE(p_decode_small_steps(bad5));
  }
}

TEST_CASE("sigma codec") {
  SUBCASE("interleavings of one face") {
    auto seqs = sigma_sequences_for_face({9, 0}, Step::face(-4, 4));
    REQUIRE(seqs.size() == 2);  // binom(2,1)
    CHECK(seqs[0] == std::vector<SmallStep>{{-2, 2, false}, {-2, 0, false}, {0, 2, false}});
    CHECK(seqs[1] == std::vector<SmallStep>{{-2, 2, false}, {0, 2, false}, {-2, 0, false}});
    CHECK(sigma_sequences_for_face({9, 0}, Step::face(-2, 2)).size() == 1);
    // head chosen by parity: (-1,3) from even, (-3,1) from odd
    CHECK(sigma_sequences_for_face({9, 0}, Step::face(-3, 5))[0][0] == SmallStep{-1, 3, false});
    CHECK(sigma_sequences_for_face({9, 1}, Step::face(-3, 5))[0][0] == SmallStep{-3, 1, false});
  }
  SUBCASE("sequence count equals the face weight for all shapes with l+r <= 4") {
    for (int l = 0; l <= 4; ++l)
      for (int r = 0; l + r <= 4; ++r) {
        const LatticePoint even_pos{20, 0}, odd_pos{20, 1};
        auto check_shape = [&](LatticePoint pos, int i, int j) {
          auto fw = s_face_weight(pos, Step::face(-i, j));
          REQUIRE(fw);
          CHECK(BigInt(sigma_sequences_for_face(pos, Step::face(-i, j)).size()) == *fw);
        };
        check_shape(even_pos, 2 * l + 2, 2 * r + 2);
        check_shape(odd_pos, 2 * l + 2, 2 * r + 2);
        check_shape(even_pos, 2 * l + 1, 2 * r + 3);
        check_shape(odd_pos, 2 * l + 3, 2 * r + 1);
      }
  }
  SUBCASE("weighted round trip over all S walks with <= 4 SE steps") {
    for_each_s_walk(4, 5, [&](const TandemWalk& w, const BigInt& weight) {
      // index 0 for every face: canonical encoding
      auto enc = s_encode_small_steps(w, {});
      auto dec = s_decode_small_steps(enc);
      REQUIRE(dec);
      CHECK(dec->steps == w.steps);
      // total sigma-sequence count across faces multiplies to the weight
      BigInt product = 1;
      LatticePoint p = w.start;
      for (const Step& s : w.steps) {
        if (!s.is_se()) product *= BigInt(sigma_sequences_for_face(p, s).size());
        p.x += s.dx;
        p.y += s.dy;
      }
      CHECK(product == weight);
    });
  }
  SUBCASE("decode rejects continuation after SE") {
    SmallStepWalk bad{{0, 2}, {{1, -1, false}, {0, 2, false}}};
    CHECK_FALSE(s_decode_small_steps(bad));
    SmallStepWalk bad2{{4, 2}, {{1, -1, false}, {-2, 0, false}}};
    CHECK_FALSE(s_decode_small_steps(bad2));
    // head parity rules
    SmallStepWalk bad3{{4, 1}, {{-1, 3, false}}};
    CHECK_FALSE(s_decode_small_steps(bad3));
    SmallStepWalk bad4{{4, 2}, {{-3, 1, false}}};
    CHECK_FALSE(s_decode_small_steps(bad4));
  }
}

TEST_CASE("walk text form") {
  auto w = make_walk({0, 2}, {SE, Step::face(-4, 4), SE});
  std::vector<BigInt> weights{1, 2, 1};
  CHECK(walk_to_text(w, &weights) == "start=(0,2); steps=[(1,-1),(-4,4)2,(1,-1)]");
  CHECK(walk_to_text(w) == "start=(0,2); steps=[(1,-1),(-4,4),(1,-1)]");
  auto parsed = walk_from_text(walk_to_text(w, &weights));
  REQUIRE(parsed);
  CHECK(parsed->start == w.start);
  CHECK(parsed->steps == w.steps);
  CHECK_FALSE(walk_from_text("start=(0,2); steps=[(1,-1)"));
  CHECK_FALSE(walk_from_text("steps=[(1,-1)]"));

  // round trip on pseudo-random walks
  Xoshiro256pp rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    TandemWalk rw;
    rw.start = {static_cast<long long>(rng.next() % 5), static_cast<long long>(rng.next() % 5)};
    const int len = static_cast<int>(rng.next() % 8);
    for (int k = 0; k < len; ++k) {
      if (rng.coin())
        rw.steps.push_back(SE);
      else
        rw.steps.push_back(Step::face(-static_cast<int>(rng.next() % 4),
                                      static_cast<int>(rng.next() % 5)));
    }
    auto back = walk_from_text(walk_to_text(rw));
    REQUIRE(back);
    CHECK(back->start == rw.start);
    CHECK(back->steps == rw.steps);
  }
}
