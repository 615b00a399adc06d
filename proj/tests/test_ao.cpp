// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "fmasec/ao.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace fmasec;

namespace {

void check_monotone(const AoResult& r) {
  for (std::size_t i = 1; i < r.trace.size(); ++i) CHECK(r.trace[i].best >= r.trace[i - 1].best);
}

void check_consistent(const AoResult& r, const SlotProblem& slot) {
  const auto ch = result_channels(r, slot);
  const auto w_an = r.w_ma.weights;
  CHECK(secrecy_rate(ch, r.w_fpa.weights, w_an) == doctest::Approx(r.best_rate).epsilon(1e-12));
  CHECK(r.w_fpa.full_power());
  if (w_an.size() > 0) CHECK(r.w_ma.full_power());
}

}  // namespace

TEST_CASE("Eves co-located with Bob: every arm returns zero") {
  auto slot = test::reference_slot(0);
  for (auto& e : slot.eves) e.angle = slot.bob.angle;
  AoConfig cfg;
  for (Arm a : {Arm::Fma, Arm::FpaOnly, Arm::MaOnly}) {
    const auto r = run_arm(a, slot, cfg);
    CHECK(r.best_rate == 0.0);
  }
}

TEST_CASE("identity passes return the initial configuration rate") {
  const auto slot = test::reference_slot(0);
  AoConfig cfg;
  cfg.max_iterations = 1;
  cfg.update_w_fpa = false;
  cfg.update_positions = false;
  cfg.update_w_ma = false;
  const auto r = ao_solve_slot(slot, cfg);
  const auto g = ArrayGeometry::fixed(slot.n, slot.d_min, slot.range_max);
  const auto x = g.positions();
  const auto ch = make_slot_channels(x, x, slot.bob, slot.eves, slot.noise_power);
  const double initial = secrecy_rate(ch, Beamformer::uniform(slot.n, slot.p_fpa).weights,
                                      Beamformer::uniform(slot.n, slot.p_ma).weights);
  CHECK(r.best_rate == initial);
  CHECK(r.iterations == 1);
}

TEST_CASE("reference slot 1: FMA beats both baselines and stores a consistent triple") {
  const auto slot = test::reference_slot(0);
  AoConfig cfg;
  const auto fma = ao_solve_slot(slot, cfg);
  const auto fpa = run_fpa_only(slot, cfg);
  const auto ma = run_ma_only(slot, cfg);
  CHECK(fma.best_rate > 29.5);
  CHECK(fma.best_rate > ma.best_rate);
  CHECK(ma.best_rate > fpa.best_rate);
  for (const auto* r : {&fma, &fpa, &ma}) {
    check_monotone(*r);
    check_consistent(*r, slot);
  }
  CHECK(ma.movable_positions.size() == 2 * slot.n);
  CHECK(fma.movable_positions == fma.an_positions);
}

TEST_CASE("FPA-Only converges within a handful of alternations") {
  for (std::size_t t = 0; t < 4; ++t) {
    AoConfig cfg;
    cfg.stagnation_limit = 3;
    const auto r = run_fpa_only(test::reference_slot(t), cfg);
    CHECK(r.position_trace.empty());
    CHECK(r.iterations <= 15);
  }
}

TEST_CASE("an unreachable stagnation limit matches disabling the branch") {
  const auto slot = test::reference_slot(1);
  AoConfig a;
  a.stagnation_limit = kNoStagnationLimit;
  AoConfig b;
  b.stagnation_enabled = false;
  const auto ra = ao_solve_slot(slot, a);
  const auto rb = ao_solve_slot(slot, b);
  CHECK(ra.best_rate == rb.best_rate);
  CHECK(ra.iterations == rb.iterations);
  CHECK(ra.an_positions == rb.an_positions);
}

TEST_CASE("MA-Only with no room to move equals the fixed-array run") {
  auto slot = test::reference_slot(0);
  slot.range_max = static_cast<double>(2 * slot.n - 1) * slot.d_min;
  AoConfig cfg;
  const auto ma = run_ma_only(slot, cfg);
  const auto fpa = run_fpa_only(slot, cfg);
  // Same fixed point; the loops may stop one sweep apart.
  CHECK(ma.best_rate == doctest::Approx(fpa.best_rate).epsilon(1e-8));
}

TEST_CASE("MA-Only confidential mode carries no AN") {
  const auto slot = test::reference_slot(0);
  AoConfig cfg;
  cfg.ma_only_mode = MaOnlyMode::Confidential;
  const auto r = run_ma_only(slot, cfg);
  CHECK(r.w_ma.weights.size() == 0);
  CHECK(r.an_positions.empty());
  check_consistent(r, slot);
}

TEST_CASE("warm start chains movable positions") {
  std::vector<SlotProblem> slots{test::reference_slot(0), test::reference_slot(1)};
  const auto rs = run_schedule(Arm::Fma, slots, AoConfig{}, true);
  REQUIRE(rs.size() == 2);
  auto second = slots[1];
  second.initial_positions = rs[0].movable_positions;
  CHECK(ao_solve_slot(second, AoConfig{}).best_rate == rs[1].best_rate);
}

TEST_CASE("runs are deterministic") {
  const auto slot = test::reference_slot(2);
  AoConfig cfg;
  cfg.position_restarts = 2;
  cfg.seed = 17;
  const auto a = ao_solve_slot(slot, cfg);
  const auto b = ao_solve_slot(slot, cfg);
  CHECK(a.best_rate == b.best_rate);
  CHECK(a.an_positions == b.an_positions);
}

TEST_CASE("name round trips and config validation") {
  for (Arm a : {Arm::Fma, Arm::FpaOnly, Arm::MaOnly}) CHECK(parse_arm(arm_name(a)) == a);
  for (auto m : {PositionMethod::Nmpga, PositionMethod::Pga}) CHECK(parse_position_method(position_method_name(m)) == m);
  for (auto m : {MaOnlyMode::Split, MaOnlyMode::Confidential}) CHECK(parse_ma_only_mode(ma_only_mode_name(m)) == m);
  CHECK_THROWS(parse_arm("both"));
  AoConfig c;
  c.rate_tol = 0.0;
  CHECK_THROWS(c.validate());
  auto slot = test::reference_slot(0);
  slot.range_max = 0.05;
  CHECK_THROWS_AS(ao_solve_slot(slot, AoConfig{}), GeometryError);
}
