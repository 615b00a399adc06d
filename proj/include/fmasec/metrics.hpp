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

#ifndef FMASEC_METRICS_HPP
#define FMASEC_METRICS_HPP

#include "fmasec/geometry.hpp"

#include <span>
#include <vector>

namespace fmasec {

/// Steering vectors seen by Bob and the colluding Eves for one time slot.
///
/// `conf_*` belong to the array that carries the confidential beam (the
/// fixed array in the co-design), `an_*` to the array that radiates
/// artificial noise (the movable array). An arm without an AN array leaves
/// the `an_*` vectors empty; their gains are then zero.
struct SlotChannels {
  ComplexVector conf_bob;
  ComplexVector an_bob;
  std::vector<ComplexVector> conf_eves;
  std::vector<ComplexVector> an_eves;
  double noise_power = 1e-8;

  [[nodiscard]] std::size_t eve_count() const { return conf_eves.size(); }
  [[nodiscard]] bool has_an() const { return an_bob.size() > 0; }

  /// Lengths consistent, M >= 1, noise power finite and > 0.
  void validate() const;
};

SlotChannels make_slot_channels(std::span<const double> conf_positions,
                                std::span<const double> an_positions, const LinkGeometry& bob,
                                std::span<const LinkGeometry> eves, double noise_power);

/// Received powers that enter both SINRs.
struct GainBreakdown {
  double conf_bob = 0.0;  // G_conf(theta_b)
  double an_bob = 0.0;    // G_an(theta_b)
  double conf_eve = 0.0;  // sum_i G_conf(theta_ei)
  double an_eve = 0.0;    // sum_i G_an(theta_ei)
};

GainBreakdown gain_breakdown(const SlotChannels& ch, const ComplexVector& w_conf,
                             const ComplexVector& w_an);

double sinr_bob(const SlotChannels& ch, const ComplexVector& w_conf, const ComplexVector& w_an);
double sinr_eve(const SlotChannels& ch, const ComplexVector& w_conf, const ComplexVector& w_an);

struct RatePair {
  double bob = 0.0;  // log2(1 + SINR_b)
  double eve = 0.0;  // log2(1 + SINR_e*)
  [[nodiscard]] double difference() const { return bob - eve; }
  [[nodiscard]] double secrecy() const { return difference() > 0.0 ? difference() : 0.0; }
};

RatePair achievable_rates(const SlotChannels& ch, const ComplexVector& w_conf,
                          const ComplexVector& w_an);

/// R_bob - R_eve without the [.]^+ clamp; this is what the optimizers climb.
double secrecy_objective(const SlotChannels& ch, const ComplexVector& w_conf,
                         const ComplexVector& w_an);

/// [R_bob - R_eve]^+ in bps/Hz.
double secrecy_rate(const SlotChannels& ch, const ComplexVector& w_conf, const ComplexVector& w_an);

/// Mean of clamped per-slot rates. Throws std::invalid_argument on an empty list.
double average_secrecy_rate(std::span<const double> per_slot);

}  // namespace fmasec

#endif  // FMASEC_METRICS_HPP
