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

#include "fmasec/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fmasec {

void SlotChannels::validate() const {
  if (!std::isfinite(noise_power) || noise_power <= 0.0)
    throw std::invalid_argument("noise power must be finite and > 0");
  if (conf_eves.empty()) throw std::invalid_argument("at least one eavesdropper is required");
  const auto n = conf_bob.size();
  if (n == 0) throw std::invalid_argument("confidential array is empty");
  for (const auto& a : conf_eves)
    if (a.size() != n) throw std::invalid_argument("confidential steering vectors differ in length");
  if (has_an()) {
    if (an_eves.size() != conf_eves.size())
      throw std::invalid_argument("AN steering vectors must cover every eavesdropper");
    for (const auto& a : an_eves)
      if (a.size() != an_bob.size()) throw std::invalid_argument("AN steering vectors differ in length");
  } else if (!an_eves.empty()) {
    throw std::invalid_argument("AN eavesdropper channels given without a Bob AN channel");
  }
}

SlotChannels make_slot_channels(std::span<const double> conf_positions,
                                std::span<const double> an_positions, const LinkGeometry& bob,
                                std::span<const LinkGeometry> eves, double noise_power) {
  SlotChannels ch;
  ch.noise_power = noise_power;
  ch.conf_bob = steering_vector(conf_positions, bob);
  for (const auto& e : eves) ch.conf_eves.push_back(steering_vector(conf_positions, e));
  if (!an_positions.empty()) {
    ch.an_bob = steering_vector(an_positions, bob);
    for (const auto& e : eves) ch.an_eves.push_back(steering_vector(an_positions, e));
  }
  ch.validate();
  return ch;
}

GainBreakdown gain_breakdown(const SlotChannels& ch, const ComplexVector& w_conf,
                             const ComplexVector& w_an) {
  ch.validate();
  GainBreakdown g;
  g.conf_bob = beam_gain(ch.conf_bob, w_conf);
  for (const auto& a : ch.conf_eves) g.conf_eve += beam_gain(a, w_conf);
  if (ch.has_an() && w_an.size() > 0) {
    g.an_bob = beam_gain(ch.an_bob, w_an);
    for (const auto& a : ch.an_eves) g.an_eve += beam_gain(a, w_an);
  }
  return g;
}

double sinr_bob(const SlotChannels& ch, const ComplexVector& w_conf, const ComplexVector& w_an) {
  const auto g = gain_breakdown(ch, w_conf, w_an);
  return g.conf_bob / (g.an_bob + ch.noise_power);
}

double sinr_eve(const SlotChannels& ch, const ComplexVector& w_conf, const ComplexVector& w_an) {
  const auto g = gain_breakdown(ch, w_conf, w_an);
  return g.conf_eve / (g.an_eve + ch.noise_power);
}

RatePair achievable_rates(const SlotChannels& ch, const ComplexVector& w_conf,
                          const ComplexVector& w_an) {
  const auto g = gain_breakdown(ch, w_conf, w_an);
  return {std::log2(1.0 + g.conf_bob / (g.an_bob + ch.noise_power)),
          std::log2(1.0 + g.conf_eve / (g.an_eve + ch.noise_power))};
}

double secrecy_objective(const SlotChannels& ch, const ComplexVector& w_conf,
                         const ComplexVector& w_an) {
  return achievable_rates(ch, w_conf, w_an).difference();
}

double secrecy_rate(const SlotChannels& ch, const ComplexVector& w_conf, const ComplexVector& w_an) {
  return achievable_rates(ch, w_conf, w_an).secrecy();
}

double average_secrecy_rate(std::span<const double> per_slot) {
  if (per_slot.empty()) throw std::invalid_argument("average_secrecy_rate: no slots");
  double sum = 0.0;
  for (double r : per_slot) sum += r > 0.0 ? r : 0.0;
  return sum / static_cast<double>(per_slot.size());
}

}  // namespace fmasec
